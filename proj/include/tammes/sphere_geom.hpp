// Spherical geometry primitives on the unit sphere S^2.
//
// All angles are radians. Points are unit vectors in R^3; the distance between
// two points is the angle between them.
#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <random>
#include <span>
#include <stdexcept>
#include <vector>

namespace tammes {

using Vec3 = Eigen::Vector3d;

inline constexpr double kPi = 3.14159265358979323846;

/// Raised when an arc or a reflection is undefined (coincident or antipodal endpoints).
class DegenerateArcError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A point of S^2. Construction normalizes, so |v| = 1 up to rounding.
class UnitVector {
public:
    UnitVector() : v_(0.0, 0.0, 1.0) {}
    UnitVector(double x, double y, double z);
    explicit UnitVector(const Vec3& v);

    /// Wraps a vector that is already unit length (checked to 1e-9, renormalized unless unit to rounding).
    static UnitVector from_unit(const Vec3& v);

    double x() const { return v_.x(); }
    double y() const { return v_.y(); }
    double z() const { return v_.z(); }
    const Vec3& vec() const { return v_; }
    UnitVector operator-() const { return UnitVector::from_raw(-v_); }

    bool operator==(const UnitVector& o) const { return v_ == o.v_; }

private:
    static UnitVector from_raw(const Vec3& v) {
        UnitVector u;
        u.v_ = v;
        return u;
    }
    Vec3 v_;
};

/// Interior angles u_ki of one face of an embedded graph, in face-cycle order.
struct FaceAngleVector {
    int face_id = 0;
    std::vector<double> angles;
};

double angular_dist(const UnitVector& a, const UnitVector& b);

/// Minimum pairwise angular distance. Throws std::domain_error for fewer than two points.
double psi(std::span<const UnitVector> points);

/// Vertex angle of the equilateral spherical triangle with side d, 0 < d < 2pi/3.
double equilateral_triangle_angle(double d);

/// Inverse of equilateral_triangle_angle: side of the equilateral triangle with vertex angle a.
double equilateral_triangle_side(double angle);

/// Interior angle of the regular spherical m-gon with side d (d < 2pi/m).
double regular_polygon_angle(int m, double d);

/// Transport a frame around an equilateral polygon with side d and the given
/// interior angles (counter-clockwise, interior on the left). Returns the
/// Frobenius distance of the composite rotation from the identity; zero iff
/// the polygon closes up.
double polygon_closure_residual(double d, std::span<const double> angles);
double polygon_closure_residual(double d, const FaceAngleVector& face);

/// Mirror image of x in the great circle through y and z.
UnitVector reflect_across_arc(const UnitVector& x, const UnitVector& y, const UnitVector& z);

/// True iff the open minor arcs a1a2 and b1b2 share a point.
bool arcs_intersect(const UnitVector& a1, const UnitVector& a2,
                    const UnitVector& b1, const UnitVector& b2);

/// det[a, b, c]; positive when c lies to the left of the directed arc a -> b.
inline double triple(const Vec3& a, const Vec3& b, const Vec3& c) { return a.dot(b.cross(c)); }

/// Unit tangent at p pointing along the geodesic toward q (p != +-q).
Vec3 tangent_toward(const Vec3& p, const Vec3& q);

/// Point reached from p after travelling distance dist along unit tangent t.
Vec3 geodesic_step(const Vec3& p, const Vec3& t, double dist);

/// Interior angle at b of the corner a -> b -> c of a counter-clockwise face,
/// in [0, 2pi). Values above pi mean the corner is reflex.
double corner_angle(const Vec3& a, const Vec3& b, const Vec3& c);

UnitVector random_unit_vector(std::mt19937_64& rng);

}  // namespace tammes
