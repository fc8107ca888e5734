#include "tammes/sphere_geom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tammes {

namespace {

double clamp_unit(double c) { return std::clamp(c, -1.0, 1.0); }

// Open-arc membership for a point already known to lie on the arc's great circle.
bool strictly_inside_arc(const Vec3& a, const Vec3& b, const Vec3& p, double eps) {
    const double ab = std::atan2(a.cross(b).norm(), a.dot(b));
    const double ap = std::atan2(a.cross(p).norm(), a.dot(p));
    const double pb = std::atan2(p.cross(b).norm(), p.dot(b));
    return ap > eps && pb > eps && std::abs(ap + pb - ab) < eps;
}

}  // namespace

UnitVector::UnitVector(double x, double y, double z) : UnitVector(Vec3(x, y, z)) {}

UnitVector::UnitVector(const Vec3& v) {
    const double n = v.norm();
    if (!(n > 0.0) || !std::isfinite(n)) throw std::domain_error("UnitVector: zero or non-finite vector");
    v_ = v / n;
}

UnitVector UnitVector::from_unit(const Vec3& v) {
    const double err = std::abs(v.norm() - 1.0);
    if (err > 1e-9) throw std::domain_error("UnitVector: input is not unit length");
    // Keeps stored bits when the input is unit to rounding, so serialization round-trips exactly.
    return err <= 4 * std::numeric_limits<double>::epsilon() ? from_raw(v) : UnitVector(v);
}

double angular_dist(const UnitVector& a, const UnitVector& b) {
    // atan2 form equals arccos(clamp(<a,b>)) and stays accurate near 0 and pi.
    return std::atan2(a.vec().cross(b.vec()).norm(), a.vec().dot(b.vec()));
}

double psi(std::span<const UnitVector> points) {
    if (points.size() < 2) throw std::domain_error("psi: need at least two points");
    double best = kPi;
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j) best = std::min(best, angular_dist(points[i], points[j]));
    return best;
}

double equilateral_triangle_angle(double d) {
    if (!(d > 0.0 && d < 2.0 * kPi / 3.0)) throw std::domain_error("equilateral_triangle_angle: d outside (0, 2pi/3)");
    const double c = std::cos(d);
    return std::acos(clamp_unit(c / (1.0 + c)));
}

double equilateral_triangle_side(double angle) {
    if (!(angle > kPi / 3.0 && angle < kPi)) throw std::domain_error("equilateral_triangle_side: angle outside (pi/3, pi)");
    // cos a = c / (1 + c)  =>  c = cos a / (1 - cos a)
    const double ca = std::cos(angle);
    return std::acos(clamp_unit(ca / (1.0 - ca)));
}

double regular_polygon_angle(int m, double d) {
    if (m < 3) throw std::domain_error("regular_polygon_angle: m < 3");
    if (!(d > 0.0 && d * m < 2.0 * kPi)) throw std::domain_error("regular_polygon_angle: perimeter must be below 2pi");
    // Right triangle centre / vertex / edge midpoint: cos(pi/m) = cos(d/2) sin(A/2).
    const double s = std::cos(kPi / m) / std::cos(d / 2.0);
    return 2.0 * std::asin(std::min(1.0, s));
}

double polygon_closure_residual(double d, std::span<const double> angles) {
    // Body-frame composition: columns of the frame are (position, heading, left normal).
    const double cd = std::cos(d), sd = std::sin(d);
    Eigen::Matrix3d travel;
    travel << cd, -sd, 0.0,
              sd, cd, 0.0,
              0.0, 0.0, 1.0;
    Eigen::Matrix3d frame = Eigen::Matrix3d::Identity();
    for (double u : angles) {
        const double turn = kPi - u;
        const double ct = std::cos(turn), st = std::sin(turn);
        Eigen::Matrix3d rot;
        rot << 1.0, 0.0, 0.0,
               0.0, ct, -st,
               0.0, st, ct;
        frame = frame * travel * rot;
    }
    return (frame - Eigen::Matrix3d::Identity()).norm();
}

double polygon_closure_residual(double d, const FaceAngleVector& face) {
    return polygon_closure_residual(d, std::span<const double>(face.angles));
}

UnitVector reflect_across_arc(const UnitVector& x, const UnitVector& y, const UnitVector& z) {
    const Vec3 normal = y.vec().cross(z.vec());
    const double len = normal.norm();
    if (len < 1e-12) throw DegenerateArcError("reflect_across_arc: y and z coincide or are antipodal");
    const Vec3 n = normal / len;
    return UnitVector(x.vec() - 2.0 * x.vec().dot(n) * n);
}

bool arcs_intersect(const UnitVector& a1, const UnitVector& a2, const UnitVector& b1, const UnitVector& b2) {
    constexpr double eps = 1e-12;
    const Vec3 na = a1.vec().cross(a2.vec());
    const Vec3 nb = b1.vec().cross(b2.vec());
    if (na.norm() < eps || nb.norm() < eps) throw DegenerateArcError("arcs_intersect: degenerate arc");

    const Vec3 line = na.cross(nb);
    if (line.norm() < 1e-12 * na.norm() * nb.norm()) {
        // Same great circle: the open arcs overlap iff an endpoint of one lies
        // strictly inside the other, or the arcs coincide.
        const auto& A1 = a1.vec(); const auto& A2 = a2.vec();
        const auto& B1 = b1.vec(); const auto& B2 = b2.vec();
        if (strictly_inside_arc(A1, A2, B1, 1e-10) || strictly_inside_arc(A1, A2, B2, 1e-10) ||
            strictly_inside_arc(B1, B2, A1, 1e-10) || strictly_inside_arc(B1, B2, A2, 1e-10))
            return true;
        const bool same = ((A1 - B1).norm() < 1e-12 && (A2 - B2).norm() < 1e-12) ||
                          ((A1 - B2).norm() < 1e-12 && (A2 - B1).norm() < 1e-12);
        return same;
    }
    const Vec3 p = line.normalized();
    for (const Vec3& q : {p, Vec3(-p)}) {
        if (strictly_inside_arc(a1.vec(), a2.vec(), q, 1e-12) && strictly_inside_arc(b1.vec(), b2.vec(), q, 1e-12))
            return true;
    }
    return false;
}

Vec3 tangent_toward(const Vec3& p, const Vec3& q) {
    Vec3 t = q - p.dot(q) * p;
    const double n = t.norm();
    if (n < 1e-15) throw DegenerateArcError("tangent_toward: points coincide or are antipodal");
    return t / n;
}

Vec3 geodesic_step(const Vec3& p, const Vec3& t, double dist) {
    return (std::cos(dist) * p + std::sin(dist) * t).normalized();
}

double corner_angle(const Vec3& a, const Vec3& b, const Vec3& c) {
    const Vec3 ta = tangent_toward(b, a);
    const Vec3 tc = tangent_toward(b, c);
    double ang = std::atan2(b.dot(tc.cross(ta)), tc.dot(ta));
    if (ang < 0.0) ang += 2.0 * kPi;
    return ang;
}

UnitVector random_unit_vector(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (;;) {
        Vec3 v(gauss(rng), gauss(rng), gauss(rng));
        if (v.norm() > 1e-6) return UnitVector(v);
    }
}

}  // namespace tammes
