#include "tammes/rigidity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace tammes {

namespace {

constexpr double kAngleTol = 1e-9;
constexpr double kProbeStep = 1e-6;

std::vector<int> contacts_of(const SphericalConfig& c, int v) {
    std::vector<int> out;
    for (auto [a, b] : c.edges) {
        if (a == v) out.push_back(b);
        if (b == v) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Change of <x, y> when x moves by h along the unit tangent u, without cancellation.
double dot_change(const Vec3& x, const Vec3& u, const Vec3& y, double h) {
    const double s = std::sin(0.5 * h);
    return -2.0 * s * s * x.dot(y) + std::sin(h) * u.dot(y);
}

double nearest(const SphericalConfig& c, const Vec3& p, int skip) {
    double m = std::numeric_limits<double>::infinity();
    for (int j = 0; j < static_cast<int>(c.points.size()); ++j)
        if (j != skip) m = std::min(m, angular_dist(UnitVector(p), c.points[j]));
    return m;
}

}  // namespace

ShiftResult vertex_shiftable(const SphericalConfig& c, int v) {
    const int n = static_cast<int>(c.points.size());
    if (v < 0 || v >= n) throw std::out_of_range("vertex_shiftable: index out of range");
    const Vec3& x = c.points[v].vec();
    const auto nb = contacts_of(c, v);

    if (nb.empty()) {
        const UnitVector moved = maximin_position(c.points, v);
        const double before = nearest(c, x, v), after = nearest(c, moved.vec(), v);
        if (after > before + 1e-9) return {true, tangent_toward(x, moved.vec())};
        return {false, std::nullopt};
    }

    Vec3 e1 = (std::abs(x.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY());
    e1 = (e1 - e1.dot(x) * x).normalized();
    const Vec3 e2 = x.cross(e1);
    std::vector<double> theta;
    for (int j : nb) {
        const Vec3 t = tangent_toward(x, c.points[j].vec());
        theta.push_back(std::atan2(t.dot(e2), t.dot(e1)));
    }
    std::sort(theta.begin(), theta.end());
    double gap = 0.0, gap_start = 0.0;
    const int k = static_cast<int>(theta.size());
    for (int i = 0; i < k; ++i) {
        const double next = i + 1 < k ? theta[i + 1] : theta[0] + 2.0 * kPi;
        if (next - theta[i] > gap) {
            gap = next - theta[i];
            gap_start = theta[i];
        }
    }
    auto dir = [&](double a) { return Vec3(std::cos(a) * e1 + std::sin(a) * e2); };
    if (gap > kPi + kAngleTol) return {true, dir(gap_start + 0.5 * gap)};
    if (gap < kPi - kAngleTol) return {false, std::nullopt};

    // Contacts span a half-plane: probe directions in the open gap at second order.
    for (int s = 1; s < 32; ++s) {
        const Vec3 u = dir(gap_start + gap * s / 32.0);
        bool all = true;
        for (int j : nb)
            if (!(dot_change(x, u, c.points[j].vec(), kProbeStep) < 0.0)) {
                all = false;
                break;
            }
        if (!all) continue;
        const Vec3 moved = std::cos(kProbeStep) * x + std::sin(kProbeStep) * u;
        bool clear = true;
        for (int j = 0; j < n && clear; ++j)
            if (j != v && !std::binary_search(nb.begin(), nb.end(), j))
                clear = angular_dist(UnitVector(moved), c.points[j]) > c.psi;
        if (clear) return {true, u};
    }
    return {false, std::nullopt};
}

RigidityFlags is_irreducible(const SphericalConfig& c) {
    RigidityFlags f;
    f.irreducible = true;
    for (int v = 0; v < static_cast<int>(c.points.size()); ++v) {
        const ShiftResult r = vertex_shiftable(c, v);
        if (r.shiftable) {
            f.irreducible = false;
            f.shift_witness = ShiftWitness{v, *r.direction};
            break;
        }
    }
    return f;
}

std::optional<ReflectionWitness> d_reflection_exists(const SphericalConfig& c) {
    const int n = static_cast<int>(c.points.size());
    for (int x = 0; x < n; ++x) {
        const auto nb = contacts_of(c, x);
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j) {
                const int y = nb[i], z = nb[j];
                if ((c.points[y].vec() + c.points[z].vec()).norm() < 1e-12) continue;
                UnitVector image;
                try {
                    image = reflect_across_arc(c.points[x], c.points[y], c.points[z]);
                } catch (const DegenerateArcError&) {
                    continue;
                }
                double m = std::numeric_limits<double>::infinity();
                for (int w = 0; w < n; ++w)
                    if (w != x && w != y && w != z) m = std::min(m, angular_dist(image, c.points[w]));
                if (m > c.psi + 1e-9) return ReflectionWitness{x, y, z};
            }
    }
    return std::nullopt;
}

RigidityFlags rigidity_flags(const SphericalConfig& c) {
    RigidityFlags f = is_irreducible(c);
    f.reflection_witness = d_reflection_exists(c);
    f.d_irreducible = f.irreducible && !f.reflection_witness;
    return f;
}

}  // namespace tammes
