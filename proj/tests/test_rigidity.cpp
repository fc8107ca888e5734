#include "tammes/extremal.hpp"
#include "tammes/rigidity.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

using namespace tammes;

namespace {

std::vector<UnitVector> cube_points() {
    std::vector<UnitVector> pts;
    for (double x : {-1.0, 1.0})
        for (double y : {-1.0, 1.0})
            for (double z : {-1.0, 1.0}) pts.emplace_back(x, y, z);
    return pts;
}

std::vector<UnitVector> octahedron_points() {
    return {UnitVector(1, 0, 0), UnitVector(-1, 0, 0), UnitVector(0, 1, 0),
            UnitVector(0, -1, 0), UnitVector(0, 0, 1), UnitVector(0, 0, -1)};
}

// A random rotation of a random subset (at least four points) of a polyhedron.
SphericalConfig random_sub_configuration(std::mt19937_64& rng) {
    const int which = std::uniform_int_distribution<int>(0, 2)(rng);
    auto pts = which == 0 ? icosahedron_points() : which == 1 ? cube_points() : octahedron_points();
    std::shuffle(pts.begin(), pts.end(), rng);
    const int keep = std::uniform_int_distribution<int>(4, static_cast<int>(pts.size()))(rng);
    pts.resize(keep);
    const UnitVector axis = random_unit_vector(rng);
    const double angle = std::uniform_real_distribution<double>(0.0, 2 * kPi)(rng);
    const Eigen::AngleAxisd rot(angle, axis.vec());
    for (auto& p : pts) p = UnitVector(Vec3(rot * p.vec()));
    return SphericalConfig::from_points(pts);
}

double nearest_other(const SphericalConfig& c, const Vec3& p, int skip) {
    double m = std::numeric_limits<double>::infinity();
    for (int j = 0; j < static_cast<int>(c.points.size()); ++j)
        if (j != skip) m = std::min(m, angular_dist(UnitVector(p), c.points[j]));
    return m;
}

// Sampled-perturbation oracle: try many tangent directions at a small step and
// ask whether the distances to all contacts (to everything, for a point
// without contacts) strictly grow.
bool sampled_shiftable(const SphericalConfig& c, int v) {
    const Vec3 x = c.points[v].vec();
    std::vector<int> nb;
    for (auto [a, b] : c.edges) {
        if (a == v) nb.push_back(b);
        if (b == v) nb.push_back(a);
    }
    Vec3 e1 = (std::abs(x.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY());
    e1 = (e1 - e1.dot(x) * x).normalized();
    const Vec3 e2 = x.cross(e1);
    const double before = nearest_other(c, x, v);
    for (int s = 0; s < 3600; ++s) {
        const double a = 2 * kPi * s / 3600.0;
        const Vec3 u = std::cos(a) * e1 + std::sin(a) * e2;
        if (nb.empty()) {
            const double h = 1e-3;
            if (nearest_other(c, std::cos(h) * x + std::sin(h) * u, v) > before + 1e-9) return true;
            continue;
        }
        const double h = 1e-5;
        const UnitVector moved(Vec3(std::cos(h) * x + std::sin(h) * u));
        bool all = true;
        for (int j : nb)
            if (!(angular_dist(moved, c.points[j]) > c.psi)) {
                all = false;
                break;
            }
        if (all) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("tangent-cone test agrees with the sampled-perturbation oracle on 50 configurations" * doctest::test_suite("properties")) {
    std::mt19937_64 rng(2024);
    int shiftable = 0, locked = 0;
    for (int k = 0; k < 50; ++k) {
        const SphericalConfig c = random_sub_configuration(rng);
        for (int v = 0; v < static_cast<int>(c.points.size()); ++v) {
            CAPTURE(k);
            CAPTURE(v);
            const bool ours = vertex_shiftable(c, v).shiftable;
            CHECK(ours == sampled_shiftable(c, v));
            (ours ? shiftable : locked)++;
        }
    }
    CHECK(shiftable > 20);
    CHECK(locked > 20);
}

TEST_CASE("shift witnesses point away from every contact") {
    std::mt19937_64 rng(99);
    for (int k = 0; k < 50; ++k) {
        const SphericalConfig c = random_sub_configuration(rng);
        const RigidityFlags f = is_irreducible(c);
        if (f.irreducible) continue;
        REQUIRE(f.shift_witness);
        const int v = f.shift_witness->vertex;
        const Vec3 u = f.shift_witness->direction;
        CHECK(std::abs(u.norm() - 1.0) < 1e-9);
        CHECK(std::abs(u.dot(c.points[v].vec())) < 1e-9);
        for (auto [a, b] : c.edges)
            if (a == v || b == v) CHECK(u.dot(c.points[a == v ? b : a].vec()) <= 1e-9);
    }
}

TEST_CASE("regular polyhedra are irreducible and D-irreducible") {
    for (const auto& pts : {icosahedron_points(), octahedron_points(), cube_points()}) {
        const RigidityFlags f = rigidity_flags(SphericalConfig::from_points(pts));
        CHECK(f.irreducible);
        CHECK(f.d_irreducible);
        CHECK_FALSE(f.shift_witness);
        CHECK_FALSE(f.reflection_witness);
    }
}

TEST_CASE("icosahedron minus two adjacent vertices is reducible") {
    const RigidityFlags f = rigidity_flags(icosa_config(10));
    CHECK_FALSE(f.irreducible);
    CHECK_FALSE(f.d_irreducible);
    CHECK(f.shift_witness);
}

TEST_CASE("D-irreducible implies irreducible, and reflection witnesses are admissible") {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 50; ++k) {
        const SphericalConfig c = random_sub_configuration(rng);
        const RigidityFlags f = rigidity_flags(c);
        if (f.d_irreducible) CHECK(f.irreducible);
        if (!f.reflection_witness) continue;
        const auto [x, y, z] = *f.reflection_witness;
        const UnitVector image = reflect_across_arc(c.points[x], c.points[y], c.points[z]);
        CHECK(angular_dist(image, c.points[y]) == doctest::Approx(c.psi).epsilon(1e-9));
        for (int w = 0; w < static_cast<int>(c.points.size()); ++w)
            if (w != x && w != y && w != z) CHECK(angular_dist(image, c.points[w]) > c.psi);
    }
}

TEST_CASE("two points and out-of-range vertices") {
    const auto c = SphericalConfig::from_points({UnitVector(1, 0, 0), UnitVector(0.5, std::sqrt(3.0) / 2, 0)});
    CHECK(c.edges.size() == 1);
    CHECK(vertex_shiftable(c, 0).shiftable);
    CHECK_THROWS_AS(vertex_shiftable(c, 2), std::out_of_range);
}
