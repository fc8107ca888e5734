#include "tammes/embedder.hpp"
#include "tammes/graph_gen.hpp"

#include <doctest.h>

#include <cmath>

using namespace tammes;

namespace {

const double kD12 = std::acos(1.0 / std::sqrt(5.0));

void check_angle_sums(const PlanarCandidate& g, const EmbeddingSolution& sol) {
    std::vector<double> sum(g.core_size(), 0.0);
    for (const auto& fa : sol.face_angles) {
        const auto& face = g.faces()[fa.face_id];
        REQUIRE(fa.angles.size() == face.size());
        for (size_t i = 0; i < face.size(); ++i) sum[face[i]] += fa.angles[i];
    }
    for (double s : sum) CHECK(std::abs(s - 2 * kPi) < 1e-9);
    for (const auto& fa : sol.face_angles) CHECK(polygon_closure_residual(sol.d, fa) < 1e-9);
}

}  // namespace

TEST_CASE("LP relaxation pins all-triangle graphs to their regular edge length") {
    const auto octa = maps::octahedron();
    CHECK(lp_prune(octa, kPi / 2, kPi / 2));
    CHECK_FALSE(lp_prune(octa, 1.0, 1.0));
    CHECK_FALSE(lp_prune(octa, 1.2, 1.5));
    const auto ivals = lp_feasible_intervals(octa, 0.05, 3.0);
    REQUIRE(ivals.size() == 1);
    CHECK(ivals[0].first <= kPi / 2);
    CHECK(ivals[0].second >= kPi / 2);
    CHECK(ivals[0].second - ivals[0].first < 0.03);

    const auto ico = maps::icosahedron();
    CHECK(lp_prune(ico, kD12, kD12));
    CHECK_FALSE(lp_prune(ico, 1.0, 1.05));
}

TEST_CASE("octahedron and icosahedron are realized at their edge lengths") {
    const auto octa = maps::octahedron();
    const SolveResult s = solve_embedding(octa, kPi / 2);
    REQUIRE(s.verdict == Verdict::Feasible);
    REQUIRE(s.solution);
    CHECK(s.solution->residual < 1e-9);
    CHECK(s.solution->coords.psi == doctest::Approx(kPi / 2).epsilon(1e-9));
    CHECK(s.solution->coords.edges.size() == 12);
    check_angle_sums(octa, *s.solution);
    CHECK(solve_embedding(octa, 1.4).verdict == Verdict::Infeasible);

    const auto ico = maps::icosahedron();
    const SolveResult free = solve_embedding(ico, std::nullopt);
    REQUIRE(free.solution);
    CHECK(free.solution->d == doctest::Approx(kD12).epsilon(1e-8));
    check_angle_sums(ico, *free.solution);
    CHECK_THROWS_AS(solve_embedding(octa, 0.0), std::domain_error);
}

TEST_CASE("six-point ranges: prism and octahedron") {
    const FeasibleRange prism = d_range(maps::triangular_prism());
    REQUIRE(prism.status == Verdict::Feasible);
    CHECK(std::abs(prism.d_min - 1.4274) < 2e-3);
    CHECK(std::abs(prism.d_max - 1.5708) < 2e-3);
    CHECK(prism.max_at_bound);
    const FeasibleRange octa = d_range(maps::octahedron());
    REQUIRE(octa.status == Verdict::Feasible);
    CHECK(octa.d_min == doctest::Approx(kPi / 2).epsilon(1e-7));
    CHECK(octa.d_max == doctest::Approx(kPi / 2).epsilon(1e-7));
    CHECK_FALSE(octa.max_at_bound);
}

TEST_CASE("cube graph deforms from the regular cube to the square antiprism") {
    const FeasibleRange r = d_range(maps::cube());
    REQUIRE(r.status == Verdict::Feasible);
    CHECK(std::abs(r.d_min - 1.23096) < 2e-3);
    CHECK(std::abs(r.d_max - 1.30653) < 2e-3);
    CHECK(r.max_at_bound);
    CHECK(solve_embedding(maps::cube(), std::acos(1.0 / 3.0) + 1e-4).verdict == Verdict::Feasible);
}

TEST_CASE("coordinates rebuilt from face angles realize the candidate") {
    for (const auto& g : generate_candidates(6, 12, false)) {
        const SolveResult s = solve_embedding(g, std::nullopt);
        if (!s.solution) continue;
        const SphericalConfig c = realize_coordinates(g, *s.solution);
        CHECK(verify_config(c, g));
        CHECK(canonical_key(contact_map(c)) == canonical_key(g));
        CHECK(c.psi == doctest::Approx(s.solution->d).epsilon(1e-8));
    }
}

TEST_CASE("verify_config rejects a different graph") {
    const SolveResult s = solve_embedding(maps::octahedron(), kPi / 2);
    REQUIRE(s.solution);
    CHECK(verify_config(s.solution->coords, maps::octahedron()));
    CHECK_FALSE(verify_config(s.solution->coords, maps::triangular_prism()));
    CHECK_FALSE(verify_config(s.solution->coords, maps::cube()));
}

TEST_CASE("solver is deterministic" * doctest::test_suite("properties")) {
    const auto g = maps::triangular_prism();
    const SolveResult a = solve_embedding(g, 1.5), b = solve_embedding(g, 1.5);
    REQUIRE(a.solution);
    REQUIRE(b.solution);
    for (size_t i = 0; i < a.solution->coords.points.size(); ++i)
        CHECK(a.solution->coords.points[i] == b.solution->coords.points[i]);
}

TEST_CASE("maximin position and slack") {
    std::vector<UnitVector> pts{UnitVector(0.05, 0.02, 1), UnitVector(1, 0, 0),  UnitVector(-1, 0, 0),
                                UnitVector(0, 1, 0),       UnitVector(0, -1, 0), UnitVector(0, 0, -1)};
    const UnitVector p = maximin_position(pts, 0);
    CHECK((p.vec() - Vec3(0, 0, 1)).norm() < 1e-6);
    CHECK_THROWS_AS(maximin_position(pts, 6), std::out_of_range);

    const Slack s = slack_of(maps::octahedron(), solve_embedding(maps::octahedron(), kPi / 2).solution->coords.points,
                             kPi / 2);
    CHECK(s.separation == doctest::Approx(kPi / 2).epsilon(1e-8));
    CHECK(s.max_corner == doctest::Approx(kPi / 2).epsilon(1e-8));
}

TEST_CASE("contact configurations from points") {
    const auto c = SphericalConfig::from_points({UnitVector(1, 0, 0), UnitVector(0, 1, 0), UnitVector(0, 0, 1)});
    CHECK(c.edges.size() == 3);
    CHECK(c.psi == doctest::Approx(kPi / 2));
}
