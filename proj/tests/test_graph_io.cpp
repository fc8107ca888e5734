#include "tammes/graph_gen.hpp"
#include "tammes/graph_io.hpp"

#include <doctest.h>

#include <cmath>

using namespace tammes;

TEST_CASE("text format round-trips every candidate, isolated vertices included") {
    for (const auto& g : generate_candidates(7, 12, true)) {
        const std::string text = to_text(g);
        CHECK(from_text(text) == g);
    }
    const std::string octa = to_text(maps::octahedron());
    CHECK(octa.rfind("6 12 8\n", 0) == 0);
}

TEST_CASE("text format errors") {
    CHECK_THROWS_AS(from_text(""), ParseError);
    CHECK_THROWS_AS(from_text("4 6 4\n1 2 3\n0 3 2\n"), ParseError);
    CHECK_THROWS_AS(from_text("4 5 4\n1 2 3\n0 3 2\n0 1 3\n0 2 1\n"), ParseError);
    CHECK_THROWS_AS(from_text("4 6 4\n1 2 x\n0 3 2\n0 1 3\n0 2 1\n"), ParseError);
}

TEST_CASE("planar code round-trips and reads headerless input") {
    const auto graphs = generate_candidates(7, 12, false);
    CHECK(from_planar_code(to_planar_code(graphs, true)) == graphs);
    CHECK(from_planar_code(to_planar_code(graphs, false)) == graphs);
    const std::string k4 = to_planar_code({maps::tetrahedron()}, false);
    CHECK(k4.size() == 1 + 4 * 4);
    CHECK(k4[0] == 4);
    CHECK_THROWS_AS(from_planar_code(std::string("\x04\x02\x03", 3)), ParseError);
    for (const auto& g : generate_candidates(7, 12, true))
        if (!g.isolated().empty()) CHECK_THROWS_AS(to_planar_code({g}, true), std::invalid_argument);
}

TEST_CASE("candidate JSON round-trip") {
    for (const auto& g : generate_candidates(7, 12, true)) {
        const auto j = candidate_to_json(g);
        CHECK(j.at("edge_count").get<int>() == g.edge_count());
        CHECK(candidate_from_json(j) == g);
    }
    CHECK_THROWS_AS(candidate_from_json(nlohmann::json::object()), ParseError);
}

TEST_CASE("configuration files") {
    const auto pts = parse_config("# square\n1 0 0\n0 1 0 # comment\n-1 0 0\n0 -1 0\n");
    CHECK(pts.size() == 4);
    const auto sph = parse_config("format spherical\n0 0\n1.5707963267948966 0\n");
    CHECK(sph.size() == 2);
    CHECK(angular_dist(sph[0], sph[1]) == doctest::Approx(kPi / 2));
    CHECK_THROWS_AS(parse_config("1 0 0\n0 0 1.1\n"), ParseError);
    CHECK_THROWS_AS(parse_config("1 0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_config("1 0 0\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_config("format polar\n"), ParseError);
    CHECK_NOTHROW(parse_config("1 0 0\n0 0 1.0000001\n"));
}

TEST_CASE("points JSON round-trip is exact") {
    std::mt19937_64 rng(2);
    std::vector<UnitVector> pts;
    for (int i = 0; i < 20; ++i) pts.push_back(random_unit_vector(rng));
    const auto back = points_from_json(nlohmann::json::parse(points_to_json(pts).dump()));
    REQUIRE(back.size() == pts.size());
    for (size_t i = 0; i < pts.size(); ++i) CHECK((back[i].vec() - pts[i].vec()).norm() < 1e-15);
}
