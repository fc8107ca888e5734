#include "pipeline_fixture.hpp"
#include "tammes/extremal.hpp"
#include "tammes/svg.hpp"

#include <doctest.h>

#include <regex>

using namespace tammes;

namespace {

int count(const std::string& s, const std::string& what) {
    int k = 0;
    for (size_t pos = s.find(what); pos != std::string::npos; pos = s.find(what, pos + 1)) ++k;
    return k;
}

}  // namespace

TEST_CASE("octahedron drawing" * doctest::test_suite("properties")) {
    const std::string svg = render_svg(antipodal_optimum(3).config);
    CHECK(count(svg, "<circle") == 6);
    CHECK(count(svg, "<polyline") == 12);
    CHECK(svg == render_svg(antipodal_optimum(3).config));
    CHECK(svg.rfind("<svg", 0) == 0);
}

TEST_CASE("long arcs are subdivided") {
    const std::string svg = render_svg(icosa_config(12));
    const std::regex poly("points=\"([^\"]*)\"");
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), poly); it != std::sregex_iterator(); ++it) {
        const std::string pts = (*it)[1];
        CHECK(count(pts, ",") >= 3);
    }
}

TEST_CASE("isolated vertex is drawn without edges") {
    const GraphRecord* iso = nullptr;
    for (const auto& r : pipeline_for(9).records)
        if (!r.graph.isolated().empty()) iso = &r;
    REQUIRE(iso);
    const int v = iso->graph.core_size();
    const std::string svg = render_svg(SphericalConfig::from_points(iso->witness));
    CHECK(count(svg, "<circle") == 9);
    CHECK(count(svg, "<polyline") == iso->edge_count());
    CHECK(count(svg, "data-u=\"" + std::to_string(v) + "\"") == 0);
    CHECK(count(svg, "data-v=\"" + std::to_string(v) + "\"") == 0);
    CHECK(count(svg, "data-id=\"" + std::to_string(v) + "\"") == 1);
}

TEST_CASE("render errors") {
    CHECK_THROWS_AS(render_svg(std::vector<UnitVector>{}, {}), std::invalid_argument);
    CHECK_THROWS_AS(render_svg({UnitVector(1, 0, 0), UnitVector(0, 1, 0)}, {{0, 2}}), std::invalid_argument);
}
