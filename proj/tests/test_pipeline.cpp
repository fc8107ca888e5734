#include "pipeline_fixture.hpp"
#include "tammes/extremal.hpp"
#include "tammes/graph_gen.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>

using namespace tammes;

TEST_CASE("irreducible counts for n = 6..9") {
    const int expected[] = {2, 2, 4, 10};
    for (int n = 6; n <= 9; ++n) {
        const auto& res = pipeline_for(n);
        CHECK(static_cast<int>(res.records.size()) == expected[n - 6]);
        CHECK(res.stats.undecided == 0);
        CHECK(count_irreducible(res.records) == expected[n - 6]);
    }
}

TEST_CASE("records satisfy the structural lemmas" * doctest::test_suite("properties")) {
    for (int n = 6; n <= 9; ++n) {
        for (const auto& r : pipeline_for(n).records) {
            CAPTURE(r.key.hex());
            REQUIRE(r.feasible());
            REQUIRE(r.witness.size() == static_cast<size_t>(n));
            const SphericalConfig c = SphericalConfig::from_points(r.witness);
            CHECK(verify_config(c, r.graph));
            CHECK(static_cast<int>(c.edges.size()) == r.edge_count());
            for (int v = 0; v < r.graph.core_size(); ++v) {
                CHECK(r.graph.degree(v) >= 3);
                CHECK(r.graph.degree(v) <= 5);
            }
            CHECK(r.graph.max_face_size() <= max_face_for_distance(r.d_min));
            CHECK(r.d_min <= r.d_max);
            // All faces triangles or quadrilaterals: irreducible.
            if (r.graph.max_face_size() <= 4 && r.graph.isolated().empty()) CHECK(r.flags.irreducible);
            // At least 3n - 8 contacts for n > 6: irreducible.
            if (n > 6 && r.edge_count() >= 3 * n - 8) CHECK(r.flags.irreducible);
            if (r.flags.maximal) CHECK(r.flags.d_irreducible);
            if (r.flags.d_irreducible) CHECK(r.flags.irreducible);
            if (n != 6) CHECK(r.edge_count() < contact_upper_bound(n));
        }
    }
}

TEST_CASE("Tammes values stay under the Fejes Toth bound and the maximum is unique") {
    for (int n = 6; n <= 9; ++n) {
        const auto& recs = pipeline_for(n).records;
        const TammesValue t = tammes_from_records(recs);
        CHECK(t.d_n <= fejes_toth_bound(n) + 2e-3);
        CHECK(t.maximal.size() == 1);
        int flagged = 0;
        for (const auto& r : recs) flagged += r.flags.maximal;
        CHECK(flagged == 1);
    }
}

TEST_CASE("output is independent of the worker count" * doctest::test_suite("properties")) {
    PipelineOptions o;
    o.n = 8;
    o.jobs = 1;
    const std::string one = records_to_jsonl(run_pipeline(o).records);
    o.jobs = 3;
    const std::string three = records_to_jsonl(run_pipeline(o).records);
    CHECK(one == three);
    CHECK(one == records_to_jsonl(pipeline_for(8).records));
}

TEST_CASE("raising d-lower to 1.3 keeps the graphs reaching 1.3 at n = 8") {
    PipelineOptions o;
    o.n = 8;
    o.d_lower = 1.3;
    o.d_floor = 1.3;
    const auto res = run_pipeline(o);
    REQUIRE(res.records.size() == 3);
    int maximal = 0;
    for (const auto& r : res.records) {
        CHECK(r.d_max >= 1.3);
        CHECK(r.d_min >= 1.3 - 1e-9);
        if (r.flags.maximal) {
            ++maximal;
            CHECK(r.edge_count() == 16);
        }
    }
    CHECK(maximal == 1);
}

TEST_CASE("results cache") {
    const auto dir = std::filesystem::temp_directory_path() / "tammes_cache_test";
    std::filesystem::remove_all(dir);
    PipelineOptions o;
    o.n = 7;
    o.cache_dir = dir.string();
    const auto first = run_pipeline(o);
    CHECK_FALSE(first.stats.cache_hit);
    const auto second = run_pipeline(o);
    CHECK(second.stats.cache_hit);
    CHECK(records_to_jsonl(first.records) == records_to_jsonl(second.records));
    CHECK(second.stats.feasible == first.stats.feasible);

    PipelineOptions other = o;
    other.solver.starts = 32;
    CHECK(manifest_hash(run_manifest(other)) != manifest_hash(run_manifest(o)));
    CHECK(manifest_hash(run_manifest(o)) == manifest_hash(run_manifest(o)));
    std::filesystem::remove_all(dir);
}

TEST_CASE("pipeline rejects unsupported n") {
    PipelineOptions o;
    o.n = 2;
    CHECK_THROWS_AS(run_pipeline(o), std::domain_error);
}
