// End-to-end enumeration of irreducible contact graphs for one n.
#pragma once

#include "tammes/records.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace tammes {

extern const char* const kCodeVersion;

struct PipelineOptions {
    int n = 6;
    /// Minimal distance assumed by the combinatorial filter.
    double d_lower = kPi / 3.0;
    /// Lower bound on d handed to the solver; unset means none.
    std::optional<double> d_floor;
    int max_face = 12;
    bool allow_isolated = true;
    int jobs = 1;
    SolverOptions solver;
    /// Empty: use $TAMMES_CACHE_DIR if set, otherwise no cache.
    std::string cache_dir;
};

struct PipelineStats {
    int candidates = 0;
    int filtered = 0;
    int lp_pruned = 0;
    int solved = 0;
    int feasible = 0;
    int infeasible = 0;
    int undecided = 0;
    bool cache_hit = false;
};

struct PipelineResult {
    /// Feasible and undecided records in canonical-key order.
    std::vector<GraphRecord> records;
    PipelineStats stats;
};

/// Everything that determines the pipeline output, as JSON.
nlohmann::json run_manifest(const PipelineOptions& options);
std::string manifest_hash(const nlohmann::json& manifest);

/// Feasible range, witness and flags of one candidate; the maximal flag is
/// left for finalize_maximal.
GraphRecord process_candidate(const PlanarCandidate& g, const SolverOptions& solver);

/// Sets flags.maximal on every feasible record from the best d_max.
void finalize_maximal(std::vector<GraphRecord>& records);

/// Generate, filter, prune and solve. Throws std::domain_error for n outside 3..12.
PipelineResult run_pipeline(const PipelineOptions& options);

}  // namespace tammes
