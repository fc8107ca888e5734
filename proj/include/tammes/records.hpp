// Per-graph results of the enumeration pipeline and their JSON form.
#pragma once

#include "tammes/embedder.hpp"
#include "tammes/rigidity.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace tammes {

struct GraphRecord {
    int n = 0;
    CanonicalKey key;
    PlanarCandidate graph;
    Verdict status = Verdict::Undecided;
    double d_min = 0.0;
    double d_max = 0.0;
    bool min_at_bound = false;
    bool max_at_bound = false;
    RigidityFlags flags;
    /// Set when the flags near d_min differ from those near d_max.
    std::optional<std::string> flag_warning;
    /// Closure configuration at d_max (may carry extra near-contacts when max_at_bound).
    std::vector<UnitVector> coords_at_dmax;
    /// Strict configuration just below d_max with exactly the record's contact graph.
    std::vector<UnitVector> witness;

    int edge_count() const { return graph.edge_count(); }
    bool feasible() const { return status == Verdict::Feasible; }
};

nlohmann::json record_to_json(const GraphRecord& r);
GraphRecord record_from_json(const nlohmann::json& j);

/// One compact JSON object per line, in the given order.
std::string records_to_jsonl(const std::vector<GraphRecord>& records);
std::vector<GraphRecord> records_from_jsonl(const std::string& text);

/// Flags evaluated on the record's witness; maximal iff d_max is within 2e-3
/// of d_n and is attained by a non-degenerate configuration.
/// Throws std::invalid_argument if the record has no witness.
RigidityFlags classify(const GraphRecord& record, double d_n);

/// Records with status feasible.
std::vector<GraphRecord> feasible_only(const std::vector<GraphRecord>& records);

}  // namespace tammes
