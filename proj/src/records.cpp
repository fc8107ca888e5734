#include "tammes/records.hpp"

#include "tammes/graph_io.hpp"

#include <cmath>
#include <sstream>

namespace tammes {

namespace {

Verdict verdict_from(const std::string& s) {
    if (s == "feasible") return Verdict::Feasible;
    if (s == "infeasible") return Verdict::Infeasible;
    if (s == "undecided") return Verdict::Undecided;
    throw ParseError("record: unknown status '" + s + "'");
}

}  // namespace

nlohmann::json record_to_json(const GraphRecord& r) {
    nlohmann::json flags = {{"irr", r.flags.irreducible}, {"dirr", r.flags.d_irreducible}, {"max", r.flags.maximal}};
    if (r.flags.shift_witness) {
        const auto& w = *r.flags.shift_witness;
        flags["shift_witness"] = {{"vertex", w.vertex}, {"direction", {w.direction.x(), w.direction.y(), w.direction.z()}}};
    }
    if (r.flags.reflection_witness) {
        const auto& w = *r.flags.reflection_witness;
        flags["reflection_witness"] = {w.x, w.y, w.z};
    }
    if (r.flag_warning) flags["warning"] = *r.flag_warning;

    nlohmann::json iso = nlohmann::json::array();
    for (const auto& i : r.graph.isolated()) iso.push_back(i.face);
    nlohmann::json j = {{"n", r.n},
                        {"canonical_key", r.key.hex()},
                        {"adjacency", r.graph.rotation()},
                        {"isolated_faces", iso},
                        {"faces", r.graph.faces()},
                        {"status", to_string(r.status)},
                        {"flags", flags},
                        {"edge_count", r.edge_count()},
                        {"d_min", nullptr},
                        {"d_max", nullptr},
                        {"min_at_bound", r.min_at_bound},
                        {"max_at_bound", r.max_at_bound},
                        {"coords_at_dmax", points_to_json(r.coords_at_dmax)},
                        {"witness", points_to_json(r.witness)}};
    if (r.feasible()) {
        j["d_min"] = r.d_min;
        j["d_max"] = r.d_max;
    }
    return j;
}

GraphRecord record_from_json(const nlohmann::json& j) {
    try {
        GraphRecord r;
        r.n = j.at("n").get<int>();
        r.graph = PlanarCandidate::from_rotation(j.at("adjacency").get<std::vector<std::vector<int>>>(),
                                                 j.at("isolated_faces").get<std::vector<int>>());
        r.key = CanonicalKey::from_hex(j.at("canonical_key").get<std::string>());
        if (canonical_key(r.graph) != r.key) throw ParseError("record: canonical key does not match adjacency");
        r.status = verdict_from(j.at("status").get<std::string>());
        if (!j.at("d_min").is_null()) r.d_min = j.at("d_min").get<double>();
        if (!j.at("d_max").is_null()) r.d_max = j.at("d_max").get<double>();
        r.min_at_bound = j.at("min_at_bound").get<bool>();
        r.max_at_bound = j.at("max_at_bound").get<bool>();
        const auto& f = j.at("flags");
        r.flags.irreducible = f.at("irr").get<bool>();
        r.flags.d_irreducible = f.at("dirr").get<bool>();
        r.flags.maximal = f.at("max").get<bool>();
        if (f.contains("shift_witness")) {
            const auto& w = f.at("shift_witness");
            const auto d = w.at("direction");
            r.flags.shift_witness = ShiftWitness{w.at("vertex").get<int>(),
                                                 Vec3(d[0].get<double>(), d[1].get<double>(), d[2].get<double>())};
        }
        if (f.contains("reflection_witness")) {
            const auto& w = f.at("reflection_witness");
            r.flags.reflection_witness = ReflectionWitness{w[0].get<int>(), w[1].get<int>(), w[2].get<int>()};
        }
        if (f.contains("warning")) r.flag_warning = f.at("warning").get<std::string>();
        r.coords_at_dmax = points_from_json(j.at("coords_at_dmax"));
        r.witness = points_from_json(j.at("witness"));
        if (j.at("edge_count").get<int>() != r.edge_count()) throw ParseError("record: edge_count mismatch");
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("record json: ") + e.what());
    }
}

std::string records_to_jsonl(const std::vector<GraphRecord>& records) {
    std::string out;
    for (const auto& r : records) out += record_to_json(r).dump() + "\n";
    return out;
}

std::vector<GraphRecord> records_from_jsonl(const std::string& text) {
    std::vector<GraphRecord> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("records: ") + e.what());
        }
        out.push_back(record_from_json(j));
    }
    return out;
}

RigidityFlags classify(const GraphRecord& record, double d_n) {
    if (record.witness.empty()) throw std::invalid_argument("classify: record has no witness configuration");
    RigidityFlags f = rigidity_flags(SphericalConfig::from_points(record.witness));
    f.maximal = std::abs(record.d_max - d_n) <= 2e-3 && !record.max_at_bound;
    return f;
}

std::vector<GraphRecord> feasible_only(const std::vector<GraphRecord>& records) {
    std::vector<GraphRecord> out;
    for (const auto& r : records)
        if (r.feasible()) out.push_back(r);
    return out;
}

}  // namespace tammes
