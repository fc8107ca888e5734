#include "tammes/pipeline.hpp"

#include "tammes/graph_gen.hpp"
#include "tammes/graph_io.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <sstream>
#include <thread>

namespace tammes {

const char* const kCodeVersion = "tammes-1.0";

namespace {

std::optional<SphericalConfig> strict_config(const PlanarCandidate& g, std::optional<double> d,
                                             const SolverOptions& solver) {
    const SolveResult s = solve_embedding(g, d, solver);
    if (!s.solution) return std::nullopt;
    try {
        return realize_coordinates(g, *s.solution);
    } catch (const InconsistencyError&) {
        return s.solution->coords;
    }
}

bool same_flags(const RigidityFlags& a, const RigidityFlags& b) {
    return a.irreducible == b.irreducible && a.d_irreducible == b.d_irreducible;
}

std::string cache_root(const PipelineOptions& options) {
    if (!options.cache_dir.empty()) return options.cache_dir;
    if (const char* env = std::getenv("TAMMES_CACHE_DIR")) return env;
    return {};
}

nlohmann::json stats_to_json(const PipelineStats& s) {
    return {{"candidates", s.candidates}, {"filtered", s.filtered},     {"lp_pruned", s.lp_pruned},
            {"solved", s.solved},         {"feasible", s.feasible},     {"infeasible", s.infeasible},
            {"undecided", s.undecided}};
}

PipelineStats stats_from_json(const nlohmann::json& j) {
    PipelineStats s;
    s.candidates = j.at("candidates");
    s.filtered = j.at("filtered");
    s.lp_pruned = j.at("lp_pruned");
    s.solved = j.at("solved");
    s.feasible = j.at("feasible");
    s.infeasible = j.at("infeasible");
    s.undecided = j.at("undecided");
    return s;
}

}  // namespace

nlohmann::json run_manifest(const PipelineOptions& o) {
    nlohmann::json floor = nullptr;
    if (o.d_floor) floor = *o.d_floor;
    return {{"n", o.n},
            {"filters", {{"max_face_size", o.max_face}, {"d_lower", o.d_lower}, {"allow_isolated", o.allow_isolated}}},
            {"d_floor", floor},
            {"solver_budget",
             {{"starts", o.solver.starts},
              {"iters", o.solver.max_iterations},
              {"tol", o.solver.accept_tol},
              {"seed", o.solver.seed}}},
            {"code_version", kCodeVersion}};
}

std::string manifest_hash(const nlohmann::json& manifest) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : manifest.dump()) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

GraphRecord process_candidate(const PlanarCandidate& g, const SolverOptions& solver) {
    GraphRecord r;
    r.n = g.n();
    r.key = canonical_key(g);
    r.graph = g;
    const FeasibleRange range = d_range(g, solver);
    r.status = range.status;
    if (range.status != Verdict::Feasible) return r;
    r.d_min = range.d_min;
    r.d_max = range.d_max;
    r.min_at_bound = range.min_at_bound;
    r.max_at_bound = range.max_at_bound;
    r.coords_at_dmax = range.witness_max->coords.points;

    // Flags are read off strict configurations just inside both ends of the range.
    const double width = r.d_max - r.d_min;
    std::optional<SphericalConfig> near_max, near_min;
    if (width < 1e-6) {
        near_max = strict_config(g, std::nullopt, solver);
    } else {
        const double eta = std::min(1e-4, width / 3.0);
        near_max = strict_config(g, r.d_max - eta, solver);
        near_min = strict_config(g, r.d_min + eta, solver);
        if (!near_max) near_max = strict_config(g, 0.5 * (r.d_min + r.d_max), solver);
    }
    if (!near_max) near_max = strict_config(g, std::nullopt, solver);
    if (!near_max) {
        r.status = Verdict::Undecided;
        r.flag_warning = "no strict witness found inside the feasible range";
        return r;
    }
    r.witness = near_max->points;
    r.flags = rigidity_flags(*near_max);
    if (near_min) {
        const RigidityFlags low = rigidity_flags(*near_min);
        if (!same_flags(low, r.flags)) {
            std::ostringstream w;
            w << "flags differ along the range: near d_min irr=" << low.irreducible << " dirr=" << low.d_irreducible
              << ", near d_max irr=" << r.flags.irreducible << " dirr=" << r.flags.d_irreducible;
            r.flag_warning = w.str();
        }
    }
    return r;
}

void finalize_maximal(std::vector<GraphRecord>& records) {
    double d_n = -1.0;
    for (const auto& r : records)
        if (r.feasible()) d_n = std::max(d_n, r.d_max);
    for (auto& r : records) r.flags.maximal = r.feasible() && std::abs(r.d_max - d_n) <= 2e-3 && !r.max_at_bound;
}

PipelineResult run_pipeline(const PipelineOptions& options) {
    if (options.n < 3 || options.n > 12) throw std::domain_error("run_pipeline: n must be in 3..12");
    const nlohmann::json manifest = run_manifest(options);
    const std::string root = cache_root(options);
    std::filesystem::path records_path, manifest_path;
    if (!root.empty()) {
        const std::string stem = "n" + std::to_string(options.n) + "_" + manifest_hash(manifest);
        records_path = std::filesystem::path(root) / (stem + ".jsonl");
        manifest_path = std::filesystem::path(root) / (stem + ".manifest.json");
        if (std::filesystem::exists(records_path) && std::filesystem::exists(manifest_path)) {
            const auto stored = nlohmann::json::parse(read_file(manifest_path.string()));
            if (stored.at("manifest") == manifest) {
                PipelineResult cached;
                cached.records = records_from_jsonl(read_file(records_path.string()));
                cached.stats = stats_from_json(stored.at("stats"));
                cached.stats.cache_hit = true;
                return cached;
            }
        }
    }

    PipelineResult result;
    GenerationOptions gen;
    gen.n = options.n;
    gen.max_face_size = options.max_face;
    gen.allow_isolated = options.allow_isolated;
    const auto candidates = generate_candidates(gen);
    result.stats.candidates = static_cast<int>(candidates.size());

    SolverOptions solver = options.solver;
    if (options.d_floor) solver.d_floor = *options.d_floor;
    const double lp_lo = std::max(0.05, solver.d_floor);

    std::vector<const PlanarCandidate*> work;
    for (const auto& g : candidates)
        if (combinatorial_filter(g, options.d_lower)) work.push_back(&g);
    result.stats.filtered = static_cast<int>(work.size());

    std::vector<std::optional<GraphRecord>> out(work.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next++; i < work.size(); i = next++) {
            if (lp_lo >= 3.0 || lp_feasible_intervals(*work[i], lp_lo, 3.0).empty()) continue;
            out[i] = process_candidate(*work[i], solver);
        }
    };
    const int jobs = std::max(1, options.jobs);
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    for (auto& r : out) {
        if (!r) {
            ++result.stats.lp_pruned;
            continue;
        }
        ++result.stats.solved;
        switch (r->status) {
            case Verdict::Feasible: ++result.stats.feasible; break;
            case Verdict::Infeasible: ++result.stats.infeasible; break;
            case Verdict::Undecided: ++result.stats.undecided; break;
        }
        if (r->status != Verdict::Infeasible) result.records.push_back(std::move(*r));
    }
    finalize_maximal(result.records);

    if (!root.empty()) {
        std::filesystem::create_directories(root);
        write_file(records_path.string(), records_to_jsonl(result.records));
        const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        std::ostringstream ts;
        ts << std::put_time(std::gmtime(&now), "%Y-%m-%dT%H:%M:%SZ");
        const nlohmann::json stored = {
            {"manifest", manifest}, {"stats", stats_to_json(result.stats)}, {"timestamp", ts.str()}};
        write_file(manifest_path.string(), stored.dump(2) + "\n");
    }
    return result;
}

}  // namespace tammes
