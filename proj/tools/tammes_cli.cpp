// tammes: enumerate irreducible contact graphs, check configurations, print bounds, draw figures.
#include "tammes/extremal.hpp"
#include "tammes/graph_gen.hpp"
#include "tammes/graph_io.hpp"
#include "tammes/pipeline.hpp"
#include "tammes/svg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace tammes;

namespace {

enum Exit { kOk = 0, kUsage = 1, kData = 2, kIncomplete = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty() || out_path == "-")
        std::cout << text;
    else
        write_file(out_path, text);
}

std::string flags_line(const RigidityFlags& f) {
    std::ostringstream out;
    out << "irreducible=" << (f.irreducible ? "yes" : "no") << " d_irreducible=" << (f.d_irreducible ? "yes" : "no");
    return out.str();
}

struct EnumerateArgs {
    int n = 0;
    double d_lower = kPi / 3.0;
    int max_face = 12;
    int jobs = 1;
    int starts = 64;
    double tol = 1e-9;
    bool no_isolated = false;
    std::string cache_dir, format = "md", out, report;
};

int cmd_enumerate(const EnumerateArgs& a, bool d_lower_given) {
    if (a.n < 6 || a.n > 11) throw UsageError("enumerate: --n must be in 6..11");
    PipelineOptions o;
    o.n = a.n;
    o.d_lower = a.d_lower;
    if (d_lower_given) o.d_floor = a.d_lower;
    o.max_face = a.max_face;
    o.allow_isolated = !a.no_isolated;
    o.jobs = a.jobs;
    o.solver.starts = a.starts;
    o.solver.accept_tol = a.tol;
    o.cache_dir = a.cache_dir;
    const PipelineResult res = run_pipeline(o);

    emit(a.out, records_to_jsonl(res.records));
    const ExtremalReport rep = extremal_report(a.n, res.records);
    const std::string table = reports_table({rep}, a.format);
    if (!a.report.empty()) write_file(a.report, report_to_json(rep).dump(2) + "\n");
    (a.out.empty() || a.out == "-" ? std::cerr : std::cout) << table;

    const auto& s = res.stats;
    std::cerr << "n=" << a.n << ": " << s.candidates << " candidates, " << s.filtered << " pass filter, "
              << s.lp_pruned << " LP-pruned, " << s.feasible << " feasible, " << s.infeasible << " infeasible, "
              << s.undecided << " undecided" << (s.cache_hit ? " (cached)" : "") << "\n";
    for (const auto& r : res.records) {
        if (r.status == Verdict::Undecided) std::cerr << "WARNING: undecided candidate " << r.key.hex() << "\n";
        if (r.flag_warning) std::cerr << "note: " << r.key.hex() << ": " << *r.flag_warning << "\n";
    }
    return s.undecided > 0 ? kIncomplete : kOk;
}

int cmd_check(const std::string& path, const std::string& format) {
    const SphericalConfig c = SphericalConfig::from_points(parse_config(read_file(path)));
    const RigidityFlags f = rigidity_flags(c);
    if (format == "json") {
        nlohmann::json j = {{"n", c.points.size()},
                            {"psi", c.psi},
                            {"edges", c.edges.size()},
                            {"irreducible", f.irreducible},
                            {"d_irreducible", f.d_irreducible}};
        if (f.shift_witness)
            j["shift_witness"] = {{"vertex", f.shift_witness->vertex},
                                  {"direction",
                                   {f.shift_witness->direction.x(), f.shift_witness->direction.y(),
                                    f.shift_witness->direction.z()}}};
        if (f.reflection_witness)
            j["reflection_witness"] = {f.reflection_witness->x, f.reflection_witness->y, f.reflection_witness->z};
        std::cout << j.dump(2) << "\n";
        return kOk;
    }
    std::cout << std::setprecision(10);
    std::cout << "points: " << c.points.size() << "\n";
    std::cout << "psi: " << c.psi << "\n";
    std::cout << "edges: " << c.edges.size() << "\n";
    std::cout << flags_line(f) << "\n";
    if (f.shift_witness) {
        const auto& d = f.shift_witness->direction;
        std::cout << "shift witness: vertex " << f.shift_witness->vertex << " direction (" << d.x() << ", " << d.y()
                  << ", " << d.z() << ")\n";
    }
    if (f.reflection_witness)
        std::cout << "reflection witness: x=" << f.reflection_witness->x << " y=" << f.reflection_witness->y
                  << " z=" << f.reflection_witness->z << "\n";
    return kOk;
}

int cmd_bounds(int from, int to, const std::string& format, const std::string& out_path) {
    if (from < 3 || to < from) throw UsageError("bounds: need 3 <= --from <= --to");
    std::ostringstream out;
    out << std::fixed << std::setprecision(5);
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (int n = from; n <= to; ++n)
            arr.push_back({{"n", n}, {"ft_bound", fejes_toth_bound(n)}, {"contact_bound", contact_upper_bound(n)}});
        out << arr.dump(2) << "\n";
    } else if (format == "md") {
        out << "| n | ft_bound | 3n-6 |\n|---|---|---|\n";
        for (int n = from; n <= to; ++n)
            out << "| " << n << " | " << fejes_toth_bound(n) << " | " << contact_upper_bound(n) << " |\n";
    } else {
        out << "n,ft_bound,contact_bound\n";
        for (int n = from; n <= to; ++n) out << n << ',' << fejes_toth_bound(n) << ',' << contact_upper_bound(n) << "\n";
    }
    emit(out_path, out.str());
    return kOk;
}

int cmd_render(const std::string& path, int index, const std::string& out_path) {
    const std::string text = read_file(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    std::vector<UnitVector> points;
    if (first != std::string::npos && text[first] == '{') {
        const auto records = records_from_jsonl(text);
        if (index < 0 || index >= static_cast<int>(records.size()))
            throw ParseError("render: record index " + std::to_string(index) + " out of range");
        points = records[index].witness;
        if (points.empty()) throw ParseError("render: record has no coordinates");
    } else {
        points = parse_config(text);
    }
    emit(out_path, render_svg(SphericalConfig::from_points(points)));
    return kOk;
}

int cmd_candidates(int n, int max_face, bool isolated, const std::string& import, const std::string& format,
                   const std::string& out_path) {
    std::vector<PlanarCandidate> graphs;
    if (!import.empty()) {
        graphs = from_planar_code(read_file(import));
    } else {
        if (n < 3 || n > 12) throw UsageError("candidates: --n must be in 3..12");
        graphs = generate_candidates(GenerationOptions{n, max_face, isolated, std::nullopt});
    }
    if (format == "planar") {
        emit(out_path, to_planar_code(graphs, true));
        return kOk;
    }
    std::string out;
    for (const auto& g : graphs) out += format == "json" ? candidate_to_json(g).dump() + "\n" : to_text(g) + "\n";
    emit(out_path, out);
    std::cerr << graphs.size() << " candidates\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Irreducible contact graphs and the Tammes problem"};
    app.require_subcommand(1);

    EnumerateArgs ea;
    auto* enumerate = app.add_subcommand("enumerate", "Enumerate irreducible contact graphs on n points");
    enumerate->add_option("--n", ea.n, "Number of points (6..11)")->required();
    auto* d_lower_opt = enumerate->add_option("--d-lower", ea.d_lower, "Lower bound on the minimal distance");
    enumerate->add_option("--max-face", ea.max_face, "Largest face size generated");
    enumerate->add_option("--jobs", ea.jobs, "Worker threads")->check(CLI::PositiveNumber);
    enumerate->add_option("--starts", ea.starts, "Solver multistarts per candidate")->check(CLI::PositiveNumber);
    enumerate->add_option("--tol", ea.tol, "Residual accepted as a solution");
    enumerate->add_flag("--no-isolated", ea.no_isolated, "Skip candidates with isolated vertices");
    enumerate->add_option("--cache-dir", ea.cache_dir, "Results cache (default $TAMMES_CACHE_DIR)");
    enumerate->add_option("--format", ea.format, "Summary format")->check(CLI::IsMember({"json", "csv", "md"}));
    enumerate->add_option("--out", ea.out, "JSON-lines records file (default stdout)");
    enumerate->add_option("--report", ea.report, "Also write the per-n report as JSON");

    std::string check_path, check_format = "text";
    auto* check = app.add_subcommand("check", "Report contacts and rigidity of a configuration file");
    check->add_option("config", check_path, "Points, one per line")->required();
    check->add_option("--format", check_format)->check(CLI::IsMember({"text", "json"}));

    int from = 3, to = 12;
    std::string bounds_format = "csv", bounds_out;
    auto* bounds = app.add_subcommand("bounds", "Fejes Toth distance bound and 3n-6 contact bound");
    bounds->add_option("--from", from, "First n (>= 3)");
    bounds->add_option("--to", to, "Last n");
    bounds->add_option("--n", from, "Single n")->each([&](const std::string&) { to = from; });
    bounds->add_option("--format", bounds_format)->check(CLI::IsMember({"json", "csv", "md"}));
    bounds->add_option("--out", bounds_out);

    std::string render_path, render_out;
    int render_index = 0;
    auto* render = app.add_subcommand("render", "Draw a configuration or record as SVG");
    render->add_option("input", render_path, "Configuration file or records JSON-lines")->required();
    render->add_option("--record", render_index, "Record index in a JSON-lines file");
    render->add_option("--out", render_out, "SVG file (default stdout)");

    int cand_n = 6, cand_face = 12;
    bool cand_iso = false;
    std::string cand_import, cand_format = "text", cand_out;
    auto* cands = app.add_subcommand("candidates", "List or convert candidate graphs");
    cands->add_option("--n", cand_n);
    cands->add_option("--max-face", cand_face);
    cands->add_flag("--isolated", cand_iso, "Include isolated-vertex candidates");
    cands->add_option("--import", cand_import, "Read planar-code file instead of generating");
    cands->add_option("--format", cand_format)->check(CLI::IsMember({"text", "json", "planar"}));
    cands->add_option("--out", cand_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*enumerate) return cmd_enumerate(ea, d_lower_opt->count() > 0);
        if (*check) return cmd_check(check_path, check_format);
        if (*bounds) return cmd_bounds(from, to, bounds_format, bounds_out);
        if (*render) return cmd_render(render_path, render_index, render_out);
        if (*cands) return cmd_candidates(cand_n, cand_face, cand_iso, cand_import, cand_format, cand_out);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kData;
    }
    return kUsage;
}
