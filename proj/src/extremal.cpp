#include "tammes/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace tammes {

namespace {

std::vector<int> icosa_neighbours(const std::vector<UnitVector>& pts, int v) {
    std::vector<int> out;
    for (int j = 0; j < static_cast<int>(pts.size()); ++j)
        if (j != v && angular_dist(pts[v], pts[j]) < 1.2) out.push_back(j);
    return out;
}

SphericalConfig without(const std::vector<UnitVector>& pts, const std::vector<int>& removed) {
    std::vector<UnitVector> kept;
    for (int j = 0; j < static_cast<int>(pts.size()); ++j)
        if (std::find(removed.begin(), removed.end(), j) == removed.end()) kept.push_back(pts[j]);
    return SphericalConfig::from_points(std::move(kept));
}

}  // namespace

double fejes_toth_bound(int n) {
    if (n <= 2) throw std::domain_error("fejes_toth_bound: n must exceed 2");
    const double w = kPi * n / (6.0 * n - 12.0);
    const double cot = std::cos(w) / std::sin(w);
    return std::acos(std::clamp((cot * cot - 1.0) / 2.0, -1.0, 1.0));
}

TammesValue tammes_from_records(const std::vector<GraphRecord>& records) {
    TammesValue t;
    bool any = false;
    for (const auto& r : records)
        if (r.feasible()) {
            t.d_n = any ? std::max(t.d_n, r.d_max) : r.d_max;
            any = true;
        }
    if (!any) throw std::invalid_argument("tammes_from_records: no feasible record");
    for (int i = 0; i < static_cast<int>(records.size()); ++i) {
        const auto& r = records[i];
        if (r.feasible() && std::abs(r.d_max - t.d_n) <= 2e-3 && !r.max_at_bound) t.maximal.push_back(i);
    }
    return t;
}

int count_irreducible(const std::vector<GraphRecord>& records) {
    return static_cast<int>(std::count_if(records.begin(), records.end(), [](const auto& r) { return r.feasible(); }));
}

int contact_upper_bound(int n) {
    if (n <= 2) throw std::domain_error("contact_upper_bound: n must exceed 2");
    return 3 * n - 6;
}

int k_star(const std::vector<GraphRecord>& records) {
    int best = -1;
    for (const auto& r : records)
        if (r.feasible()) best = std::max(best, r.edge_count());
    if (best < 0) throw std::invalid_argument("k_star: no feasible record");
    return best;
}

int kappa(const std::vector<GraphRecord>& records) {
    int best = -1;
    for (const auto& r : records)
        if (r.feasible()) best = best < 0 ? r.edge_count() : std::min(best, r.edge_count());
    if (best < 0) throw std::invalid_argument("kappa: no feasible record");
    return best;
}

double delta_n(const std::vector<GraphRecord>& records) {
    double best = -1.0;
    for (const auto& r : records)
        if (r.feasible()) best = best < 0.0 ? r.d_min : std::min(best, r.d_min);
    if (best < 0.0) throw std::invalid_argument("delta_n: no feasible record");
    return best;
}

std::vector<UnitVector> icosahedron_points() {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<UnitVector> pts;
    for (double a : {-1.0, 1.0})
        for (double b : {-phi, phi}) {
            pts.emplace_back(0.0, a, b);
            pts.emplace_back(a, b, 0.0);
            pts.emplace_back(b, 0.0, a);
        }
    return pts;
}

SphericalConfig icosa_config(int n) {
    if (n < 9 || n > 12) throw std::domain_error("icosa_config: n must be in 9..12");
    const auto pts = icosahedron_points();
    std::vector<int> removed;
    if (n <= 11) removed.push_back(0);
    const auto nb = icosa_neighbours(pts, 0);
    if (n <= 10) removed.push_back(nb[0]);
    if (n == 9) {
        const auto nb1 = icosa_neighbours(pts, nb[0]);
        for (int w : nb)
            if (w != nb[0] && std::find(nb1.begin(), nb1.end(), w) != nb1.end()) {
                removed.push_back(w);
                break;
            }
    }
    return without(pts, removed);
}

SphericalConfig k5_config() {
    return SphericalConfig::from_points(
        {UnitVector(0, 0, 1), UnitVector(1, 0, 0), UnitVector(0, 1, 0), UnitVector(-1, 0, 0), UnitVector(0, -1, 0)});
}

AntipodalOptimum antipodal_optimum(int m) {
    switch (m) {
        case 2:
            return {SphericalConfig::from_points(
                        {UnitVector(1, 0, 0), UnitVector(0, 1, 0), UnitVector(-1, 0, 0), UnitVector(0, -1, 0)}),
                    kPi / 2.0};
        case 3:
            return {SphericalConfig::from_points({UnitVector(1, 0, 0), UnitVector(-1, 0, 0), UnitVector(0, 1, 0),
                                                  UnitVector(0, -1, 0), UnitVector(0, 0, 1), UnitVector(0, 0, -1)}),
                    kPi / 2.0};
        case 4: {
            std::vector<UnitVector> pts;
            for (double x : {-1.0, 1.0})
                for (double y : {-1.0, 1.0})
                    for (double z : {-1.0, 1.0}) pts.emplace_back(x, y, z);
            return {SphericalConfig::from_points(std::move(pts)), std::acos(1.0 / 3.0)};
        }
        case 5: {
            const auto pts = icosahedron_points();
            int opposite = -1;
            for (int j = 1; j < 12; ++j)
                if ((pts[j].vec() + pts[0].vec()).norm() < 1e-12) opposite = j;
            return {without(pts, {0, opposite}), std::acos(1.0 / std::sqrt(5.0))};
        }
        case 6:
            return {SphericalConfig::from_points(icosahedron_points()), std::acos(1.0 / std::sqrt(5.0))};
        default:
            throw std::domain_error("antipodal_optimum: m must be in 2..6");
    }
}

int construction_contacts(int n) {
    if (n < 2) throw std::domain_error("construction_contacts: n must be at least 2");
    switch (n) {
        case 2: return 1;
        case 3: return 3;
        case 4: return 6;
        case 5: return static_cast<int>(k5_config().edges.size());
        case 6: return static_cast<int>(antipodal_optimum(3).config.edges.size());
        default: break;
    }
    if (n >= 9 && n <= 12) return static_cast<int>(icosa_config(n).edges.size());
    return 0;
}

std::optional<DanzerAnswer> danzer_question_scan(const std::map<int, std::vector<GraphRecord>>& by_n, int n_from,
                                                 int n_to) {
    std::vector<int> missing;
    for (int n = n_from; n <= n_to; ++n) {
        auto it = by_n.find(n);
        if (it == by_n.end() || count_irreducible(it->second) == 0) missing.push_back(n);
    }
    if (!missing.empty()) {
        std::string list;
        for (int n : missing) list += (list.empty() ? "" : ", ") + std::to_string(n);
        throw std::invalid_argument("danzer_question_scan: missing enumerations for n = " + list);
    }
    const double d12 = std::acos(1.0 / std::sqrt(5.0));
    for (int n = n_from; n <= n_to; ++n) {
        const auto& recs = by_n.at(n);
        const GraphRecord* best = nullptr;
        for (const auto& r : recs)
            if (r.feasible() && (!best || r.d_min < best->d_min)) best = &r;
        if (best && best->d_min < d12) return DanzerAnswer{n, best->d_min, best->key};
    }
    return std::nullopt;
}

ExtremalReport extremal_report(int n, const std::vector<GraphRecord>& records) {
    ExtremalReport rep;
    rep.n = n;
    rep.i_n = count_irreducible(records);
    rep.undecided = static_cast<int>(
        std::count_if(records.begin(), records.end(), [](const auto& r) { return r.status == Verdict::Undecided; }));
    rep.ft_bound = fejes_toth_bound(n);
    if (rep.i_n > 0) {
        const TammesValue t = tammes_from_records(records);
        rep.d_n = t.d_n;
        for (int i : t.maximal) rep.maximal_keys.push_back(records[i].key.hex());
        rep.delta_n = delta_n(records);
        rep.k_star = k_star(records);
        rep.kappa = kappa(records);
    }
    rep.k_lower = std::max(rep.k_star, construction_contacts(n));
    return rep;
}

nlohmann::json report_to_json(const ExtremalReport& r) {
    return {{"n", r.n},           {"i_n", r.i_n},         {"undecided", r.undecided}, {"d_n", r.d_n},
            {"delta_n", r.delta_n}, {"k_star", r.k_star}, {"kappa", r.kappa},         {"ft_bound", r.ft_bound},
            {"k_lower", r.k_lower}, {"maximal", r.maximal_keys}};
}

std::string reports_table(const std::vector<ExtremalReport>& reports, const std::string& format) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(5);
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports) arr.push_back(report_to_json(r));
        return arr.dump(2) + "\n";
    }
    if (format == "csv") {
        out << "n,I_N,d_N,delta_N,K_star,kappa,ft_bound,K_lower,undecided\n";
        for (const auto& r : reports)
            out << r.n << ',' << r.i_n << ',' << r.d_n << ',' << r.delta_n << ',' << r.k_star << ',' << r.kappa << ','
                << r.ft_bound << ',' << r.k_lower << ',' << r.undecided << '\n';
        return out.str();
    }
    if (format != "md") throw std::invalid_argument("unknown table format '" + format + "'");
    out << "| N | I_N | d_N | delta_N | K*_N | kappa_N | Fejes Toth bound | K_N >= | undecided |\n";
    out << "|---|---|---|---|---|---|---|---|---|\n";
    for (const auto& r : reports)
        out << "| " << r.n << " | " << r.i_n << " | " << r.d_n << " | " << r.delta_n << " | " << r.k_star << " | "
            << r.kappa << " | " << r.ft_bound << " | " << r.k_lower << " | " << r.undecided << " |\n";
    return out.str();
}

}  // namespace tammes
