#include "tammes/graph_gen.hpp"

#include "tammes/sphere_geom.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace tammes {

namespace {

struct Level {
    std::unordered_set<std::string> seen;
    std::vector<PlanarCandidate> graphs;
};

// Levels keyed by (edges, vertices) so that every operation moves strictly forward.
using Catalog = std::map<std::pair<int, int>, Level>;

std::string code_of(const PlanarCandidate& g) {
    const auto key = canonical_key(g);
    return std::string(key.bytes.begin(), key.bytes.end());
}

void offer(Catalog& catalog, const PlanarCandidate& g) {
    Level& level = catalog[{g.edge_count(), g.core_size()}];
    if (level.seen.insert(code_of(g)).second) level.graphs.push_back(g);
}

// Join two non-consecutive vertices of a face by a chord drawn inside it.
void add_chords(const PlanarCandidate& g, Catalog& catalog) {
    for (const auto& face : g.faces()) {
        const int m = static_cast<int>(face.size());
        if (m < 4) continue;
        for (int i = 0; i < m; ++i) {
            for (int j = i + 2; j < m; ++j) {
                if (i == 0 && j == m - 1) continue;
                const int a = face[i], b = face[j];
                if (g.adjacent(a, b)) continue;
                auto rot = g.rotation();
                auto insert_after = [&](int v, int after, int x) {
                    auto& list = rot[v];
                    auto it = std::find(list.begin(), list.end(), after);
                    list.insert(it + 1, x);
                };
                insert_after(a, face[(i + 1) % m], b);
                insert_after(b, face[(j + 1) % m], a);
                offer(catalog, PlanarCandidate::from_rotation(std::move(rot)));
            }
        }
    }
}

// Split a vertex into two adjacent vertices, each keeping a contiguous run of
// at least two of the original neighbours.
void split_vertices(const PlanarCandidate& g, Catalog& catalog) {
    const int n = g.core_size();
    for (int v = 0; v < n; ++v) {
        const auto& around = g.rotation()[v];
        const int d = static_cast<int>(around.size());
        if (d < 4) continue;
        for (int s = 0; s < d; ++s) {
            for (int k = 2; k <= d - 2; ++k) {
                auto rot = g.rotation();
                rot.emplace_back();
                const int fresh = n;
                std::vector<int> keep, moved;
                for (int j = 0; j < d; ++j) (j < k ? keep : moved).push_back(around[(s + j) % d]);
                rot[v] = keep;
                rot[v].push_back(fresh);
                rot[fresh] = moved;
                rot[fresh].push_back(v);
                for (int w : moved) std::replace(rot[w].begin(), rot[w].end(), v, fresh);
                if (!is_k_connected(rot, 3)) continue;
                offer(catalog, PlanarCandidate::from_rotation(std::move(rot)));
            }
        }
    }
}

// All 3-connected plane graphs with at most n vertices, grouped by vertex count.
std::vector<std::vector<PlanarCandidate>> polyhedral_graphs(int n) {
    Catalog catalog;
    for (int rim = 3; rim + 1 <= n; ++rim) offer(catalog, maps::wheel(rim));
    std::vector<std::vector<PlanarCandidate>> by_size(n + 1);
    while (!catalog.empty()) {
        auto node = catalog.extract(catalog.begin());
        const auto [edges, vertices] = node.key();
        for (const auto& g : node.mapped().graphs) {
            if (edges + 1 <= 3 * vertices - 6) add_chords(g, catalog);
            if (vertices + 1 <= n) split_vertices(g, catalog);
            by_size[vertices].push_back(g);
        }
    }
    return by_size;
}

void choose_faces(const std::vector<int>& hosts, int k, size_t from, std::vector<int>& chosen,
                  std::vector<std::vector<int>>& out) {
    if (static_cast<int>(chosen.size()) == k) {
        out.push_back(chosen);
        return;
    }
    for (size_t i = from; i < hosts.size(); ++i) {
        chosen.push_back(hosts[i]);
        choose_faces(hosts, k, i + 1, chosen, out);
        chosen.pop_back();
    }
}

}  // namespace

int min_isolated_host_face(int n) { return n > 10 ? 6 : 5; }

int max_face_for_distance(double d) {
    if (!(d > 0.0)) throw std::domain_error("max_face_for_distance: d must be positive");
    return static_cast<int>(std::floor(2.0 * kPi / d + 1e-12));
}

std::vector<PlanarCandidate> generate_candidates(const GenerationOptions& options) {
    const int n = options.n;
    if (n < 3 || n > 12) throw std::domain_error("generate_candidates: n must be in [3, 12]");
    if (options.max_face_size < 3) throw std::domain_error("generate_candidates: max_face_size < 3");

    auto core_ok = [&](const PlanarCandidate& g) {
        if (g.max_face_size() > options.max_face_size) return false;
        if (options.max_degree && g.max_degree() > *options.max_degree) return false;
        return true;
    };

    std::map<CanonicalKey, PlanarCandidate> result;
    auto emit = [&](const PlanarCandidate& g) {
        PlanarCandidate c = canonical_form(g);
        auto key = canonical_key(c);
        result.emplace(std::move(key), std::move(c));
    };

    if (n == 3) {
        // The triangle is the only plane core on three vertices; it is not
        // 3-connected but is the contact graph of the equilateral equator.
        PlanarCandidate tri = PlanarCandidate::from_rotation({{1, 2}, {2, 0}, {0, 1}});
        if (core_ok(tri)) emit(tri);
    } else {
        const auto by_size = polyhedral_graphs(n);
        for (const auto& g : by_size[n])
            if (core_ok(g)) emit(g);
        if (options.allow_isolated) {
            const int min_host = min_isolated_host_face(n);
            for (int core = 4; core < n; ++core) {
                const int k = n - core;
                for (const auto& g : by_size[core]) {
                    if (!core_ok(g)) continue;
                    std::vector<int> hosts;
                    for (int f = 0; f < g.face_count(); ++f)
                        if (static_cast<int>(g.faces()[f].size()) >= min_host) hosts.push_back(f);
                    if (static_cast<int>(hosts.size()) < k) continue;
                    std::vector<std::vector<int>> picks;
                    std::vector<int> chosen;
                    choose_faces(hosts, k, 0, chosen, picks);
                    for (const auto& p : picks) emit(maps::with_isolated(g, p));
                }
            }
        }
    }

    std::vector<PlanarCandidate> out;
    out.reserve(result.size());
    for (auto& [key, g] : result) out.push_back(std::move(g));
    return out;
}

bool combinatorial_filter(const PlanarCandidate& g, double d_lower) {
    if (!(d_lower > 0.0)) return false;
    for (int v = 0; v < g.core_size(); ++v) {
        const int deg = g.degree(v);
        if (deg < 3 || deg > 5) return false;
    }
    if (g.max_face_size() > max_face_for_distance(d_lower)) return false;
    if (g.n() > 10) {
        std::map<int, int> per_face;
        for (const auto& iso : g.isolated()) {
            const int m = static_cast<int>(g.faces()[iso.face].size());
            if (m < 6) return false;
            if (++per_face[iso.face] > 1 && m == 6) return false;
        }
    }
    return true;
}

}  // namespace tammes
