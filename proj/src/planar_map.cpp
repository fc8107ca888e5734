#include "tammes/planar_map.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <queue>
#include <sstream>

namespace tammes {

namespace {

int index_in(const std::vector<int>& list, int x) {
    for (size_t i = 0; i < list.size(); ++i)
        if (list[i] == x) return static_cast<int>(i);
    return -1;
}

bool connected(const std::vector<std::vector<int>>& adj, const std::vector<char>& removed) {
    const int n = static_cast<int>(adj.size());
    int start = -1, alive = 0;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) {
            ++alive;
            if (start < 0) start = v;
        }
    if (alive <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int count = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!removed[w] && !seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == alive;
}

// Sorted vertex labels of each annotated face, as used by the key.
using FaceLabels = std::vector<std::vector<std::uint8_t>>;

struct CodeResult {
    std::vector<std::uint8_t> code;
    std::vector<int> label;  // 1-based labels, 0 = unlabeled
    std::vector<int> order;
    std::vector<int> entry;
};

// BFS code from dart u -> rot[u][k] with orientation dir (+1 ccw, -1 cw).
// Returns false as soon as the code exceeds `bound` (if given).
bool bfs_code(const std::vector<std::vector<int>>& rot, int u, int k, int dir,
              const std::vector<std::uint8_t>* bound, CodeResult& out) {
    const int n = static_cast<int>(rot.size());
    out.code.clear();
    out.label.assign(n, 0);
    out.order.clear();
    out.entry.assign(n, -1);
    int next = 1;
    out.label[u] = next++;
    out.order.push_back(u);
    out.entry[u] = rot[u][k];
    bool tied = bound != nullptr;
    auto emit = [&](std::uint8_t b) {
        if (tied) {
            const size_t pos = out.code.size();
            if (b > (*bound)[pos]) return false;
            if (b < (*bound)[pos]) tied = false;
        }
        out.code.push_back(b);
        return true;
    };
    for (size_t idx = 0; idx < out.order.size(); ++idx) {
        const int w = out.order[idx];
        const auto& list = rot[w];
        const int d = static_cast<int>(list.size());
        const int s = index_in(list, out.entry[w]);
        for (int j = 0; j < d; ++j) {
            const int x = list[((s + dir * j) % d + d) % d];
            if (out.label[x] == 0) {
                out.label[x] = next++;
                out.entry[x] = w;
                out.order.push_back(x);
            }
            if (!emit(static_cast<std::uint8_t>(out.label[x]))) return false;
        }
        if (!emit(0)) return false;
    }
    return true;
}

FaceLabels iso_face_labels(const PlanarCandidate& g, const std::vector<int>& label) {
    FaceLabels faces;
    for (const auto& iso : g.isolated()) {
        std::vector<std::uint8_t> f;
        for (int v : g.faces()[iso.face]) f.push_back(static_cast<std::uint8_t>(label[v]));
        std::sort(f.begin(), f.end());
        faces.push_back(std::move(f));
    }
    std::sort(faces.begin(), faces.end());
    return faces;
}

void append_faces(std::vector<std::uint8_t>& code, const FaceLabels& faces) {
    if (faces.empty()) return;
    code.push_back(255);
    for (const auto& f : faces) {
        code.insert(code.end(), f.begin(), f.end());
        code.push_back(0);
    }
}

struct CanonicalChoice {
    std::vector<std::uint8_t> code;
    int u = -1, k = -1, dir = 1;
};

CanonicalChoice canonical_choice(const PlanarCandidate& g) {
    const auto& rot = g.rotation();
    const int n = g.core_size();
    if (n == 0) throw StructuralError("canonical_key: empty core");

    // Restrict starting darts to those with the lexicographically smallest
    // local invariant; the restriction commutes with isomorphisms.
    auto face_size = [&](int f) { return static_cast<int>(g.faces()[f].size()); };
    std::array<int, 4> best_inv{1 << 20, 0, 0, 0};
    std::vector<std::tuple<int, int, int>> starts;
    for (int u = 0; u < n; ++u) {
        for (int k = 0; k < static_cast<int>(rot[u].size()); ++k) {
            const int v = rot[u][k];
            const int left = face_size(g.face_of_dart(u, v));
            const int right = face_size(g.face_of_dart(v, u));
            for (int dir : {1, -1}) {
                std::array<int, 4> inv{static_cast<int>(rot[u].size()), static_cast<int>(rot[v].size()),
                                       dir == 1 ? left : right, dir == 1 ? right : left};
                if (inv < best_inv) {
                    best_inv = inv;
                    starts.clear();
                }
                if (inv == best_inv) starts.emplace_back(u, k, dir);
            }
        }
    }

    CanonicalChoice best;
    CodeResult scratch;
    for (auto [u, k, dir] : starts) {
        const bool have = !best.code.empty();
        if (!bfs_code(rot, u, k, dir, have ? &best.code : nullptr, scratch)) continue;
        append_faces(scratch.code, iso_face_labels(g, scratch.label));
        if (!have || scratch.code < best.code) {
            best.code = scratch.code;
            best.u = u;
            best.k = k;
            best.dir = dir;
        }
    }
    return best;
}

}  // namespace

std::string CanonicalKey::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(bytes.size() * 2);
    for (auto b : bytes) {
        s.push_back(digits[b >> 4]);
        s.push_back(digits[b & 15]);
    }
    return s;
}

CanonicalKey CanonicalKey::from_hex(const std::string& s) {
    if (s.size() % 2) throw StructuralError("CanonicalKey::from_hex: odd length");
    auto val = [](char c) {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw StructuralError("CanonicalKey::from_hex: bad digit");
    };
    CanonicalKey k;
    for (size_t i = 0; i < s.size(); i += 2) k.bytes.push_back(static_cast<std::uint8_t>(val(s[i]) * 16 + val(s[i + 1])));
    return k;
}

PlanarCandidate PlanarCandidate::from_rotation(std::vector<std::vector<int>> rotation, std::vector<int> isolated_faces) {
    PlanarCandidate g;
    const int n = static_cast<int>(rotation.size());
    if (n < 1) throw StructuralError("rotation system is empty");
    int half_edges = 0;
    for (int v = 0; v < n; ++v) {
        const auto& list = rotation[v];
        for (size_t i = 0; i < list.size(); ++i) {
            const int w = list[i];
            if (w < 0 || w >= n) throw StructuralError("rotation system: neighbour index out of range");
            if (w == v) throw StructuralError("rotation system: self loop");
            if (std::count(list.begin(), list.end(), w) != 1) throw StructuralError("rotation system: multi-edge");
            if (index_in(rotation[w], v) < 0) throw StructuralError("rotation system: asymmetric adjacency");
        }
        if (list.empty() && n > 1) throw StructuralError("rotation system: core vertex without edges");
        half_edges += static_cast<int>(list.size());
    }
    g.edge_count_ = half_edges / 2;
    if (!connected(rotation, std::vector<char>(n, 0))) throw StructuralError("rotation system: core is disconnected");

    g.dart_face_.resize(n);
    for (int v = 0; v < n; ++v) g.dart_face_[v].assign(rotation[v].size(), -1);
    for (int u = 0; u < n; ++u) {
        for (size_t k = 0; k < rotation[u].size(); ++k) {
            if (g.dart_face_[u][k] >= 0) continue;
            const int fid = static_cast<int>(g.faces_.size());
            std::vector<int> face;
            int a = u, ka = static_cast<int>(k);
            while (g.dart_face_[a][ka] < 0) {
                g.dart_face_[a][ka] = fid;
                face.push_back(a);
                const int b = rotation[a][ka];
                const auto& rb = rotation[b];
                const int pos = index_in(rb, a);
                const int kb = (pos - 1 + static_cast<int>(rb.size())) % static_cast<int>(rb.size());
                a = b;
                ka = kb;
            }
            if (a != u || ka != static_cast<int>(k)) throw StructuralError("rotation system: inconsistent face walk");
            g.faces_.push_back(std::move(face));
        }
    }
    if (n > 1 && n - g.edge_count_ + static_cast<int>(g.faces_.size()) != 2)
        throw StructuralError("rotation system: not a plane embedding (Euler characteristic != 2)");

    g.rotation_ = std::move(rotation);
    for (size_t k = 0; k < isolated_faces.size(); ++k) {
        const int f = isolated_faces[k];
        if (f < 0 || f >= static_cast<int>(g.faces_.size())) throw StructuralError("isolated vertex: face id out of range");
        g.isolated_.push_back({n + static_cast<int>(k), f});
    }
    return g;
}

bool PlanarCandidate::adjacent(int u, int v) const {
    if (u >= core_size() || v >= core_size()) return false;
    return index_in(rotation_[u], v) >= 0;
}

std::vector<std::pair<int, int>> PlanarCandidate::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < core_size(); ++u)
        for (int v : rotation_[u])
            if (u < v) out.emplace_back(u, v);
    std::sort(out.begin(), out.end());
    return out;
}

int PlanarCandidate::max_face_size() const {
    size_t m = 0;
    for (const auto& f : faces_) m = std::max(m, f.size());
    return static_cast<int>(m);
}

int PlanarCandidate::max_degree() const {
    size_t m = 0;
    for (const auto& r : rotation_) m = std::max(m, r.size());
    return static_cast<int>(m);
}

int PlanarCandidate::min_core_degree() const {
    size_t m = rotation_.empty() ? 0 : rotation_[0].size();
    for (const auto& r : rotation_) m = std::min(m, r.size());
    return static_cast<int>(m);
}

int PlanarCandidate::face_of_dart(int u, int v) const {
    const int k = index_in(rotation_.at(u), v);
    if (k < 0) throw StructuralError("face_of_dart: not an edge");
    return dart_face_[u][k];
}

CanonicalKey canonical_key(const PlanarCandidate& g) { return CanonicalKey{canonical_choice(g).code}; }

PlanarCandidate canonical_form(const PlanarCandidate& g) {
    const CanonicalChoice c = canonical_choice(g);
    CodeResult r;
    bfs_code(g.rotation(), c.u, c.k, c.dir, nullptr, r);
    const int n = g.core_size();
    std::vector<std::vector<int>> rot(n);
    for (int w = 0; w < n; ++w) {
        const auto& list = g.rotation()[w];
        const int d = static_cast<int>(list.size());
        const int s = index_in(list, r.entry[w]);
        auto& out = rot[r.label[w] - 1];
        for (int j = 0; j < d; ++j) out.push_back(r.label[list[((s + c.dir * j) % d + d) % d]] - 1);
    }
    PlanarCandidate core = PlanarCandidate::from_rotation(rot);
    // Map annotated faces through the relabeling by vertex sets.
    std::vector<std::vector<int>> target;
    for (const auto& iso : g.isolated()) {
        std::vector<int> f;
        for (int v : g.faces()[iso.face]) f.push_back(r.label[v] - 1);
        std::sort(f.begin(), f.end());
        target.push_back(std::move(f));
    }
    std::sort(target.begin(), target.end());
    std::vector<int> iso_faces;
    for (const auto& f : target) {
        int found = -1;
        for (int fid = 0; fid < core.face_count(); ++fid) {
            auto s = core.faces()[fid];
            std::sort(s.begin(), s.end());
            if (s == f) {
                found = fid;
                break;
            }
        }
        if (found < 0) throw StructuralError("canonical_form: annotated face lost");
        iso_faces.push_back(found);
    }
    return PlanarCandidate::from_rotation(core.rotation(), iso_faces);
}

bool is_k_connected(const std::vector<std::vector<int>>& adjacency, int k) {
    const int n = static_cast<int>(adjacency.size());
    if (n <= k) return false;
    std::vector<char> removed(n, 0);
    if (!connected(adjacency, removed)) return false;
    if (k >= 2)
        for (int a = 0; a < n; ++a) {
            removed[a] = 1;
            if (!connected(adjacency, removed)) return false;
            if (k >= 3)
                for (int b = a + 1; b < n; ++b) {
                    removed[b] = 1;
                    const bool ok = connected(adjacency, removed);
                    removed[b] = 0;
                    if (!ok) return false;
                }
            removed[a] = 0;
        }
    return true;
}

namespace maps {

PlanarCandidate wheel(int rim) {
    if (rim < 3) throw StructuralError("wheel: rim < 3");
    std::vector<std::vector<int>> rot(rim + 1);
    for (int i = 0; i < rim; ++i) rot[0].push_back(1 + i);
    for (int i = 0; i < rim; ++i) {
        const int v = 1 + i;
        const int next = 1 + (i + 1) % rim;
        const int prev = 1 + (i + rim - 1) % rim;
        rot[v] = {next, 0, prev};
    }
    return PlanarCandidate::from_rotation(rot);
}

PlanarCandidate tetrahedron() { return wheel(3); }

PlanarCandidate octahedron() {
    // 0 north, 5 south, 1..4 equator counter-clockwise seen from the north.
    std::vector<std::vector<int>> rot(6);
    rot[0] = {1, 2, 3, 4};
    rot[5] = {4, 3, 2, 1};
    for (int i = 0; i < 4; ++i) {
        const int v = 1 + i, next = 1 + (i + 1) % 4, prev = 1 + (i + 3) % 4;
        rot[v] = {next, 0, prev, 5};
    }
    return PlanarCandidate::from_rotation(rot);
}

PlanarCandidate triangular_prism() {
    // top 0,1,2 and bottom 3,4,5 with i -- i+3.
    std::vector<std::vector<int>> rot(6);
    for (int i = 0; i < 3; ++i) {
        const int next = (i + 1) % 3, prev = (i + 2) % 3;
        rot[i] = {next, prev, i + 3};
        rot[i + 3] = {prev + 3, next + 3, i};
    }
    return PlanarCandidate::from_rotation(rot);
}

PlanarCandidate cube() {
    // top 0..3 and bottom 4..7 with i -- i+4.
    std::vector<std::vector<int>> rot(8);
    for (int i = 0; i < 4; ++i) {
        const int next = (i + 1) % 4, prev = (i + 3) % 4;
        rot[i] = {next, prev, i + 4};
        rot[i + 4] = {prev + 4, next + 4, i};
    }
    return PlanarCandidate::from_rotation(rot);
}

PlanarCandidate icosahedron() {
    // 0 north, 11 south, upper ring 1..5, lower ring 6..10 (lower i+5 sits
    // between upper i and upper i+1), all counter-clockwise from the north.
    std::vector<std::vector<int>> rot(12);
    auto up = [](int i) { return 1 + ((i % 5) + 5) % 5; };
    auto lo = [](int i) { return 6 + ((i % 5) + 5) % 5; };
    for (int i = 0; i < 5; ++i) rot[0].push_back(up(i));
    for (int i = 4; i >= 0; --i) rot[11].push_back(lo(i));
    for (int i = 0; i < 5; ++i) {
        rot[up(i)] = {up(i + 1), 0, up(i - 1), lo(i - 1), lo(i)};
        rot[lo(i)] = {lo(i + 1), up(i + 1), up(i), lo(i - 1), 11};
    }
    return PlanarCandidate::from_rotation(rot);
}

PlanarCandidate delete_vertices(const PlanarCandidate& g, std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    const int n = g.core_size();
    std::vector<int> remap(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (!std::binary_search(vertices.begin(), vertices.end(), v)) remap[v] = next++;
    std::vector<std::vector<int>> rot(next);
    for (int v = 0; v < n; ++v) {
        if (remap[v] < 0) continue;
        for (int w : g.rotation()[v])
            if (remap[w] >= 0) rot[remap[v]].push_back(remap[w]);
    }
    return PlanarCandidate::from_rotation(rot);
}

PlanarCandidate with_isolated(const PlanarCandidate& core, const std::vector<int>& faces) {
    return PlanarCandidate::from_rotation(core.rotation(), faces);
}

}  // namespace maps

}  // namespace tammes
