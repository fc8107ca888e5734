// Combinatorial maps (rotation systems) of candidate contact graphs.
#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tammes {

/// A rotation system or face annotation that does not describe a plane graph.
class StructuralError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Canonical encoding of an embedded graph up to relabeling and reflection.
struct CanonicalKey {
    std::vector<std::uint8_t> bytes;

    std::string hex() const;
    static CanonicalKey from_hex(const std::string& s);

    auto operator<=>(const CanonicalKey&) const = default;
    bool operator==(const CanonicalKey&) const = default;
};

/// An isolated vertex sitting inside a face of the core graph.
struct IsolatedVertex {
    int vertex = 0;
    int face = 0;
    bool operator==(const IsolatedVertex&) const = default;
};

/// Embedded candidate contact graph: a connected plane "core" given by its
/// rotation system plus isolated vertices annotated with their host faces.
///
/// Vertices 0..core_size()-1 are core vertices; rotation()[v] lists the
/// neighbours of v in counter-clockwise order as seen from outside the sphere.
/// Isolated vertices are numbered core_size()..n()-1. Faces are traced with
/// the interior on the left, i.e. counter-clockwise.
class PlanarCandidate {
public:
    PlanarCandidate() = default;

    /// Validates the rotation system (simple, symmetric, connected, genus 0)
    /// and derives faces. `isolated_faces[k]` is the host face of isolated
    /// vertex core_size()+k. Throws StructuralError.
    static PlanarCandidate from_rotation(std::vector<std::vector<int>> rotation,
                                         std::vector<int> isolated_faces = {});

    int n() const { return static_cast<int>(rotation_.size() + isolated_.size()); }
    int core_size() const { return static_cast<int>(rotation_.size()); }
    int edge_count() const { return edge_count_; }
    int face_count() const { return static_cast<int>(faces_.size()); }

    const std::vector<std::vector<int>>& rotation() const { return rotation_; }
    const std::vector<std::vector<int>>& faces() const { return faces_; }
    const std::vector<IsolatedVertex>& isolated() const { return isolated_; }

    int degree(int v) const { return v < core_size() ? static_cast<int>(rotation_[v].size()) : 0; }
    bool adjacent(int u, int v) const;
    bool is_isolated(int v) const { return v >= core_size(); }
    std::vector<std::pair<int, int>> edges() const;
    int max_face_size() const;
    int max_degree() const;
    int min_core_degree() const;

    /// Face to the left of the dart u -> v.
    int face_of_dart(int u, int v) const;

    bool operator==(const PlanarCandidate& o) const {
        return rotation_ == o.rotation_ && isolated_ == o.isolated_;
    }

private:
    std::vector<std::vector<int>> rotation_;
    std::vector<std::vector<int>> faces_;
    std::vector<IsolatedVertex> isolated_;
    std::vector<std::vector<int>> dart_face_;  // dart_face_[u][k]: face left of u -> rotation_[u][k]
    int edge_count_ = 0;
};

/// Canonical key: lexicographically minimal BFS code over all starting darts
/// and both orientations, followed by the isolated-vertex face annotations.
CanonicalKey canonical_key(const PlanarCandidate& g);

/// Relabels g into the labeling that realizes its canonical key (possibly mirrored).
PlanarCandidate canonical_form(const PlanarCandidate& g);

/// Brute-force vertex connectivity test, k in {2, 3}.
bool is_k_connected(const std::vector<std::vector<int>>& adjacency, int k);

namespace maps {
PlanarCandidate wheel(int rim);
PlanarCandidate tetrahedron();
PlanarCandidate octahedron();
PlanarCandidate cube();
PlanarCandidate icosahedron();
PlanarCandidate triangular_prism();
/// Removes vertices from a plane graph; faces around them merge.
PlanarCandidate delete_vertices(const PlanarCandidate& g, std::vector<int> vertices);
/// Adds isolated vertices to the given faces of a core graph.
PlanarCandidate with_isolated(const PlanarCandidate& core, const std::vector<int>& faces);
}  // namespace maps

}  // namespace tammes
