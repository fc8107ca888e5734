// Generation of the candidate list L_N.
#pragma once

#include "tammes/planar_map.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace tammes {

struct GenerationOptions {
    int n = 6;
    /// Faces larger than this are discarded.
    int max_face_size = 12;
    /// Also emit candidates made of an (n-k)-vertex core plus k isolated vertices.
    bool allow_isolated = false;
    /// Optional cap on core vertex degree applied to the emitted list.
    std::optional<int> max_degree;
};

/// Smallest face size that may host an isolated vertex for n points.
/// Quadrilaterals never can (they lie inside the d-disc of a vertex);
/// for n > 10 only faces with six or more vertices qualify.
int min_isolated_host_face(int n);

/// Every 3-connected plane graph on n vertices (each once up to relabeling and
/// reflection) with all faces of size <= max_face_size, in canonical form and
/// sorted by canonical key. With allow_isolated, cores on fewer vertices carry
/// isolated vertices, at most one per host face.
///
/// Throws std::domain_error unless 3 <= n <= 12.
std::vector<PlanarCandidate> generate_candidates(const GenerationOptions& options);

inline std::vector<PlanarCandidate> generate_candidates(int n, int max_face_size, bool allow_isolated) {
    return generate_candidates(GenerationOptions{n, max_face_size, allow_isolated, std::nullopt});
}

/// Degree, face-size and isolated-vertex rules an irreducible contact graph
/// with minimal distance >= d_lower must satisfy.
bool combinatorial_filter(const PlanarCandidate& g, double d_lower);

/// floor(2 pi / d): the largest face an irreducible graph with edge length d can have.
int max_face_for_distance(double d);

}  // namespace tammes
