// SVG drawings of configurations by stereographic projection.
#pragma once

#include "tammes/embedder.hpp"

#include <string>
#include <utility>
#include <vector>

namespace tammes {

struct SvgOptions {
    double size = 480.0;
    double margin = 24.0;
    double vertex_radius = 4.0;
    /// Largest distance, in projection-plane units, between a drawn arc and its polyline.
    double chord_error = 1e-3;
};

/// Projects from the point antipodal to the centroid (or a fixed generic
/// direction when the centroid is near the origin). Each point becomes a
/// circle and each edge a polyline following the projected great-circle arc.
/// Throws std::invalid_argument when there are no points or an edge index is out of range.
std::string render_svg(const std::vector<UnitVector>& points, const std::vector<std::pair<int, int>>& edges,
                       const SvgOptions& options = {});

inline std::string render_svg(const SphericalConfig& c, const SvgOptions& options = {}) {
    return render_svg(c.points, c.edges, options);
}

}  // namespace tammes
