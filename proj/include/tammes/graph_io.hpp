// Text, planar-code and JSON serialisation of candidates and configurations.
//
// Text format:
//   n m f
//   <cyclic neighbour list of vertex 0>
//   ...
//   iso <face_id>            (one line per isolated vertex, after the core)
// n counts all vertices, m edges and f faces of the core. Lines starting with
// '#' are ignored.
//
// Planar code: optional ">>planar_code<<" header, then per graph one byte n
// followed, for every vertex, by its 1-based neighbours in clockwise order and
// a terminating 0. Isolated vertices cannot be represented.
#pragma once

#include "tammes/embedder.hpp"
#include "tammes/planar_map.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace tammes {

/// Malformed input file.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string to_text(const PlanarCandidate& g);
PlanarCandidate from_text(const std::string& text);

std::string to_planar_code(const std::vector<PlanarCandidate>& graphs, bool with_header = true);
std::vector<PlanarCandidate> from_planar_code(const std::string& bytes);

nlohmann::json candidate_to_json(const PlanarCandidate& g);
PlanarCandidate candidate_from_json(const nlohmann::json& j);

nlohmann::json points_to_json(const std::vector<UnitVector>& points);
std::vector<UnitVector> points_from_json(const nlohmann::json& j);

/// Configuration file: one point per line ("x y z"), '#' comments. A line
/// "format spherical" switches to "theta phi" pairs (polar angle from +z,
/// azimuth). Cartesian points must have norm 1 within 1e-6.
std::vector<UnitVector> parse_config(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace tammes
