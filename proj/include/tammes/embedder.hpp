// Geometric realization of candidate graphs as contact graphs on S^2.
//
// A candidate is realizable at edge length d when there are points on the
// sphere such that graph edges have length exactly d, every other pair is
// farther than d apart, and every face is a convex equilateral polygon
// traversed counter-clockwise. The solver works on point coordinates; face
// angles, angle sums and closure residuals are derived from them and checked.
#pragma once

#include "tammes/planar_map.hpp"
#include "tammes/sphere_geom.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tammes {

/// Placement produced a configuration whose contact graph differs from the candidate.
class InconsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Points on S^2 together with their minimal distance and contact edges.
struct SphericalConfig {
    std::vector<UnitVector> points;
    double psi = 0.0;
    std::vector<std::pair<int, int>> edges;

    /// Pairs within contact_tol of the minimal distance become edges.
    static SphericalConfig from_points(std::vector<UnitVector> points, double contact_tol = 1e-8);
};

struct EmbeddingSolution {
    double d = 0.0;
    std::vector<FaceAngleVector> face_angles;
    SphericalConfig coords;
    /// Largest of: face closure residual, |angle sum - 2pi| per vertex, |edge length - d|.
    double residual = 0.0;
};

enum class Verdict { Feasible, Infeasible, Undecided };
const char* to_string(Verdict v);

struct SolverOptions {
    int starts = 64;
    int max_iterations = 500;
    double converge_tol = 1e-12;
    double accept_tol = 1e-9;
    /// Strict witnesses keep non-edges this much (cosine units) beyond d and
    /// corners this much (determinant units) away from straight.
    double separation_margin = 1e-6;
    double convexity_margin = 1e-6;
    /// Lower bound on d imposed by the caller (e.g. a hypothesised Tammes value).
    double d_floor = 0.0;
    std::uint64_t seed = 0x7a3e5d1c4b2f9081ULL;
};

struct SolveResult {
    Verdict verdict = Verdict::Undecided;
    std::optional<EmbeddingSolution> solution;
    int attempts = 0;
};

struct FeasibleRange {
    double d_min = 0.0;
    double d_max = 0.0;
    std::optional<EmbeddingSolution> witness_min;
    std::optional<EmbeddingSolution> witness_max;
    Verdict status = Verdict::Undecided;
    /// True when the extreme is reached because a new contact forms or a
    /// corner straightens, rather than at a non-degenerate configuration.
    bool max_at_bound = false;
    bool min_at_bound = false;
};

/// Linear relaxation over the d interval [d_lo, d_hi]: per-vertex angle sums,
/// the equilateral-triangle angle alpha(d) shared by all triangles and bounding
/// every other corner from below, rhombus symmetry, and per-face angle-sum
/// bounds between a flat polygon and the regular one. Returns false only when
/// the relaxation is infeasible, which rules out every d in the interval.
bool lp_prune(const PlanarCandidate& g, double d_lo, double d_hi);

/// Sub-intervals of [d_lo, d_hi] (width <= resolution) on which lp_prune passes, merged.
std::vector<std::pair<double, double>> lp_feasible_intervals(const PlanarCandidate& g, double d_lo, double d_hi,
                                                             double resolution = 0.01);

/// Searches for a strict witness. With d_fixed the edge length is held fixed.
SolveResult solve_embedding(const PlanarCandidate& g, std::optional<double> d_fixed, const SolverOptions& options = {});

/// Extremes of d over the closure of the realization space.
FeasibleRange d_range(const PlanarCandidate& g, const SolverOptions& options = {});

/// Rebuilds coordinates from d and the face angles by walking the faces
/// breadth-first from a root edge on a meridian, polishes them, and places
/// isolated vertices at the local maximin point of their face.
/// Throws InconsistencyError if the result does not realize g.
SphericalConfig realize_coordinates(const PlanarCandidate& g, const EmbeddingSolution& sol);

/// True iff the contact graph of c is g as an embedded graph (up to
/// reflection), no two contact arcs cross, and every face is convex.
bool verify_config(const SphericalConfig& c, const PlanarCandidate& g);

/// The embedded contact graph of a configuration. Throws StructuralError if
/// the contacts do not form a connected plane graph.
PlanarCandidate contact_map(const SphericalConfig& c);

/// Moves point `index` to a local maximum of its distance to the other points.
UnitVector maximin_position(const std::vector<UnitVector>& points, int index);

/// Builds the derived fields of a solution from coordinates.
EmbeddingSolution make_solution(const PlanarCandidate& g, std::vector<UnitVector> points, double d);

/// Smallest angular gap between a non-edge pair and d, and the largest face corner angle.
struct Slack {
    double separation = 0.0;
    double max_corner = 0.0;
};
Slack slack_of(const PlanarCandidate& g, const std::vector<UnitVector>& points, double d);

}  // namespace tammes
