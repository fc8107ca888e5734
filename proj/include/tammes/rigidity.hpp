// Irreducibility and D-reflection tests on explicit configurations.
#pragma once

#include "tammes/embedder.hpp"

#include <optional>

namespace tammes {

struct ShiftWitness {
    int vertex = 0;
    Vec3 direction = Vec3::Zero();
};

struct ReflectionWitness {
    int x = 0, y = 0, z = 0;
};

struct RigidityFlags {
    bool irreducible = false;
    bool d_irreducible = false;
    bool maximal = false;
    std::optional<ShiftWitness> shift_witness;
    std::optional<ReflectionWitness> reflection_witness;
};

struct ShiftResult {
    bool shiftable = false;
    std::optional<Vec3> direction;
};

/// Whether point v can move so that its distance to every other point grows.
/// Contact vertices: first-order tangent-cone test, with a second-order probe
/// when the contact directions span exactly a half-plane. Isolated vertices:
/// local ascent of the distance to the nearest point. Throws std::out_of_range.
ShiftResult vertex_shiftable(const SphericalConfig& c, int v);

/// Irreducibility with the first shiftable vertex as witness. D-reflections are not examined.
RigidityFlags is_irreducible(const SphericalConfig& c);

/// First admissible D-reflection in lexicographic order of (x, {y, z}).
std::optional<ReflectionWitness> d_reflection_exists(const SphericalConfig& c);

/// Irreducible and D-irreducible flags with witnesses (maximal is left false).
RigidityFlags rigidity_flags(const SphericalConfig& c);

}  // namespace tammes
