#pragma once

#include <cstdint>

#include "amoebot/particle_system.hpp"

namespace amoebot {

// Shape generators. Frame offsets are drawn uniformly from `seed`; every
// generator throws std::invalid_argument for unsatisfiable parameters.

ParticleConfig make_rect(GridKind kind, int width, int height, std::uint64_t seed);

ParticleConfig make_line(GridKind kind, int length, std::uint64_t seed);

// Outer square minus a centered inner square; needs 1 <= inner <= outer - 2.
ParticleConfig make_ring(GridKind kind, int outer, int inner, std::uint64_t seed);

// Random connected growth from the origin. Unless `allow_holes` is set,
// growth steps that would enclose a hole are rejected.
ParticleConfig make_blob(GridKind kind, int size, std::uint64_t seed, bool allow_holes = false);

// Redraws every frame offset from `seed`.
void randomize_offsets(ParticleConfig& config, std::uint64_t seed);

}  // namespace amoebot
