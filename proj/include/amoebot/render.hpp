#pragma once

#include <string>
#include <vector>

#include "amoebot/algorithms.hpp"

namespace amoebot {

// Standalone SVG: occupied vertices colored by status, tree edges, and ids.
// Triangular configurations are drawn on the square layout, diagonals included.
std::string render_svg(const ParticleConfig& config, const std::vector<ParticleState>& states,
                       const std::string& title);

}  // namespace amoebot
