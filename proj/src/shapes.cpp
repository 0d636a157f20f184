#include "amoebot/shapes.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "amoebot/rng.hpp"

namespace amoebot {

namespace {

void require_positive(int value, const char* what) {
  if (value < 1) throw std::invalid_argument(std::string(what) + " must be positive");
}

ParticleConfig from_coords(GridKind kind, const std::vector<Coord>& coords, std::uint64_t seed) {
  ParticleConfig c{kind, {}};
  for (Coord at : coords) c.particles.push_back({at, 0});
  randomize_offsets(c, seed);
  return c;
}

}  // namespace

void randomize_offsets(ParticleConfig& config, std::uint64_t seed) {
  // Offsets use their own stream so they do not depend on how many draws
  // the shape itself consumed.
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  const int deg = degree(config.kind);
  for (Particle& p : config.particles) p.frame_offset = rng.below(deg);
}

ParticleConfig make_rect(GridKind kind, int width, int height, std::uint64_t seed) {
  require_positive(width, "rect width");
  require_positive(height, "rect height");
  std::vector<Coord> coords;
  for (int j = 0; j < height; ++j) {
    for (int i = 0; i < width; ++i) coords.push_back({i, j});
  }
  return from_coords(kind, coords, seed);
}

ParticleConfig make_line(GridKind kind, int length, std::uint64_t seed) {
  require_positive(length, "line length");
  std::vector<Coord> coords;
  for (int i = 0; i < length; ++i) coords.push_back({i, 0});
  return from_coords(kind, coords, seed);
}

ParticleConfig make_ring(GridKind kind, int outer, int inner, std::uint64_t seed) {
  require_positive(inner, "ring inner size");
  if (inner > outer - 2) {
    throw std::invalid_argument("ring needs inner <= outer - 2, got outer " + std::to_string(outer) +
                                " inner " + std::to_string(inner));
  }
  const int lo = (outer - inner) / 2;
  const int hi = lo + inner;
  std::vector<Coord> coords;
  for (int j = 0; j < outer; ++j) {
    for (int i = 0; i < outer; ++i) {
      if (i >= lo && i < hi && j >= lo && j < hi) continue;
      coords.push_back({i, j});
    }
  }
  return from_coords(kind, coords, seed);
}

ParticleConfig make_blob(GridKind kind, int size, std::uint64_t seed, bool allow_holes) {
  require_positive(size, "blob size");
  Rng rng(seed);
  std::vector<Coord> coords{{0, 0}};
  CoordSet occupied{{0, 0}};
  while (static_cast<int>(coords.size()) < size) {
    CoordSet frontier_set;
    for (Coord c : coords) {
      for (Coord n : neighbors(kind, c)) {
        if (!occupied.contains(n)) frontier_set.insert(n);
      }
    }
    std::vector<Coord> frontier(frontier_set.begin(), frontier_set.end());
    rng.shuffle(frontier);
    bool grown = false;
    for (Coord c : frontier) {
      coords.push_back(c);
      if (allow_holes || find_holes(kind, coords).hole_free()) {
        occupied.insert(c);
        grown = true;
        break;
      }
      coords.pop_back();
    }
    if (!grown) throw std::logic_error("blob growth found no hole-free extension");
  }
  return from_coords(kind, coords, seed);
}

}  // namespace amoebot
