#pragma once

#include <array>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "amoebot/grid.hpp"

namespace amoebot {

struct Particle {
  Coord at;
  // Local port a of this particle points along canonical port (a + frame_offset).
  int frame_offset = 0;

  constexpr bool operator==(const Particle&) const = default;
};

// The particle graph P: occupied vertices of one grid, in a fixed index order.
struct ParticleConfig {
  GridKind kind = GridKind::square;
  std::vector<Particle> particles;

  std::size_t size() const { return particles.size(); }
  std::vector<Coord> coords() const;

  bool operator==(const ParticleConfig&) const = default;
};

using CoordSet = std::set<Coord>;

enum class ViolationKind { empty, duplicate, disconnected, bad_frame_offset };

struct Violation {
  ViolationKind kind;
  std::string message;
};

// Empty result means the config is valid.
std::vector<Violation> validate_config(const ParticleConfig& config);

struct HoleReport {
  // Each hole is sorted; holes are ordered by their smallest vertex.
  std::vector<std::vector<Coord>> holes;

  bool hole_free() const { return holes.empty(); }
};

HoleReport find_holes(GridKind kind, std::span<const Coord> occupied);
HoleReport find_holes(const ParticleConfig& config);

bool is_connected(GridKind kind, std::span<const Coord> vertices);
bool is_connected(GridKind kind, const CoordSet& vertices);

// Particles with a free neighbor that belongs to the unbounded component.
CoordSet border(GridKind kind, std::span<const Coord> occupied);
CoordSet border(const ParticleConfig& config);

// M_G(p): the neighbors, plus the four diagonal corners on the square grid.
CoordSet extended_neighborhood(GridKind kind, Coord at);

// Definitional test: G[M_G(p) ∩ S] connected (empty counts as connected) and
// some neighbor of p outside S. Throws std::invalid_argument if p is not in S.
bool is_s_contractible(GridKind kind, const CoordSet& candidates, Coord p);
bool is_s_contractible(const ParticleConfig& config, const CoordSet& candidates, Coord p);

// Port-interval test a particle can run on its own: the candidate ports form
// one cyclic interval short of all ports, and on the square grid each corner
// between two candidate ports is a candidate too. Agrees with the definitional
// test on the triangular grid. On the king grid it rejects neighborhoods that
// are connected only across a diagonal gap; on the square grid it ignores
// corners that touch no candidate port.
// `corners[c]` is the corner between ports c and c+1; required for square.
bool is_s_contractible_local(GridKind kind, PortSet occupied_ports,
                             std::optional<std::array<bool, 4>> corners = std::nullopt);

bool is_articulation(GridKind kind, const CoordSet& vertices, Coord p);

// Intra-P shortest path lengths from `source` (BFS); -1 for unreachable.
std::vector<int> particle_distances(const ParticleConfig& config, std::size_t source);

// r(P): min over particles of the max intra-P distance to a border particle.
int radius(const ParticleConfig& config);

inline constexpr int kDefaultMtreeLimit = 18;

// Maximum height over all induced subgraphs of P that are trees. Exhaustive.
int mtree(const ParticleConfig& config, int max_particles = kDefaultMtreeLimit);

// b_G: r + mtree + 1, doubled plus 2 on the square grid.
int round_bound(const ParticleConfig& config, int max_particles = kDefaultMtreeLimit);

// Index of every particle by coordinate, plus canonical neighbor lookups.
class ParticleIndex {
 public:
  explicit ParticleIndex(const ParticleConfig& config);

  // Particle index at `c`, or -1.
  int at(Coord c) const;
  // Particle reached from particle `p` through canonical port `port`, or -1.
  int neighbor(std::size_t p, PortId port) const {
    return neighbors_[p * kMaxDegree + static_cast<std::size_t>(port)];
  }

 private:
  Coord lo_{};
  int width_ = 0;
  int height_ = 0;
  std::vector<int> cells_;
  std::vector<int> neighbors_;
};

}  // namespace amoebot
