#include "amoebot/particle_system.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "dense_grid.hpp"

namespace amoebot {

namespace {

std::string coord_text(Coord c) {
  return "(" + std::to_string(c.i) + "," + std::to_string(c.j) + ")";
}

// Cell classes used while flood filling a window around the particles.
enum Cell : std::uint8_t { kFree = 0, kOccupied = 1, kExterior = 2, kHole = 3 };

detail::DenseGrid<std::uint8_t> classify_cells(GridKind kind, std::span<const Coord> occupied,
                                               HoleReport* report) {
  auto grid = detail::DenseGrid<std::uint8_t>::around(occupied, 1, kFree);
  for (Coord c : occupied) grid[c] = kOccupied;

  const int deg = degree(kind);
  std::vector<Coord> stack;
  auto flood = [&](Coord seed, std::uint8_t mark, std::vector<Coord>* members) {
    grid[seed] = mark;
    stack.push_back(seed);
    while (!stack.empty()) {
      Coord c = stack.back();
      stack.pop_back();
      if (members) members->push_back(c);
      for (PortId a = 0; a < deg; ++a) {
        Coord n = c + port_direction(kind, a);
        if (grid.contains(n) && grid[n] == kFree) {
          grid[n] = mark;
          stack.push_back(n);
        }
      }
    }
  };

  // The one-cell margin is free and connected, and everything beyond the
  // window belongs to the same unbounded component.
  flood(grid.lo(), kExterior, nullptr);

  for (int i = grid.lo().i; i <= grid.hi().i; ++i) {
    for (int j = grid.lo().j; j <= grid.hi().j; ++j) {
      Coord c{i, j};
      if (grid[c] != kFree) continue;
      std::vector<Coord> hole;
      flood(c, kHole, &hole);
      if (report) {
        std::sort(hole.begin(), hole.end());
        report->holes.push_back(std::move(hole));
      }
    }
  }
  if (report) std::sort(report->holes.begin(), report->holes.end());
  return grid;
}

bool connected_within(GridKind kind, const std::vector<Coord>& vertices) {
  if (vertices.size() <= 1) return true;
  CoordSet pending(vertices.begin(), vertices.end());
  std::vector<Coord> stack{*pending.begin()};
  pending.erase(pending.begin());
  while (!stack.empty()) {
    Coord c = stack.back();
    stack.pop_back();
    for (Coord n : neighbors(kind, c)) {
      auto it = pending.find(n);
      if (it != pending.end()) {
        pending.erase(it);
        stack.push_back(n);
      }
    }
  }
  return pending.empty();
}

}  // namespace

std::vector<Coord> ParticleConfig::coords() const {
  std::vector<Coord> out;
  out.reserve(particles.size());
  for (const Particle& p : particles) out.push_back(p.at);
  return out;
}

std::vector<Violation> validate_config(const ParticleConfig& config) {
  std::vector<Violation> out;
  if (config.particles.empty()) {
    out.push_back({ViolationKind::empty, "configuration has no particles"});
    return out;
  }
  const int deg = degree(config.kind);
  CoordSet seen;
  for (const Particle& p : config.particles) {
    if (!seen.insert(p.at).second) {
      out.push_back({ViolationKind::duplicate, "two particles occupy " + coord_text(p.at)});
    }
    if (p.frame_offset < 0 || p.frame_offset >= deg) {
      out.push_back({ViolationKind::bad_frame_offset,
                     "frame offset " + std::to_string(p.frame_offset) + " at " +
                         coord_text(p.at) + " outside [0," + std::to_string(deg - 1) + "]"});
    }
  }
  if (!is_connected(config.kind, seen)) {
    out.push_back({ViolationKind::disconnected, "particle graph is not connected"});
  }
  return out;
}

HoleReport find_holes(GridKind kind, std::span<const Coord> occupied) {
  HoleReport report;
  if (occupied.empty()) return report;
  classify_cells(kind, occupied, &report);
  return report;
}

HoleReport find_holes(const ParticleConfig& config) {
  const auto coords = config.coords();
  return find_holes(config.kind, coords);
}

bool is_connected(GridKind kind, std::span<const Coord> vertices) {
  if (vertices.size() <= 1) return true;
  auto grid = detail::DenseGrid<std::uint8_t>::around(vertices, 0, 0);
  for (Coord c : vertices) grid[c] = 1;
  const int deg = degree(kind);
  std::vector<Coord> stack{vertices.front()};
  grid[vertices.front()] = 2;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Coord c = stack.back();
    stack.pop_back();
    for (PortId a = 0; a < deg; ++a) {
      Coord n = c + port_direction(kind, a);
      if (grid.contains(n) && grid[n] == 1) {
        grid[n] = 2;
        ++reached;
        stack.push_back(n);
      }
    }
  }
  // Duplicates in `vertices` are counted once by the grid.
  std::size_t distinct = 0;
  for (Coord c : vertices) {
    if (grid[c] != 0) {
      distinct += 1;
      grid[c] = 0;
    }
  }
  return reached == distinct;
}

bool is_connected(GridKind kind, const CoordSet& vertices) {
  std::vector<Coord> v(vertices.begin(), vertices.end());
  return is_connected(kind, std::span<const Coord>(v));
}

CoordSet border(GridKind kind, std::span<const Coord> occupied) {
  CoordSet out;
  if (occupied.empty()) return out;
  auto grid = classify_cells(kind, occupied, nullptr);
  const int deg = degree(kind);
  for (Coord c : occupied) {
    int occupied_neighbors = 0;
    bool touches_exterior = false;
    for (PortId a = 0; a < deg; ++a) {
      const std::uint8_t cell = grid[c + port_direction(kind, a)];
      if (cell == kOccupied) ++occupied_neighbors;
      if (cell == kExterior) touches_exterior = true;
    }
    if (occupied_neighbors < deg && touches_exterior) out.insert(c);
  }
  return out;
}

CoordSet border(const ParticleConfig& config) {
  const auto coords = config.coords();
  return border(config.kind, coords);
}

CoordSet extended_neighborhood(GridKind kind, Coord at) {
  auto n = neighbors(kind, at);
  CoordSet out(n.begin(), n.end());
  if (kind == GridKind::square) {
    for (int di : {-1, 1}) {
      for (int dj : {-1, 1}) out.insert(at + Direction{di, dj});
    }
  }
  return out;
}

bool is_s_contractible(GridKind kind, const CoordSet& candidates, Coord p) {
  if (!candidates.contains(p)) {
    throw std::invalid_argument("is_s_contractible: " + coord_text(p) + " is not a candidate");
  }
  std::vector<Coord> around;
  for (Coord m : extended_neighborhood(kind, p)) {
    if (candidates.contains(m)) around.push_back(m);
  }
  int candidate_neighbors = 0;
  for (Coord n : neighbors(kind, p)) {
    if (candidates.contains(n)) ++candidate_neighbors;
  }
  return candidate_neighbors < degree(kind) && connected_within(kind, around);
}

bool is_s_contractible(const ParticleConfig& config, const CoordSet& candidates, Coord p) {
  return is_s_contractible(config.kind, candidates, p);
}

bool is_s_contractible_local(GridKind kind, PortSet occupied_ports,
                             std::optional<std::array<bool, 4>> corners) {
  if (kind == GridKind::square && !corners) throw std::invalid_argument("square grid needs corner occupancy");
  const int deg = degree(kind);
  if (occupied_ports.empty()) return true;
  if (occupied_ports.size() >= deg) return false;

  int runs = 0;
  for (PortId a = 0; a < deg; ++a) {
    if (occupied_ports.contains(a) && !occupied_ports.contains(wrap(a - 1, deg))) ++runs;
  }
  if (runs != 1) return false;
  if (kind == GridKind::square) {
    for (PortId a = 0; a < deg; ++a) {
      if (occupied_ports.contains(a) && occupied_ports.contains(wrap(a + 1, deg)) &&
          !(*corners)[static_cast<std::size_t>(a)]) {
        return false;
      }
    }
  }
  return true;
}

bool is_articulation(GridKind kind, const CoordSet& vertices, Coord p) {
  if (!vertices.contains(p)) {
    throw std::invalid_argument("is_articulation: " + coord_text(p) + " not in the vertex set");
  }
  if (!is_connected(kind, vertices)) {
    throw std::invalid_argument("is_articulation: vertex set is not connected");
  }
  CoordSet rest = vertices;
  rest.erase(p);
  return !is_connected(kind, rest);
}

ParticleIndex::ParticleIndex(const ParticleConfig& config) {
  const auto coords = config.coords();
  auto grid = detail::DenseGrid<int>::around(coords, 1, -1);
  lo_ = grid.lo();
  width_ = grid.hi().i - lo_.i + 1;
  height_ = grid.hi().j - lo_.j + 1;
  cells_.assign(static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_), -1);
  for (std::size_t k = 0; k < coords.size(); ++k) {
    const Coord c = coords[k];
    cells_[static_cast<std::size_t>(c.j - lo_.j) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(c.i - lo_.i)] = static_cast<int>(k);
  }
  const int deg = degree(config.kind);
  neighbors_.assign(coords.size() * kMaxDegree, -1);
  for (std::size_t k = 0; k < coords.size(); ++k) {
    for (PortId a = 0; a < deg; ++a) {
      neighbors_[k * kMaxDegree + static_cast<std::size_t>(a)] =
          at(coords[k] + port_direction(config.kind, a));
    }
  }
}

int ParticleIndex::at(Coord c) const {
  if (c.i < lo_.i || c.j < lo_.j || c.i >= lo_.i + width_ || c.j >= lo_.j + height_) return -1;
  return cells_[static_cast<std::size_t>(c.j - lo_.j) * static_cast<std::size_t>(width_) +
                static_cast<std::size_t>(c.i - lo_.i)];
}

std::vector<int> particle_distances(const ParticleConfig& config, std::size_t source) {
  const ParticleIndex index(config);
  const int deg = degree(config.kind);
  std::vector<int> dist(config.size(), -1);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const std::size_t p = queue.front();
    queue.pop_front();
    for (PortId a = 0; a < deg; ++a) {
      const int q = index.neighbor(p, a);
      if (q >= 0 && dist[static_cast<std::size_t>(q)] < 0) {
        dist[static_cast<std::size_t>(q)] = dist[p] + 1;
        queue.push_back(static_cast<std::size_t>(q));
      }
    }
  }
  return dist;
}

int radius(const ParticleConfig& config) {
  if (!validate_config(config).empty()) throw std::invalid_argument("radius: invalid configuration");
  if (!find_holes(config).hole_free()) throw std::invalid_argument("radius: configuration has holes");
  const CoordSet rim = border(config);
  int best = std::numeric_limits<int>::max();
  for (std::size_t u = 0; u < config.size(); ++u) {
    const auto dist = particle_distances(config, u);
    int worst = 0;
    for (std::size_t v = 0; v < config.size(); ++v) {
      if (rim.contains(config.particles[v].at)) worst = std::max(worst, dist[v]);
    }
    best = std::min(best, worst);
  }
  return best;
}

int mtree(const ParticleConfig& config, int max_particles) {
  const int n = static_cast<int>(config.size());
  if (n > max_particles || n > 30) {
    throw std::invalid_argument("mtree: " + std::to_string(n) +
                                " particles exceeds the exhaustive-search limit of " +
                                std::to_string(max_particles));
  }
  if (n == 0) throw std::invalid_argument("mtree: empty configuration");

  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b && distance(config.kind, config.particles[static_cast<std::size_t>(a)].at,
                             config.particles[static_cast<std::size_t>(b)].at) == 1) {
        adj[static_cast<std::size_t>(a)] |= 1U << b;
      }
    }
  }

  auto neighbourhood = [&](std::uint32_t set, std::uint32_t within) {
    std::uint32_t out = 0;
    for (std::uint32_t s = set; s; s &= s - 1) out |= adj[static_cast<std::size_t>(std::countr_zero(s))];
    return out & within;
  };

  int best = 0;
  const std::uint32_t full = (n == 32) ? ~0U : ((1U << n) - 1);
  for (std::uint32_t subset = 1; subset <= full && subset != 0; ++subset) {
    const int m = std::popcount(subset);
    // A tree on m vertices has height at most ceil((m-1)/2).
    if (m / 2 <= best) continue;

    int edge_ends = 0;
    std::uint32_t leaves = 0;
    for (std::uint32_t s = subset; s; s &= s - 1) {
      const int v = std::countr_zero(s);
      const int d = std::popcount(adj[static_cast<std::size_t>(v)] & subset);
      edge_ends += d;
      if (d == 1) leaves |= 1U << v;
    }
    if (edge_ends != 2 * (m - 1)) continue;

    std::uint32_t reach = subset & (~subset + 1);
    for (;;) {
      const std::uint32_t next = reach | neighbourhood(reach, subset);
      if (next == reach) break;
      reach = next;
    }
    if (reach != subset) continue;

    int height = std::numeric_limits<int>::max();
    for (std::uint32_t s = subset; s; s &= s - 1) {
      std::uint32_t seen = s & (~s + 1);
      std::uint32_t frontier = seen;
      int depth = 0;
      int last_leaf_depth = (seen & leaves) ? 0 : -1;
      while (frontier) {
        frontier = neighbourhood(frontier, subset) & ~seen;
        seen |= frontier;
        ++depth;
        if (frontier & leaves) last_leaf_depth = depth;
      }
      height = std::min(height, std::max(last_leaf_depth, 0));
    }
    best = std::max(best, height);
  }
  return best;
}

int round_bound(const ParticleConfig& config, int max_particles) {
  const int r = radius(config);
  const int t = mtree(config, max_particles);
  return config.kind == GridKind::square ? 2 * (r + t) + 2 : r + t + 1;
}

}  // namespace amoebot
