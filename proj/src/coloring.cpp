#include "amoebot/coloring.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace amoebot {

namespace {

// Per-port coordinate increments applied by the receiver (I and J columns).
constexpr std::array<int, 4> kSquareI = {+1, 0, -1, 0};
constexpr std::array<int, 4> kSquareJ = {0, +1, 0, -1};
constexpr std::array<int, 6> kTriangularI = {+1, 0, -1, -1, 0, +1};
constexpr std::array<int, 6> kTriangularJ = {0, +1, +1, 0, -1, -1};
constexpr std::array<int, 8> kKingI = {+1, +1, 0, -1, -1, -1, 0, +1};
constexpr std::array<int, 8> kKingJ = {0, +1, +1, +1, 0, -1, -1, -1};

void require_k(int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1, got " + std::to_string(k));
}

std::string kind_k(GridKind kind, int k) {
  return std::string(to_string(kind)) + " k=" + std::to_string(k);
}

int block_period_j(const BlockScheme& s) {
  return s.height * (s.width / std::gcd(s.width, s.shift));
}

// Paper's odd-k triangular form, evaluated on j in [0, m'_k) and i modulo 3(k+1)/2.
int odd_block_triangular(int k, int i, int j) {
  const int a = 3 * (k + 1) / 2;
  const int m = color_count(GridKind::triangular, k);
  return wrap(wrap(i, a) + j * a + (2 * j / (k + 1)) * (k + 1) / 2, m);
}

TableScheme odd_block_table(int k, int mirror_i, int mirror_j) {
  const int a = 3 * (k + 1) / 2;
  const int m = color_count(GridKind::triangular, k);
  TableScheme t{a, m, {}};
  t.colors.resize(static_cast<std::size_t>(a) * static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < a; ++i) {
      t.colors[static_cast<std::size_t>(j * a + i)] =
          odd_block_triangular(k, wrap(mirror_i * i, a), wrap(mirror_j * j, m));
    }
  }
  return t;
}

bool uses_exactly(const ColoringPattern& p) {
  std::vector<bool> seen(static_cast<std::size_t>(p.color_count), false);
  for (int j = 0; j < p.period_j(); ++j) {
    for (int i = 0; i < p.period_i(); ++i) {
      const int c = p.color_at(i, j);
      if (c < 0 || c >= p.color_count) return false;
      seen[static_cast<std::size_t>(c)] = true;
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool acceptable(const ColoringPattern& p) {
  const int m = tracking_modulus(p.kind, p.k);
  return m % p.period_i() == 0 && m % p.period_j() == 0 && uses_exactly(p) &&
         !verify_coloring(p).has_value();
}

ColoringPattern search_triangular(int k) {
  const int m = color_count(GridKind::triangular, k);
  std::vector<ColoringPattern> candidates;
  auto add = [&](ColoringScheme scheme, std::string origin) {
    candidates.push_back({GridKind::triangular, k, m, std::move(scheme), std::move(origin)});
  };
  if (k % 2 == 1) {
    add(odd_block_table(k, 1, 1), "odd-k block form");
    add(odd_block_table(k, 1, -1), "odd-k block form, j mirrored");
    add(odd_block_table(k, -1, 1), "odd-k block form, i mirrored");
  } else {
    add(LinearScheme{3 * k / 2 + 1, m}, "even-k linear form");
  }
  for (const ColoringPattern& c : candidates) {
    if (acceptable(c)) return c;
  }
  for (int t = 1; t < m; ++t) {
    ColoringPattern c{GridKind::triangular, k, m, LinearScheme{t, m},
                      "linear (i + " + std::to_string(t) + "j) mod " + std::to_string(m)};
    if (acceptable(c)) return c;
  }
  for (int a = 1; a <= m; ++a) {
    if (m % a != 0) continue;
    for (int b = 0; b < a; ++b) {
      ColoringPattern c{GridKind::triangular, k, m, BlockScheme{a, b, m / a},
                        "block width " + std::to_string(a) + " shift " + std::to_string(b) +
                            " height " + std::to_string(m / a)};
      if (acceptable(c)) return c;
    }
  }
  throw std::runtime_error("no valid optimal coloring found for " + kind_k(GridKind::triangular, k));
}

ColoringPattern build_pattern(GridKind kind, int k) {
  const int m = color_count(kind, k);
  ColoringPattern p;
  switch (kind) {
    case GridKind::square: {
      const int t = (k % 2 == 1) ? k : k + 1;
      p = {kind, k, m, LinearScheme{t, m},
           "linear (i + " + std::to_string(t) + "j) mod " + std::to_string(m)};
      break;
    }
    case GridKind::king:
      p = {kind, k, m, BlockScheme{k + 1, 0, k + 1}, "block (k+1)x(k+1)"};
      break;
    case GridKind::triangular:
      return search_triangular(k);
  }
  if (!acceptable(p)) {
    throw std::runtime_error("closed-form coloring failed validation for " + kind_k(kind, k));
  }
  return p;
}

}  // namespace

int ColoringPattern::color_at(int i, int j) const {
  return std::visit(
      [&](const auto& s) -> int {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, LinearScheme>) {
          return wrap(wrap(i, s.modulus) + s.multiplier * wrap(j, s.modulus), s.modulus);
        } else if constexpr (std::is_same_v<S, BlockScheme>) {
          const int row = j >= 0 ? j / s.height : -((-j + s.height - 1) / s.height);
          return wrap(i - s.shift * row, s.width) + s.width * wrap(j, s.height);
        } else {
          return s.colors[static_cast<std::size_t>(wrap(j, s.period_j) * s.period_i +
                                                   wrap(i, s.period_i))];
        }
      },
      scheme);
}

int ColoringPattern::period_i() const {
  return std::visit(
      [](const auto& s) -> int {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, LinearScheme>) return s.modulus;
        else if constexpr (std::is_same_v<S, BlockScheme>) return s.width;
        else return s.period_i;
      },
      scheme);
}

int ColoringPattern::period_j() const {
  return std::visit(
      [](const auto& s) -> int {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, LinearScheme>) return s.modulus / std::gcd(s.modulus, s.multiplier);
        else if constexpr (std::is_same_v<S, BlockScheme>) return block_period_j(s);
        else return s.period_j;
      },
      scheme);
}

int color_count(GridKind kind, int k) {
  require_k(k);
  const int s = (k + 1) * (k + 1);
  switch (kind) {
    case GridKind::square: return (s + 1) / 2;
    case GridKind::triangular: return (3 * s + 3) / 4;
    case GridKind::king: return s;
  }
  return 0;
}

int tracking_modulus(GridKind kind, int k) {
  require_k(k);
  return kind == GridKind::king ? k + 1 : color_count(kind, k);
}

const ColoringPattern& pattern(GridKind kind, int k) {
  require_k(k);
  static std::mutex mutex;
  static std::map<std::pair<GridKind, int>, ColoringPattern> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(kind, k);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_pattern(kind, k)).first;
  return it->second;
}

int color_at(GridKind kind, int k, int i, int j) { return pattern(kind, k).color_at(i, j); }

TrackedCoords coord_update_receive(GridKind kind, int k, TrackedCoords coords, PortId a) {
  const int deg = degree(kind);
  if (a < 0 || a >= deg) {
    throw std::out_of_range("port " + std::to_string(a) + " out of range for " +
                            std::string(to_string(kind)));
  }
  const auto idx = static_cast<std::size_t>(a);
  int di = 0;
  int dj = 0;
  switch (kind) {
    case GridKind::square: di = kSquareI[idx]; dj = kSquareJ[idx]; break;
    case GridKind::triangular: di = kTriangularI[idx]; dj = kTriangularJ[idx]; break;
    case GridKind::king: di = kKingI[idx]; dj = kKingJ[idx]; break;
  }
  const int m = tracking_modulus(kind, k);
  return {wrap(coords.i + di, m), wrap(coords.j + dj, m)};
}

std::optional<ColoringConflict> verify_coloring(const ColoringPattern& p) {
  std::vector<Direction> offsets;
  for (int di = 0; di <= p.k; ++di) {
    for (int dj = -p.k; dj <= p.k; ++dj) {
      if (di == 0 && dj <= 0) continue;
      if (distance(p.kind, {0, 0}, {di, dj}) <= p.k) offsets.push_back({di, dj});
    }
  }
  for (int j = 0; j < p.period_j(); ++j) {
    for (int i = 0; i < p.period_i(); ++i) {
      const int c = p.color_at(i, j);
      for (Direction v : offsets) {
        if (p.color_at(i + v.di, j + v.dj) == c) {
          return ColoringConflict{{i, j}, Coord{i, j} + v, c};
        }
      }
    }
  }
  return std::nullopt;
}

int min_colors_bruteforce(GridKind kind, int k, int width, int height) {
  require_k(k);
  if (width < 1 || height < 1 || width > 5 || height > 5 || k > 2) {
    throw std::invalid_argument("min_colors_bruteforce supports windows up to 5x5 and k <= 2");
  }
  std::vector<Coord> cells;
  for (int j = 0; j < height; ++j) {
    for (int i = 0; i < width; ++i) cells.push_back({i, j});
  }
  const std::size_t n = cells.size();
  std::vector<std::vector<std::size_t>> earlier(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      if (distance(kind, cells[a], cells[b]) <= k) earlier[a].push_back(b);
    }
  }
  std::vector<int> color(n, -1);
  // Colors are introduced in order, so color c is used only after c-1.
  auto fits = [&](auto&& self, std::size_t v, int used, int limit) -> bool {
    if (v == n) return true;
    for (int c = 0; c < std::min(used + 1, limit); ++c) {
      bool ok = true;
      for (std::size_t u : earlier[v]) {
        if (color[u] == c) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      color[v] = c;
      if (self(self, v + 1, std::max(used, c + 1), limit)) return true;
    }
    color[v] = -1;
    return false;
  };
  for (int limit = 1;; ++limit) {
    if (fits(fits, 0, 0, limit)) return limit;
  }
}

int coordinate_message_bits(int k) {
  require_k(k);
  const long long need = 3LL * (k + 1) * (k + 1);
  int bits = 0;
  while (4LL * (1LL << bits) < need) ++bits;
  return bits;
}

std::string color_table(const ColoringPattern& p, int rows, int cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("color table needs positive dimensions");
  std::ostringstream out;
  for (int j = 0; j < rows; ++j) {
    for (int i = 0; i < cols; ++i) {
      if (i > 0) out << ' ';
      out << p.color_at(i, j);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace amoebot
