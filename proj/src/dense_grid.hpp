#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "amoebot/grid.hpp"

namespace amoebot::detail {

// A bounded window of the lattice holding one value per vertex.
template <typename T>
class DenseGrid {
 public:
  DenseGrid(Coord lo, Coord hi, T fill = T{})
      : lo_(lo), width_(hi.i - lo.i + 1), height_(hi.j - lo.j + 1),
        cells_(static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_), fill) {}

  // Bounding box of `coords` widened by `margin` on every side.
  static DenseGrid around(std::span<const Coord> coords, int margin, T fill = T{}) {
    Coord lo{0, 0};
    Coord hi{0, 0};
    if (!coords.empty()) {
      lo = hi = coords.front();
      for (Coord c : coords) {
        lo.i = std::min(lo.i, c.i);
        lo.j = std::min(lo.j, c.j);
        hi.i = std::max(hi.i, c.i);
        hi.j = std::max(hi.j, c.j);
      }
    }
    return DenseGrid({lo.i - margin, lo.j - margin}, {hi.i + margin, hi.j + margin}, fill);
  }

  bool contains(Coord c) const {
    return c.i >= lo_.i && c.j >= lo_.j && c.i < lo_.i + width_ && c.j < lo_.j + height_;
  }
  T& operator[](Coord c) { return cells_[offset(c)]; }
  const T& operator[](Coord c) const { return cells_[offset(c)]; }

  Coord lo() const { return lo_; }
  Coord hi() const { return {lo_.i + width_ - 1, lo_.j + height_ - 1}; }

 private:
  std::size_t offset(Coord c) const {
    return static_cast<std::size_t>(c.j - lo_.j) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(c.i - lo_.i);
  }

  Coord lo_;
  int width_;
  int height_;
  std::vector<T> cells_;
};

}  // namespace amoebot::detail
