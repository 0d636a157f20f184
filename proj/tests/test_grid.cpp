#include <gtest/gtest.h>

#include <random>

#include "amoebot/coloring.hpp"
#include "amoebot/grid.hpp"
#include "oracles.hpp"

using namespace amoebot;

TEST(Grid, Degree) {
  EXPECT_EQ(degree(GridKind::square), 4);
  EXPECT_EQ(degree(GridKind::triangular), 6);
  EXPECT_EQ(degree(GridKind::king), 8);
}

TEST(Grid, GridKindNames) {
  for (GridKind k : kAllGridKinds) EXPECT_EQ(parse_grid_kind(to_string(k)), k);
  EXPECT_FALSE(parse_grid_kind("hex").has_value());
}

TEST(Grid, PortDirectionExamples) {
  EXPECT_EQ(port_direction(GridKind::square, 2), (Direction{1, 0}));
  EXPECT_EQ(port_direction(GridKind::triangular, 2), (Direction{1, -1}));
  EXPECT_EQ(port_direction(GridKind::king, 5), (Direction{1, 1}));
  EXPECT_THROW(port_direction(GridKind::square, 4), std::out_of_range);
  EXPECT_THROW(port_direction(GridKind::king, -1), std::out_of_range);
}

// Receiving through port a must undo the sender's position: the receiver
// sits at sender - dir(a), so its coordinates are the sender's minus dir(a).
TEST(Grid, PortDirectionsInvertCoordinateUpdates) {
  for (GridKind kind : kAllGridKinds) {
    for (PortId a = 0; a < degree(kind); ++a) {
      const auto delta = oracle::receive_delta(kind, a);
      const Direction d = port_direction(kind, a);
      EXPECT_EQ(delta[0], -d.di) << to_string(kind) << " port " << a;
      EXPECT_EQ(delta[1], -d.dj) << to_string(kind) << " port " << a;
    }
  }
}

TEST(Grid, DirectionsAreExactlyTheEdgeSet) {
  for (GridKind kind : kAllGridKinds) {
    std::set<std::array<int, 2>> expected;
    for (auto o : oracle::edge_offsets(kind)) expected.insert(o);
    std::set<std::array<int, 2>> got;
    for (PortId a = 0; a < degree(kind); ++a) {
      const Direction d = port_direction(kind, a);
      got.insert({d.di, d.dj});
      EXPECT_EQ(port_of_direction(kind, d), a);
    }
    EXPECT_EQ(got, expected) << to_string(kind);
    EXPECT_FALSE(port_of_direction(kind, {2, 0}).has_value());
  }
}

TEST(Grid, Neighbors) {
  EXPECT_EQ(neighbors(GridKind::square, {0, 0}),
            (std::vector<Coord>{{-1, 0}, {0, -1}, {1, 0}, {0, 1}}));
  const auto t = neighbors(GridKind::triangular, {2, 2});
  EXPECT_EQ(t.size(), 6U);
  EXPECT_NE(std::find(t.begin(), t.end(), Coord{3, 1}), t.end());
  EXPECT_NE(std::find(t.begin(), t.end(), Coord{1, 3}), t.end());
  const auto k = neighbors(GridKind::king, {0, 0});
  EXPECT_EQ(k.size(), 8U);
  EXPECT_NE(std::find(k.begin(), k.end(), Coord{-1, -1}), k.end());
  EXPECT_NE(std::find(k.begin(), k.end(), Coord{1, 1}), k.end());
  for (GridKind kind : kAllGridKinds) {
    const auto n = neighbors(kind, {3, -2});
    std::set<Coord> unique(n.begin(), n.end());
    EXPECT_EQ(unique.size(), n.size());
    for (Coord v : n) EXPECT_EQ(distance(kind, {3, -2}, v), 1);
  }
}

TEST(Grid, DistanceExamples) {
  EXPECT_EQ(distance(GridKind::square, {0, 0}, {2, 3}), 5);
  EXPECT_EQ(distance(GridKind::triangular, {0, 0}, {-1, 2}), 2);
  EXPECT_EQ(distance(GridKind::king, {0, 0}, {3, -2}), 3);
  EXPECT_EQ(distance(GridKind::triangular, {0, 0}, {2, 3}), 5);
}

TEST(Grid, DistanceMatchesBreadthFirstSearch) {
  for (GridKind kind : kAllGridKinds) {
    for (int i = -6; i <= 6; ++i) {
      for (int j = -6; j <= 6; ++j) {
        EXPECT_EQ(distance(kind, {0, 0}, {i, j}), oracle::bfs_distance(kind, {0, 0}, {i, j}))
            << to_string(kind) << " (" << i << "," << j << ")";
      }
    }
  }
}

TEST(Grid, DistanceIsAMetric) {
  std::mt19937 gen(11);
  std::uniform_int_distribution<int> coord(-20, 20);
  for (GridKind kind : kAllGridKinds) {
    for (int t = 0; t < 500; ++t) {
      Coord a{coord(gen), coord(gen)}, b{coord(gen), coord(gen)}, c{coord(gen), coord(gen)};
      EXPECT_EQ(distance(kind, a, b), distance(kind, b, a));
      EXPECT_EQ(distance(kind, a, a), 0);
      if (!(a == b)) EXPECT_GT(distance(kind, a, b), 0);
      EXPECT_LE(distance(kind, a, c), distance(kind, a, b) + distance(kind, b, c));
    }
  }
}

TEST(Grid, OppositePort) {
  EXPECT_EQ(opposite_port(GridKind::square, 1), 3);
  EXPECT_EQ(opposite_port(GridKind::triangular, 5), 2);
  EXPECT_EQ(opposite_port(GridKind::king, 3), 7);
  for (GridKind kind : kAllGridKinds) {
    for (PortId a = 0; a < degree(kind); ++a) {
      EXPECT_EQ(port_direction(kind, opposite_port(kind, a)), -port_direction(kind, a));
      EXPECT_EQ(opposite_port(kind, opposite_port(kind, a)), a);
    }
    EXPECT_THROW(opposite_port(kind, degree(kind)), std::out_of_range);
  }
}

TEST(Grid, PortsAreCyclicallyConsecutive) {
  // Neighbors behind consecutive ports are adjacent to each other (through a
  // corner on the square grid).
  for (GridKind kind : kAllGridKinds) {
    for (PortId a = 0; a < degree(kind); ++a) {
      const Direction d = port_direction(kind, a);
      const Direction e = port_direction(kind, (a + 1) % degree(kind));
      if (kind == GridKind::square) {
        EXPECT_EQ(distance(GridKind::king, {d.di, d.dj}, {e.di, e.dj}), 1);
      } else {
        EXPECT_EQ(distance(kind, {d.di, d.dj}, {e.di, e.dj}), 1);
      }
    }
  }
}

TEST(Grid, NextOccupiedPort) {
  EXPECT_EQ(next_occupied_port(GridKind::triangular, 0, PortSet{0, 3, 4}), 3);
  EXPECT_EQ(next_occupied_port(GridKind::square, 3, PortSet{0}), 0);
  EXPECT_EQ(next_occupied_port(GridKind::king, 5, PortSet{5}), 5);
  EXPECT_THROW(next_occupied_port(GridKind::square, 0, PortSet{}), std::invalid_argument);
}

TEST(Grid, FrameArithmetic) {
  for (GridKind kind : kAllGridKinds) {
    for (int offset = 0; offset < degree(kind); ++offset) {
      for (PortId a = 0; a < degree(kind); ++a) {
        EXPECT_EQ(to_local(kind, to_canonical(kind, a, offset), offset), a);
      }
    }
  }
  EXPECT_EQ(to_canonical(GridKind::square, 3, 2), 1);
}

TEST(Grid, PortSet) {
  PortSet s{1, 4};
  EXPECT_TRUE(s.contains(4));
  EXPECT_FALSE(s.contains(0));
  EXPECT_EQ(s.size(), 2);
  s.erase(4);
  s.insert(7);
  EXPECT_EQ(s.to_vector(), (std::vector<PortId>{1, 7}));
}
