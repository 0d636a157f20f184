#include <gtest/gtest.h>

#include <sstream>

#include "amoebot/scheduler.hpp"
#include "amoebot/shapes.hpp"

using namespace amoebot;

namespace {

const std::vector<Coord> kTriangleExample = {{1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}, {6, 1}, {7, 1},
                                  {3, 2}, {4, 2}, {5, 2}, {6, 2}, {2, 3}, {6, 3}, {1, 4}};

ParticleConfig triangle_example() {
  ParticleConfig c{GridKind::triangular, {}};
  for (Coord at : kTriangleExample) c.particles.push_back({at, 0});
  return c;
}

std::vector<std::size_t> indices(const ParticleConfig& c, const std::vector<Coord>& order) {
  std::vector<std::size_t> out;
  for (Coord at : order) {
    for (std::size_t p = 0; p < c.size(); ++p) {
      if (c.particles[p].at == at) out.push_back(p);
    }
  }
  return out;
}

// Candidate set after every round of a single-phase trace.
std::vector<CoordSet> candidates_per_round(const ParticleConfig& c, const RunTrace& trace) {
  std::vector<Status> status(c.size(), Status::candidate);
  std::vector<CoordSet> out;
  auto snapshot = [&] {
    CoordSet s;
    for (std::size_t p = 0; p < c.size(); ++p) {
      if (status[p] == Status::candidate) s.insert(c.particles[p].at);
    }
    return s;
  };
  int round = 1;
  for (const TraceEvent& e : trace.events) {
    if (e.round != round) {
      out.push_back(snapshot());
      round = e.round;
    }
    status[e.particle] = e.after.status;
  }
  out.push_back(snapshot());
  return out;
}

const std::vector<Algorithm> kElect{Algorithm::elect};

}  // namespace

TEST(Run, SingleParticle) {
  ParticleConfig c{GridKind::square, {{{0, 0}, 2}}};
  const auto r = run(c, kElect, Schedule{});
  EXPECT_EQ(r.states[0].status, Status::leader);
  EXPECT_EQ(r.trace.phases[0].rounds, 1);
}

TEST(Run, RejectsInvalidConfiguration) {
  ParticleConfig c{GridKind::square, {{{0, 0}, 0}, {{3, 0}, 0}}};
  EXPECT_THROW(run(c, kElect, Schedule{}), std::invalid_argument);
}

TEST(Run, Deterministic) {
  const auto c = make_blob(GridKind::triangular, 60, 12);
  const Schedule s{SchedulePolicy::random_permutation, 99, {}};
  RunOptions o;
  o.k = 2;
  const auto a = run(c, kFullPipeline, s, o);
  const auto b = run(c, kFullPipeline, s, o);
  EXPECT_EQ(trace_tsv(a.trace), trace_tsv(b.trace));
  EXPECT_EQ(a.states, b.states);
  const auto other = run(c, kFullPipeline, Schedule{SchedulePolicy::random_permutation, 100, {}}, o);
  EXPECT_NE(trace_tsv(a.trace), trace_tsv(other.trace));
}

// The prose order of the worked triangular example, panel by panel.
TEST(Run, WorkedTriangleOrder) {
  const auto c = triangle_example();
  std::vector<Coord> order = {{2, 1}, {3, 1}, {3, 2}, {2, 3}, {6, 2}, {1, 1}, {1, 4},
                              {4, 1}, {5, 1}, {4, 2}, {5, 2}, {6, 1}, {7, 1}, {6, 3}};
  for (Coord at : std::vector<Coord>{{3, 1}, {3, 2}, {4, 2}, {5, 2}, {2, 1}, {2, 3}, {6, 2},
                                     {1, 1}, {1, 4}, {4, 1}, {5, 1}, {6, 1}, {7, 1}, {6, 3}}) {
    order.push_back(at);
  }
  for (Coord at : std::vector<Coord>{{3, 1}, {3, 2}, {5, 2}, {4, 2}, {1, 1}, {2, 1}, {4, 1},
                                     {5, 1}, {6, 1}, {7, 1}, {6, 2}, {2, 3}, {6, 3}, {1, 4}}) {
    order.push_back(at);
  }
  const Schedule s{SchedulePolicy::explicit_list, 0, indices(c, order)};
  const auto r = run(c, kElect, s);
  const auto rounds = candidates_per_round(c, r.trace);
  ASSERT_GE(rounds.size(), 3U);
  EXPECT_EQ(rounds[0], (CoordSet{{2, 1}, {3, 1}, {3, 2}, {2, 3}, {6, 2}, {4, 2}, {5, 2}}));
  EXPECT_EQ(rounds[1], (CoordSet{{3, 1}, {3, 2}, {4, 2}, {5, 2}}));
  EXPECT_EQ(rounds[2], (CoordSet{}));
  EXPECT_EQ(r.states[1 + 7].status, Status::leader);
  EXPECT_LE(r.trace.phases[0].rounds, 4);
  EXPECT_EQ(r.trace.phases[0].rounds, 3);
}

TEST(Run, QuiescenceIsStable) {
  for (GridKind kind : kAllGridKinds) {
    const auto c = make_blob(kind, 40, 4);
    RunOptions o;
    o.k = 2;
    const auto first = run(c, kFullPipeline, Schedule{SchedulePolicy::random_permutation, 1, {}}, o);
    o.initial_states = first.states;
    const auto again = run(c, kFullPipeline, Schedule{}, o);
    EXPECT_EQ(again.states, first.states);
    for (const PhaseStats& p : again.trace.phases) {
      EXPECT_EQ(p.rounds, 0);
      EXPECT_EQ(p.messages, 0U);
    }
  }
}

TEST(Run, ActivationCap) {
  const auto c = make_rect(GridKind::square, 4, 4, 0);
  RunOptions o;
  o.max_activations = 5;
  EXPECT_THROW(run(c, kElect, Schedule{}, o), std::runtime_error);
}

TEST(Run, ExplicitScheduleValidatesIndices) {
  const auto c = make_line(GridKind::square, 3, 0);
  EXPECT_THROW(run(c, kElect, Schedule{SchedulePolicy::explicit_list, 0, {0, 7}}), std::invalid_argument);
}

TEST(Run, RandomRoundsArePermutations) {
  const auto c = make_blob(GridKind::king, 30, 8);
  const auto r = run(c, kFullPipeline, Schedule{SchedulePolicy::random_permutation, 21, {}});
  std::size_t start = 0;
  for (const PhaseStats& phase : r.trace.phases) {
    for (std::size_t block = 0; block + c.size() <= phase.activations; block += c.size()) {
      std::set<std::size_t> seen;
      for (std::size_t e = start + block; e < start + block + c.size(); ++e) seen.insert(r.trace.events[e].particle);
      EXPECT_EQ(seen.size(), c.size());
    }
    start += phase.activations;
  }
}

TEST(CountRounds, Examples) {
  EXPECT_EQ(count_rounds(std::vector<std::size_t>{0, 1, 2, 3}, 4), 1);
  EXPECT_EQ(count_rounds(std::vector<std::size_t>{0, 0, 0}, 1), 3);
  EXPECT_EQ(count_rounds(std::vector<std::size_t>{0, 1, 0, 1, 0, 1}, 2), 3);
  EXPECT_EQ(count_rounds(std::vector<std::size_t>{0, 0, 0, 1}, 2), 1);
  EXPECT_EQ(count_rounds(std::vector<std::size_t>{}, 2), 0);
}

TEST(CountRounds, MatchesTraceRoundIndices) {
  const auto c = make_blob(GridKind::square, 25, 2);
  const auto r = run(c, kElect, Schedule{SchedulePolicy::random_permutation, 4, {}});
  const int completed = count_rounds(r.trace, c.size());
  EXPECT_GE(completed, r.trace.phases[0].rounds);
  EXPECT_EQ(r.trace.events.back().round - (r.trace.phases[0].activations % c.size() == 0 ? 0 : 1), completed);
}

TEST(Exclusion, Examples) {
  RunTrace t;
  for (Coord at : {Coord{0, 0}, Coord{1, 0}, Coord{3, 0}}) {
    TraceEvent e;
    e.at = at;
    t.events.push_back(e);
  }
  const std::vector<std::vector<std::size_t>> singles{{0}, {1}, {2}};
  EXPECT_TRUE(check_exclusion(GridKind::square, t, singles).empty());
  const std::vector<std::vector<std::size_t>> adjacent{{0, 1}};
  EXPECT_EQ(check_exclusion(GridKind::square, t, adjacent).size(), 1U);
  const std::vector<std::vector<std::size_t>> far{{0, 2}};
  EXPECT_TRUE(check_exclusion(GridKind::square, t, far).empty());
}

TEST(Trace, TsvHasFiveColumns) {
  const auto c = make_rect(GridKind::square, 2, 2, 3);
  const auto r = run(c, kFullPipeline, Schedule{});
  std::istringstream in(trace_tsv(r.trace));
  std::string line;
  std::size_t lines = 0;
  while (std::getline(in, line)) {
    ++lines;
    EXPECT_EQ(std::count(line.begin(), line.end(), '\t'), 4) << line;
  }
  EXPECT_EQ(lines, r.trace.events.size());
}
