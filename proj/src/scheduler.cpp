#include "amoebot/scheduler.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "amoebot/rng.hpp"

namespace amoebot {

namespace {

// Greedy fairness rounds: a round closes as soon as every live particle has
// been activated since it opened.
class RoundClock {
 public:
  explicit RoundClock(std::size_t live) : seen_(live, false) {}

  // Round index of this activation.
  int tick(std::size_t p) {
    const int current = round_;
    if (!seen_[p]) {
      seen_[p] = true;
      if (++count_ == seen_.size()) {
        std::fill(seen_.begin(), seen_.end(), false);
        count_ = 0;
        ++round_;
      }
    }
    return current;
  }

  int completed() const { return round_ - 1; }

 private:
  std::vector<bool> seen_;
  std::size_t count_ = 0;
  int round_ = 1;
};

class Picker {
 public:
  Picker(const Schedule& schedule, std::size_t n) : schedule_(schedule), n_(n), rng_(schedule.seed) {
    for (std::size_t p : schedule.order) {
      if (p >= n) {
        throw std::invalid_argument("explicit schedule names particle " + std::to_string(p) +
                                    " of " + std::to_string(n));
      }
    }
  }

  void start_phase() {
    cursor_ = 0;
    perm_.clear();
  }

  std::size_t next() {
    switch (schedule_.policy) {
      case SchedulePolicy::explicit_list:
        if (explicit_pos_ < schedule_.order.size()) return schedule_.order[explicit_pos_++];
        [[fallthrough]];
      case SchedulePolicy::round_robin: {
        const std::size_t p = cursor_;
        cursor_ = (cursor_ + 1) % n_;
        return p;
      }
      case SchedulePolicy::random_permutation:
        if (cursor_ == perm_.size()) {
          perm_.resize(n_);
          for (std::size_t i = 0; i < n_; ++i) perm_[i] = i;
          rng_.shuffle(perm_);
          cursor_ = 0;
        }
        return perm_[cursor_++];
    }
    throw std::logic_error("unknown schedule policy");
  }

 private:
  const Schedule& schedule_;
  std::size_t n_;
  Rng rng_;
  std::vector<std::size_t> perm_;
  std::size_t cursor_ = 0;
  std::size_t explicit_pos_ = 0;
};

struct Envelope {
  PortId canonical_port;
  Payload payload;
};

class Engine {
 public:
  Engine(const ParticleConfig& config, const RunOptions& options)
      : config_(config), options_(options), index_(config), deg_(degree(config.kind)),
        inbox_(config.size()) {
    states_ = options.initial_states ? *options.initial_states : initial_states(config);
    if (states_.size() != config.size()) {
      throw std::invalid_argument("initial states do not match the configuration size");
    }
  }

  void run_phase(Algorithm algorithm, Picker& picker, RunTrace& trace) {
    const std::size_t n = config_.size();
    const std::size_t cap =
        options_.max_activations ? options_.max_activations : 64 * n * std::max<std::size_t>(2 * n, 1);
    picker.start_phase();
    RoundClock clock(n);
    std::optional<RoundClock> active_clock;
    std::vector<bool> since(n, false);
    std::size_t since_count = 0;
    PhaseStats stats;
    stats.algorithm = algorithm;

    while (since_count < n || pending_ > 0) {
      if (stats.activations >= cap) {
        throw std::runtime_error("phase " + std::string(to_string(algorithm)) + " exceeded " +
                                 std::to_string(cap) + " activations without quiescence");
      }
      const std::size_t p = picker.next();
      const ParticleState before = states_[p];
      const LocalView view = make_view(p);
      std::vector<PortMessage> inbox;
      for (const Envelope& e : inbox_[p]) {
        inbox.push_back({to_local(config_.kind, e.canonical_port, before.frame_offset), e.payload});
      }
      pending_ -= inbox_[p].size();
      inbox_[p].clear();

      StepResult result = step(algorithm, before, view, inbox, options_.k);
      const bool effective = result.state != before || !result.outgoing.empty();
      states_[p] = std::move(result.state);
      for (const PortMessage& m : result.outgoing) deliver(p, m);
      stats.messages += result.outgoing.size();
      ++stats.activations;

      const int round = clock.tick(p);
      if (effective) {
        stats.rounds = round;
        std::fill(since.begin(), since.end(), false);
        since_count = 0;
        if (!active_clock) active_clock.emplace(n);
      } else if (!since[p]) {
        since[p] = true;
        ++since_count;
      }
      if (active_clock) {
        const int active_round = active_clock->tick(p);
        if (effective) stats.active_rounds = active_round;
      }
      if (options_.record_trace) {
        trace.events.push_back({algorithm, round, seq_, p, config_.particles[p].at, before,
                                states_[p], static_cast<int>(result.outgoing.size())});
      }
      ++seq_;
    }
    trace.phases.push_back(stats);
  }

  std::vector<ParticleState>& states() { return states_; }

 private:
  LocalView make_view(std::size_t p) const {
    const GridKind kind = config_.kind;
    const int offset = states_[p].frame_offset;
    LocalView view;
    view.kind = kind;
    view.neighbor_status.fill(Status::not_elected);
    for (PortId a = 0; a < deg_; ++a) {
      const int q = index_.neighbor(p, to_canonical(kind, a, offset));
      if (q < 0) continue;
      view.occupied.insert(a);
      view.neighbor_status[static_cast<std::size_t>(a)] = states_[static_cast<std::size_t>(q)].status;
    }
    if (kind == GridKind::square) {
      std::array<bool, 4> corners{};
      for (PortId c = 0; c < 4; ++c) {
        const Coord at = config_.particles[p].at + port_direction(kind, to_canonical(kind, c, offset)) +
                         port_direction(kind, to_canonical(kind, c + 1, offset));
        const int q = index_.at(at);
        corners[static_cast<std::size_t>(c)] =
            q >= 0 && states_[static_cast<std::size_t>(q)].status == Status::candidate;
      }
      view.candidate_corners = corners;
    }
    view.port0_axis_aligned = kind != GridKind::king || offset % 2 == 0;
    return view;
  }

  void deliver(std::size_t from, const PortMessage& m) {
    const PortId canonical = to_canonical(config_.kind, m.port, states_[from].frame_offset);
    const int to = index_.neighbor(from, canonical);
    if (to < 0) {
      throw std::logic_error("message sent through unoccupied port " + std::to_string(m.port));
    }
    inbox_[static_cast<std::size_t>(to)].push_back({opposite_port(config_.kind, canonical), m.payload});
    ++pending_;
  }

  const ParticleConfig& config_;
  const RunOptions& options_;
  ParticleIndex index_;
  int deg_;
  std::vector<ParticleState> states_;
  std::vector<std::vector<Envelope>> inbox_;
  std::size_t pending_ = 0;
  std::size_t seq_ = 0;
};

}  // namespace

std::vector<ParticleState> initial_states(const ParticleConfig& config) {
  std::vector<ParticleState> out(config.size());
  for (std::size_t p = 0; p < config.size(); ++p) out[p].frame_offset = config.particles[p].frame_offset;
  return out;
}

RunResult run(const ParticleConfig& config, std::span<const Algorithm> pipeline,
              const Schedule& schedule, const RunOptions& options) {
  if (const auto violations = validate_config(config); !violations.empty()) {
    throw std::invalid_argument("run: " + violations.front().message);
  }
  Engine engine(config, options);
  Picker picker(schedule, config.size());
  RunResult result;
  for (Algorithm a : pipeline) engine.run_phase(a, picker, result.trace);
  result.states = std::move(engine.states());
  return result;
}

int count_rounds(std::span<const std::size_t> activations, std::size_t live) {
  if (live == 0) return 0;
  RoundClock clock(live);
  for (std::size_t p : activations) {
    if (p >= live) throw std::invalid_argument("count_rounds: particle index out of range");
    clock.tick(p);
  }
  return clock.completed();
}

int count_rounds(const RunTrace& trace, std::size_t live) {
  int total = 0;
  std::vector<std::size_t> phase;
  for (std::size_t e = 0; e < trace.events.size(); ++e) {
    phase.push_back(trace.events[e].particle);
    if (e + 1 == trace.events.size() || trace.events[e + 1].phase != trace.events[e].phase) {
      total += count_rounds(phase, live);
      phase.clear();
    }
  }
  return total;
}

std::vector<ExclusionViolation> check_exclusion(GridKind kind, const RunTrace& trace,
                                                std::span<const std::vector<std::size_t>> batches) {
  std::vector<ExclusionViolation> out;
  for (std::size_t b = 0; b < batches.size(); ++b) {
    const auto& batch = batches[b];
    for (std::size_t x = 0; x < batch.size(); ++x) {
      for (std::size_t y = x + 1; y < batch.size(); ++y) {
        const Coord u = trace.events.at(batch[x]).at;
        const Coord v = trace.events.at(batch[y]).at;
        if (distance(kind, u, v) <= 2) out.push_back({b, u, v});
      }
    }
  }
  return out;
}

std::string trace_tsv(const RunTrace& trace) {
  std::ostringstream out;
  for (const TraceEvent& e : trace.events) {
    out << e.round << "\t(" << e.at.i << ',' << e.at.j << ")\t" << to_string(e.phase) << '\t';
    if (e.before == e.after) out << '=';
    else out << describe(e.before) << '>' << describe(e.after);
    out << '\t' << e.sent << '\n';
  }
  return out.str();
}

}  // namespace amoebot
