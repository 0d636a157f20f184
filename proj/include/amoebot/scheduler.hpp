#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "amoebot/algorithms.hpp"
#include "amoebot/particle_system.hpp"

namespace amoebot {

enum class SchedulePolicy : std::uint8_t { round_robin, random_permutation, explicit_list };

struct Schedule {
  SchedulePolicy policy = SchedulePolicy::round_robin;
  std::uint64_t seed = 0;
  // Particle indices for explicit_list. Consumed across phases; once
  // exhausted the engine falls back to round-robin.
  std::vector<std::size_t> order;
};

struct RunOptions {
  int k = 1;
  // Per-phase cap on activations; 0 selects 64 * n * max(2n, 1).
  std::size_t max_activations = 0;
  // Starting states, e.g. a preset leader. Defaults to all candidates with
  // the configuration's frame offsets.
  std::optional<std::vector<ParticleState>> initial_states;
  bool record_trace = true;
};

struct TraceEvent {
  Algorithm phase = Algorithm::elect;
  // 1-based fairness round within the phase.
  int round = 1;
  std::size_t seq = 0;
  std::size_t particle = 0;
  Coord at;
  ParticleState before;
  ParticleState after;
  int sent = 0;
};

struct PhaseStats {
  Algorithm algorithm = Algorithm::elect;
  // Rounds from the start of the phase up to its last effective activation.
  int rounds = 0;
  // Rounds counted from the first effective activation instead.
  int active_rounds = 0;
  std::size_t messages = 0;
  std::size_t activations = 0;
};

struct RunTrace {
  std::vector<TraceEvent> events;
  std::vector<PhaseStats> phases;
};

struct RunResult {
  std::vector<ParticleState> states;
  RunTrace trace;
};

std::vector<ParticleState> initial_states(const ParticleConfig& config);

// Runs each algorithm to quiescence in order. Throws std::invalid_argument
// for an invalid configuration and std::runtime_error when a phase exceeds
// the activation cap.
RunResult run(const ParticleConfig& config, std::span<const Algorithm> pipeline,
              const Schedule& schedule, const RunOptions& options = {});

// Completed fairness rounds of a sequence of activations over `live` particles.
int count_rounds(std::span<const std::size_t> activations, std::size_t live);
// Same, per phase of a trace, summed.
int count_rounds(const RunTrace& trace, std::size_t live);

struct ExclusionViolation {
  std::size_t batch = 0;
  Coord first;
  Coord second;
};

// Every pair inside one batch of concurrent activations (indices into
// trace.events) that lies within grid distance 2.
std::vector<ExclusionViolation> check_exclusion(GridKind kind, const RunTrace& trace,
                                                std::span<const std::vector<std::size_t>> batches);

// One line per event: round, coord, algorithm, transition, messages.
std::string trace_tsv(const RunTrace& trace);

}  // namespace amoebot
