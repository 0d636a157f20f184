#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "amoebot/scheduler.hpp"

namespace amoebot {

enum class PipelineStatus : std::uint8_t { ok, invariant_failure, stalled_by_holes };

std::string_view to_string(PipelineStatus status);
// 0, 2 or 3.
int exit_code(PipelineStatus status);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct PipelineOptions {
  int k = 1;
  Schedule schedule;
  std::size_t max_activations = 0;
};

// Ordered key=value pairs.
struct Report {
  std::vector<std::pair<std::string, std::string>> entries;

  void add(std::string key, std::string value) { entries.emplace_back(std::move(key), std::move(value)); }
  const std::string* find(std::string_view key) const;
  std::string text() const;
};

struct PipelineResult {
  PipelineStatus status = PipelineStatus::ok;
  std::vector<Check> checks;
  RunResult run;
  // States at the end of each phase, in pipeline order.
  std::vector<std::vector<ParticleState>> phase_states;
  Report report;
};

// Runs elect, tree, renumber and ids, then checks each phase's outcome.
PipelineResult run_pipeline(const ParticleConfig& config, const PipelineOptions& options);

// Depth of every particle in the tree encoded by parent ports; nullopt if
// some particle is not reached from the root or the parent links loop.
std::optional<std::vector<int>> tree_depths(const ParticleConfig& config,
                                            const std::vector<ParticleState>& states);

std::vector<Check> check_election(const ParticleConfig& config, const std::vector<ParticleState>& states);
std::vector<Check> check_tree(const ParticleConfig& config, const std::vector<ParticleState>& states);
std::vector<Check> check_renumber(const ParticleConfig& config, const std::vector<ParticleState>& states,
                                  const PhaseStats& stats);
std::vector<Check> check_ids(const ParticleConfig& config, const std::vector<ParticleState>& states,
                             const PhaseStats& stats, int k);

}  // namespace amoebot
