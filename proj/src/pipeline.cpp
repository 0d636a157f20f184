#include "amoebot/pipeline.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "amoebot/coloring.hpp"

namespace amoebot {

namespace {

std::string coord_text(Coord c) {
  return "(" + std::to_string(c.i) + "," + std::to_string(c.j) + ")";
}

Check make_check(std::string name, bool passed, std::string detail = {}) {
  return {std::move(name), passed, std::move(detail)};
}

std::optional<std::size_t> sole_leader(const std::vector<ParticleState>& states) {
  std::optional<std::size_t> leader;
  for (std::size_t p = 0; p < states.size(); ++p) {
    if (states[p].status != Status::leader) continue;
    if (leader) return std::nullopt;
    leader = p;
  }
  return leader;
}

int neighbor_via(const ParticleIndex& index, GridKind kind, std::size_t p, const ParticleState& s,
                 PortId local) {
  return index.neighbor(p, to_canonical(kind, local, s.frame_offset));
}

int height_of(const std::optional<std::vector<int>>& depths) {
  if (!depths || depths->empty()) return 0;
  return *std::max_element(depths->begin(), depths->end());
}

std::vector<Check> check_message_phase(const std::string& prefix, std::size_t n, const PhaseStats& stats,
                                       const std::optional<std::vector<int>>& depths) {
  std::vector<Check> out;
  out.push_back(make_check(prefix + "_messages", stats.messages + 1 == n,
                           std::to_string(stats.messages) + " sent, expected " + std::to_string(n - 1)));
  const int bound = std::max(height_of(depths), 1);
  out.push_back(make_check(prefix + "_rounds", stats.active_rounds <= bound,
                           std::to_string(stats.active_rounds) + " rounds, tree height bound " +
                               std::to_string(bound)));
  return out;
}

std::string dash_or(bool present, const std::string& value) { return present ? value : "-"; }

}  // namespace

std::string_view to_string(PipelineStatus status) {
  switch (status) {
    case PipelineStatus::ok: return "ok";
    case PipelineStatus::invariant_failure: return "invariant_failure";
    case PipelineStatus::stalled_by_holes: return "stalled_by_holes";
  }
  return "?";
}

int exit_code(PipelineStatus status) {
  switch (status) {
    case PipelineStatus::ok: return 0;
    case PipelineStatus::invariant_failure: return 2;
    case PipelineStatus::stalled_by_holes: return 3;
  }
  return 2;
}

const std::string* Report::find(std::string_view key) const {
  for (const auto& [k, v] : entries) {
    if (k == key) return &v;
  }
  return nullptr;
}

std::string Report::text() const {
  std::string out;
  for (const auto& [k, v] : entries) out += k + "=" + v + "\n";
  return out;
}

std::optional<std::vector<int>> tree_depths(const ParticleConfig& config,
                                            const std::vector<ParticleState>& states) {
  const ParticleIndex index(config);
  const std::size_t n = config.size();
  std::vector<int> depth(n, -1);
  for (std::size_t start = 0; start < n; ++start) {
    std::vector<std::size_t> chain;
    std::size_t p = start;
    while (depth[p] < 0) {
      const ParticleState& s = states[p];
      if (chain.size() >= n || !s.in_tree) return std::nullopt;
      if (!s.parent_port) {
        if (s.status != Status::leader) return std::nullopt;
        depth[p] = 0;
        break;
      }
      chain.push_back(p);
      const int q = neighbor_via(index, config.kind, p, s, *s.parent_port);
      if (q < 0) return std::nullopt;
      p = static_cast<std::size_t>(q);
    }
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      depth[*it] = depth[p] + 1;
      p = *it;
    }
  }
  return depth;
}

std::vector<Check> check_election(const ParticleConfig& config, const std::vector<ParticleState>& states) {
  std::size_t leaders = 0;
  std::size_t others = 0;
  for (const ParticleState& s : states) {
    if (s.status == Status::leader) ++leaders;
    else if (s.status == Status::not_elected) ++others;
  }
  return {make_check("unique_leader", leaders == 1 && others + 1 == config.size(),
                     std::to_string(leaders) + " leaders, " +
                         std::to_string(config.size() - leaders - others) + " candidates")};
}

std::vector<Check> check_tree(const ParticleConfig& config, const std::vector<ParticleState>& states) {
  const ParticleIndex index(config);
  const GridKind kind = config.kind;
  std::size_t edges = 0;
  bool reciprocal = true;
  std::string why;
  for (std::size_t p = 0; p < config.size(); ++p) {
    const ParticleState& s = states[p];
    for (PortId c : s.child_ports.to_vector()) {
      ++edges;
      const int q = neighbor_via(index, kind, p, s, c);
      const ParticleState* t = q >= 0 ? &states[static_cast<std::size_t>(q)] : nullptr;
      if (!t || !t->parent_port ||
          neighbor_via(index, kind, static_cast<std::size_t>(q), *t, *t->parent_port) != static_cast<int>(p)) {
        reciprocal = false;
        why = "child of " + coord_text(config.particles[p].at) + " does not point back";
      }
    }
    if (s.parent_port) {
      const int q = neighbor_via(index, kind, p, s, *s.parent_port);
      bool listed = false;
      if (q >= 0) {
        const ParticleState& t = states[static_cast<std::size_t>(q)];
        for (PortId c : t.child_ports.to_vector()) {
          if (neighbor_via(index, kind, static_cast<std::size_t>(q), t, c) == static_cast<int>(p)) listed = true;
        }
      }
      if (!listed) {
        reciprocal = false;
        why = "parent of " + coord_text(config.particles[p].at) + " does not list it";
      }
    }
  }
  const auto depths = tree_depths(config, states);
  return {make_check("tree_reciprocal", reciprocal, why),
          make_check("tree_edges", edges + 1 == config.size(),
                     std::to_string(edges) + " edges for " + std::to_string(config.size()) + " particles"),
          make_check("tree_spanning", depths.has_value(), depths ? "" : "some particle is not reached")};
}

std::vector<Check> check_renumber(const ParticleConfig& config, const std::vector<ParticleState>& states,
                                  const PhaseStats& stats) {
  const ParticleIndex index(config);
  const GridKind kind = config.kind;
  const auto leader = sole_leader(states);
  bool same_frame = leader.has_value();
  bool reciprocal = true;
  for (std::size_t p = 0; p < config.size(); ++p) {
    if (leader && states[p].frame_offset != states[*leader].frame_offset) same_frame = false;
    for (PortId a = 0; a < degree(kind); ++a) {
      const int q = neighbor_via(index, kind, p, states[p], a);
      if (q < 0) continue;
      const PortId back = to_local(kind, opposite_port(kind, to_canonical(kind, a, states[p].frame_offset)),
                                   states[static_cast<std::size_t>(q)].frame_offset);
      if (back != opposite_port(kind, a)) reciprocal = false;
    }
  }
  std::vector<Check> out{make_check("frames_converged", same_frame),
                         make_check("port_reciprocity", reciprocal)};
  for (Check& c : check_message_phase("renumber", config.size(), stats, tree_depths(config, states))) {
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Check> check_ids(const ParticleConfig& config, const std::vector<ParticleState>& states,
                             const PhaseStats& stats, int k) {
  const int colors = color_count(config.kind, k);
  bool assigned = true;
  bool in_range = true;
  for (const ParticleState& s : states) {
    if (!s.local_id) assigned = false;
    else if (*s.local_id < 0 || *s.local_id >= colors) in_range = false;
  }
  bool separated = assigned;
  std::string why;
  for (std::size_t p = 0; separated && p < config.size(); ++p) {
    for (std::size_t q = p + 1; q < config.size(); ++q) {
      if (*states[p].local_id == *states[q].local_id &&
          distance(config.kind, config.particles[p].at, config.particles[q].at) <= k) {
        separated = false;
        why = coord_text(config.particles[p].at) + " and " + coord_text(config.particles[q].at) +
              " share id " + std::to_string(*states[p].local_id);
        break;
      }
    }
  }
  std::vector<Check> out{make_check("ids_assigned", assigned), make_check("ids_in_range", in_range),
                         make_check("ids_k_local", separated, why)};
  for (Check& c : check_message_phase("ids", config.size(), stats, tree_depths(config, states))) {
    out.push_back(std::move(c));
  }
  return out;
}

PipelineResult run_pipeline(const ParticleConfig& config, const PipelineOptions& options) {
  PipelineResult result;
  RunOptions run_options;
  run_options.k = options.k;
  run_options.max_activations = options.max_activations;
  result.run = run(config, kFullPipeline, options.schedule, run_options);

  std::vector<ParticleState> states = initial_states(config);
  std::size_t e = 0;
  for (std::size_t phase = 0; phase < kFullPipeline.size(); ++phase) {
    for (; e < result.run.trace.events.size() && result.run.trace.events[e].phase == kFullPipeline[phase]; ++e) {
      states[result.run.trace.events[e].particle] = result.run.trace.events[e].after;
    }
    result.phase_states.push_back(states);
  }

  const auto& phases = result.run.trace.phases;
  const auto& elected = result.phase_states[0];
  const auto leader = sole_leader(elected);
  const bool holes = !find_holes(config).hole_free();

  std::size_t residual = 0;
  CoordSet residual_set;
  for (std::size_t p = 0; p < config.size(); ++p) {
    if (elected[p].status != Status::not_elected) {
      ++residual;
      residual_set.insert(config.particles[p].at);
    }
  }

  result.checks = check_election(config, elected);
  const bool elected_ok = result.checks.front().passed;
  if (elected_ok) {
    for (auto& c : check_tree(config, result.phase_states[1])) result.checks.push_back(std::move(c));
    for (auto& c : check_renumber(config, result.phase_states[2], phases[2])) result.checks.push_back(std::move(c));
    for (auto& c : check_ids(config, result.phase_states[3], phases[3], options.k)) result.checks.push_back(std::move(c));
    const bool all = std::all_of(result.checks.begin(), result.checks.end(), [](const Check& c) { return c.passed; });
    result.status = all ? PipelineStatus::ok : PipelineStatus::invariant_failure;
  } else if (holes) {
    result.checks.clear();
    result.checks.push_back(make_check("residual_connected", is_connected(config.kind, residual_set)));
    result.checks.push_back(make_check("residual_multiple", residual > 1));
    const bool all = result.checks[0].passed && result.checks[1].passed;
    result.status = all ? PipelineStatus::stalled_by_holes : PipelineStatus::invariant_failure;
  } else {
    result.status = PipelineStatus::invariant_failure;
  }

  Report& r = result.report;
  r.add("grid", std::string(to_string(config.kind)));
  r.add("particles", std::to_string(config.size()));
  r.add("k", std::to_string(options.k));
  r.add("schedule", options.schedule.policy == SchedulePolicy::random_permutation ? "random"
                    : options.schedule.policy == SchedulePolicy::round_robin    ? "roundrobin"
                                                                                : "explicit");
  r.add("seed", std::to_string(options.schedule.seed));
  r.add("status", std::string(to_string(result.status)));
  r.add("leader", leader ? coord_text(config.particles[*leader].at) : "none");
  r.add("residual", std::to_string(residual));
  r.add("rounds_elect", std::to_string(phases[0].rounds));
  r.add("rounds_tree", dash_or(elected_ok, std::to_string(phases[1].active_rounds)));
  r.add("rounds_renumber", dash_or(elected_ok, std::to_string(phases[2].active_rounds)));
  r.add("rounds_ids", dash_or(elected_ok, std::to_string(phases[3].active_rounds)));
  r.add("msgs_tree", dash_or(elected_ok, std::to_string(phases[1].messages)));
  r.add("msgs_renumber", dash_or(elected_ok, std::to_string(phases[2].messages)));
  r.add("msgs_ids", dash_or(elected_ok, std::to_string(phases[3].messages)));
  const auto depths = elected_ok ? tree_depths(config, result.phase_states[1]) : std::nullopt;
  r.add("tree_height", dash_or(depths.has_value(), std::to_string(height_of(depths))));
  r.add("coloring", pattern(config.kind, options.k).origin);
  for (const Check& c : result.checks) r.add("check." + c.name, c.passed ? "pass" : "fail");
  const bool all = std::all_of(result.checks.begin(), result.checks.end(), [](const Check& c) { return c.passed; });
  r.add("invariants", all ? "pass" : "fail");

  std::map<int, int> histogram;
  for (const ParticleState& s : result.phase_states[3]) {
    if (s.local_id) ++histogram[*s.local_id];
  }
  std::ostringstream h;
  for (const auto& [id, count] : histogram) h << (h.tellp() > 0 ? "," : "") << id << ':' << count;
  r.add("id_histogram", histogram.empty() ? "-" : h.str());
  return result;
}

}  // namespace amoebot
