#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "amoebot/coloring.hpp"
#include "amoebot/grid.hpp"
#include "amoebot/particle_system.hpp"

namespace amoebot {

enum class Status : std::uint8_t { candidate, not_elected, leader };

// 'C', 'N' or 'L'.
char status_letter(Status s);

enum class Algorithm : std::uint8_t { elect, spanning_tree, renumber, assign_ids };

inline constexpr std::array<Algorithm, 4> kFullPipeline = {
    Algorithm::elect, Algorithm::spanning_tree, Algorithm::renumber, Algorithm::assign_ids};

std::string_view to_string(Algorithm a);

// Per-particle protocol state. All port names are in the particle's own frame.
struct ParticleState {
  Status status = Status::candidate;
  int frame_offset = 0;

  // Spanning tree.
  bool in_tree = false;
  std::optional<PortId> parent_port;
  PortSet child_ports;
  PortSet token_ports;

  bool renumbered = false;

  std::optional<TrackedCoords> coords;
  std::optional<int> local_id;

  bool operator==(const ParticleState&) const = default;
};

// Compact single-token rendering used by traces, e.g. "N|o2|p1|c{0,3}|id5@(1,2)".
std::string describe(const ParticleState& s);

// What a particle sees of its surroundings at activation, in its own frame.
struct LocalView {
  GridKind kind = GridKind::square;
  PortSet occupied;
  std::array<Status, kMaxDegree> neighbor_status{};
  // Square grid only: whether the corner between ports c and c+1 holds a candidate.
  std::optional<std::array<bool, 4>> candidate_corners;
  // False when local port 0 points along a diagonal of the king grid.
  bool port0_axis_aligned = true;
};

struct TreeToken {
  bool operator==(const TreeToken&) const = default;
};
struct PortValue {
  int port = 0;
  bool operator==(const PortValue&) const = default;
};
struct CoordPair {
  int i = 0;
  int j = 0;
  bool operator==(const CoordPair&) const = default;
};
using Payload = std::variant<TreeToken, PortValue, CoordPair>;

// A message tagged with a local port: the arrival port for an inbox entry,
// the departure port for an outbox entry.
struct PortMessage {
  PortId port = 0;
  Payload payload;

  bool operator==(const PortMessage&) const = default;
};

struct StepResult {
  ParticleState state;
  std::vector<PortMessage> outgoing;
};

// Leader election: a contractible candidate leaves candidacy, as leader if it was the last.
ParticleState step_elect(const ParticleState& state, const LocalView& view);

// Flooding construction of a spanning tree rooted at the leader.
// Inbox messages are handled one at a time in arrival order.
StepResult step_spanning_tree(const ParticleState& state, const LocalView& view,
                              const std::vector<PortMessage>& inbox);

// Renumbering: propagate the leader's port numbering down the tree.
// Throws std::invalid_argument on a port value >= degree.
StepResult step_renumber(const ParticleState& state, const LocalView& view,
                         const std::vector<PortMessage>& inbox);

// Identifiers: leader-relative coordinates and the k-local identifier.
StepResult step_assign_ids(const ParticleState& state, const LocalView& view,
                           const std::vector<PortMessage>& inbox, int k);

StepResult step(Algorithm algorithm, const ParticleState& state, const LocalView& view,
                const std::vector<PortMessage>& inbox, int k);

// Identifier update after the particle moves one step through `move_port`.
// Throws std::invalid_argument without assigned coordinates and
// std::out_of_range for a bad port.
ParticleState update_id_after_move(GridKind kind, int k, const ParticleState& state,
                                   PortId move_port);

enum class BoundaryKind : std::uint8_t { outer, hole };

struct BoundaryWalk {
  BoundaryKind kind = BoundaryKind::outer;
  int length = 0;
  // Signed sum of turns in units of 1/degree of a full turn.
  int turning = 0;
};

// Follows the boundary token from `start`, first forwarded through
// n(start_port); `start_port` is a canonical port that must be unoccupied.
// Throws std::invalid_argument for a bad start and std::runtime_error when
// the walk does not close within 4n hops.
BoundaryWalk classify_boundary(const ParticleConfig& config, Coord start, PortId start_port);

// Runs leader election to quiescence under round-robin and returns every particle that
// did not end as N.
CoordSet residual_candidates(const ParticleConfig& config);

}  // namespace amoebot
