#include "amoebot/algorithms.hpp"

#include <sstream>
#include <stdexcept>

#include "amoebot/scheduler.hpp"

namespace amoebot {

namespace {

PortSet shift_ports(PortSet ports, int shift, int deg) {
  PortSet out;
  for (PortId p : ports.to_vector()) out.insert(wrap(p + shift, deg));
  return out;
}

// Renames every stored port by +shift and compensates the frame offset, so
// each name still refers to the same physical neighbor.
void rotate_frame(ParticleState& s, int shift, int deg) {
  s.frame_offset = wrap(s.frame_offset - shift, deg);
  if (s.parent_port) s.parent_port = wrap(*s.parent_port + shift, deg);
  s.child_ports = shift_ports(s.child_ports, shift, deg);
  s.token_ports = shift_ports(s.token_ports, shift, deg);
}

template <typename T>
const T* first_payload(const std::vector<PortMessage>& inbox, PortId* port) {
  for (const PortMessage& m : inbox) {
    if (const T* p = std::get_if<T>(&m.payload)) {
      *port = m.port;
      return p;
    }
  }
  return nullptr;
}

void send_to_children(StepResult& r, const Payload& payload) {
  for (PortId c : r.state.child_ports.to_vector()) r.outgoing.push_back({c, payload});
}

}  // namespace

char status_letter(Status s) {
  switch (s) {
    case Status::candidate: return 'C';
    case Status::not_elected: return 'N';
    case Status::leader: return 'L';
  }
  return '?';
}

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::elect: return "elect";
    case Algorithm::spanning_tree: return "tree";
    case Algorithm::renumber: return "renumber";
    case Algorithm::assign_ids: return "ids";
  }
  return "?";
}

std::string describe(const ParticleState& s) {
  std::ostringstream out;
  out << status_letter(s.status) << "|o" << s.frame_offset;
  if (s.in_tree) {
    out << "|p";
    if (s.parent_port) out << *s.parent_port;
    else out << '-';
    out << "|c{";
    bool first = true;
    for (PortId c : s.child_ports.to_vector()) {
      out << (first ? "" : ",") << c;
      first = false;
    }
    out << '}';
  }
  if (s.renumbered) out << "|r";
  if (s.coords && s.local_id) {
    out << "|id" << *s.local_id << "@(" << s.coords->i << ',' << s.coords->j << ')';
  }
  return out.str();
}

ParticleState step_elect(const ParticleState& state, const LocalView& view) {
  if (state.status != Status::candidate) return state;
  PortSet candidates;
  for (PortId a : view.occupied.to_vector()) {
    if (view.neighbor_status[static_cast<std::size_t>(a)] == Status::candidate) candidates.insert(a);
  }
  if (!is_s_contractible_local(view.kind, candidates, view.candidate_corners)) return state;
  ParticleState next = state;
  next.status = candidates.empty() ? Status::leader : Status::not_elected;
  return next;
}

StepResult step_spanning_tree(const ParticleState& state, const LocalView& view,
                              const std::vector<PortMessage>& inbox) {
  StepResult r{state, {}};
  ParticleState& s = r.state;
  if (s.status == Status::leader && !s.in_tree) {
    s.in_tree = true;
    s.child_ports = view.occupied;
    send_to_children(r, TreeToken{});
  }
  if (s.status == Status::candidate) return r;
  for (const PortMessage& m : inbox) {
    if (!std::holds_alternative<TreeToken>(m.payload)) continue;
    s.token_ports.insert(m.port);
    if (!s.in_tree) {
      s.in_tree = true;
      s.parent_port = m.port;
      s.child_ports = PortSet(static_cast<std::uint16_t>(view.occupied.bits() & ~s.token_ports.bits()));
      send_to_children(r, TreeToken{});
    } else {
      s.child_ports.erase(m.port);
    }
  }
  return r;
}

StepResult step_renumber(const ParticleState& state, const LocalView& view,
                         const std::vector<PortMessage>& inbox) {
  StepResult r{state, {}};
  ParticleState& s = r.state;
  if (s.renumbered || !s.in_tree) return r;
  const int deg = degree(view.kind);
  if (s.status == Status::leader) {
    // A 45 degree turn of the king grid is not a lattice symmetry, so the
    // leader first settles on a frame whose port 0 is axis aligned.
    if (view.kind == GridKind::king && !view.port0_axis_aligned) rotate_frame(s, -1, deg);
  } else {
    PortId a = 0;
    const PortValue* value = first_payload<PortValue>(inbox, &a);
    if (!value) return r;
    if (value->port < 0 || value->port >= deg) {
      throw std::invalid_argument("renumber: port value " + std::to_string(value->port) +
                                  " out of range");
    }
    rotate_frame(s, opposite_port(view.kind, value->port) - a, deg);
  }
  s.renumbered = true;
  for (PortId c : s.child_ports.to_vector()) r.outgoing.push_back({c, PortValue{c}});
  return r;
}

StepResult step_assign_ids(const ParticleState& state, const LocalView& view,
                           const std::vector<PortMessage>& inbox, int k) {
  StepResult r{state, {}};
  ParticleState& s = r.state;
  if (s.coords || !s.in_tree) return r;
  if (s.status == Status::leader) {
    s.coords = TrackedCoords{0, 0};
  } else {
    PortId a = 0;
    const CoordPair* pair = first_payload<CoordPair>(inbox, &a);
    if (!pair) return r;
    s.coords = coord_update_receive(view.kind, k, {pair->i, pair->j}, a);
  }
  s.local_id = color_at(view.kind, k, s.coords->i, s.coords->j);
  send_to_children(r, CoordPair{s.coords->i, s.coords->j});
  return r;
}

StepResult step(Algorithm algorithm, const ParticleState& state, const LocalView& view,
                const std::vector<PortMessage>& inbox, int k) {
  switch (algorithm) {
    case Algorithm::elect: return {step_elect(state, view), {}};
    case Algorithm::spanning_tree: return step_spanning_tree(state, view, inbox);
    case Algorithm::renumber: return step_renumber(state, view, inbox);
    case Algorithm::assign_ids: return step_assign_ids(state, view, inbox, k);
  }
  throw std::logic_error("unknown algorithm");
}

ParticleState update_id_after_move(GridKind kind, int k, const ParticleState& state,
                                   PortId move_port) {
  if (!state.coords) throw std::invalid_argument("update_id_after_move: no coordinates assigned");
  ParticleState next = state;
  next.coords = coord_update_receive(kind, k, *state.coords, opposite_port(kind, move_port));
  next.local_id = color_at(kind, k, next.coords->i, next.coords->j);
  return next;
}

BoundaryWalk classify_boundary(const ParticleConfig& config, Coord start, PortId start_port) {
  const ParticleIndex index(config);
  const int origin = index.at(start);
  if (origin < 0) throw std::invalid_argument("classify_boundary: start is not a particle");
  const GridKind kind = config.kind;
  const int deg = degree(kind);
  if (start_port < 0 || start_port >= deg) {
    throw std::invalid_argument("classify_boundary: start port out of range");
  }

  auto occupied_ports = [&](std::size_t p) {
    PortSet s;
    for (PortId a = 0; a < deg; ++a) {
      if (index.neighbor(p, a) >= 0) s.insert(a);
    }
    return s;
  };

  const auto first = static_cast<std::size_t>(origin);
  const PortSet start_ports = occupied_ports(first);
  if (start_ports.contains(start_port)) {
    throw std::invalid_argument("classify_boundary: start port leads to a particle");
  }
  BoundaryWalk walk;
  if (start_ports.empty()) return walk;

  const PortId first_out = next_occupied_port(kind, start_port, start_ports);
  const int limit = 4 * static_cast<int>(config.size());
  std::size_t at = first;
  PortId out = first_out;
  for (;;) {
    if (walk.length >= limit) {
      throw std::runtime_error("classify_boundary: walk did not close within " +
                               std::to_string(limit) + " hops");
    }
    at = static_cast<std::size_t>(index.neighbor(at, out));
    ++walk.length;
    const PortId in = opposite_port(kind, out);
    out = next_occupied_port(kind, in, occupied_ports(at));
    int s = wrap(out - in, deg);
    if (s == 0) s = deg;
    walk.turning += s - deg / 2;
    if (at == first && out == first_out) break;
  }
  walk.kind = walk.turning > 0 ? BoundaryKind::outer : BoundaryKind::hole;
  return walk;
}

CoordSet residual_candidates(const ParticleConfig& config) {
  const std::array<Algorithm, 1> pipeline{Algorithm::elect};
  RunOptions options;
  options.record_trace = false;
  const RunResult result = run(config, pipeline, Schedule{}, options);
  CoordSet out;
  for (std::size_t p = 0; p < config.size(); ++p) {
    if (result.states[p].status != Status::not_elected) out.insert(config.particles[p].at);
  }
  return out;
}

}  // namespace amoebot
