#include "amoebot/render.hpp"

#include <algorithm>
#include <sstream>

namespace amoebot {

namespace {

constexpr int kCell = 40;
constexpr int kMargin = 30;

const char* fill_for(Status s) {
  switch (s) {
    case Status::candidate: return "#f2c14e";
    case Status::not_elected: return "#9bc1e0";
    case Status::leader: return "#d1495b";
  }
  return "#cccccc";
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const ParticleConfig& config, const std::vector<ParticleState>& states,
                       const std::string& title) {
  Coord lo{0, 0};
  Coord hi{0, 0};
  if (!config.particles.empty()) lo = hi = config.particles.front().at;
  for (const Particle& p : config.particles) {
    lo = {std::min(lo.i, p.at.i), std::min(lo.j, p.at.j)};
    hi = {std::max(hi.i, p.at.i), std::max(hi.j, p.at.j)};
  }
  auto x = [&](Coord c) { return kMargin + (c.i - lo.i) * kCell; };
  auto y = [&](Coord c) { return kMargin + 20 + (c.j - lo.j) * kCell; };
  const int width = 2 * kMargin + (hi.i - lo.i) * kCell;
  const int height = 2 * kMargin + 20 + (hi.j - lo.j) * kCell;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" font-family=\"sans-serif\">\n";
  svg << "  <title>" << escape(title) << "</title>\n";
  svg << "  <text x=\"" << kMargin / 2 << "\" y=\"18\" font-size=\"14\">" << escape(title) << "</text>\n";

  const ParticleIndex index(config);
  for (std::size_t p = 0; p < config.size(); ++p) {
    const Coord at = config.particles[p].at;
    for (PortId a = 0; a < degree(config.kind); ++a) {
      const int q = index.neighbor(p, a);
      if (q <= static_cast<int>(p)) continue;
      const Coord b = config.particles[static_cast<std::size_t>(q)].at;
      svg << "  <line x1=\"" << x(at) << "\" y1=\"" << y(at) << "\" x2=\"" << x(b) << "\" y2=\"" << y(b)
          << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    }
  }
  for (std::size_t p = 0; p < config.size() && p < states.size(); ++p) {
    const ParticleState& s = states[p];
    if (!s.parent_port) continue;
    const int q = index.neighbor(p, to_canonical(config.kind, *s.parent_port, s.frame_offset));
    if (q < 0) continue;
    const Coord a = config.particles[p].at;
    const Coord b = config.particles[static_cast<std::size_t>(q)].at;
    svg << "  <line x1=\"" << x(a) << "\" y1=\"" << y(a) << "\" x2=\"" << x(b) << "\" y2=\"" << y(b)
        << "\" stroke=\"#333333\" stroke-width=\"3\"/>\n";
  }
  for (std::size_t p = 0; p < config.size(); ++p) {
    const Coord at = config.particles[p].at;
    const Status status = p < states.size() ? states[p].status : Status::candidate;
    svg << "  <circle cx=\"" << x(at) << "\" cy=\"" << y(at) << "\" r=\"" << kCell * 3 / 8 << "\" fill=\""
        << fill_for(status) << "\" stroke=\"#222222\"/>\n";
    if (p < states.size() && states[p].local_id) {
      svg << "  <text x=\"" << x(at) << "\" y=\"" << y(at) + 5 << "\" font-size=\"13\" text-anchor=\"middle\">"
          << *states[p].local_id << "</text>\n";
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace amoebot
