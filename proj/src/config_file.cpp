#include "amoebot/config_file.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace amoebot {

namespace {

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> words;
  std::istringstream in{std::string(line)};
  std::string w;
  while (in >> w) words.push_back(w);
  return words;
}

template <typename T>
T parse_number(const std::string& word, int line, const char* what) {
  std::istringstream in(word);
  T value{};
  if (!(in >> value) || !in.eof()) {
    throw ConfigError(line, std::string("expected ") + what + ", got '" + word + "'");
  }
  return value;
}

}  // namespace

ConfigError::ConfigError(int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      line_(line) {}

ConfigFile parse_config(std::string_view text) {
  ConfigFile out;
  std::optional<GridKind> kind;
  std::map<Coord, int> first_line;
  std::vector<int> particle_lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const auto words = split_words(raw);
    if (words.empty()) continue;
    const std::string& key = words[0];
    auto expect_args = [&](std::size_t n) {
      if (words.size() != n + 1) {
        throw ConfigError(line, "'" + key + "' takes " + std::to_string(n) + " value(s)");
      }
    };
    if (key == "grid") {
      expect_args(1);
      if (kind) throw ConfigError(line, "grid given twice");
      kind = parse_grid_kind(words[1]);
      if (!kind) throw ConfigError(line, "unknown grid '" + words[1] + "'");
      if (!out.config.particles.empty()) throw ConfigError(line, "grid must precede particles");
      out.config.kind = *kind;
    } else if (key == "k") {
      expect_args(1);
      const int k = parse_number<int>(words[1], line, "an integer k");
      if (k < 1) throw ConfigError(line, "k must be at least 1");
      out.k = k;
    } else if (key == "seed") {
      expect_args(1);
      if (words[1].starts_with('-')) throw ConfigError(line, "seed must be non-negative");
      out.seed = parse_number<std::uint64_t>(words[1], line, "an unsigned seed");
    } else if (key == "particle") {
      if (!kind) throw ConfigError(line, "particle before grid line");
      if (words.size() != 3 && words.size() != 4) {
        throw ConfigError(line, "'particle' takes i j [offset]");
      }
      Particle p;
      p.at.i = parse_number<int>(words[1], line, "integer i");
      p.at.j = parse_number<int>(words[2], line, "integer j");
      if (words.size() == 4) p.frame_offset = parse_number<int>(words[3], line, "integer offset");
      if (p.frame_offset < 0 || p.frame_offset >= degree(*kind)) {
        throw ConfigError(line, "offset " + std::to_string(p.frame_offset) + " outside [0," +
                                    std::to_string(degree(*kind) - 1) + "]");
      }
      if (auto [it, fresh] = first_line.emplace(p.at, line); !fresh) {
        throw ConfigError(line, "duplicate particle, first given on line " + std::to_string(it->second));
      }
      out.config.particles.push_back(p);
    } else {
      throw ConfigError(line, "unknown directive '" + key + "'");
    }
  }
  if (!kind) throw ConfigError(0, "missing grid line");
  for (const Violation& v : validate_config(out.config)) throw ConfigError(0, v.message);
  return out;
}

std::string emit_config(const ConfigFile& file) {
  std::ostringstream out;
  out << "grid " << to_string(file.config.kind) << '\n';
  if (file.k) out << "k " << *file.k << '\n';
  if (file.seed) out << "seed " << *file.seed << '\n';
  for (const Particle& p : file.config.particles) {
    out << "particle " << p.at.i << ' ' << p.at.j << ' ' << p.frame_offset << '\n';
  }
  return out.str();
}

ConfigFile load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(0, "cannot open " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

void save_config(const std::filesystem::path& path, const ConfigFile& file) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << emit_config(file);
}

}  // namespace amoebot
