#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "amoebot/particle_system.hpp"

namespace amoebot {

// Line based configuration text:
//
//   # comment
//   grid triangular
//   k 3
//   seed 42
//   particle 0 0 5
struct ConfigFile {
  ParticleConfig config;
  std::optional<int> k;
  std::optional<std::uint64_t> seed;

  bool operator==(const ConfigFile&) const = default;
};

class ConfigError : public std::runtime_error {
 public:
  // line is 1-based; 0 when the problem is not tied to one line.
  ConfigError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

// Parses and validates; throws ConfigError.
ConfigFile parse_config(std::string_view text);
std::string emit_config(const ConfigFile& file);

ConfigFile load_config(const std::filesystem::path& path);
void save_config(const std::filesystem::path& path, const ConfigFile& file);

}  // namespace amoebot
