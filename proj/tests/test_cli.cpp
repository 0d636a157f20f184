#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "amoebot/config_file.hpp"
#include "amoebot/particle_system.hpp"
#include "amoebot/pipeline.hpp"
#include "amoebot/shapes.hpp"

using namespace amoebot;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code = -1;
  std::string out;
};

Outcome cli(const std::string& args) {
  const fs::path out = fs::temp_directory_path() / ("amoebot_cli_" + std::to_string(::getpid()) + ".txt");
  const std::string command = std::string(AMOEBOT_CLI) + " " + args + " > " + out.string() + " 2>&1";
  const int status = std::system(command.c_str());
  std::ifstream in(out);
  std::stringstream text;
  text << in.rdbuf();
  fs::remove(out);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, text.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("amoebot_cli_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir / name;
}

int error_line(std::string_view text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST(ConfigFile, RoundTrip) {
  ConfigFile f;
  f.config = make_blob(GridKind::triangular, 20, 5);
  f.k = 3;
  f.seed = 11;
  const std::string text = emit_config(f);
  EXPECT_EQ(parse_config(text), f);
  EXPECT_EQ(emit_config(parse_config(text)), text);
}

TEST(ConfigFile, CommentsAndDefaults) {
  const auto f = parse_config("# two particles\ngrid king\n\nparticle 0 0 3\nparticle 1 1 7  # diagonal\n");
  EXPECT_EQ(f.config.kind, GridKind::king);
  EXPECT_EQ(f.config.size(), 2U);
  EXPECT_FALSE(f.k.has_value());
  EXPECT_FALSE(f.seed.has_value());
}

TEST(ConfigFile, ErrorsNameTheLine) {
  EXPECT_EQ(error_line("grid hexagonal\n"), 1);
  EXPECT_EQ(error_line("grid square\nparticle 0 x\n"), 2);
  EXPECT_EQ(error_line("grid square\nparticle 0\n"), 2);
  EXPECT_EQ(error_line("grid square\nparticle 0 0 4\n"), 2);
  EXPECT_EQ(error_line("grid square\nparticle 0 0 0\nparticle 0 0 1\n"), 3);
  EXPECT_EQ(error_line("grid square\nk 0\n"), 2);
  EXPECT_EQ(error_line("grid square\nwobble\n"), 2);
  EXPECT_THROW(parse_config("grid square\nparticle 0 0 0\nparticle 5 0 1\n"), ConfigError);
  EXPECT_THROW(parse_config("particle 0 0 0\n"), ConfigError);
}

TEST(Shapes, Examples) {
  const auto rect = make_rect(GridKind::square, 3, 3, 1);
  EXPECT_EQ(rect.size(), 9U);
  EXPECT_TRUE(find_holes(rect).hole_free());

  const auto ring = make_ring(GridKind::square, 3, 1, 1);
  EXPECT_EQ(ring.size(), 8U);
  EXPECT_EQ(find_holes(ring).holes.size(), 1U);

  const auto blob = make_blob(GridKind::triangular, 50, 7);
  EXPECT_EQ(blob.size(), 50U);
  EXPECT_TRUE(validate_config(blob).empty());
  EXPECT_TRUE(find_holes(blob).hole_free());

  EXPECT_EQ(make_line(GridKind::king, 4, 0).size(), 4U);
  EXPECT_THROW(make_ring(GridKind::square, 3, 2, 0), std::invalid_argument);
  EXPECT_THROW(make_blob(GridKind::square, 0, 0), std::invalid_argument);
}

TEST(Shapes, BlobsAreSeeded) {
  EXPECT_EQ(make_blob(GridKind::king, 40, 3).particles, make_blob(GridKind::king, 40, 3).particles);
  EXPECT_NE(make_blob(GridKind::king, 40, 3).particles, make_blob(GridKind::king, 40, 4).particles);
}

TEST(Pipeline, ReportIsDeterministic) {
  const auto c = make_blob(GridKind::square, 30, 9);
  PipelineOptions o;
  o.k = 2;
  o.schedule = Schedule{SchedulePolicy::random_permutation, 17, {}};
  const auto a = run_pipeline(c, o);
  const auto b = run_pipeline(c, o);
  EXPECT_EQ(a.report.text(), b.report.text());
  EXPECT_EQ(a.status, PipelineStatus::ok);
  ASSERT_NE(a.report.find("leader"), nullptr);
}

TEST(Pipeline, HolesStall) {
  const auto r = run_pipeline(make_ring(GridKind::square, 3, 1, 0), PipelineOptions{});
  EXPECT_EQ(r.status, PipelineStatus::stalled_by_holes);
  EXPECT_EQ(exit_code(r.status), 3);
  EXPECT_EQ(*r.report.find("leader"), "none");
  EXPECT_EQ(*r.report.find("residual"), "8");
}

TEST(Cli, GenerateAndRun) {
  const fs::path rect = scratch("rect.cfg");
  ASSERT_EQ(cli("generate rect 3x3 --grid square --seed 1 -o " + rect.string()).code, 0);
  const Outcome run = cli("run " + rect.string() + " --k 2");
  EXPECT_EQ(run.code, 0) << run.out;
  EXPECT_NE(run.out.find("status=ok"), std::string::npos) << run.out;
  EXPECT_EQ(cli("run " + rect.string() + " --k 2").out, run.out);

  const fs::path ring = scratch("ring.cfg");
  ASSERT_EQ(cli("generate ring 3 1 --grid square -o " + ring.string()).code, 0);
  const Outcome stalled = cli("run " + ring.string());
  EXPECT_EQ(stalled.code, 3) << stalled.out;
  EXPECT_NE(stalled.out.find("leader=none"), std::string::npos);
  fs::remove_all(rect.parent_path());
}

TEST(Cli, BadInput) {
  EXPECT_EQ(cli("run /nonexistent/file.cfg").code, 4);
  const fs::path bad = scratch("bad.cfg");
  std::ofstream(bad) << "grid square\nparticle 0 0 0\nparticle 0 0 1\n";
  const Outcome o = cli("run " + bad.string());
  EXPECT_EQ(o.code, 4);
  EXPECT_NE(o.out.find("line 3"), std::string::npos) << o.out;
  EXPECT_EQ(cli("generate blob 0 --grid square").code, 4);
  fs::remove_all(bad.parent_path());
}

TEST(Cli, ColorTable) {
  const Outcome o = cli("color-table --grid square --k 1 --rows 2 --cols 4");
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out, "0 1 0 1\n1 0 1 0\n");
}
