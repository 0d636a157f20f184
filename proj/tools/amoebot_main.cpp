#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "amoebot/coloring.hpp"
#include "amoebot/config_file.hpp"
#include "amoebot/pipeline.hpp"
#include "amoebot/render.hpp"
#include "amoebot/shapes.hpp"

namespace {

using namespace amoebot;

constexpr int kInputError = 4;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

GridKind grid_from(const std::string& name) {
  const auto kind = parse_grid_kind(name);
  if (!kind) throw InputError("unknown grid '" + name + "'");
  return *kind;
}

int to_int(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::logic_error&) {
    throw InputError("expected an integer " + what + ", got '" + text + "'");
  }
}

struct GenerateArgs {
  std::string shape;
  std::vector<std::string> params;
  std::string grid = "square";
  std::uint64_t seed = 0;
  std::optional<int> k;
  bool allow_holes = false;
  std::string output;
};

int do_generate(const GenerateArgs& a) {
  const GridKind kind = grid_from(a.grid);
  auto need = [&](std::size_t n, const char* usage) {
    if (a.params.size() != n) throw InputError(std::string("usage: generate ") + usage);
  };
  ParticleConfig config;
  if (a.shape == "rect") {
    need(1, "rect WxH");
    const auto x = a.params[0].find('x');
    if (x == std::string::npos) throw InputError("rect size must look like WxH");
    config = make_rect(kind, to_int(a.params[0].substr(0, x), "width"), to_int(a.params[0].substr(x + 1), "height"),
                       a.seed);
  } else if (a.shape == "line") {
    need(1, "line N");
    config = make_line(kind, to_int(a.params[0], "length"), a.seed);
  } else if (a.shape == "ring") {
    need(2, "ring OUTER INNER");
    config = make_ring(kind, to_int(a.params[0], "outer size"), to_int(a.params[1], "inner size"), a.seed);
  } else if (a.shape == "blob") {
    need(1, "blob N");
    config = make_blob(kind, to_int(a.params[0], "size"), a.seed, a.allow_holes);
  } else {
    throw InputError("unknown shape '" + a.shape + "' (rect, line, ring, blob)");
  }
  const ConfigFile file{config, a.k, a.seed};
  if (a.output.empty()) std::cout << emit_config(file);
  else save_config(a.output, file);
  return 0;
}

struct RunArgs {
  std::string config;
  std::optional<int> k;
  std::optional<std::uint64_t> seed;
  std::string schedule = "roundrobin";
  std::string svg_dir;
  std::string trace_path;
  std::size_t max_activations = 0;
};

PipelineOptions pipeline_options(const RunArgs& a, const ConfigFile& file) {
  PipelineOptions o;
  o.k = a.k.value_or(file.k.value_or(1));
  if (o.k < 1) throw InputError("k must be at least 1");
  o.schedule.seed = a.seed.value_or(file.seed.value_or(0));
  if (a.schedule == "roundrobin") o.schedule.policy = SchedulePolicy::round_robin;
  else if (a.schedule == "random") o.schedule.policy = SchedulePolicy::random_permutation;
  else throw InputError("unknown schedule '" + a.schedule + "' (roundrobin, random)");
  o.max_activations = a.max_activations;
  return o;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

int do_run(const RunArgs& a, bool verify_only) {
  const ConfigFile file = load_config(a.config);
  const PipelineOptions options = pipeline_options(a, file);
  const PipelineResult result = run_pipeline(file.config, options);

  if (verify_only) {
    const HoleReport holes = find_holes(file.config);
    std::cout << "valid=yes\n";
    std::cout << "holes=" << holes.holes.size() << "\n";
    std::cout << "border=" << border(file.config).size() << "\n";
    for (const Check& c : result.checks) {
      std::cout << "check." << c.name << '=' << (c.passed ? "pass" : "fail");
      if (!c.passed && !c.detail.empty()) std::cout << " (" << c.detail << ')';
      std::cout << '\n';
    }
    std::cout << "status=" << to_string(result.status) << "\n";
  } else {
    std::cout << result.report.text();
  }

  if (!a.svg_dir.empty()) {
    std::filesystem::create_directories(a.svg_dir);
    for (std::size_t phase = 0; phase < result.phase_states.size(); ++phase) {
      const std::string name = std::to_string(phase + 1) + "_" + std::string(to_string(kFullPipeline[phase]));
      write_file(std::filesystem::path(a.svg_dir) / (name + ".svg"),
                 render_svg(file.config, result.phase_states[phase], name));
    }
  }
  if (!a.trace_path.empty()) write_file(a.trace_path, trace_tsv(result.run.trace));
  return exit_code(result.status);
}

int do_color_table(const std::string& grid, int k, int rows, int cols) {
  const GridKind kind = grid_from(grid);
  if (k < 1) throw InputError("k must be at least 1");
  if (rows < 1 || cols < 1) throw InputError("rows and cols must be positive");
  std::cout << color_table(pattern(kind, k), rows, cols);
  return 0;
}

int do_bound(const std::string& path, int limit) {
  const ConfigFile file = load_config(path);
  if (!find_holes(file.config).hole_free()) throw InputError("bound needs a hole-free configuration");
  if (static_cast<int>(file.config.size()) > limit) {
    throw InputError("bound is exhaustive and limited to " + std::to_string(limit) + " particles");
  }
  const int r = radius(file.config);
  const int t = mtree(file.config, limit);
  std::cout << "radius=" << r << "\nmtree=" << t << "\nround_bound=" << round_bound(file.config, limit) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Leader election, port renumbering and k-local identifiers for grid particle systems"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write a configuration for a generated shape");
  generate->add_option("shape", gen.shape, "rect, line, ring or blob")->required();
  generate->add_option("params", gen.params, "Shape parameters: WxH | N | OUTER INNER | N");
  generate->add_option("--grid", gen.grid, "square, triangular or king");
  generate->add_option("--seed", gen.seed, "Seed for offsets and blob growth");
  generate->add_option("--k", gen.k, "k recorded in the file");
  generate->add_flag("--allow-holes", gen.allow_holes, "Let blob growth enclose holes");
  generate->add_option("-o,--output", gen.output, "Output path (default stdout)");

  RunArgs run_args;
  auto add_run_options = [&](CLI::App* cmd) {
    cmd->add_option("config", run_args.config, "Configuration file")->required();
    cmd->add_option("--k", run_args.k, "Locality of the identifiers (overrides the file)");
    cmd->add_option("--seed", run_args.seed, "Schedule seed (overrides the file)");
    cmd->add_option("--schedule", run_args.schedule, "roundrobin or random");
    cmd->add_option("--max-activations", run_args.max_activations, "Per-phase activation cap");
  };
  auto* run_cmd = app.add_subcommand("run", "Run the full pipeline and print a report");
  add_run_options(run_cmd);
  run_cmd->add_option("--svg", run_args.svg_dir, "Directory for one SVG per phase");
  run_cmd->add_option("--trace", run_args.trace_path, "Write the activation trace as TSV");
  auto* verify = app.add_subcommand("verify", "Run the pipeline and print invariant checks");
  add_run_options(verify);

  std::string table_grid = "square";
  int table_k = 1;
  int rows = 4;
  int cols = 8;
  auto* table = app.add_subcommand("color-table", "Print colors of the optimal k-th power coloring");
  table->add_option("--grid", table_grid, "square, triangular or king");
  table->add_option("--k", table_k, "Distance parameter");
  table->add_option("--rows", rows, "Rows (j)");
  table->add_option("--cols", cols, "Columns (i)");

  std::string bound_path;
  int bound_limit = kDefaultMtreeLimit;
  auto* bound = app.add_subcommand("bound", "Print r(P), mtree(P) and the election round bound");
  bound->add_option("config", bound_path, "Configuration file")->required();
  bound->add_option("--limit", bound_limit, "Largest configuration for the exhaustive search");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*generate) return do_generate(gen);
    if (*run_cmd) return do_run(run_args, false);
    if (*verify) return do_run(run_args, true);
    if (*table) return do_color_table(table_grid, table_k, rows, cols);
    if (*bound) return do_bound(bound_path, bound_limit);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
