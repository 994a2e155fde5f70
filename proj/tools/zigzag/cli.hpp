#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

namespace zigzag::cli {

// Bad flags, config file or output path: exit code 1.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string config_path;
  std::string out;  // empty: stdout
  int jobs = 1;
  bool resume = false;

  // model template
  std::string spec_path;
  nlohmann::json spec_json;  // inline "spec" object from --config
  std::vector<std::string> spins;
  std::optional<int> rungs;
  double J = 1.0;
  std::optional<double> Jp;
  std::optional<double> J2;
  std::string boundary = "periodic";

  // sweeps: grids are "a:b:n" or comma-separated values
  std::string line;
  std::vector<std::string> fixed;
  std::vector<std::string> sweep;  // {variable, grid}
  std::string jp_grid;
  std::string j2_grid;

  // ed
  int levels = 0;
  bool full_sweep = false;
  double lanczos_tol = 1e-10;

  // rpa
  bool dispersion = false;
  bool spiral = false;
  double gamma = 0.0;
  std::optional<int> nk;
  int ed_rungs = 0;

  // perturb
  bool with_ed = false;
  bool sectors = false;

  // fidelity
  std::vector<std::string> references;
};

// Adds the subcommands and their flags, all bound to `cfg`.
void register_commands(CLI::App& app, RunConfig& cfg);

// Reads the JSON object at cfg.config_path and replays each key as the option of the same
// long name on `sub`, replacing whatever the command line gave.
void apply_config_file(CLI::App& sub, RunConfig& cfg);

int default_jobs();

// A grid point: its key fields lead every row it produces and identify it for --resume.
struct Point {
  std::vector<std::string> key;
  std::function<std::vector<std::vector<std::string>>()> run;  // rows without the key fields
};

struct Table {
  std::vector<std::string> header;
  std::size_t n_key = 0;
  std::vector<Point> points;
};

Table build_table(const RunConfig& cfg);

// Evaluates the points on `cfg.jobs` workers and writes rows in point order.
// Returns 0, or 2 if some points failed.
int run_table(const Table& table, const RunConfig& cfg);

}  // namespace zigzag::cli
