#include <cstdlib>
#include <fstream>
#include <thread>

#include "cli.hpp"

namespace zigzag::cli {

namespace {

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--config", cfg.config_path, "JSON file whose keys override the flags")->check(CLI::ExistingFile);
  sub->add_option("--out", cfg.out, "CSV output path (default stdout)");
  sub->add_option("--jobs", cfg.jobs, "worker threads (default $ZIGZAG_JOBS)")->check(CLI::PositiveNumber);
  sub->add_flag("--resume", cfg.resume, "keep rows already in --out and compute only the missing points");
}

void add_model(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--spins,--spin", cfg.spins, "spin lengths, e.g. 1/2,1,3/2")->delimiter(',');
  sub->add_option("--rungs", cfg.rungs, "number of rungs N (2N sites)")->check(CLI::PositiveNumber);
  sub->add_option("--J", cfg.J, "rung coupling");
  sub->add_option("--Jp", cfg.Jp, "zig-zag coupling J'");
  sub->add_option("--J2", cfg.J2, "leg coupling J2 = J2'");
  sub->add_option("--boundary", cfg.boundary, "periodic or open")->check(CLI::IsMember({"periodic", "open"}));
}

}  // namespace

void register_commands(CLI::App& app, RunConfig& cfg) {
  app.require_subcommand(1);

  auto* ed = app.add_subcommand("ed", "exact diagonalization: relative-energy curves or low levels");
  add_common(ed, cfg);
  add_model(ed, cfg);
  ed->add_option("--spec", cfg.spec_path, "ladder template as JSON")->check(CLI::ExistingFile);
  ed->add_option("--line", cfg.line, "constraint tying J2 to the swept J', only J2=Jp/2")
      ->check(CLI::IsMember({"J2=Jp/2"}));
  ed->add_option("--fixed", cfg.fixed, "coupling assignments, e.g. Jp=0.6")->delimiter(',');
  ed->add_option("--sweep", cfg.sweep, "variable (J, Jp, J2) and grid a:b:n")->expected(2);
  ed->add_option("--levels", cfg.levels, "lowest distinct levels with degeneracies")->check(CLI::NonNegativeNumber);
  ed->add_flag("--full-sweep", cfg.full_sweep, "scan every Sz sector");
  ed->add_option("--lanczos-tol", cfg.lanczos_tol, "Lanczos residual target")->check(CLI::PositiveNumber);

  auto* phase = app.add_subcommand("phase", "classical phase diagram on a (J'/J, J2/J) grid");
  add_common(phase, cfg);
  add_model(phase, cfg);
  phase->add_option("--jp", cfg.jp_grid, "J'/J grid a:b:n");
  phase->add_option("--j2", cfg.j2_grid, "J2/J grid a:b:n");

  auto* rpa = app.add_subcommand("rpa", "RPA energy curves and excitation spectra");
  add_common(rpa, cfg);
  add_model(rpa, cfg);
  rpa->add_flag("--dispersion", cfg.dispersion, "dimer-line dispersion omega_k");
  rpa->add_flag("--spiral", cfg.spiral, "spin-wave branches around the classical state");
  rpa->add_option("--gamma", cfg.gamma, "dimer-line gamma for --dispersion");
  rpa->add_option("--sweep", cfg.sweep, "J2 and grid a:b:n for the energy curves")->expected(2);
  rpa->add_option("--nk", cfg.nk, "momentum points")->check(CLI::PositiveNumber);
  rpa->add_option("--ed-rungs", cfg.ed_rungs, "rungs for the ED column (0 skips)")->check(CLI::NonNegativeNumber);

  auto* perturb = app.add_subcommand("perturb", "perturbative critical coupling and gap");
  add_common(perturb, cfg);
  add_model(perturb, cfg);
  perturb->add_flag("--with-ed", cfg.with_ed, "add exact-diagonalization columns");
  perturb->add_flag("--sectors", cfg.sectors, "sector energies and gap on a J'/J grid");
  perturb->add_option("--jp", cfg.jp_grid, "J'/J values for --sectors");

  auto* fid = app.add_subcommand("fidelity", "rung fidelity of the exact ground state");
  add_common(fid, cfg);
  add_model(fid, cfg);
  fid->add_option("--jp", cfg.jp_grid, "J'/J grid a:b:n");
  fid->add_option("--j2", cfg.j2_grid, "J2/J grid a:b:n");
  fid->add_option("--line", cfg.line, "sweep the line J2=Jp/2 over --jp")->check(CLI::IsMember({"J2=Jp/2"}));
  fid->add_option("--reference", cfg.references, "singlet, srmf")
      ->delimiter(',')
      ->check(CLI::IsMember({"singlet", "srmf"}));

  cfg.jobs = default_jobs();
}

void apply_config_file(CLI::App& sub, RunConfig& cfg) {
  std::ifstream in(cfg.config_path);
  if (!in) throw ConfigError("cannot read config " + cfg.config_path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config " + cfg.config_path + ": " + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  auto scalar = [](const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return std::string(v.get<bool>() ? "true" : "false");
    if (v.is_number()) return v.dump();
    throw ConfigError("config values must be strings, numbers, booleans or arrays of those");
  };
  for (const auto& [key, value] : doc.items()) {
    if (key == "spec" && value.is_object()) {
      cfg.spec_json = value;
      continue;
    }
    if (key == "config") throw ConfigError("config files cannot nest");
    CLI::Option* opt = sub.get_option_no_throw("--" + key);
    if (opt == nullptr) throw ConfigError("unknown config key '" + key + "' for " + sub.get_name());
    std::vector<std::string> values;
    if (value.is_array()) {
      for (const auto& v : value) values.push_back(scalar(v));
    } else {
      values.push_back(scalar(value));
    }
    opt->clear();
    opt->add_result(values);
    try {
      opt->run_callback();
    } catch (const CLI::Error& e) {
      throw ConfigError("config key '" + key + "': " + e.what());
    }
  }
}

int default_jobs() {
  if (const char* env = std::getenv("ZIGZAG_JOBS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || n <= 0) throw ConfigError(std::string("ZIGZAG_JOBS must be a positive integer, got '") + env + "'");
    return static_cast<int>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace zigzag::cli
