#include <algorithm>
#include <atomic>
#include <cmath>
#include <condition_variable>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cli.hpp"
#include "zigzag/common/csv.hpp"
#include "zigzag/common/error.hpp"
#include "zigzag/exact/ground_state.hpp"
#include "zigzag/exact/landscape.hpp"
#include "zigzag/meanfield/classical.hpp"
#include "zigzag/model/spec_io.hpp"
#include "zigzag/perturb/perturb.hpp"
#include "zigzag/rpa/curves.hpp"
#include "zigzag/rpa/dimer_line.hpp"
#include "zigzag/rpa/spiral.hpp"

namespace zigzag::cli {

namespace {

using Row = std::vector<std::string>;
using Rows = std::vector<Row>;

std::string f(double v) { return format_double(v); }
std::string flag(bool b) { return b ? "1" : "0"; }
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// "a:b:n" or a comma-separated list of values.
std::vector<double> parse_grid(const std::string& text, const std::string& what) {
  try {
    if (text.find(':') != std::string::npos) return parse_sweep(text);
    std::vector<double> out;
    for (const auto& item : split(text, ',')) {
      std::size_t used = 0;
      const double v = std::stod(item, &used);
      if (used != item.size() || !std::isfinite(v)) throw InvalidInput("bad value '" + item + "'");
      out.push_back(v);
    }
    if (out.empty()) throw InvalidInput("empty grid");
    return out;
  } catch (const std::exception& e) {
    throw ConfigError(what + ": " + e.what());
  }
}

std::vector<SpinValue> spins_of(const RunConfig& cfg, const std::vector<std::string>& fallback) {
  std::vector<SpinValue> out;
  for (const auto& s : cfg.spins.empty() ? fallback : cfg.spins) {
    try {
      out.push_back(SpinValue::parse(s));
    } catch (const std::exception& e) {
      throw ConfigError("spin '" + s + "': " + e.what());
    }
  }
  return out;
}

SpinValue single_spin(const RunConfig& cfg, const std::string& fallback) {
  auto s = spins_of(cfg, {fallback});
  if (s.size() != 1) throw ConfigError(cfg.command + " takes a single --spin here");
  return s.front();
}

GroundStateOptions ground_options(const RunConfig& cfg) {
  GroundStateOptions o;
  o.full_sweep = cfg.full_sweep;
  o.lanczos.tol = cfg.lanczos_tol;
  return o;
}

std::optional<LadderSpec> spec_template(const RunConfig& cfg) {
  nlohmann::json doc = cfg.spec_json;
  if (!cfg.spec_path.empty()) {
    std::ifstream in(cfg.spec_path);
    if (!in) throw ConfigError("cannot read spec " + cfg.spec_path);
    try {
      doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError("spec " + cfg.spec_path + ": " + e.what());
    }
  }
  if (doc.is_null()) return std::nullopt;
  if (cfg.rungs) throw ConfigError("--rungs conflicts with a spec template");
  try {
    return spec_from_json(doc);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("spec: ") + e.what());
  }
}

// ---- ed ----

Table ed_table(const RunConfig& cfg) {
  const auto tmpl = spec_template(cfg);
  const auto spins = tmpl && cfg.spins.empty() ? std::vector<SpinValue>{tmpl->spin} : spins_of(cfg, {"1/2"});
  const Boundary boundary = parse_boundary(cfg.boundary);
  const int rungs = cfg.rungs.value_or(4);
  const UniformCouplings base{cfg.J, cfg.Jp.value_or(0.0), cfg.J2.value_or(0.0)};

  std::vector<std::pair<SweepVariable, double>> fixed;
  for (const auto& item : cfg.fixed) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ConfigError("--fixed expects VAR=value, got '" + item + "'");
    try {
      const auto var = parse_sweep_variable(item.substr(0, eq));
      if (var == SweepVariable::JpOnDimerLine) throw InvalidInput("--fixed takes J, Jp or J2");
      fixed.emplace_back(var, parse_grid(item.substr(eq + 1), "--fixed").at(0));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  // builds lazily so an oversized spin fails its own points only
  auto make = [tmpl, boundary, rungs, base, fixed](SpinValue s) {
    LadderSpec spec = tmpl ? build_spec(tmpl->n_rungs, s, tmpl->couplings, tmpl->boundary)
                           : uniform_ladder(rungs, s, base, boundary);
    for (const auto& [var, v] : fixed) spec = with_coupling(spec, var, v);
    return spec;
  };
  const auto opts = ground_options(cfg);

  Table t;
  if (cfg.levels > 0) {
    if (!cfg.sweep.empty()) throw ConfigError("--levels and --sweep are exclusive");
    t.header = {"spin", "level", "energy", "degeneracy"};
    t.n_key = 1;
    const int n = cfg.levels;
    for (SpinValue s : spins) {
      t.points.push_back({{s.str()}, [=] {
                            auto levels = low_levels(make(s), 2 * n + 2, opts);
                            Rows rows;
                            for (int i = 0; i < n && i < static_cast<int>(levels.size()); ++i)
                              rows.push_back({std::to_string(i), f(levels[i].energy), std::to_string(levels[i].degeneracy)});
                            return rows;
                          }});
    }
    return t;
  }
  if (cfg.sweep.empty()) {
    if (!cfg.line.empty()) throw ConfigError("--line needs --sweep Jp a:b:n");
    t.header = {"spin", "e_gs", "twice_sz", "residual", "converged"};
    t.n_key = 1;
    for (SpinValue s : spins) {
      t.points.push_back({{s.str()}, [=] {
                            auto gs = ground_state_full(make(s), opts);
                            return Rows{{f(gs.energy), std::to_string(gs.twice_sz), f(gs.residual), flag(gs.converged)}};
                          }});
    }
    return t;
  }
  SweepVariable var;
  try {
    var = parse_sweep_variable(cfg.sweep[0]);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (!cfg.line.empty()) {
    if (var != SweepVariable::Jp) throw ConfigError("--line J2=Jp/2 sweeps Jp");
    var = SweepVariable::JpOnDimerLine;
  }
  const auto grid = parse_grid(cfg.sweep[1], "--sweep");
  t.header = {"spin", cfg.sweep[0], "e_gs", "e_dim", "relative"};
  t.n_key = 2;
  for (SpinValue s : spins) {
    for (double x : grid) {
      t.points.push_back({{s.str(), f(x)}, [=] {
                            const auto p = relative_energy_curve(make(s), var, {x}, opts).at(0);
                            return Rows{{f(p.e_gs), f(p.e_dim), f(p.relative)}};
                          }});
    }
  }
  return t;
}

// ---- phase ----

Table phase_table(const RunConfig& cfg) {
  const SpinValue s = single_spin(cfg, "1/2");
  const auto jp = parse_grid(cfg.jp_grid.empty() ? "0:2:100" : cfg.jp_grid, "--jp");
  const auto j2 = parse_grid(cfg.j2_grid.empty() ? "0:1.2:100" : cfg.j2_grid, "--j2");
  const double J = cfg.J;
  Table t;
  t.header = {"jp_over_j", "j2_over_j", "label", "energy_per_rung", "theta", "phi"};
  t.n_key = 2;
  for (double x : jp) {
    for (double y : j2) {
      t.points.push_back({{f(x), f(y)}, [=] {
                            const auto p = classical_phase({J, x * J, y * J}, s);
                            return Rows{{to_string(p.label), f(p.energy_per_rung), f(p.angles.theta), f(p.angles.phi)}};
                          }});
    }
  }
  return t;
}

// ---- rpa ----

Table rpa_table(const RunConfig& cfg) {
  if (cfg.dispersion && cfg.spiral) throw ConfigError("--dispersion and --spiral are exclusive");
  Table t;
  if (cfg.dispersion) {
    const int n = cfg.rungs.value_or(64);
    const double gamma = cfg.gamma, J = cfg.J;
    t.header = {"k_index", "k_radians", "omega", "zero_mode_flag"};
    t.n_key = 0;
    t.points.push_back({{}, [=] {
                          const auto sp = dimer_rpa_dispersion(gamma, n, J);
                          Rows rows;
                          for (std::size_t i = 0; i < sp.momenta.size(); ++i)
                            rows.push_back({std::to_string(i), f(sp.momenta[i]), f(sp.omega_minus[i]), flag(sp.zero_mode[i])});
                          return rows;
                        }});
    return t;
  }
  if (cfg.spiral) {
    if (!cfg.Jp || !cfg.J2) throw ConfigError("--spiral needs --Jp and --J2");
    const SpinValue s = single_spin(cfg, "1/2");
    const UniformCouplings c{cfg.J, *cfg.Jp, *cfg.J2};
    const int nk = cfg.nk.value_or(64);
    t.header = {"k_index", "k_radians", "omega_minus", "omega_plus", "zero_mode_flag"};
    t.n_key = 0;
    t.points.push_back({{}, [=] {
                          const auto a = classical_phase(c, s).angles;
                          std::vector<double> ks;
                          for (int n = 0; n < nk; ++n) ks.push_back(2 * std::numbers::pi * n / nk);
                          // the second Goldstone momentum: printed in [0, 2 pi), evaluated at theta itself
                          double kt = std::fmod(a.theta, 2 * std::numbers::pi);
                          if (kt < 0) kt += 2 * std::numbers::pi;
                          std::vector<double> eval = ks;
                          auto hit = std::find_if(ks.begin(), ks.end(), [&](double k) { return std::abs(k - kt) < 1e-12; });
                          if (hit != ks.end()) {
                            eval[hit - ks.begin()] = a.theta;
                          } else {
                            const auto pos = std::upper_bound(ks.begin(), ks.end(), kt) - ks.begin();
                            ks.insert(ks.begin() + pos, kt);
                            eval.insert(eval.begin() + pos, a.theta);
                          }
                          const auto sp = spiral_rpa_spectrum(a, c, s, eval);
                          Rows rows;
                          for (std::size_t i = 0; i < ks.size(); ++i)
                            rows.push_back({std::to_string(i), f(ks[i]), f(sp.omega_minus[i]), f(sp.omega_plus[i]),
                                            flag(sp.zero_mode[i])});
                          return rows;
                        }});
    return t;
  }
  if (cfg.sweep.empty() || cfg.sweep[0] != "J2") throw ConfigError("rpa curves need --sweep J2 a:b:n");
  const auto grid = parse_grid(cfg.sweep[1], "--sweep");
  const double J = cfg.J, Jp = cfg.Jp.value_or(0.6);
  RPACurveOptions opts;
  opts.n_k = cfg.nk.value_or(4096);
  opts.ed_rungs = cfg.ed_rungs;
  t.header = {"spin", "J2", "gamma", "mf_single", "rpa_single", "mf_pair", "rpa_pair", "ed", "stable"};
  t.n_key = 2;
  for (SpinValue s : spins_of(cfg, {"1/2"})) {
    for (double j2 : grid) {
      t.points.push_back({{s.str(), f(j2)}, [=] {
                            const auto p = rpa_energy_curves(s, J, Jp, {j2}, opts).at(0);
                            return Rows{{f(p.gamma), f(p.mf_single), f(p.rpa_single), f(p.mf_pair), f(p.rpa_pair), f(p.ed),
                                         flag(std::isfinite(p.rpa_single))}};
                          }});
    }
  }
  return t;
}

// ---- perturb ----

Table perturb_table(const RunConfig& cfg) {
  const auto opts = ground_options(cfg);
  const int rungs = cfg.rungs.value_or(6);
  const bool with_ed = cfg.with_ed;
  Table t;
  if (cfg.sectors) {
    const SpinValue s = single_spin(cfg, "1/2");
    std::string grid_text = cfg.jp_grid;
    if (grid_text.empty() && cfg.Jp) grid_text = format_double(*cfg.Jp / cfg.J);
    if (grid_text.empty()) throw ConfigError("--sectors needs --jp");
    t.header = {"jp_over_j",      "dE_one_exc",    "dE_two_exc_j1",   "dE_two_exc_j2", "dE_two_exc_far",
                "dE_resum_pair",  "dE_resum_single", "gap_perturbative", "gap_ed"};
    t.n_key = 1;
    for (double x : parse_grid(grid_text, "--jp")) {
      t.points.push_back({{f(x)}, [=] {
                            const auto g = gap_estimate(s, x);
                            const double ed = with_ed ? gap_vs_ed(s, {x}, rungs, opts).at(0).gap_ed : kNaN;
                            return Rows{{f(g.one_exc), f(g.two_exc_j1), f(g.two_exc_j2), f(g.two_exc_far), f(g.resum_pair),
                                         f(g.resum_single), f(g.gap), f(ed)}};
                          }});
    }
    return t;
  }
  t.header = {"spin", "jp_critical", "physical", "jp_departure_ed", "departure_lower", "departure_upper"};
  t.n_key = 1;
  for (SpinValue s : spins_of(cfg, {"1/2", "1", "3/2", "2", "5/2", "3"})) {
    t.points.push_back({{s.str()}, [=] {
                          const auto c = critical_coupling(s);
                          double jp = kNaN, lo = kNaN, hi = kNaN;
                          if (with_ed) {
                            const auto d = dimer_departure_point(s, rungs, 0.05, 2.0, 0.05, 1e-3, 1e-8, opts);
                            jp = d.jp.value_or(kNaN);
                            lo = d.lower_bracket;
                            hi = d.upper_bracket;
                          }
                          return Rows{{f(c.value), flag(c.physical), f(jp), f(lo), f(hi)}};
                        }});
  }
  return t;
}

// ---- fidelity ----

Table fidelity_table(const RunConfig& cfg) {
  std::vector<FidelityReference> refs{FidelityReference::singlet};
  for (const auto& r : cfg.references)
    if (r == "srmf") refs.push_back(FidelityReference::srmf);
  const auto opts = ground_options(cfg);
  const int rungs = cfg.rungs.value_or(4);
  const double J = cfg.J;
  const Boundary boundary = parse_boundary(cfg.boundary);
  std::vector<std::pair<double, double>> couplings;
  if (!cfg.line.empty()) {
    for (double x : parse_grid(cfg.jp_grid.empty() ? "0.05:1.5:30" : cfg.jp_grid, "--jp")) couplings.emplace_back(x, x / 2);
  } else {
    const auto jp = parse_grid(cfg.jp_grid.empty() ? "0:2:11" : cfg.jp_grid, "--jp");
    const auto j2 = parse_grid(cfg.j2_grid.empty() ? "0:1.2:7" : cfg.j2_grid, "--j2");
    for (double x : jp)
      for (double y : j2) couplings.emplace_back(x, y);
  }
  Table t;
  t.header = {"spin", "jp_over_j", "j2_over_j", "energy", "f_singlet", "f_srmf"};
  t.n_key = 3;
  for (SpinValue s : spins_of(cfg, {"1/2"})) {
    for (auto [x, y] : couplings) {
      t.points.push_back({{s.str(), f(x), f(y)}, [=] {
                            const auto spec = uniform_ladder(rungs, s, {J, x * J, y * J}, boundary);
                            const auto p = fidelity_landscape({spec}, refs, opts).at(0);
                            return Rows{{f(p.energy), f(p.f_singlet), f(p.f_srmf)}};
                          }});
    }
  }
  return t;
}

// ---- output ----

std::string key_of(const Row& fields, std::size_t n) {
  std::string k;
  for (std::size_t i = 0; i < n; ++i) k += fields[i] + '\x1f';
  return k;
}

// Rows of an earlier run grouped by key; a trailing line without newline is dropped.
std::map<std::string, std::string> read_existing(const std::string& path, const Table& t) {
  std::map<std::string, std::string> kept;
  std::ifstream in(path, std::ios::binary);
  if (!in) return kept;
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  if (text.empty()) return kept;
  if (text.back() != '\n') text.erase(text.rfind('\n') == std::string::npos ? 0 : text.rfind('\n') + 1);
  std::istringstream lines(text);
  std::string line;
  if (!std::getline(lines, line)) return kept;
  if (line != csv_join(t.header)) throw ConfigError("--resume: header of " + path + " does not match this run");
  while (std::getline(lines, line)) {
    const auto fields = split(line, ',');
    if (fields.size() != t.header.size()) continue;
    kept[key_of(fields, t.n_key)] += line + '\n';
  }
  return kept;
}

}  // namespace

Table build_table(const RunConfig& cfg) {
  try {
    if (cfg.command == "ed") return ed_table(cfg);
    if (cfg.command == "phase") return phase_table(cfg);
    if (cfg.command == "rpa") return rpa_table(cfg);
    if (cfg.command == "perturb") return perturb_table(cfg);
    if (cfg.command == "fidelity") return fidelity_table(cfg);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  throw ConfigError("unknown command " + cfg.command);
}

int run_table(const Table& t, const RunConfig& cfg) {
  std::map<std::string, std::string> kept;
  if (cfg.resume) {
    if (cfg.out.empty()) throw ConfigError("--resume needs --out");
    kept = read_existing(cfg.out, t);
  }
  std::ofstream file;
  if (!cfg.out.empty()) {
    file.open(cfg.out, std::ios::binary | std::ios::trunc);
    if (!file) throw ConfigError("cannot write " + cfg.out);
  }
  std::ostream& out = cfg.out.empty() ? std::cout : file;
  out << csv_join(t.header) << '\n';

  const std::size_t n = t.points.size();
  std::vector<std::string> keys(n);
  std::vector<std::size_t> todo;
  for (std::size_t i = 0; i < n; ++i) {
    keys[i] = key_of(t.points[i].key, t.n_key);
    if (!kept.count(keys[i])) todo.push_back(i);
  }

  std::vector<std::string> blocks(n);
  std::vector<char> state(n, 0);  // 0 pending, 1 done, 2 failed
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};
  const int workers = std::max(1, std::min<int>(cfg.jobs, static_cast<int>(todo.size())));
  auto work = [&] {
#ifdef _OPENMP
    omp_set_num_threads(std::max(1, static_cast<int>(std::thread::hardware_concurrency()) / workers));
#endif
    for (std::size_t j; (j = next.fetch_add(1)) < todo.size();) {
      const std::size_t i = todo[j];
      std::string block;
      char st = 1;
      try {
        for (const auto& row : t.points[i].run()) {
          Row full = t.points[i].key;
          full.insert(full.end(), row.begin(), row.end());
          block += csv_join(full) + '\n';
        }
      } catch (const std::exception& e) {
        st = 2;
        std::string where;
        for (std::size_t k = 0; k < t.header.size() && k < t.points[i].key.size(); ++k)
          where += (k ? " " : "") + t.header[k] + "=" + t.points[i].key[k];
        std::lock_guard<std::mutex> lock(mu);
        std::cerr << "zigzag: point " << (where.empty() ? "-" : where) << " failed: " << e.what() << '\n';
      }
      std::lock_guard<std::mutex> lock(mu);
      blocks[i] = std::move(block);
      state[i] = st;
      cv.notify_all();
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < workers && !todo.empty(); ++w) pool.emplace_back(work);

  int failures = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (auto it = kept.find(keys[i]); it != kept.end()) {
      out << it->second;
    } else {
      std::unique_lock<std::mutex> lock(mu);
      cv.wait(lock, [&] { return state[i] != 0; });
      if (state[i] == 2) ++failures;
      out << blocks[i];
      blocks[i].clear();
    }
    out.flush();
  }
  for (auto& th : pool) th.join();
  if (!out) throw ConfigError("write to " + (cfg.out.empty() ? std::string("stdout") : cfg.out) + " failed");
  return failures ? 2 : 0;
}

}  // namespace zigzag::cli
