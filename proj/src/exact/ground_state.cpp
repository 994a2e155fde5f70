#include "zigzag/exact/ground_state.hpp"

#include <algorithm>
#include <cmath>

#include "zigzag/common/error.hpp"
#include "zigzag/model/dimer.hpp"

namespace zigzag {

SpectrumResult sector_levels(const LadderSpec& spec, int twice_sz, int n_levels, const GroundStateOptions& opts,
                             bool keep_states) {
  SectorBasis sector(spec, twice_sz);
  if (sector.dimension() <= opts.dense_threshold)
    return dense_spectrum(spec, sector, n_levels, keep_states, opts.lanczos.degeneracy_tol);
  LanczosOptions lo = opts.lanczos;
  lo.n_levels = n_levels;
  lo.keep_states = keep_states;
  return lanczos_ground(spec, sector, lo);
}

GroundState ground_state_full(const LadderSpec& spec, const GroundStateOptions& opts) {
  std::vector<int> sectors;
  if (opts.full_sweep) {
    sectors = available_sectors(spec);
  } else {
    const int max_tsz = spec.n_sites() * spec.spin.twice_s;
    sectors.push_back(0);
    if (max_tsz >= 2) sectors.push_back(2);
  }
  GroundState best;
  bool have = false;
  for (int t : sectors) {
    auto res = sector_levels(spec, t, 1, opts, true);
    // prefer the lower |Sz| on ties so the returned state is reproducible
    const double tie = 1e-12 * std::max(1.0, std::abs(res.energies[0]));
    if (!have || res.energies[0] < best.energy - tie) {
      best.energy = res.energies[0];
      best.state = std::move(res.states[0]);
      best.twice_sz = t;
      best.residual = res.residuals[0];
      best.converged = res.converged;
      have = true;
    }
  }
  return best;
}

std::vector<Level> low_levels(const LadderSpec& spec, int n_per_sector, const GroundStateOptions& opts) {
  std::vector<std::pair<double, int>> raw;
  auto zero = sector_levels(spec, 0, n_per_sector, opts, false);
  for (double e : zero.energies) raw.emplace_back(e, 1);
  // a level is only known completely if it lies below the last level found in each sector
  double cutoff = zero.energies.size() < SectorBasis(spec, 0).dimension() ? zero.energies.back() : INFINITY;
  if (spec.n_sites() * spec.spin.twice_s >= 2) {
    auto one = sector_levels(spec, 2, n_per_sector, opts, false);
    for (double e : one.energies) raw.emplace_back(e, 2);
    if (one.energies.size() < SectorBasis(spec, 2).dimension()) cutoff = std::min(cutoff, one.energies.back());
  }
  std::sort(raw.begin(), raw.end());
  std::vector<double> es;
  for (auto& p : raw) es.push_back(p.first);
  auto groups = cluster_levels(es, opts.lanczos.degeneracy_tol);
  const double tol = opts.lanczos.degeneracy_tol * std::max(1.0, std::abs(es.front()));
  std::vector<Level> levels;
  for (const auto& g : groups) {
    Level l;
    for (auto i : g) l.degeneracy += raw[i].second;
    l.energy = raw[g.front()].first;
    if (!levels.empty() && raw[g.back()].first >= cutoff - tol) break;
    levels.push_back(l);
  }
  return levels;
}

std::string to_string(SweepVariable v) {
  switch (v) {
    case SweepVariable::J: return "J";
    case SweepVariable::Jp: return "Jp";
    case SweepVariable::J2: return "J2";
    default: return "Jp_line";
  }
}

SweepVariable parse_sweep_variable(const std::string& t) {
  if (t == "J") return SweepVariable::J;
  if (t == "Jp") return SweepVariable::Jp;
  if (t == "J2") return SweepVariable::J2;
  if (t == "Jp_line") return SweepVariable::JpOnDimerLine;
  throw InvalidInput("unknown sweep variable '" + t + "'");
}

LadderSpec with_coupling(const LadderSpec& tmpl, SweepVariable var, double x) {
  auto u = tmpl.uniform_couplings();
  if (!u) throw Unsupported("sweeps need a uniform template with J2 = J2'");
  switch (var) {
    case SweepVariable::J: u->J = x; break;
    case SweepVariable::Jp: u->Jp = x; break;
    case SweepVariable::J2: u->J2 = x; break;
    case SweepVariable::JpOnDimerLine:
      u->Jp = x;
      u->J2 = 0.5 * x;
      break;
  }
  return uniform_ladder(tmpl.n_rungs, tmpl.spin, *u, tmpl.boundary);
}

std::vector<CurvePoint> relative_energy_curve(const LadderSpec& tmpl, SweepVariable var,
                                              const std::vector<double>& grid, const GroundStateOptions& opts) {
  std::vector<CurvePoint> out;
  out.reserve(grid.size());
  for (double x : grid) {
    LadderSpec spec = with_coupling(tmpl, var, x);
    CurvePoint p;
    p.x = x;
    p.e_dim = dimer_energy(spec).energy;
    GroundStateOptions o = opts;
    o.lanczos.keep_states = false;
    p.e_gs = ground_state_full(spec, o).energy;
    p.relative = p.e_gs / p.e_dim - 1.0;
    out.push_back(p);
  }
  return out;
}

DeparturePoint dimer_departure_point(SpinValue spin, int n_rungs, double jp_min, double jp_max, double step,
                                     double tol, double threshold, const GroundStateOptions& opts) {
  if (!(step > 0.0) || !(jp_max > jp_min)) throw InvalidInput("departure scan needs jp_max > jp_min and step > 0");
  auto departed = [&](double jp) {
    LadderSpec spec = uniform_ladder(n_rungs, spin, {1.0, jp, 0.5 * jp});
    const double ed = dimer_energy(spec).energy;
    GroundState gs = ground_state_full(spec, opts);
    return gs.energy / ed - 1.0 > threshold;
  };
  DeparturePoint dp;
  double lo = jp_min;
  if (departed(lo)) {
    dp.jp = lo;
    dp.lower_bracket = dp.upper_bracket = lo;
    return dp;
  }
  double hi = lo;
  bool found = false;
  while (hi < jp_max) {
    double next = std::min(jp_max, hi + step);
    if (departed(next)) {
      lo = hi;
      hi = next;
      found = true;
      break;
    }
    hi = next;
  }
  if (!found) {
    dp.lower_bracket = dp.upper_bracket = jp_max;
    return dp;
  }
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    (departed(mid) ? hi : lo) = mid;
  }
  dp.jp = 0.5 * (lo + hi);
  dp.lower_bracket = lo;
  dp.upper_bracket = hi;
  return dp;
}

}  // namespace zigzag
