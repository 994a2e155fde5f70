#include "zigzag/model/dimer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "zigzag/common/error.hpp"

namespace zigzag {

StateVector singlet_state(SpinValue spin) {
  const int d = spin.local_dim();
  StateVector v = StateVector::zero(2, d);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  // digit k on the upper site has m = k - S; the lower site carries -m, i.e. digit 2S - k.
  for (int k = 0; k < d; ++k) {
    const int lower = spin.twice_s - k;
    v.amplitudes(lower + d * k) = (k % 2 == 0 ? 1.0 : -1.0) * norm;
  }
  v.twice_sz = 0;
  return v;
}

StateVector dimer_state(const LadderSpec& spec) {
  const auto d = static_cast<Eigen::Index>(spec.local_dim());
  const Eigen::VectorXcd pair = singlet_state(spec.spin).amplitudes;
  Eigen::VectorXcd acc = pair;
  for (int r = 1; r < spec.n_rungs; ++r) {
    Eigen::VectorXcd next(acc.size() * d * d);
    for (Eigen::Index hi = 0; hi < d * d; ++hi) next.segment(hi * acc.size(), acc.size()) = pair(hi) * acc;
    acc = std::move(next);
  }
  StateVector v;
  v.n_sites = spec.n_sites();
  v.local_dim = spec.local_dim();
  v.amplitudes = std::move(acc);
  v.twice_sz = 0;
  return v;
}

std::vector<bool> check_dimer_constraint(const CouplingPattern& c, double tol) {
  std::vector<bool> ok(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) ok[i] = std::abs(c.Jp[i] - c.J2[i] - c.J2p[i]) <= tol;
  return ok;
}

DimerEnergy dimer_energy(const LadderSpec& spec, double tol) {
  double sum_j = 0.0;
  for (double j : spec.couplings.J) sum_j += j;
  auto ok = check_dimer_constraint(spec.couplings, tol);
  // the last rung's inter-rung bonds do not exist on an open ladder
  std::size_t active = spec.boundary == Boundary::open ? ok.size() - 1 : ok.size();
  bool all = std::all_of(ok.begin(), ok.begin() + static_cast<std::ptrdiff_t>(active), [](bool b) { return b; });
  return {-spec.spin.casimir() * sum_j, all};
}

namespace {

UniformCouplings require_uniform(const LadderSpec& spec, const char* what) {
  auto u = spec.uniform_couplings();
  if (!u) throw Unsupported(std::string(what) + " needs uniform couplings with J2 = J2'");
  return *u;
}

}  // namespace

bool sufficient_gs_condition(const LadderSpec& spec, double tol) {
  auto c = require_uniform(spec, "sufficient_gs_condition");
  if (std::abs(c.Jp - 2.0 * c.J2) > tol) return false;
  const double limit = spec.spin.twice_s == 1 ? c.J : c.J / (spec.spin.s() + 1.0);
  return c.Jp < limit;
}

double gs_energy_lower_bound(const LadderSpec& spec, double tol) {
  auto c = require_uniform(spec, "gs_energy_lower_bound");
  if (std::abs(c.Jp - 2.0 * c.J2) > tol) throw Unsupported("gs_energy_lower_bound needs J2 = J2' = J'/2");
  const double s = spec.spin.s(), dj = c.J - c.Jp;
  double best = std::numeric_limits<double>::infinity();
  for (int l = 0; l <= spec.spin.twice_s; ++l) {
    const double a = std::abs(s - l);
    const double v = 0.5 * c.Jp * a * (a + 1.0) + 0.5 * dj * l * (l + 1.0) - (c.J + 0.5 * c.Jp) * s * (s + 1.0);
    best = std::min(best, v);
  }
  return spec.n_rungs * best;
}

DimerlineParam gamma_of(const UniformCouplings& c, SpinValue spin) {
  if (c.J == 0.0) throw InvalidInput("gamma needs J != 0");
  return {(2.0 * c.J2 - c.Jp) / c.J * spin.casimir() / 0.75};
}

DimerlineParam gamma_of(const LadderSpec& spec) {
  return gamma_of(require_uniform(spec, "gamma_of"), spec.spin);
}

}  // namespace zigzag
