#include "zigzag/meanfield/pair.hpp"

#include <cmath>
#include <numbers>

#include "zigzag/meanfield/minimize.hpp"
#include "zigzag/model/dimer.hpp"

namespace zigzag {

using std::numbers::pi;

double pair_mf_energy(const PairMFParams& p, const UniformCouplings& c, int n_rungs) {
  const double g = gamma_of(c, SpinValue{1}).gamma;
  const double sz = std::sin(p.zeta);
  const double v = std::cos(p.phi) + std::cos(p.zeta) * (std::cos(p.phi) - 1.0) +
                   sz * sz *
                       (g * std::cos(p.theta) +
                        2.0 * c.Jp / c.J * std::cos(p.theta - 0.5 * p.phi) * std::cos(0.5 * p.phi));
  return 0.25 * c.J * n_rungs * v;
}

UniformCouplings couplings_for_gamma(double gamma, double jp_over_j) {
  // gamma = (2 J2 - J') S(S+1)/(3/4) with S(S+1) = 3/4
  return {1.0, jp_over_j, 0.5 * (gamma + jp_over_j)};
}

namespace {

double wrap(double x) {  // into (-pi, pi]
  x = std::remainder(x, 2.0 * pi);
  if (x <= -pi) x += 2.0 * pi;
  return x;
}

PairMFParams canonical(PairMFParams p) {
  p.zeta = std::abs(wrap(p.zeta));
  p.phi = wrap(p.phi);
  p.theta = wrap(p.theta);
  if (p.phi < 0.0) {  // energy is invariant under (phi, theta) -> (-phi, -theta)
    p.phi = -p.phi;
    p.theta = wrap(-p.theta);
  }
  return p;
}

}  // namespace

PairMFResult pair_mf_minimize(const UniformCouplings& c) {
  PairMFResult r;
  r.gamma = gamma_of(c, SpinValue{1}).gamma;
  const double ag = std::abs(r.gamma);
  if (ag <= 1.0) {
    r.closed_params = {0.0, pi, 0.0, 0.0};
    r.label = PhaseLabel::Dimer;
  } else {
    r.closed_params = {std::acos(1.0 / ag), pi, 0.0, r.gamma > 0.0 ? pi : 0.0};
    r.label = PhaseLabel::ColinearBroken;
  }
  r.closed_energy = ag <= 1.0 ? -0.75 * c.J : -0.25 * c.J * (1.0 / ag + 1.0 + ag);

  Objective f = [&](const std::vector<double>& x) { return pair_mf_energy({x[0], x[1], 0.0, x[2]}, c); };
  std::vector<std::vector<double>> starts;
  for (double z : {pi / 8, 3 * pi / 8})
    for (double ph : {pi / 4, 3 * pi / 4})
      for (double th : {-3 * pi / 4, -pi / 4, pi / 4, 3 * pi / 4}) starts.push_back({z, ph, th});
  auto best = minimize_multistart(f, starts);
  r.params = canonical({best.x[0], best.x[1], 0.0, best.x[2]});
  r.energy = best.value;
  r.agree = std::abs(r.energy - r.closed_energy) <= 1e-8 * std::abs(c.J);
  return r;
}

}  // namespace zigzag
