#include "zigzag/meanfield/general_s.hpp"

#include <cmath>
#include <algorithm>
#include <numbers>
#include <tuple>
#include <utility>

#include "zigzag/common/error.hpp"
#include "zigzag/meanfield/classical.hpp"

namespace zigzag {

using std::numbers::pi;

double general_s_family_energy(double theta, double phi, double zeta, double tau, SpinValue spin,
                               const UniformCouplings& c) {
  const double ed = -c.J * spin.casimir();
  const double esep = spiral_energy({theta, phi}, c, spin);
  const double a = std::pow(std::abs(std::sin(0.5 * phi)), spin.twice_s) / std::sqrt(spin.twice_s + 1.0);
  const double n2 = 1.0 - std::sin(zeta) * std::cos(tau) * a;
  const double ch = std::cos(0.5 * zeta), sh = std::sin(0.5 * zeta);
  return (ed * (ch * ch + n2 - 1.0) + sh * sh * esep) / n2;
}

namespace {

// Minimum of f on [lo, hi]: uniform scan, then golden section around the best sample.
template <class F>
std::pair<double, double> scan_golden(F f, double lo, double hi, int n) {
  const double h = (hi - lo) / n;
  double bx = lo, bf = f(lo);
  for (int k = 1; k <= n; ++k) {
    const double x = lo + k * h, v = f(x);
    if (v < bf) bx = x, bf = v;
  }
  double a = std::max(lo, bx - h), b = std::min(hi, bx + h);
  const double r = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = b - r * (b - a), x2 = a + r * (b - a), f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 100 && b - a > 1e-13; ++it) {
    if (f1 < f2) {
      b = x2, x2 = x1, f2 = f1, x1 = b - r * (b - a), f1 = f(x1);
    } else {
      a = x1, x1 = x2, f1 = f2, x2 = a + r * (b - a), f2 = f(x2);
    }
  }
  const double xm = 0.5 * (a + b), fm = f(xm);
  return fm < bf ? std::pair{xm, fm} : std::pair{bx, bf};
}

}  // namespace

FamilyMinimum general_s_family_minimum(SpinValue spin, const UniformCouplings& c) {
  // The energy grows with E_sep at fixed (phi, zeta), so theta is eliminated exactly:
  // min_theta [J' cos(theta - phi) + 2 J2 cos(theta)] = -sqrt(A^2 + B^2),
  // A = J' cos(phi) + 2 J2, B = J' sin(phi). The rest is a nested 1D search.
  auto best_theta = [&](double phi) {
    const double a = c.Jp * std::cos(phi) + 2.0 * c.J2, b = c.Jp * std::sin(phi);
    return (a == 0.0 && b == 0.0) ? 0.0 : std::atan2(-b, -a);
  };
  FamilyMinimum best;
  bool have = false;
  for (double tau : {0.0, pi}) {
    auto energy = [&](double phi, double zeta) {
      return general_s_family_energy(best_theta(phi), phi, zeta, tau, spin, c);
    };
    auto inner = [&](double phi) { return scan_golden([&](double z) { return energy(phi, z); }, 0.0, pi, 200).second; };
    auto [phi, e] = scan_golden(inner, 0.0, pi, 200);
    // the window below E_d can be narrower than the scan step; search near the classical optimum too
    const double pc = classical_phase(c, spin).angles.phi;
    const auto near = scan_golden(inner, std::max(0.0, pc - 0.05), std::min(pi, pc + 0.05), 100);
    if (near.second < e) std::tie(phi, e) = near;
    const double zeta = scan_golden([&](double z) { return energy(phi, z); }, 0.0, pi, 200).first;
    if (!have || e < best.energy) {
      best = {e, best_theta(phi), phi, zeta, tau};
      have = true;
    }
  }
  return best;
}

GeneralSTransition general_s_transition(SpinValue spin) {
  GeneralSTransition t;
  t.closed_form = 2.0 / spin.s();
  t.classical_crossover = std::sqrt(2.0 / spin.s());
  if (spin.twice_s < 4) return t;
  auto switched = [&](double x) {
    UniformCouplings c{1.0, x, 0.5 * x};
    const double ed = -spin.casimir();
    return general_s_family_minimum(spin, c).energy < ed - 1e-12 * std::abs(ed);
  };
  const int steps = 200;
  double lo = 0.0, hi = 0.0;
  bool found = false;
  for (int k = 1; k <= steps; ++k) {
    const double x = 2.0 * k / steps;
    if (switched(x)) {
      hi = x;
      lo = 2.0 * (k - 1) / steps;
      found = true;
      break;
    }
  }
  if (!found) return t;
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    (switched(mid) ? hi : lo) = mid;
  }
  t.numeric = 0.5 * (lo + hi);
  t.agrees_with_closed_form = std::abs(*t.numeric - t.closed_form) <= 1e-6;
  return t;
}

double dimer_spiral_pair_fidelity(SpinValue spin, double phi_tilde, PairKind kind) {
  const double d = spin.twice_s + 1.0;
  if (kind == PairKind::off_rung) return 1.0 / d;
  return std::pow(std::abs(std::sin(0.5 * phi_tilde)), spin.twice_s) / d;
}

double singlet_coherent_overlap(SpinValue spin, double phi) {
  return std::pow(std::abs(std::sin(0.5 * phi)), spin.twice_s) / std::sqrt(spin.twice_s + 1.0);
}

}  // namespace zigzag
