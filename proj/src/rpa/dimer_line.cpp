#include "zigzag/rpa/dimer_line.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <numbers>

#include "zigzag/common/error.hpp"

namespace zigzag {

using std::numbers::pi;

RPASpectrum dimer_rpa_dispersion(double gamma, int n_rungs, double J) {
  if (n_rungs < 1) throw InvalidInput("n_rungs must be positive");
  RPASpectrum sp;
  sp.degeneracy = 3;
  for (int n = 0; n < n_rungs; ++n) {
    const double k = 2.0 * pi * n / n_rungs;
    // cos evaluated on the reflected index keeps omega_k == omega_{N-k} bit for bit
    const int m = std::min(n, n_rungs - n);
    const double arg = 1.0 - gamma * std::cos(2.0 * pi * m / n_rungs);
    sp.momenta.push_back(k);
    const bool ok = arg >= -1e-15;
    sp.omega_minus.push_back(ok ? J * std::sqrt(std::max(arg, 0.0)) : std::numeric_limits<double>::quiet_NaN());
    sp.stable_at.push_back(ok);
    sp.zero_mode.push_back(ok && std::abs(arg) < 1e-12);
    sp.stable = sp.stable && ok;
  }
  return sp;
}

double elliptic_e(double x) {
  if (x > 1.0) throw InvalidInput("elliptic_e: argument above 1 makes the integrand complex");
  auto f = [x](double u) {
    const double s = std::sin(u);
    return std::sqrt(std::max(0.0, 1.0 - x * s * s));
  };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, pi / 2, 20, 1e-15);
}

namespace {

// (1/n) sum_k sqrt(1 - g cos k); the integrand is smooth and periodic for |g| < 1,
// so the trapezoid rule converges geometrically.
double bz_average(double gamma, int n_nodes) {
  double acc = 0.0;
  for (int n = 0; n < n_nodes; ++n) acc += std::sqrt(1.0 - gamma * std::cos(2.0 * pi * n / n_nodes));
  return acc / n_nodes;
}

}  // namespace

EnergyCorrection dimer_rpa_energy_correction(double gamma, int n_nodes) {
  if (!(std::abs(gamma) < 1.0)) throw StabilityError("dimer RPA is unstable for |gamma| >= 1");
  if (n_nodes < 16) throw InvalidInput("too few quadrature nodes");
  EnergyCorrection out;
  if (gamma == 0.0) {
    out.agree = true;
    return out;
  }
  // both arguments are below 1 for 0 < |gamma| < 1: 2g/(1+g) < 1 and -2g/(1-g) < 1
  const double x1 = 2.0 / (1.0 + 1.0 / gamma), x2 = 2.0 / (1.0 - 1.0 / gamma);
  const double bracket = (std::sqrt(1.0 + gamma) * elliptic_e(x1) + std::sqrt(1.0 - gamma) * elliptic_e(x2)) / pi;
  out.closed_form = 2.0 * (1.0 - bracket);
  out.quadrature = 2.0 * (1.0 - bz_average(gamma, n_nodes));
  out.agree = std::abs(out.closed_form - out.quadrature) <= 1e-6;
  return out;
}

double dimer_rpa_energy_shift_per_rung(double gamma, double J, int n_nodes) {
  if (!(std::abs(gamma) <= 1.0)) throw StabilityError("dimer RPA is unstable for |gamma| > 1");
  return 1.5 * J * (bz_average(gamma, n_nodes) - 1.0);
}

bool dimer_rpa_stability(double gamma) { return std::abs(gamma) < 1.0; }

double dimer_region_half_width(SpinValue spin, double J) { return 0.75 * J / spin.casimir(); }

}  // namespace zigzag
