#include "zigzag/rpa/spiral.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "zigzag/common/error.hpp"
#include "zigzag/meanfield/classical.hpp"

namespace zigzag {

using cld = std::complex<long double>;

Eigen::Matrix4cd RPABlockMatrix::assembled() const {
  Eigen::Matrix4cd h;
  const Eigen::Matrix2cd a = delta_plus + lambda * Eigen::Matrix2cd::Identity();
  h << a, delta_minus, delta_minus, a;
  return h;
}

double spiral_lambda(const SpiralAngles& a, const UniformCouplings& c, SpinValue spin) {
  return -spin.s() * (c.J * std::cos(a.phi) + c.Jp * std::cos(a.theta - a.phi) + 2.0 * c.J2 * std::cos(a.theta));
}

namespace {

double cos2(double x) {
  const double c = std::cos(0.5 * x);
  return c * c;
}
double sin2(double x) {
  const double s = std::sin(0.5 * x);
  return s * s;
}

}  // namespace

RPABlockMatrix spiral_rpa_blocks(double k, const SpiralAngles& a, const UniformCouplings& c, SpinValue spin) {
  const double s = spin.s();
  const std::complex<double> ek = std::polar(1.0, -k);
  RPABlockMatrix b;
  b.k = k;
  b.lambda = spiral_lambda(a, c, spin);
  const double dp = 2.0 * c.J2 * std::cos(k) * cos2(a.theta);
  const std::complex<double> op = c.J * cos2(a.phi) + c.Jp * ek * cos2(a.theta - a.phi);
  b.delta_plus << dp, op, std::conj(op), dp;
  b.delta_plus *= s;
  const double dm = 2.0 * c.J2 * std::cos(k) * sin2(a.theta);
  const std::complex<double> om = c.J * sin2(a.phi) + c.Jp * ek * sin2(a.theta - a.phi);
  b.delta_minus << dm, om, std::conj(om), dm;
  b.delta_minus *= -s;
  return b;
}

namespace {

using ld = long double;

// P = A + B and Q = A - B are [[p, op], [conj(op), p]] and [[q, oq], [conj(oq), q]];
// det H = det P det Q and tr((M H)^2) = 2 tr(P Q).
BranchPair branches(ld p, cld op, ld q, cld oq, ld det_p, ld det_q) {
  const ld det = det_p * det_q;
  ld t = 2.0L * (2.0L * p * q + 2.0L * (op * std::conj(oq)).real());
  // roundoff scale: T cancels to zero where both branches are soft
  const ld mag = std::max<ld>(4.0L * (std::abs(p * q) + std::abs(op) * std::abs(oq)), std::numeric_limits<ld>::min());
  if (t < 0.0L && t > -1e-14L * mag) t = 0.0L;
  BranchPair out;
  out.det = static_cast<double>(det);
  ld disc = t * t - 16.0L * det;
  if (disc < 0.0L && disc > -1e-14L * mag * mag) disc = 0.0L;
  if (disc < 0.0L || t < 0.0L) {
    out.stable = false;
    out.omega_minus = out.omega_plus = std::numeric_limits<double>::quiet_NaN();
    return out;
  }
  const ld wp2 = (t + std::sqrt(disc)) / 4.0L;
  // lower root from the product: stable where the difference form cancels
  ld wm2 = wp2 > 0.0L ? det / wp2 : 0.0L;
  if (wm2 < 0.0L) {
    if (wm2 > -1e-14L * wp2) {
      wm2 = 0.0L;
    } else {
      out.stable = false;
      out.omega_minus = std::numeric_limits<double>::quiet_NaN();
      out.omega_plus = static_cast<double>(std::sqrt(wp2));
      return out;
    }
  }
  out.omega_plus = static_cast<double>(std::sqrt(wp2));
  out.omega_minus = static_cast<double>(std::sqrt(wm2));
  return out;
}

}  // namespace

BranchPair spiral_frequencies(const RPABlockMatrix& b) {
  auto entry = [](const Eigen::Matrix2cd& m, int i, int j) { return cld(m(i, j).real(), m(i, j).imag()); };
  const ld lam = b.lambda;
  const ld a0 = lam + entry(b.delta_plus, 0, 0).real(), b0 = entry(b.delta_minus, 0, 0).real();
  const cld a1 = entry(b.delta_plus, 0, 1), b1 = entry(b.delta_minus, 0, 1);
  const ld p = a0 + b0, q = a0 - b0;
  const cld op = a1 + b1, oq = a1 - b1;
  return branches(p, op, q, oq, (p - std::abs(op)) * (p + std::abs(op)), (q - std::abs(oq)) * (q + std::abs(oq)));
}

BranchPair spiral_frequencies(double k, const SpiralAngles& a, const UniformCouplings& c, SpinValue spin) {
  const ld s = spin.s(), J = c.J, Jp = c.Jp, J2 = c.J2, th = a.theta, ph = a.phi, kk = k;
  const ld u = J * std::cos(ph) + Jp * std::cos(th - ph);
  const ld v = J * std::sin(ph) - Jp * std::sin(th - ph);
  const ld c1 = 2.0L * std::sin(0.5L * kk) * std::sin(0.5L * kk);           // 1 - cos k
  const ld dk = 2.0L * std::sin(0.5L * (th + kk)) * std::sin(0.5L * (th - kk));  // cos k - cos theta
  const cld ek = std::polar(1.0L, -kk);
  // P = A + B: p = lambda + 2 J2 S cos k cos theta, op = S (J cos phi + J' e^{-ik} cos(theta - phi))
  const ld p = -s * (u + 2.0L * J2 * std::cos(th) * c1);
  const cld op = s * (J * std::cos(ph) + Jp * ek * std::cos(th - ph));
  // Q = A - B: q = lambda + 2 J2 S cos k, oq = S (J + J' e^{-ik})
  const ld q = -s * (u - 2.0L * J2 * dk);
  const cld oq = s * (J + Jp * ek);
  // p^2 - |op|^2 and q^2 - |oq|^2 in factored form, exact zeros at k = 0 and k = theta
  const ld det_p = s * s * c1 * (4.0L * J2 * u * std::cos(th) + 4.0L * J2 * J2 * std::cos(th) * std::cos(th) * c1 +
                                 2.0L * J * Jp * std::cos(ph) * std::cos(th - ph));
  const ld det_q = -s * s * (v * v + dk * (2.0L * J * Jp + 4.0L * J2 * u - 4.0L * J2 * J2 * dk));
  return branches(p, op, q, oq, det_p, det_q);
}

BranchPair symplectic_frequencies_numeric(const Eigen::Matrix4cd& h) {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity();
  m(2, 2) = m(3, 3) = -1.0;
  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(m * h, false);
  std::vector<double> re;
  double max_im = 0.0, scale = 0.0;
  for (int i = 0; i < 4; ++i) {
    re.push_back(es.eigenvalues()(i).real());
    max_im = std::max(max_im, std::abs(es.eigenvalues()(i).imag()));
    scale = std::max(scale, std::abs(es.eigenvalues()(i)));
  }
  std::sort(re.begin(), re.end(), [](double x, double y) { return std::abs(x) < std::abs(y); });
  BranchPair out;
  out.det = h.determinant().real();
  // eigenvalues come in +- pairs; take magnitudes of each pair
  out.omega_minus = 0.5 * (std::abs(re[0]) + std::abs(re[1]));
  out.omega_plus = 0.5 * (std::abs(re[2]) + std::abs(re[3]));
  if (max_im > 1e-10 * std::max(1.0, scale)) {
    out.stable = false;
    out.omega_minus = std::numeric_limits<double>::quiet_NaN();
  }
  return out;
}

RPASpectrum spiral_rpa_spectrum(const SpiralAngles& a, const UniformCouplings& c, SpinValue spin,
                                const std::vector<double>& momenta) {
  RPASpectrum sp;
  sp.momenta = momenta;
  for (double k : momenta) {
    const auto b = spiral_rpa_blocks(k, a, c, spin);
    const auto w = spiral_frequencies(k, a, c, spin);
    const double scale = b.assembled().cwiseAbs().maxCoeff();
    sp.omega_minus.push_back(w.omega_minus);
    sp.omega_plus.push_back(w.omega_plus);
    sp.stable_at.push_back(w.stable);
    sp.zero_mode.push_back(std::abs(w.det) < 1e-10 * std::pow(scale, 4));
    sp.stable = sp.stable && w.stable;
  }
  return sp;
}

RPASpectrum spiral_rpa_spectrum(const SpiralAngles& a, const UniformCouplings& c, SpinValue spin, int n_k) {
  if (n_k < 1) throw InvalidInput("n_k must be positive");
  std::vector<double> ks(static_cast<std::size_t>(n_k));
  for (int n = 0; n < n_k; ++n) ks[n] = 2.0 * std::numbers::pi * n / n_k;
  return spiral_rpa_spectrum(a, c, spin, ks);
}

double spiral_rpa_energy(const SpiralAngles& a, const UniformCouplings& c, SpinValue spin, int n_k) {
  const auto sp = spiral_rpa_spectrum(a, c, spin, n_k);
  if (!sp.stable) return std::numeric_limits<double>::quiet_NaN();
  double zp = 0.0;
  for (std::size_t i = 0; i < sp.momenta.size(); ++i) zp += 0.5 * (sp.omega_minus[i] + sp.omega_plus[i]);
  return spiral_energy(a, c, spin) - spiral_lambda(a, c, spin) + zp / n_k;
}

}  // namespace zigzag
