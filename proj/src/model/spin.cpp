#include "zigzag/model/spin.hpp"

#include <cmath>
#include <complex>
#include <string>

#include "zigzag/common/error.hpp"

namespace zigzag {

SpinValue SpinValue::checked(int twice_s) {
  if (twice_s < 1) throw InvalidInput("spin must be at least 1/2");
  return SpinValue{twice_s};
}

SpinValue SpinValue::parse(std::string_view text) {
  std::string t(text);
  try {
    auto slash = t.find('/');
    if (slash != std::string::npos) {
      std::size_t p1 = 0, p2 = 0;
      int num = std::stoi(t.substr(0, slash), &p1);
      int den = std::stoi(t.substr(slash + 1), &p2);
      if (p1 != slash || p2 != t.size() - slash - 1) throw std::invalid_argument("");
      if (den == 2) return checked(num);
      if (den == 1) return checked(2 * num);
      throw std::invalid_argument("");
    }
    std::size_t pos = 0;
    double v = std::stod(t, &pos);
    if (pos != t.size()) throw std::invalid_argument("");
    double twice = 2.0 * v;
    if (std::abs(twice - std::round(twice)) > 1e-12) throw std::invalid_argument("");
    return checked(static_cast<int>(std::lround(twice)));
  } catch (const InvalidInput&) {
    throw;
  } catch (const std::exception&) {
    throw InvalidInput("cannot parse spin value '" + t + "'");
  }
}

std::string SpinValue::str() const {
  if (twice_s % 2 == 0) return std::to_string(twice_s / 2);
  return std::to_string(twice_s) + "/2";
}

// S(S+1) - m(m+1) = [2S(2S+2) - 2m(2m+2)] / 4 with 2m = 2d - 2S.
double raise_element(SpinValue spin, int digit) {
  if (digit < 0 || digit >= spin.twice_s) return 0.0;
  long ts = spin.twice_s, tm = 2L * digit - ts;
  long four_x = ts * (ts + 2) - tm * (tm + 2);
  return 0.5 * std::sqrt(static_cast<double>(four_x));
}

double lower_element(SpinValue spin, int digit) {
  if (digit <= 0 || digit > spin.twice_s) return 0.0;
  long ts = spin.twice_s, tm = 2L * digit - ts;
  long four_x = ts * (ts + 2) - tm * (tm - 2);
  return 0.5 * std::sqrt(static_cast<double>(four_x));
}

LocalSpinMatrices local_spin_matrices(SpinValue spin) {
  const int d = spin.local_dim();
  LocalSpinMatrices ops;
  ops.sp = Eigen::MatrixXcd::Zero(d, d);
  ops.sm = Eigen::MatrixXcd::Zero(d, d);
  ops.sz = Eigen::MatrixXcd::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    ops.sz(k, k) = m_of_digit(spin, k);
    if (k + 1 < d) ops.sp(k + 1, k) = raise_element(spin, k);
    if (k > 0) ops.sm(k - 1, k) = lower_element(spin, k);
  }
  const std::complex<double> half_i(0.0, 0.5);
  ops.sx = 0.5 * (ops.sp + ops.sm);
  ops.sy = -half_i * (ops.sp - ops.sm);
  return ops;
}

// exp(-i az Sz) exp(-i polar Sy) |S,S>, using d^S_{m,S} = sqrt(C(2S,S+m)) c^{S+m} s^{S-m}.
Eigen::VectorXcd coherent_state(SpinValue spin, double polar, double azimuth) {
  const int d = spin.local_dim();
  const double c = std::cos(0.5 * polar), s = std::sin(0.5 * polar);
  Eigen::VectorXcd v(d);
  double binom = 1.0;  // C(2S, k), k = digit
  for (int k = 0; k < d; ++k) {
    if (k > 0) binom = binom * (spin.twice_s - k + 1) / k;
    double amp = std::sqrt(binom) * std::pow(c, k) * std::pow(s, spin.twice_s - k);
    v(k) = std::polar(amp, -azimuth * m_of_digit(spin, k));
  }
  return v;
}

}  // namespace zigzag
