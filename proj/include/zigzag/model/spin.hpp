#pragma once

#include <Eigen/Dense>
#include <string>
#include <string_view>

namespace zigzag {

// Spin length held as 2S so half-integers stay exact.
struct SpinValue {
  int twice_s = 1;

  constexpr double s() const { return 0.5 * twice_s; }
  constexpr int local_dim() const { return twice_s + 1; }
  constexpr double casimir() const { return s() * (s() + 1.0); }

  // Accepts "1/2", "3/2", "1", "2", "0.5", "1.5".
  static SpinValue parse(std::string_view text);
  static SpinValue checked(int twice_s);
  std::string str() const;

  friend constexpr bool operator==(SpinValue a, SpinValue b) { return a.twice_s == b.twice_s; }
};

// Local basis: digit d = m + S, so digit 0 is m = -S and digit 2S is m = +S.
// <d+1| S+ |d>, computed from integers: sqrt(S(S+1) - m(m+1)).
double raise_element(SpinValue spin, int digit);
// <d-1| S- |d>
double lower_element(SpinValue spin, int digit);
inline double m_of_digit(SpinValue spin, int digit) { return digit - spin.s(); }

struct LocalSpinMatrices {
  Eigen::MatrixXcd sx, sy, sz, sp, sm;
};
LocalSpinMatrices local_spin_matrices(SpinValue spin);

// Spin coherent state pointing along (sin(polar) cos(az), sin(polar) sin(az), cos(polar)).
Eigen::VectorXcd coherent_state(SpinValue spin, double polar, double azimuth = 0.0);

}  // namespace zigzag
