#pragma once

#include <Eigen/Dense>
#include <vector>

#include "zigzag/meanfield/angles.hpp"
#include "zigzag/model/ladder.hpp"

namespace zigzag {

// H_k = [[lambda + D+, D-], [D-, lambda + D+]] on (b_A(k), b_B(k), b_A(-k)^+, b_B(-k)^+).
struct RPABlockMatrix {
  double k = 0.0;
  double lambda = 0.0;
  Eigen::Matrix2cd delta_plus;
  Eigen::Matrix2cd delta_minus;

  Eigen::Matrix4cd assembled() const;
};

// Local mean-field energy per site, -S (J cos(phi) + J' cos(theta - phi) + 2 J2 cos(theta)).
// Equals S |...| at the minimizing angles.
double spiral_lambda(const SpiralAngles& a, const UniformCouplings& c, SpinValue spin);

RPABlockMatrix spiral_rpa_blocks(double k, const SpiralAngles& a, const UniformCouplings& c, SpinValue spin);

struct BranchPair {
  double omega_minus = 0.0;
  double omega_plus = 0.0;
  bool stable = true;
  double det = 0.0;  // det H_k
};

// omega^2 = (T +- sqrt(T^2 - 16 det H)) / 4 with T = tr((M H)^2), M = diag(1, 1, -1, -1).
// Evaluated in long double with det H = det(A + B) det(A - B).
BranchPair spiral_frequencies(const RPABlockMatrix& b);
// Same invariants built in long double from the angles, with det(A + B) and det(A - B)
// in factored form so the zero modes at k = 0 and k = theta come out exact.
BranchPair spiral_frequencies(double k, const SpiralAngles& a, const UniformCouplings& c, SpinValue spin);

// Positive eigenvalues of M H (oracle for the invariant formula); NaN marks complex pairs.
BranchPair symplectic_frequencies_numeric(const Eigen::Matrix4cd& h);

struct RPASpectrum {
  std::vector<double> momenta;
  std::vector<double> omega_minus;  // spiral: lower branch; dimer line: omega_k
  std::vector<double> omega_plus;   // spiral only
  std::vector<bool> zero_mode;
  std::vector<bool> stable_at;
  bool stable = true;
  int degeneracy = 1;  // 3 for the dimer line (x, y, z channels)
};

RPASpectrum spiral_rpa_spectrum(const SpiralAngles& a, const UniformCouplings& c, SpinValue spin,
                                const std::vector<double>& momenta);
// k = 2 pi n / n_k, n = 0..n_k-1
RPASpectrum spiral_rpa_spectrum(const SpiralAngles& a, const UniformCouplings& c, SpinValue spin, int n_k);

// Single-site MF + RPA ground energy per rung: e_sep - lambda + (1/n_k) sum_k (omega_- + omega_+)/2.
// NaN when some k is unstable.
double spiral_rpa_energy(const SpiralAngles& a, const UniformCouplings& c, SpinValue spin, int n_k = 4096);

}  // namespace zigzag
