#pragma once

#include <Eigen/Dense>
#include <vector>

#include "zigzag/meanfield/angles.hpp"
#include "zigzag/model/spin.hpp"
#include "zigzag/model/state.hpp"

namespace zigzag {

struct DensityMatrix {
  std::vector<int> sites;  // order fixes the tensor layout, first site fastest
  int local_dim = 0;
  Eigen::MatrixXcd matrix;

  // Hermitian within herm_tol, eigenvalues >= -psd_tol, unit trace within herm_tol.
  bool valid(double herm_tol = 1e-12, double psd_tol = 1e-10) const;
  void require_valid(double herm_tol = 1e-12, double psd_tol = 1e-10) const;
};

// Partial trace of |psi><psi| onto `sites` (distinct, in range); throws CapExceeded when
// d^|sites| exceeds matrix_cap.
DensityMatrix reduced_density_matrix(const StateVector& state, const std::vector<int>& sites,
                                     std::size_t matrix_cap = 4096);

DensityMatrix pure_density_matrix(const Eigen::VectorXcd& psi, std::vector<int> sites, int local_dim);

// Tr sqrt(sqrt(rho1) rho2 sqrt(rho1)); pure states give |<psi1|psi2>|.
double fidelity(const DensityMatrix& rho1, const DensityMatrix& rho2);
double bures_angle(const DensityMatrix& rho1, const DensityMatrix& rho2);
double pure_fidelity(const StateVector& a, const StateVector& b);

// Projector onto total pair spin j (0..2S) of two spin-S sites.
Eigen::MatrixXcd pair_spin_projector(SpinValue spin, int j);

// Two-site product of coherent states at relative planar angle `angle`.
Eigen::VectorXcd coherent_pair(SpinValue spin, double angle);

struct SrmfPairState {
  DensityMatrix rho;
  std::vector<double> weights;  // p_j, j = 0..2S
};

// sum_j p_j Pi_j / tr(Pi_j) with p_j = <pair| Pi_j |pair> for the spiral pair.
SrmfPairState srmf_local_pair_state(const SpiralAngles& angles, SpinValue spin, PairKind kind);

}  // namespace zigzag
