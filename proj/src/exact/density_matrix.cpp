#include "zigzag/exact/density_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "zigzag/common/error.hpp"

namespace zigzag {

bool DensityMatrix::valid(double herm_tol, double psd_tol) const {
  if (matrix.rows() != matrix.cols() || matrix.rows() == 0) return false;
  if ((matrix - matrix.adjoint()).cwiseAbs().maxCoeff() > herm_tol) return false;
  if (std::abs(matrix.trace() - 1.0) > herm_tol) return false;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(matrix, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= -psd_tol;
}

void DensityMatrix::require_valid(double herm_tol, double psd_tol) const {
  if (!valid(herm_tol, psd_tol)) throw InvalidInput("not a valid density matrix");
}

DensityMatrix reduced_density_matrix(const StateVector& state, const std::vector<int>& sites,
                                     std::size_t matrix_cap) {
  const int n = state.n_sites, d = state.local_dim;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (int s : sites) {
    if (s < 0 || s >= n) throw InvalidInput("site index out of range");
    if (used[s]) throw InvalidInput("repeated site in subsystem");
    used[s] = true;
  }
  if (sites.empty()) throw InvalidInput("empty subsystem");
  auto dim_a = hilbert_dimension(static_cast<int>(sites.size()), d, matrix_cap);
  if (!dim_a) throw CapExceeded("reduced density matrix larger than the matrix cap");
  std::vector<int> rest;
  for (int s = 0; s < n; ++s)
    if (!used[s]) rest.push_back(s);
  const auto da = static_cast<Eigen::Index>(*dim_a);
  const auto db = static_cast<Eigen::Index>(state.amplitudes.size()) / da;

  BasisCodec codec(n, d);
  Eigen::MatrixXcd m(da, db);
  std::vector<int> digits(static_cast<std::size_t>(n));
  for (Eigen::Index c = 0; c < state.amplitudes.size(); ++c) {
    codec.decode(static_cast<std::uint64_t>(c), digits.data());
    Eigen::Index a = 0, b = 0;
    for (auto k = sites.size(); k-- > 0;) a = a * d + digits[sites[k]];
    for (auto k = rest.size(); k-- > 0;) b = b * d + digits[rest[k]];
    m(a, b) = state.amplitudes(c);
  }
  DensityMatrix rho;
  rho.sites = sites;
  rho.local_dim = d;
  rho.matrix = m * m.adjoint();
  rho.matrix /= rho.matrix.trace().real();
  return rho;
}

DensityMatrix pure_density_matrix(const Eigen::VectorXcd& psi, std::vector<int> sites, int local_dim) {
  DensityMatrix rho;
  rho.sites = std::move(sites);
  rho.local_dim = local_dim;
  rho.matrix = psi * psi.adjoint() / psi.squaredNorm();
  return rho;
}

namespace {

Eigen::MatrixXcd psd_sqrt(const Eigen::MatrixXcd& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (a + a.adjoint()));
  const double floor = 1e-14 * std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  Eigen::VectorXd ev = es.eigenvalues().unaryExpr([floor](double x) { return x > floor ? std::sqrt(x) : 0.0; });
  return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

double fidelity(const DensityMatrix& rho1, const DensityMatrix& rho2) {
  if (rho1.matrix.rows() != rho2.matrix.rows()) throw InvalidInput("density matrices differ in dimension");
  rho1.require_valid(1e-10);
  rho2.require_valid(1e-10);
  // Tr sqrt(sqrt(r1) r2 sqrt(r1)) is the trace norm of sqrt(r1) sqrt(r2)
  Eigen::MatrixXcd m = psd_sqrt(rho1.matrix) * psd_sqrt(rho2.matrix);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  double f = svd.singularValues().sum();
  return std::clamp(f, 0.0, 1.0);
}

double bures_angle(const DensityMatrix& rho1, const DensityMatrix& rho2) { return std::acos(fidelity(rho1, rho2)); }

double pure_fidelity(const StateVector& a, const StateVector& b) {
  return std::clamp(std::abs(inner(a, b)) / (a.norm() * b.norm()), 0.0, 1.0);
}

namespace {

// Site 0 fastest: op on site 0 is I (x) op in Eigen's row-major-style kron layout.
Eigen::MatrixXcd two_site(const Eigen::MatrixXcd& op0, const Eigen::MatrixXcd& op1) {
  const auto d = op0.rows();
  Eigen::MatrixXcd out(d * d, d * d);
  for (Eigen::Index a1 = 0; a1 < d; ++a1)
    for (Eigen::Index b1 = 0; b1 < d; ++b1) out.block(a1 * d, b1 * d, d, d) = op1(a1, b1) * op0;
  return out;
}

Eigen::MatrixXcd pair_total_spin_squared(SpinValue spin) {
  auto ops = local_spin_matrices(spin);
  const auto id = Eigen::MatrixXcd::Identity(spin.local_dim(), spin.local_dim());
  Eigen::MatrixXcd j2 = Eigen::MatrixXcd::Zero(spin.local_dim() * spin.local_dim(), spin.local_dim() * spin.local_dim());
  for (const auto* s : {&ops.sx, &ops.sy, &ops.sz}) {
    Eigen::MatrixXcd t = two_site(*s, id) + two_site(id, *s);
    j2 += t * t;
  }
  return j2;
}

}  // namespace

Eigen::MatrixXcd pair_spin_projector(SpinValue spin, int j) {
  if (j < 0 || j > spin.twice_s) throw InvalidInput("pair spin outside 0..2S");
  Eigen::MatrixXcd j2 = pair_total_spin_squared(spin);
  const auto n = j2.rows();
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Identity(n, n);
  const double target = j * (j + 1.0);
  for (int k = 0; k <= spin.twice_s; ++k) {
    if (k == j) continue;
    const double ev = k * (k + 1.0);
    p = p * (j2 - ev * Eigen::MatrixXcd::Identity(n, n)) / (target - ev);
  }
  return p;
}

Eigen::VectorXcd coherent_pair(SpinValue spin, double angle) {
  const Eigen::VectorXcd a = coherent_state(spin, 0.0);
  const Eigen::VectorXcd b = coherent_state(spin, angle);
  const auto d = a.size();
  Eigen::VectorXcd v(d * d);
  for (Eigen::Index k1 = 0; k1 < d; ++k1)
    for (Eigen::Index k0 = 0; k0 < d; ++k0) v(k0 + d * k1) = a(k0) * b(k1);
  return v;
}

SrmfPairState srmf_local_pair_state(const SpiralAngles& angles, SpinValue spin, PairKind kind) {
  const Eigen::VectorXcd pair = coherent_pair(spin, pair_angle(angles, kind));
  SrmfPairState out;
  out.rho.sites = kind == PairKind::rung ? std::vector<int>{0, 1} : std::vector<int>{1, 2};
  out.rho.local_dim = spin.local_dim();
  out.rho.matrix = Eigen::MatrixXcd::Zero(pair.size(), pair.size());
  for (int j = 0; j <= spin.twice_s; ++j) {
    Eigen::MatrixXcd proj = pair_spin_projector(spin, j);
    const double p = std::max(0.0, (pair.adjoint() * proj * pair)(0, 0).real());
    out.weights.push_back(p);
    out.rho.matrix += p / (2.0 * j + 1.0) * proj;
  }
  out.rho.matrix = 0.5 * (out.rho.matrix + out.rho.matrix.adjoint()).eval();
  return out;
}

}  // namespace zigzag
