#include "zigzag/model/hamiltonian.hpp"

#include <vector>

#include "zigzag/common/error.hpp"

namespace zigzag {

HamiltonianKernel::HamiltonianKernel(const LadderSpec& spec)
    : codec_(spec.n_sites(), spec.local_dim()), bonds_(ladder_bonds(spec)), top_(spec.spin.twice_s) {
  const int d = spec.local_dim();
  m_.resize(static_cast<std::size_t>(d));
  up_.resize(static_cast<std::size_t>(d));
  down_.resize(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) {
    m_[k] = m_of_digit(spec.spin, k);
    up_[k] = raise_element(spec.spin, k);
    down_[k] = lower_element(spec.spin, k);
  }
}

StateVector apply_hamiltonian(const LadderSpec& spec, const StateVector& state) {
  if (!state.matches(spec)) throw InvalidInput("state dimension does not match the ladder");
  HamiltonianKernel kernel(spec);
  StateVector out = StateVector::zero(spec);
  out.twice_sz = state.twice_sz;
  const auto dim = static_cast<std::int64_t>(state.dimension());
  const auto& in = state.amplitudes;
  auto& res = out.amplitudes;
  const int n = spec.n_sites();
#pragma omp parallel
  {
    std::vector<int> digits(static_cast<std::size_t>(n));
#pragma omp for schedule(static)
    for (std::int64_t c = 0; c < dim; ++c) {
      const auto cu = static_cast<std::uint64_t>(c);
      kernel.codec().decode(cu, digits.data());
      std::complex<double> acc = kernel.diagonal(digits.data()) * in(c);
      kernel.for_each_offdiagonal(cu, digits.data(), [&](std::uint64_t t, double amp) {
        acc += amp * in(static_cast<Eigen::Index>(t));
      });
      res(c) = acc;
    }
  }
  return out;
}

double energy_expectation(const LadderSpec& spec, const StateVector& state) {
  StateVector h = apply_hamiltonian(spec, state);
  return inner(state, h).real() / state.amplitudes.squaredNorm();
}

Eigen::MatrixXd hamiltonian_dense(const LadderSpec& spec, std::uint64_t cap) {
  const auto dim = spec.dimension();
  if (dim > cap) throw CapExceeded("dense Hamiltonian limited to dimension " + std::to_string(cap));
  HamiltonianKernel kernel(spec);
  const auto n = static_cast<Eigen::Index>(dim);
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  std::vector<int> digits(static_cast<std::size_t>(spec.n_sites()));
  for (Eigen::Index c = 0; c < n; ++c) {
    const auto cu = static_cast<std::uint64_t>(c);
    kernel.codec().decode(cu, digits.data());
    h(c, c) += kernel.diagonal(digits.data());
    kernel.for_each_offdiagonal(cu, digits.data(),
                                [&](std::uint64_t t, double amp) { h(c, static_cast<Eigen::Index>(t)) += amp; });
  }
  return h;
}

}  // namespace zigzag
