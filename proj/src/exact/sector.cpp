#include "zigzag/exact/sector.hpp"

#include <limits>

#include "zigzag/common/error.hpp"

namespace zigzag {

SectorBasis::SectorBasis(const LadderSpec& spec, int twice_sz) : twice_sz_(twice_sz) {
  const BasisCodec codec(spec.n_sites(), spec.local_dim());
  const std::uint64_t dim = codec.dimension();
  if (dim > static_cast<std::uint64_t>(std::numeric_limits<std::int32_t>::max()))
    throw CapExceeded("sector lookup table limited to 2^31 configurations");
  const int max_tsz = spec.n_sites() * spec.spin.twice_s;
  if (twice_sz < -max_tsz || twice_sz > max_tsz || (twice_sz + max_tsz) % 2 != 0)
    throw InvalidInput("no configurations carry 2Sz = " + std::to_string(twice_sz));
  // target digit sum
  const int target = (twice_sz + max_tsz) / 2;
  lookup_.assign(dim, -1);
  const int n = spec.n_sites(), d = spec.local_dim();
  std::vector<int> digits(static_cast<std::size_t>(n), 0);
  int sum = 0;
  // odometer walk keeps the digit sum incrementally
  for (std::uint64_t c = 0; c < dim; ++c) {
    if (sum == target) {
      lookup_[c] = static_cast<std::int32_t>(configs_.size());
      configs_.push_back(c);
    }
    for (int s = 0; s < n; ++s) {
      if (++digits[s] < d) {
        ++sum;
        break;
      }
      digits[s] = 0;
      sum -= d - 1;
    }
  }
}

std::optional<std::size_t> SectorBasis::index_of(std::uint64_t config) const {
  if (config >= lookup_.size() || lookup_[config] < 0) return std::nullopt;
  return static_cast<std::size_t>(lookup_[config]);
}

StateVector SectorBasis::embed(const Eigen::VectorXd& local, int n_sites, int local_dim) const {
  return embed(Eigen::VectorXcd(local.cast<std::complex<double>>()), n_sites, local_dim);
}

StateVector SectorBasis::embed(const Eigen::VectorXcd& local, int n_sites, int local_dim) const {
  if (static_cast<std::size_t>(local.size()) != configs_.size()) throw InvalidInput("sector vector size mismatch");
  StateVector v = StateVector::zero(n_sites, local_dim);
  for (std::size_t i = 0; i < configs_.size(); ++i)
    v.amplitudes(static_cast<Eigen::Index>(configs_[i])) = local(static_cast<Eigen::Index>(i));
  v.twice_sz = twice_sz_;
  return v;
}

Eigen::VectorXcd SectorBasis::restrict(const StateVector& state) const {
  if (static_cast<std::size_t>(state.amplitudes.size()) != lookup_.size())
    throw InvalidInput("state dimension does not match the sector basis");
  Eigen::VectorXcd out(static_cast<Eigen::Index>(configs_.size()));
  for (std::size_t i = 0; i < configs_.size(); ++i)
    out(static_cast<Eigen::Index>(i)) = state.amplitudes(static_cast<Eigen::Index>(configs_[i]));
  return out;
}

std::vector<int> available_sectors(const LadderSpec& spec) {
  const int max_tsz = spec.n_sites() * spec.spin.twice_s;
  std::vector<int> out;
  for (int t = -max_tsz; t <= max_tsz; t += 2) out.push_back(t);
  return out;
}

void apply_sector_hamiltonian(const HamiltonianKernel& kernel, const SectorBasis& basis, const double* in,
                              double* out) {
  const auto dim = static_cast<std::int64_t>(basis.dimension());
  const int n = kernel.n_sites();
#pragma omp parallel
  {
    std::vector<int> digits(static_cast<std::size_t>(n));
#pragma omp for schedule(static)
    for (std::int64_t r = 0; r < dim; ++r) {
      const std::uint64_t c = basis.config(static_cast<std::size_t>(r));
      kernel.codec().decode(c, digits.data());
      double acc = kernel.diagonal(digits.data()) * in[r];
      kernel.for_each_offdiagonal(c, digits.data(),
                                  [&](std::uint64_t t, double amp) { acc += amp * in[basis.position(t)]; });
      out[r] = acc;
    }
  }
}

Eigen::MatrixXd sector_hamiltonian_dense(const LadderSpec& spec, const SectorBasis& basis) {
  HamiltonianKernel kernel(spec);
  const auto n = static_cast<Eigen::Index>(basis.dimension());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  std::vector<int> digits(static_cast<std::size_t>(spec.n_sites()));
  for (Eigen::Index r = 0; r < n; ++r) {
    const std::uint64_t c = basis.config(static_cast<std::size_t>(r));
    kernel.codec().decode(c, digits.data());
    h(r, r) += kernel.diagonal(digits.data());
    kernel.for_each_offdiagonal(c, digits.data(), [&](std::uint64_t t, double amp) { h(r, basis.position(t)) += amp; });
  }
  return h;
}

}  // namespace zigzag
