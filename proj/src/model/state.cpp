#include "zigzag/model/state.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <istream>
#include <ostream>

#include "zigzag/common/error.hpp"

namespace zigzag {

BasisCodec::BasisCodec(int n_sites, int local_dim) : n_sites_(n_sites), d_(local_dim) {
  if (n_sites < 1 || local_dim < 2) throw InvalidInput("basis needs at least one site of dimension >= 2");
  auto dim = hilbert_dimension(n_sites, local_dim, UINT64_MAX / 2);
  if (!dim) throw CapExceeded("basis dimension overflows");
  dim_ = *dim;
  pow_.resize(static_cast<std::size_t>(n_sites));
  std::uint64_t p = 1;
  for (int s = 0; s < n_sites; ++s) {
    pow_[static_cast<std::size_t>(s)] = p;
    p *= static_cast<std::uint64_t>(local_dim);
  }
}

int BasisCodec::twice_sz(std::uint64_t config) const {
  int sum = 0;
  for (int s = 0; s < n_sites_; ++s) {
    sum += static_cast<int>(config % static_cast<std::uint64_t>(d_));
    config /= static_cast<std::uint64_t>(d_);
  }
  return 2 * sum - n_sites_ * (d_ - 1);
}

StateVector StateVector::zero(int n_sites, int local_dim) {
  BasisCodec codec(n_sites, local_dim);
  StateVector v;
  v.n_sites = n_sites;
  v.local_dim = local_dim;
  v.amplitudes = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(codec.dimension()));
  return v;
}

StateVector StateVector::basis(const LadderSpec& spec, std::uint64_t config) {
  StateVector v = zero(spec);
  if (config >= v.dimension()) throw InvalidInput("basis index out of range");
  v.amplitudes(static_cast<Eigen::Index>(config)) = 1.0;
  v.twice_sz = BasisCodec(spec.n_sites(), spec.local_dim()).twice_sz(config);
  return v;
}

void StateVector::normalize() {
  double n = norm();
  if (!(n > 0.0)) throw InvalidInput("cannot normalize a zero vector");
  amplitudes /= n;
}

bool StateVector::matches(const LadderSpec& spec) const {
  return n_sites == spec.n_sites() && local_dim == spec.local_dim() &&
         static_cast<std::uint64_t>(amplitudes.size()) == spec.dimension();
}

void StateVector::fix_phase() {
  Eigen::Index best = 0;
  double best_abs = -1.0;
  for (Eigen::Index i = 0; i < amplitudes.size(); ++i) {
    double a = std::abs(amplitudes(i));
    if (a > best_abs * (1.0 + 1e-12)) {
      best_abs = a;
      best = i;
    }
  }
  if (best_abs <= 0.0) return;
  amplitudes *= std::conj(amplitudes(best)) / best_abs;
  amplitudes(best) = best_abs;
}

bool StateVector::in_sector(int tsz, double tol) const {
  BasisCodec codec(n_sites, local_dim);
  for (Eigen::Index i = 0; i < amplitudes.size(); ++i)
    if (std::abs(amplitudes(i)) > tol && codec.twice_sz(static_cast<std::uint64_t>(i)) != tsz) return false;
  return true;
}

std::complex<double> inner(const StateVector& a, const StateVector& b) {
  if (a.amplitudes.size() != b.amplitudes.size()) throw InvalidInput("state dimensions differ");
  return a.amplitudes.dot(b.amplitudes);  // Eigen's dot conjugates the first argument
}

StateVector product_state(const std::vector<Eigen::VectorXcd>& site_states) {
  if (site_states.empty()) throw InvalidInput("product state needs at least one site");
  const auto d = site_states.front().size();
  Eigen::VectorXcd acc = site_states.back();
  for (auto it = site_states.rbegin() + 1; it != site_states.rend(); ++it) {
    if (it->size() != d) throw InvalidInput("site states differ in dimension");
    // Later sites are slower digits: new index = old * d + digit.
    Eigen::VectorXcd next(acc.size() * d);
    for (Eigen::Index hi = 0; hi < acc.size(); ++hi)
      for (Eigen::Index lo = 0; lo < d; ++lo) next(hi * d + lo) = acc(hi) * (*it)(lo);
    acc = std::move(next);
  }
  StateVector v;
  v.n_sites = static_cast<int>(site_states.size());
  v.local_dim = static_cast<int>(d);
  v.amplitudes = std::move(acc);
  return v;
}

namespace {

void put_u64(std::ostream& out, std::uint64_t v) {
  unsigned char b[8];
  for (int k = 0; k < 8; ++k) b[k] = static_cast<unsigned char>((v >> (8 * k)) & 0xffu);
  out.write(reinterpret_cast<const char*>(b), 8);
}

std::uint64_t get_u64(std::istream& in) {
  unsigned char b[8];
  if (!in.read(reinterpret_cast<char*>(b), 8)) throw InvalidInput("truncated state file");
  std::uint64_t v = 0;
  for (int k = 0; k < 8; ++k) v |= static_cast<std::uint64_t>(b[k]) << (8 * k);
  return v;
}

}  // namespace

void write_state_binary(const StateVector& state, std::ostream& out) {
  put_u64(out, state.dimension());
  for (Eigen::Index i = 0; i < state.amplitudes.size(); ++i) {
    put_u64(out, std::bit_cast<std::uint64_t>(state.amplitudes(i).real()));
    put_u64(out, std::bit_cast<std::uint64_t>(state.amplitudes(i).imag()));
  }
  if (!out) throw std::runtime_error("failed writing state");
}

StateVector read_state_binary(std::istream& in, int n_sites, int local_dim) {
  StateVector v = StateVector::zero(n_sites, local_dim);
  std::uint64_t dim = get_u64(in);
  if (dim != v.dimension()) throw InvalidInput("state file dimension does not match the ladder");
  for (Eigen::Index i = 0; i < v.amplitudes.size(); ++i) {
    double re = std::bit_cast<double>(get_u64(in));
    double im = std::bit_cast<double>(get_u64(in));
    v.amplitudes(i) = {re, im};
  }
  return v;
}

}  // namespace zigzag
