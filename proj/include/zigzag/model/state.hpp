#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "zigzag/model/ladder.hpp"

namespace zigzag {

// Mixed-radix product basis: index = sum_s digit_s * d^s, site 0 fastest.
class BasisCodec {
 public:
  BasisCodec(int n_sites, int local_dim);

  int n_sites() const { return n_sites_; }
  int local_dim() const { return d_; }
  std::uint64_t dimension() const { return dim_; }
  std::uint64_t power(int site) const { return pow_[static_cast<std::size_t>(site)]; }
  int digit(std::uint64_t config, int site) const {
    return static_cast<int>((config / pow_[static_cast<std::size_t>(site)]) % static_cast<std::uint64_t>(d_));
  }
  void decode(std::uint64_t config, int* digits) const {
    for (int s = 0; s < n_sites_; ++s) {
      digits[s] = static_cast<int>(config % static_cast<std::uint64_t>(d_));
      config /= static_cast<std::uint64_t>(d_);
    }
  }
  // 2 * sum of m over sites.
  int twice_sz(std::uint64_t config) const;

 private:
  int n_sites_;
  int d_;
  std::uint64_t dim_;
  std::vector<std::uint64_t> pow_;
};

struct StateVector {
  int n_sites = 0;
  int local_dim = 0;
  Eigen::VectorXcd amplitudes;
  std::optional<int> twice_sz;  // total Sz sector, stored as 2*Sz

  static StateVector zero(int n_sites, int local_dim);
  static StateVector zero(const LadderSpec& spec) { return zero(spec.n_sites(), spec.local_dim()); }
  static StateVector basis(const LadderSpec& spec, std::uint64_t config);

  std::uint64_t dimension() const { return static_cast<std::uint64_t>(amplitudes.size()); }
  double norm() const { return amplitudes.norm(); }
  // Throws on a zero vector.
  void normalize();
  bool matches(const LadderSpec& spec) const;
  // Largest |amplitude| made real positive (first index wins ties).
  void fix_phase();
  // True when every nonzero amplitude sits in `twice_sz` (tolerance on |amp|).
  bool in_sector(int twice_sz, double tol = 0.0) const;
};

std::complex<double> inner(const StateVector& a, const StateVector& b);

// Tensor product of single-site states, site 0 first.
StateVector product_state(const std::vector<Eigen::VectorXcd>& site_states);

// Binary layout: uint64 little-endian dimension, then (re, im) float64 little-endian pairs.
void write_state_binary(const StateVector& state, std::ostream& out);
StateVector read_state_binary(std::istream& in, int n_sites, int local_dim);

}  // namespace zigzag
