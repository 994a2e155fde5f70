#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "zigzag/model/ladder.hpp"
#include "zigzag/model/state.hpp"

namespace zigzag {

// Bond list plus the ladder-operator tables needed to generate rows of H.
// H is real symmetric in the product basis, so a row doubles as a column and
// the matvec can gather: out[c] = diag(c) in[c] + sum_t H(c,t) in[t].
class HamiltonianKernel {
 public:
  explicit HamiltonianKernel(const LadderSpec& spec);

  const BasisCodec& codec() const { return codec_; }
  const std::vector<Bond>& bonds() const { return bonds_; }
  int n_sites() const { return codec_.n_sites(); }

  double diagonal(const int* digits) const {
    double e = 0.0;
    for (const auto& b : bonds_) e += b.coupling * m_[digits[b.a]] * m_[digits[b.b]];
    return e;
  }

  // f(target_config, amplitude) for every nonzero off-diagonal element of row `config`.
  template <class F>
  void for_each_offdiagonal(std::uint64_t config, const int* digits, F&& f) const {
    for (const auto& b : bonds_) {
      const int da = digits[b.a], db = digits[b.b];
      const std::uint64_t pa = codec_.power(b.a), pb = codec_.power(b.b);
      if (da < top_ && db > 0) f(config + pa - pb, 0.5 * b.coupling * up_[da] * down_[db]);
      if (da > 0 && db < top_) f(config - pa + pb, 0.5 * b.coupling * down_[da] * up_[db]);
    }
  }

 private:
  BasisCodec codec_;
  std::vector<Bond> bonds_;
  std::vector<double> m_, up_, down_;
  int top_;
};

// H|psi>, matrix free; preserves the sector label.
StateVector apply_hamiltonian(const LadderSpec& spec, const StateVector& state);

// <psi|H|psi> / <psi|psi>.
double energy_expectation(const LadderSpec& spec, const StateVector& state);

// Dense H in the full product basis; refuses dimensions above `cap`.
Eigen::MatrixXd hamiltonian_dense(const LadderSpec& spec, std::uint64_t cap = 10'000);

}  // namespace zigzag
