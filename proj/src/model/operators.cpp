#include "zigzag/model/operators.hpp"

#include "zigzag/common/error.hpp"
#include "zigzag/model/spin.hpp"

namespace zigzag {

namespace {

SpinValue spin_of(const StateVector& s) { return SpinValue::checked(s.local_dim - 1); }

const Eigen::MatrixXcd& component_matrix(const LocalSpinMatrices& ops, Component mu) {
  switch (mu) {
    case Component::x: return ops.sx;
    case Component::y: return ops.sy;
    default: return ops.sz;
  }
}

}  // namespace

StateVector apply_site_operator(const StateVector& state, int site, const Eigen::MatrixXcd& op) {
  if (site < 0 || site >= state.n_sites) throw InvalidInput("site index out of range");
  const int d = state.local_dim;
  if (op.rows() != d || op.cols() != d) throw InvalidInput("site operator has the wrong dimension");
  BasisCodec codec(state.n_sites, d);
  const auto p = static_cast<Eigen::Index>(codec.power(site));
  const auto block = p * d;
  StateVector out = StateVector::zero(state.n_sites, d);
  const auto& in = state.amplitudes;
  for (Eigen::Index base = 0; base < in.size(); base += block)
    for (Eigen::Index lo = 0; lo < p; ++lo)
      for (int a = 0; a < d; ++a) {
        std::complex<double> acc = 0.0;
        for (int b = 0; b < d; ++b)
          if (op(a, b) != 0.0) acc += op(a, b) * in(base + b * p + lo);
        out.amplitudes(base + a * p + lo) = acc;
      }
  return out;
}

StateVector apply_spin_component(const StateVector& state, int site, Component mu) {
  auto ops = local_spin_matrices(spin_of(state));
  return apply_site_operator(state, site, component_matrix(ops, mu));
}

StateVector apply_rung_operator(RungOperator kind, int rung, Component mu, const StateVector& state) {
  if (rung < 0 || 2 * rung + 1 >= state.n_sites) throw InvalidInput("rung index out of range");
  StateVector upper = apply_spin_component(state, 2 * rung + 1, mu);
  StateVector lower = apply_spin_component(state, 2 * rung, mu);
  if (kind == RungOperator::J)
    upper.amplitudes += lower.amplitudes;
  else
    upper.amplitudes -= lower.amplitudes;
  return upper;
}

StateVector apply_total_spin(const StateVector& state, Component mu) {
  auto ops = local_spin_matrices(spin_of(state));
  StateVector out = StateVector::zero(state.n_sites, state.local_dim);
  for (int s = 0; s < state.n_sites; ++s)
    out.amplitudes += apply_site_operator(state, s, component_matrix(ops, mu)).amplitudes;
  return out;
}

StateVector apply_total_spin_squared(const StateVector& state) {
  StateVector out = StateVector::zero(state.n_sites, state.local_dim);
  for (Component mu : {Component::x, Component::y, Component::z})
    out.amplitudes += apply_total_spin(apply_total_spin(state, mu), mu).amplitudes;
  return out;
}

}  // namespace zigzag
