#pragma once

#include <Eigen/Dense>

#include "zigzag/model/state.hpp"

namespace zigzag {

enum class Component { x, y, z };
enum class RungOperator { J, K };  // J = S(2r+1) + S(2r), K = S(2r+1) - S(2r)

// Applies a d x d single-site operator to `site`.
StateVector apply_site_operator(const StateVector& state, int site, const Eigen::MatrixXcd& op);
StateVector apply_spin_component(const StateVector& state, int site, Component mu);

// Rung r (0-based) is the site pair (2r, 2r+1).
StateVector apply_rung_operator(RungOperator kind, int rung, Component mu, const StateVector& state);

StateVector apply_total_spin(const StateVector& state, Component mu);
// (sum_i S_i)^2 |psi>
StateVector apply_total_spin_squared(const StateVector& state);

}  // namespace zigzag
