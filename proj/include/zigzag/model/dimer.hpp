#pragma once

#include <vector>

#include "zigzag/model/ladder.hpp"
#include "zigzag/model/state.hpp"

namespace zigzag {

// (2S+1)^(-1/2) sum_m (-1)^(m+S) |-m>|m>, first ket on the lower site of the rung.
StateVector singlet_state(SpinValue spin);

// Product of rung singlets over all N rungs.
StateVector dimer_state(const LadderSpec& spec);

struct DimerEnergy {
  double energy = 0.0;    // -S(S+1) sum_i J(i)
  bool eigenstate = false;  // true when the constraint holds on every active rung
};
DimerEnergy dimer_energy(const LadderSpec& spec, double tol = 1e-12);

// |J'(i) - J2(i) - J2'(i)| <= tol per rung.
std::vector<bool> check_dimer_constraint(const CouplingPattern& couplings, double tol = 1e-12);

// Exact-ground-state criterion for uniform couplings: J' = 2 J2 and J' < J (S = 1/2),
// J' < J/(S+1) (S >= 1). Throws Unsupported for non-uniform ladders.
bool sufficient_gs_condition(const LadderSpec& spec, double tol = 1e-12);

// N min_l [(J'/2)|S-l|(|S-l|+1) + ((J-J')/2) l(l+1) - (J + J'/2) S(S+1)], l = 0..2S,
// the triangle decomposition bound for J2 = J2' = J'/2. Throws Unsupported otherwise.
double gs_energy_lower_bound(const LadderSpec& spec, double tol = 1e-12);

struct DimerlineParam {
  double gamma = 0.0;
};

// gamma = ((2 J2 - J') / J) * S(S+1) / (3/4).
DimerlineParam gamma_of(const UniformCouplings& c, SpinValue spin);
DimerlineParam gamma_of(const LadderSpec& spec);

}  // namespace zigzag
