#pragma once

#include <optional>

#include "zigzag/meanfield/angles.hpp"
#include "zigzag/meanfield/classical.hpp"
#include "zigzag/model/ladder.hpp"

namespace zigzag {

// Composite-rung variational state for S = 1/2:
// zeta mixes singlet and triplet, phi orients the pair, tau is a relative phase,
// theta is the pitch between consecutive rungs.
struct PairMFParams {
  double zeta = 0.0;
  double phi = 0.0;
  double tau = 0.0;
  double theta = 0.0;
};

// (J/4) [cos(phi) + cos(zeta)(cos(phi) - 1) + sin^2(zeta)(gamma cos(theta) + (2J'/J) cos(theta - phi/2) cos(phi/2))]
// per rung, gamma from gamma_of at S = 1/2. Couplings may be negative here.
double pair_mf_energy(const PairMFParams& p, const UniformCouplings& c, int n_rungs = 1);

// Couplings with J = 1, the given J' and J2 chosen so that gamma (S = 1/2) takes the given value.
UniformCouplings couplings_for_gamma(double gamma, double jp_over_j);

struct PairMFResult {
  PairMFParams params;          // numeric minimizer, mapped into canonical ranges
  double energy = 0.0;          // numeric, per rung
  PairMFParams closed_params;
  double closed_energy = 0.0;   // per rung
  PhaseLabel label = PhaseLabel::Dimer;  // Dimer for |gamma| <= 1, ColinearBroken above
  double gamma = 0.0;
  bool agree = false;           // |energy - closed_energy| <= 1e-8 J
};

// Multi-start simplex descent over (zeta, phi, theta) at tau = 0, compared with
// the closed-form branch.
PairMFResult pair_mf_minimize(const UniformCouplings& c);

}  // namespace zigzag
