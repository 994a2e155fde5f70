#pragma once

#include <optional>

#include "zigzag/meanfield/angles.hpp"
#include "zigzag/model/ladder.hpp"

namespace zigzag {

// Singlet / coplanar-pair superposition for any S, per rung:
//   E = [E_d (cos^2(zeta/2) + n2 - 1) + sin^2(zeta/2) E_sep(theta, phi)] / n2,
//   n2 = 1 - sin(zeta) cos(tau) sin^{2S}(phi/2) / sqrt(2S+1),
// with E_d = -J S(S+1). zeta = 0 gives E_d and zeta = pi gives E_sep exactly.
double general_s_family_energy(double theta, double phi, double zeta, double tau, SpinValue spin,
                               const UniformCouplings& c);

struct FamilyMinimum {
  double energy = 0.0;  // per rung
  double theta = 0.0, phi = 0.0, zeta = 0.0, tau = 0.0;
};
FamilyMinimum general_s_family_minimum(SpinValue spin, const UniformCouplings& c);

struct GeneralSTransition {
  std::optional<double> numeric;  // J'/J where the family minimum leaves the dimer endpoint
  double closed_form = 0.0;       // 2/S
  double classical_crossover = 0.0;  // sqrt(2/S)
  bool agrees_with_closed_form = false;  // within 1e-6
};

// Scans J' = 2 J2 over (0, 2J] and bisects the first point where the family
// minimum drops below E_d by more than 1e-12 |E_d|. S < 2 returns no value.
GeneralSTransition general_s_transition(SpinValue spin);

// Closed-form pair fidelity against the dimer state: sin^{2S}(|phi|/2) / (2S+1) on the rung,
// 1/(2S+1) off the rung.
double dimer_spiral_pair_fidelity(SpinValue spin, double phi_tilde, PairKind kind);

// |<singlet|pair at relative angle phi>| = sin^{2S}(|phi|/2) / sqrt(2S+1).
double singlet_coherent_overlap(SpinValue spin, double phi);

}  // namespace zigzag
