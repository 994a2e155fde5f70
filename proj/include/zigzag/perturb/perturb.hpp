#pragma once

#include <optional>
#include <vector>

#include "zigzag/exact/ground_state.hpp"
#include "zigzag/model/spin.hpp"

namespace zigzag {

// All energies below are in units of J, on the J' = 2 J2 line, x = J'/J.
// X = S(S+1)/(3/4) is the triplet matrix-element enhancement.

// Two excitations at distance j >= 1 with total momentum k.
double two_excitation_energy(int distance, double k, SpinValue spin, double x);

// Single excitation, three-fold degenerate.
double one_excitation_energy(double k, SpinValue spin, double x);
inline constexpr int kOneExcitationDegeneracy = 3;

struct ResummedEnergies {
  double pair_singlet = 0.0;    // Delta E_{|1,0>}
  double single_triplet = 0.0;  // Delta E_{|mu,0>}
};
// Throws InvalidInput for x >= 1 (pole of the first expression).
ResummedEnergies resummed_energies(SpinValue spin, double x);

struct CriticalCoupling {
  double value = 0.0;  // J'_o / J
  bool physical = true;  // false for S = 1/2, where ED shows no such transition
};
// (sqrt(1 + 4X) - 3) / (X - 2): the root of Delta E_{|1,0>} = 0.
CriticalCoupling critical_coupling(SpinValue spin);

struct GapEstimate {
  double x = 0.0;
  SpinValue spin{};
  double one_exc = 0.0;
  double two_exc_j1 = 0.0;
  double two_exc_j2 = 0.0;
  double two_exc_far = 0.0;
  double resum_pair = 0.0;
  double resum_single = 0.0;
  double gap = 0.0;  // min over the sector energies above, all at k = 0
};
GapEstimate gap_estimate(SpinValue spin, double x);

struct GapRow {
  GapEstimate perturbative;
  double gap_ed = 0.0;
  int gap_ed_degeneracy = 0;  // degeneracy of the first excited level
  double relative_ed = 0.0;   // E_GS / E_dim - 1
};

std::vector<GapRow> gap_vs_ed(SpinValue spin, const std::vector<double>& x_grid, int n_rungs,
                              const GroundStateOptions& opts = {});

}  // namespace zigzag
