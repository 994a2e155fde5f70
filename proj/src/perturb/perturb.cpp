#include "zigzag/perturb/perturb.hpp"

#include <algorithm>
#include <cmath>

#include "zigzag/common/error.hpp"
#include "zigzag/model/dimer.hpp"

namespace zigzag {

namespace {

double enhancement(SpinValue spin) { return spin.casimir() / 0.75; }

}  // namespace

double two_excitation_energy(int distance, double k, SpinValue spin, double x) {
  if (distance < 1) throw InvalidInput("excitation distance must be at least 1");
  const double X = enhancement(spin);
  if (distance == 1) {
    const double c = std::cos(0.5 * k);
    return 2.0 - x - X * 0.5 * c * c * x * x;
  }
  if (distance == 2) return 2.0 - X * 0.25 * x * x;
  return 2.0 - X * 0.5 * x * x;
}

double one_excitation_energy(double k, SpinValue spin, double x) {
  const double c = std::cos(0.5 * k);
  return 1.0 - enhancement(spin) * x * x * c * c * 0.5;
}

ResummedEnergies resummed_energies(SpinValue spin, double x) {
  if (!(x < 1.0)) throw InvalidInput("resummed energies need J'/J < 1");
  const double X = enhancement(spin);
  return {2.0 - x - X * 0.5 / (1.0 - x) * x * x, 1.0 - X * x * x / (2.0 * (1.0 - 0.5 * x))};
}

CriticalCoupling critical_coupling(SpinValue spin) {
  const double X = enhancement(spin);
  if (std::abs(X - 2.0) < 1e-14) throw InvalidInput("critical coupling formula has a pole at S(S+1) = 3/2");
  return {(std::sqrt(1.0 + 4.0 * X) - 3.0) / (X - 2.0), spin.twice_s != 1};
}

GapEstimate gap_estimate(SpinValue spin, double x) {
  GapEstimate g;
  g.x = x;
  g.spin = spin;
  g.one_exc = one_excitation_energy(0.0, spin, x);
  g.two_exc_j1 = two_excitation_energy(1, 0.0, spin, x);
  g.two_exc_j2 = two_excitation_energy(2, 0.0, spin, x);
  g.two_exc_far = two_excitation_energy(3, 0.0, spin, x);
  const auto r = resummed_energies(spin, x);
  g.resum_pair = r.pair_singlet;
  g.resum_single = r.single_triplet;
  g.gap = std::min(g.resum_pair, g.resum_single);
  return g;
}

std::vector<GapRow> gap_vs_ed(SpinValue spin, const std::vector<double>& x_grid, int n_rungs,
                              const GroundStateOptions& opts) {
  std::vector<GapRow> rows;
  for (double x : x_grid) {
    GapRow row;
    row.perturbative = gap_estimate(spin, x);
    LadderSpec spec = uniform_ladder(n_rungs, spin, {1.0, x, 0.5 * x});
    auto levels = low_levels(spec, 4, opts);
    row.gap_ed = levels.size() > 1 ? levels[1].energy - levels[0].energy : 0.0;
    row.gap_ed_degeneracy = levels.size() > 1 ? levels[1].degeneracy : 0;
    row.relative_ed = levels[0].energy / dimer_energy(spec).energy - 1.0;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace zigzag
