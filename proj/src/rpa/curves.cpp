#include "zigzag/rpa/curves.hpp"

#include <cmath>
#include <limits>

#include "zigzag/exact/ground_state.hpp"
#include "zigzag/meanfield/classical.hpp"
#include "zigzag/meanfield/general_s.hpp"
#include "zigzag/meanfield/pair.hpp"
#include "zigzag/model/dimer.hpp"
#include "zigzag/rpa/dimer_line.hpp"
#include "zigzag/rpa/spiral.hpp"

namespace zigzag {

std::vector<RPACurvePoint> rpa_energy_curves(SpinValue spin, double J, double Jp, const std::vector<double>& j2_grid,
                                             const RPACurveOptions& opts) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double unit = J * spin.casimir();
  std::vector<RPACurvePoint> out;
  for (double j2 : j2_grid) {
    const UniformCouplings c{J, Jp, j2};
    RPACurvePoint p;
    p.j2 = j2;
    p.gamma = gamma_of(c, spin).gamma;
    const auto cp = classical_phase(c, spin);
    p.mf_single = cp.energy_per_rung / unit;
    p.rpa_single = spiral_rpa_energy(cp.angles, c, spin, opts.n_k) / unit;
    p.mf_pair = (spin.twice_s == 1 ? pair_mf_minimize(c).closed_energy : general_s_family_minimum(spin, c).energy) / unit;
    p.rpa_pair = std::abs(p.gamma) < 1.0
                     ? (-unit + dimer_rpa_energy_shift_per_rung(p.gamma, J, opts.n_k)) / unit
                     : nan;
    p.ed = nan;
    if (opts.ed_rungs > 0) {
      LadderSpec spec = build_spec(opts.ed_rungs, spin, CouplingPattern::uniform(opts.ed_rungs, J, Jp, j2, j2),
                                   Boundary::periodic);
      GroundStateOptions go;
      go.lanczos.keep_states = false;
      p.ed = ground_state_full(spec, go).energy / opts.ed_rungs / unit;
    }
    out.push_back(p);
  }
  return out;
}

}  // namespace zigzag
