#include "zigzag/exact/landscape.hpp"

#include <algorithm>
#include <limits>

#include "zigzag/common/error.hpp"
#include "zigzag/exact/density_matrix.hpp"
#include "zigzag/meanfield/classical.hpp"
#include "zigzag/model/dimer.hpp"

namespace zigzag {

std::vector<LandscapePoint> fidelity_landscape(const std::vector<LadderSpec>& grid,
                                               const std::vector<FidelityReference>& refs,
                                               const GroundStateOptions& opts) {
  auto wants = [&](FidelityReference r) { return std::find(refs.begin(), refs.end(), r) != refs.end(); };
  std::vector<LandscapePoint> out;
  for (const auto& spec : grid) {
    auto u = spec.uniform_couplings();
    if (!u) throw Unsupported("fidelity landscape needs uniform couplings with J2 = J2'");
    LandscapePoint p;
    p.Jp = u->Jp;
    p.J2 = u->J2;
    p.f_singlet = p.f_srmf = std::numeric_limits<double>::quiet_NaN();
    auto gs = ground_state_full(spec, opts);
    p.energy = gs.energy;
    const auto rho = reduced_density_matrix(gs.state, {0, 1});
    if (wants(FidelityReference::singlet))
      p.f_singlet = fidelity(rho, pure_density_matrix(singlet_state(spec.spin).amplitudes, {0, 1}, spec.local_dim()));
    p.angles = classical_phase(*u, spec.spin).angles;
    if (wants(FidelityReference::srmf))
      p.f_srmf = fidelity(rho, srmf_local_pair_state(p.angles, spec.spin, PairKind::rung).rho);
    out.push_back(p);
  }
  return out;
}

}  // namespace zigzag
