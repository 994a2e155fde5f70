#pragma once

#include <vector>

#include "zigzag/exact/ground_state.hpp"
#include "zigzag/meanfield/angles.hpp"

namespace zigzag {

enum class FidelityReference { singlet, srmf };

struct LandscapePoint {
  double Jp = 0.0;
  double J2 = 0.0;
  double energy = 0.0;
  double f_singlet = 0.0;  // rung RDM vs |singlet><singlet|
  double f_srmf = 0.0;     // rung RDM vs symmetry-restored classical pair; NaN unless requested
  SpiralAngles angles;     // classical optimum used for the srmf reference
};

// Ground state of each uniform spec, rung (0, 1) reduced density matrix, fidelity
// against the singlet and, if asked, the symmetry-restored classical pair.
std::vector<LandscapePoint> fidelity_landscape(const std::vector<LadderSpec>& grid,
                                               const std::vector<FidelityReference>& refs,
                                               const GroundStateOptions& opts = {});

}  // namespace zigzag
