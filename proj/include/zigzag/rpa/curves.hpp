#pragma once

#include <vector>

#include "zigzag/model/ladder.hpp"

namespace zigzag {

// Energies per rung divided by |E_dimer| per rung = J S(S+1).
struct RPACurvePoint {
  double j2 = 0.0;
  double gamma = 0.0;
  double mf_single = 0.0;   // classical spiral / colinear minimum
  double rpa_single = 0.0;  // NaN where the spin-wave spectrum is unstable
  double mf_pair = 0.0;     // S = 1/2 pair MF, general-S singlet/spiral family otherwise
  double rpa_pair = 0.0;    // dimer + zero-point shift; NaN for |gamma| >= 1
  double ed = 0.0;          // NaN when not requested
};

struct RPACurveOptions {
  int n_k = 4096;
  int ed_rungs = 0;  // 0 skips ED
};

// Sweeps J2 at fixed J, J'.
std::vector<RPACurvePoint> rpa_energy_curves(SpinValue spin, double J, double Jp, const std::vector<double>& j2_grid,
                                             const RPACurveOptions& opts = {});

}  // namespace zigzag
