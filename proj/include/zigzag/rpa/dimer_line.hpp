#pragma once

#include "zigzag/model/spin.hpp"
#include "zigzag/rpa/spiral.hpp"

namespace zigzag {

// omega_k = J sqrt(1 - gamma cos(2 pi k / N)), k = 0..N-1, three degenerate channels.
// |gamma| > 1 marks the unstable momenta (NaN) and clears the stability flag.
RPASpectrum dimer_rpa_dispersion(double gamma, int n_rungs, double J = 1.0);

// E(x) = int_0^{pi/2} sqrt(1 - x sin^2 u) du for x <= 1, by adaptive Gauss-Kronrod quadrature.
double elliptic_e(double x);

struct EnergyCorrection {
  double closed_form = 0.0;  // 2 (1 - [sqrt(1+g) E(2/(1+1/g)) + sqrt(1-g) E(2/(1-1/g))] / pi)
  double quadrature = 0.0;   // 2 (1 - <sqrt(1 - g cos k)>_BZ), trapezoid on n_nodes points
  bool agree = false;        // within 1e-6
};

// Delta E / E_dimer in the S = 1/2 normalization. Throws StabilityError for |gamma| >= 1.
EnergyCorrection dimer_rpa_energy_correction(double gamma, int n_nodes = 20000);

// Zero-point shift per rung, (3/2) J (<sqrt(1 - g cos k)> - 1), valid for any S.
double dimer_rpa_energy_shift_per_rung(double gamma, double J = 1.0, int n_nodes = 20000);

bool dimer_rpa_stability(double gamma);

// |2 J2 - J'| below which |gamma| < 1: (3/4) J / (S(S+1)).
double dimer_region_half_width(SpinValue spin, double J = 1.0);

}  // namespace zigzag
