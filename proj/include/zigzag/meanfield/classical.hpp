#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "zigzag/meanfield/angles.hpp"
#include "zigzag/model/ladder.hpp"
#include "zigzag/model/state.hpp"

namespace zigzag {

// Neel_ab: colinear state whose relative angle across the J' bond is a and across the rung
// is b, i.e. (theta - phi, phi) = (a, b) mod 2 pi.
enum class PhaseLabel { Dimer, Neel_0pi, Neel_pi0, Neel_pipi, Spiral, ColinearBroken };
std::string to_string(PhaseLabel label);

struct PhasePoint {
  PhaseLabel label = PhaseLabel::Dimer;
  double energy_per_rung = 0.0;
  SpiralAngles angles;
  double gamma = 0.0;
};

// N S^2 (J cos(phi) + J' cos(theta - phi) + 2 J2 cos(theta)).
double spiral_energy(const SpiralAngles& a, const UniformCouplings& c, SpinValue spin, int n_rungs = 1);
// d/dtheta, d/dphi of spiral_energy per rung.
Eigen::Vector2d spiral_gradient(const SpiralAngles& a, const UniformCouplings& c, SpinValue spin);

struct ClassicalExtremum {
  SpiralAngles angles;
  double energy_per_rung = 0.0;
  PhaseLabel label = PhaseLabel::Neel_0pi;
};

// Colinear (0,pi), (pi,0), (pi,pi) and, when the angle equations have a real
// solution, the spiral with cos(theta) = J J'/(8 J2^2) - J/(2J') - J'/(2J).
std::vector<ClassicalExtremum> classical_extrema(const UniformCouplings& c, SpinValue spin);

// Lowest extremum; colinear wins ties within 1e-12 relative.
PhasePoint classical_phase(const UniformCouplings& c, SpinValue spin);

// J'/J where -J S(S+1) equals the line spiral energy -J S^2 (1 + (J'/J)^2 / 2): sqrt(2/S).
double dimer_vs_classical_crossover(SpinValue spin);

// Optimal intra-rung angle on J' = 2 J2: 2 (pi - acos(-J'/(2J))).
double line_phi_tilde(double jp_over_j);

// Product of coherent states in the xz plane following the spiral angles.
StateVector spiral_state(const LadderSpec& spec, const SpiralAngles& a);

}  // namespace zigzag
