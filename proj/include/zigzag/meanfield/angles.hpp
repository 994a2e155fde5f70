#pragma once

namespace zigzag {

// Coplanar spiral: site 2i at angle theta*i, site 2i+1 at theta*i + phi.
struct SpiralAngles {
  double theta = 0.0;  // pitch between consecutive rungs, (-pi, pi]
  double phi = 0.0;    // intra-rung angle, [0, pi]
};

enum class PairKind { rung, off_rung };  // off_rung: the J' pair (2i+1, 2i+2)

// Relative angle of the two spins in a pair of the spiral.
double pair_angle(const SpiralAngles& a, PairKind kind);

}  // namespace zigzag
