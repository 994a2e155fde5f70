#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zigzag/exact/eigensolver.hpp"
#include "zigzag/model/ladder.hpp"

namespace zigzag {

struct GroundStateOptions {
  LanczosOptions lanczos;
  // false: scan 2Sz = 0 and 2Sz = 2 (every SU(2) multiplet has an Sz = 0 member on
  // an even number of sites, so this already finds the global minimum);
  // true: scan every sector.
  bool full_sweep = false;
  // sectors up to this size are diagonalized densely
  std::size_t dense_threshold = 400;
};

struct GroundState {
  double energy = 0.0;
  StateVector state;
  int twice_sz = 0;
  double residual = 0.0;
  bool converged = true;
};

GroundState ground_state_full(const LadderSpec& spec, const GroundStateOptions& opts = {});

// Lowest levels of one sector via Lanczos or dense, whichever `opts` selects.
SpectrumResult sector_levels(const LadderSpec& spec, int twice_sz, int n_levels, const GroundStateOptions& opts,
                             bool keep_states);

struct Level {
  double energy = 0.0;
  int degeneracy = 0;  // counts states in all sectors
};

// Distinct low-lying levels from the 2Sz = 0 sector plus the 2Sz = +2 sector
// counted twice (its mirror 2Sz = -2 is degenerate by spin flip).
std::vector<Level> low_levels(const LadderSpec& spec, int n_per_sector, const GroundStateOptions& opts = {});

enum class SweepVariable { J, Jp, J2, JpOnDimerLine };
std::string to_string(SweepVariable v);
SweepVariable parse_sweep_variable(const std::string& text);

// Copy of a uniform template with one coupling replaced (JpOnDimerLine sets J' = x, J2 = J2' = x/2).
LadderSpec with_coupling(const LadderSpec& tmpl, SweepVariable var, double x);

struct CurvePoint {
  double x = 0.0;
  double e_gs = 0.0;
  double e_dim = 0.0;
  double relative = 0.0;  // E_GS / E_dim - 1
};

std::vector<CurvePoint> relative_energy_curve(const LadderSpec& tmpl, SweepVariable var,
                                              const std::vector<double>& grid, const GroundStateOptions& opts = {});

struct DeparturePoint {
  std::optional<double> jp;  // first J' on the J' = 2 J2 line where E_GS/E_dim - 1 exceeds the threshold
  double lower_bracket = 0.0;
  double upper_bracket = 0.0;
};

// Scans J' upward from `jp_min` in steps of `step` up to `jp_max`, then bisects to `tol`.
DeparturePoint dimer_departure_point(SpinValue spin, int n_rungs, double jp_min, double jp_max, double step,
                                     double tol = 1e-3, double threshold = 1e-8, const GroundStateOptions& opts = {});

}  // namespace zigzag
