#pragma once

#include <cstdint>
#include <vector>

#include "zigzag/exact/sector.hpp"
#include "zigzag/model/state.hpp"

namespace zigzag {

struct LanczosOptions {
  int max_iter = 400;          // Krylov steps per level
  double tol = 1e-10;          // residual ||H psi - E psi|| target
  int n_levels = 1;
  std::uint64_t seed = 20240611;
  bool keep_states = true;
  double degeneracy_tol = 1e-8;  // relative to |E0|
};

struct SpectrumResult {
  int twice_sz = 0;
  std::vector<double> energies;       // ascending
  std::vector<StateVector> states;    // empty unless requested
  std::vector<double> residuals;
  std::vector<std::vector<std::size_t>> degeneracy_groups;
  bool converged = true;
  int matvecs = 0;
};

// Lowest n_levels eigenpairs in the sector. Each level gets its own Krylov run
// with full reorthogonalization, deflated against the levels already locked, so
// exact degeneracies are resolved one state at a time.
SpectrumResult lanczos_ground(const LadderSpec& spec, const SectorBasis& sector, const LanczosOptions& opts = {});
SpectrumResult lanczos_ground(const LadderSpec& spec, int twice_sz, const LanczosOptions& opts = {});

// Dense diagonalization of the sector block (oracle for small sectors).
SpectrumResult dense_spectrum(const LadderSpec& spec, const SectorBasis& sector, int n_levels, bool keep_states = false,
                              double degeneracy_tol = 1e-8);

// Groups consecutive ascending energies closer than rel_tol * max(|E0|, 1e-300).
std::vector<std::vector<std::size_t>> cluster_levels(const std::vector<double>& sorted, double rel_tol);

}  // namespace zigzag
