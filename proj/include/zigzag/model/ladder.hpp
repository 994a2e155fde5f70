#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zigzag/model/spin.hpp"

namespace zigzag {

enum class Boundary { periodic, open };
std::string to_string(Boundary b);
Boundary parse_boundary(const std::string& text);

// Per-rung couplings. Rung i (0-based) owns sites 2i and 2i+1:
//   J[i]   : S(2i)   . S(2i+1)
//   Jp[i]  : S(2i+1) . S(2i+2)
//   J2[i]  : S(2i+1) . S(2i+3)
//   J2p[i] : S(2i)   . S(2i+2)
// Indices past the last site wrap for periodic ladders and are dropped for open ones.
struct CouplingPattern {
  std::vector<double> J, Jp, J2, J2p;

  static CouplingPattern uniform(int n_rungs, double J, double Jp, double J2, double J2p);
  std::size_t size() const { return J.size(); }
  bool is_uniform() const;
};

// Uniform couplings with J2' = J2, the setting of all mean-field and RPA formulas.
// Energies are in absolute units; formulas that need ratios divide by J.
struct UniformCouplings {
  double J = 1.0;
  double Jp = 0.0;
  double J2 = 0.0;
};

struct LadderSpec {
  int n_rungs = 0;
  SpinValue spin{};
  CouplingPattern couplings;
  Boundary boundary = Boundary::periodic;
  bool uniform = false;

  int n_sites() const { return 2 * n_rungs; }
  int local_dim() const { return spin.local_dim(); }
  std::uint64_t dimension() const;
  // Uniform couplings with J2 == J2'; nullopt otherwise.
  std::optional<UniformCouplings> uniform_couplings(double tol = 1e-14) const;
};

struct BuildOptions {
  std::uint64_t size_cap = 20'000'000;
};

LadderSpec build_spec(int n_rungs, SpinValue spin, CouplingPattern couplings, Boundary boundary,
                      const BuildOptions& opts = {});

LadderSpec uniform_ladder(int n_rungs, SpinValue spin, const UniformCouplings& c,
                          Boundary boundary = Boundary::periodic, const BuildOptions& opts = {});

struct Bond {
  int a = 0;
  int b = 0;
  double coupling = 0.0;
};

// Site pairs with their summed coupling; zero couplings are dropped and
// coincident pairs (tiny periodic ladders) are merged.
std::vector<Bond> ladder_bonds(const LadderSpec& spec);

// (2S+1)^(2N), or nullopt when it exceeds `cap`.
std::optional<std::uint64_t> hilbert_dimension(int n_sites, int local_dim, std::uint64_t cap);

}  // namespace zigzag
