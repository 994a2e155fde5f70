#include "zigzag/model/ladder.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "zigzag/common/error.hpp"

namespace zigzag {

std::string to_string(Boundary b) { return b == Boundary::periodic ? "periodic" : "open"; }

Boundary parse_boundary(const std::string& text) {
  if (text == "periodic" || text == "pbc") return Boundary::periodic;
  if (text == "open" || text == "obc") return Boundary::open;
  throw InvalidInput("unknown boundary '" + text + "'");
}

CouplingPattern CouplingPattern::uniform(int n_rungs, double J, double Jp, double J2, double J2p) {
  if (n_rungs < 0) throw InvalidInput("negative rung count");
  auto n = static_cast<std::size_t>(n_rungs);
  return CouplingPattern{std::vector<double>(n, J), std::vector<double>(n, Jp), std::vector<double>(n, J2),
                         std::vector<double>(n, J2p)};
}

bool CouplingPattern::is_uniform() const {
  auto flat = [](const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [&](double x) { return x == v.front(); });
  };
  return flat(J) && flat(Jp) && flat(J2) && flat(J2p);
}

std::optional<std::uint64_t> hilbert_dimension(int n_sites, int local_dim, std::uint64_t cap) {
  std::uint64_t dim = 1;
  for (int s = 0; s < n_sites; ++s) {
    if (dim > cap / static_cast<std::uint64_t>(local_dim)) return std::nullopt;
    dim *= static_cast<std::uint64_t>(local_dim);
  }
  if (dim > cap) return std::nullopt;
  return dim;
}

std::uint64_t LadderSpec::dimension() const {
  auto d = hilbert_dimension(n_sites(), local_dim(), UINT64_MAX);
  if (!d) throw CapExceeded("Hilbert dimension overflows 64 bits");
  return *d;
}

std::optional<UniformCouplings> LadderSpec::uniform_couplings(double tol) const {
  if (!uniform || n_rungs == 0) return std::nullopt;
  const auto& c = couplings;
  if (std::abs(c.J2[0] - c.J2p[0]) > tol * std::max(1.0, std::abs(c.J2[0]))) return std::nullopt;
  return UniformCouplings{c.J[0], c.Jp[0], c.J2[0]};
}

LadderSpec build_spec(int n_rungs, SpinValue spin, CouplingPattern couplings, Boundary boundary,
                      const BuildOptions& opts) {
  if (n_rungs < 1) throw InvalidInput("n_rungs must be positive");
  if (spin.twice_s < 1) throw InvalidInput("spin must be at least 1/2");
  const auto n = static_cast<std::size_t>(n_rungs);
  for (const auto* arr : {&couplings.J, &couplings.Jp, &couplings.J2, &couplings.J2p}) {
    if (arr->size() != n) throw InvalidInput("coupling array length differs from n_rungs");
    for (double x : *arr) {
      if (!std::isfinite(x)) throw InvalidInput("non-finite coupling");
      if (x < 0.0) throw InvalidInput("negative coupling (only antiferromagnetic couplings are supported)");
    }
  }
  if (boundary == Boundary::periodic && n_rungs % 2 != 0)
    throw InvalidInput("periodic boundary requires an even number of rungs");
  if (!hilbert_dimension(2 * n_rungs, spin.local_dim(), opts.size_cap))
    throw CapExceeded("Hilbert dimension exceeds the size cap of " + std::to_string(opts.size_cap));
  LadderSpec spec;
  spec.n_rungs = n_rungs;
  spec.spin = spin;
  spec.uniform = couplings.is_uniform();
  spec.couplings = std::move(couplings);
  spec.boundary = boundary;
  return spec;
}

LadderSpec uniform_ladder(int n_rungs, SpinValue spin, const UniformCouplings& c, Boundary boundary,
                          const BuildOptions& opts) {
  return build_spec(n_rungs, spin, CouplingPattern::uniform(n_rungs, c.J, c.Jp, c.J2, c.J2), boundary, opts);
}

std::vector<Bond> ladder_bonds(const LadderSpec& spec) {
  const int n_sites = spec.n_sites();
  const bool periodic = spec.boundary == Boundary::periodic;
  std::map<std::pair<int, int>, double> acc;
  auto add = [&](int a, int b, double j) {
    if (j == 0.0) return;
    if (b >= n_sites) {
      if (!periodic) return;
      b -= n_sites;
    }
    if (a == b) throw InvalidInput("ladder too small: a bond closes on itself");
    acc[{std::min(a, b), std::max(a, b)}] += j;
  };
  const auto& c = spec.couplings;
  for (int i = 0; i < spec.n_rungs; ++i) {
    add(2 * i, 2 * i + 1, c.J[i]);
    add(2 * i + 1, 2 * i + 2, c.Jp[i]);
    add(2 * i + 1, 2 * i + 3, c.J2[i]);
    add(2 * i, 2 * i + 2, c.J2p[i]);
  }
  std::vector<Bond> bonds;
  bonds.reserve(acc.size());
  for (const auto& [key, j] : acc) bonds.push_back({key.first, key.second, j});
  return bonds;
}

}  // namespace zigzag
