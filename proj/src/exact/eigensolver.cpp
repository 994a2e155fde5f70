#include "zigzag/exact/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "zigzag/common/error.hpp"

namespace zigzag {

std::vector<std::vector<std::size_t>> cluster_levels(const std::vector<double>& sorted, double rel_tol) {
  std::vector<std::vector<std::size_t>> groups;
  if (sorted.empty()) return groups;
  const double scale = std::max(std::abs(sorted.front()), 1e-300);
  groups.push_back({0});
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] - sorted[groups.back().back()] <= rel_tol * scale)
      groups.back().push_back(i);
    else
      groups.push_back({i});
  }
  return groups;
}

namespace {

using Vec = Eigen::VectorXd;

void project_out(Vec& w, const std::vector<Vec>& basis) {
  for (const auto& b : basis) w -= b.dot(w) * b;
}

struct LevelResult {
  double energy;
  Vec vector;
  double residual;
  bool converged;
};

LevelResult lanczos_level(const HamiltonianKernel& kernel, const SectorBasis& sector, const std::vector<Vec>& locked,
                          const LanczosOptions& opts, std::mt19937_64& rng, int& matvecs) {
  const auto n = static_cast<Eigen::Index>(sector.dimension());
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vec v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = gauss(rng);
  project_out(v, locked);
  project_out(v, locked);
  double nv = v.norm();
  if (!(nv > 1e-300)) throw InvalidInput("start vector lies in the locked subspace");
  v /= nv;

  const auto free_dim = static_cast<int>(n) - static_cast<int>(locked.size());
  const int kmax = std::min(opts.max_iter, free_dim);
  std::vector<Vec> V{v};
  std::vector<double> alpha, beta;
  Vec w(n);
  double theta = 0.0, resid_est = INFINITY;
  Eigen::VectorXd y;
  bool done = false;
  for (int j = 0; j < kmax && !done; ++j) {
    apply_sector_hamiltonian(kernel, sector, V[j].data(), w.data());
    ++matvecs;
    alpha.push_back(V[j].dot(w));
    w -= alpha.back() * V[j];
    if (j > 0) w -= beta.back() * V[j - 1];
    for (int pass = 0; pass < 2; ++pass) {
      project_out(w, V);
      project_out(w, locked);
    }
    const double b = w.norm();

    const auto m = static_cast<Eigen::Index>(alpha.size());
    Eigen::VectorXd diag = Eigen::Map<Eigen::VectorXd>(alpha.data(), m);
    Eigen::VectorXd sub = m > 1 ? Eigen::VectorXd(Eigen::Map<Eigen::VectorXd>(beta.data(), m - 1)) : Eigen::VectorXd();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
    tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    theta = tri.eigenvalues()(0);
    y = tri.eigenvectors().col(0);
    resid_est = b * std::abs(y(m - 1));

    const double scale = std::max(1.0, std::abs(theta));
    if (resid_est < 0.1 * opts.tol || b < 1e-13 * scale || j + 1 == kmax) done = true;
    if (!done) {
      beta.push_back(b);
      V.push_back(w / b);
    }
  }
  Vec x = Vec::Zero(n);
  for (Eigen::Index k = 0; k < y.size(); ++k) x += y(k) * V[static_cast<std::size_t>(k)];
  project_out(x, locked);
  x.normalize();
  apply_sector_hamiltonian(kernel, sector, x.data(), w.data());
  ++matvecs;
  const double e = x.dot(w);
  const double r = (w - e * x).norm();
  return {e, std::move(x), r, r < opts.tol};
}

void fill_groups(SpectrumResult& res, double tol) { res.degeneracy_groups = cluster_levels(res.energies, tol); }

}  // namespace

SpectrumResult lanczos_ground(const LadderSpec& spec, const SectorBasis& sector, const LanczosOptions& opts) {
  if (sector.dimension() == 0) throw InvalidInput("empty sector");
  if (opts.n_levels < 1) throw InvalidInput("n_levels must be at least 1");
  HamiltonianKernel kernel(spec);
  std::mt19937_64 rng(opts.seed);
  std::vector<Vec> locked;
  std::vector<double> energies, residuals;
  bool converged = true;
  int matvecs = 0;
  const int levels = std::min<int>(opts.n_levels, static_cast<int>(sector.dimension()));
  for (int k = 0; k < levels; ++k) {
    auto lv = lanczos_level(kernel, sector, locked, opts, rng, matvecs);
    // a restart can land below an already locked level; keep a consistent order
    energies.push_back(lv.energy);
    residuals.push_back(lv.residual);
    converged = converged && lv.converged;
    locked.push_back(std::move(lv.vector));
  }
  std::vector<std::size_t> order(energies.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return energies[a] < energies[b]; });

  SpectrumResult res;
  res.twice_sz = sector.twice_sz();
  res.converged = converged;
  res.matvecs = matvecs;
  for (auto i : order) {
    res.energies.push_back(energies[i]);
    res.residuals.push_back(residuals[i]);
    if (opts.keep_states) {
      StateVector s = sector.embed(locked[i], spec.n_sites(), spec.local_dim());
      s.fix_phase();
      res.states.push_back(std::move(s));
    }
  }
  fill_groups(res, opts.degeneracy_tol);
  return res;
}

SpectrumResult lanczos_ground(const LadderSpec& spec, int twice_sz, const LanczosOptions& opts) {
  return lanczos_ground(spec, SectorBasis(spec, twice_sz), opts);
}

SpectrumResult dense_spectrum(const LadderSpec& spec, const SectorBasis& sector, int n_levels, bool keep_states,
                              double degeneracy_tol) {
  if (sector.dimension() > 20'000) throw CapExceeded("dense sector diagonalization limited to 20000 states");
  Eigen::MatrixXd h = sector_hamiltonian_dense(spec, sector);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h, keep_states ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  SpectrumResult res;
  res.twice_sz = sector.twice_sz();
  const int levels = std::min<int>(n_levels, static_cast<int>(h.rows()));
  for (int k = 0; k < levels; ++k) {
    res.energies.push_back(es.eigenvalues()(k));
    if (keep_states) {
      const Eigen::VectorXd x = es.eigenvectors().col(k);
      res.residuals.push_back((h * x - es.eigenvalues()(k) * x).norm());
      StateVector s = sector.embed(x, spec.n_sites(), spec.local_dim());
      s.fix_phase();
      res.states.push_back(std::move(s));
    } else {
      res.residuals.push_back(0.0);
    }
  }
  fill_groups(res, degeneracy_tol);
  return res;
}

}  // namespace zigzag
