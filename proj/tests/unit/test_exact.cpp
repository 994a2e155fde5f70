#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "support/oracles.hpp"
#include "zigzag/common/error.hpp"
#include "zigzag/exact/density_matrix.hpp"
#include "zigzag/exact/ground_state.hpp"
#include "zigzag/exact/landscape.hpp"
#include "zigzag/meanfield/classical.hpp"
#include "zigzag/model/dimer.hpp"
#include "zigzag/model/hamiltonian.hpp"
#include "zigzag/model/operators.hpp"

using namespace zigzag;
using std::numbers::pi;

namespace {

LadderSpec ladder(int n, int twice_s, double J, double Jp, double J2, double J2p,
                  Boundary b = Boundary::periodic) {
  return build_spec(n, SpinValue{twice_s}, CouplingPattern::uniform(n, J, Jp, J2, J2p), b);
}

double dense_ground(const LadderSpec& s) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(oracle::kron_hamiltonian(s), Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

DensityMatrix maximally_mixed(int d) {
  return DensityMatrix{{0, 1}, d, Eigen::MatrixXcd::Identity(d * d, d * d) / double(d * d)};
}

// Rung state of the S = 1/2 pair ansatz, then rotated about y by theta * rung.
StateVector pair_mf_state(int n, double zeta, double phi, double tau, double theta) {
  auto ops = local_spin_matrices(SpinValue{1});
  const std::complex<double> i(0, 1);
  Eigen::VectorXcd s(4), kz(4), ky(4);
  s << 0, 1, -1, 0;
  s /= std::sqrt(2.0);
  // K_mu |s> = (S_up - S_lo)|s>
  auto on = [&](const Eigen::MatrixXcd& a, int site) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(4, 4);
    for (int c = 0; c < 4; ++c) {
      const int lo = c % 2, up = c / 2;
      for (int r = 0; r < 2; ++r) {
        if (site == 0) out(r + 2 * up, c) += a(r, lo);
        else out(lo + 2 * r, c) += a(r, up);
      }
    }
    return out;
  };
  ky = (on(ops.sy, 1) - on(ops.sy, 0)) * s;
  kz = (on(ops.sz, 1) - on(ops.sz, 0)) * s;
  Eigen::VectorXcd rung = std::cos(zeta / 2) * (std::sin(phi / 2) * s + std::cos(phi / 2) * i * ky) -
                          std::exp(i * tau) * std::sin(zeta / 2) * kz;
  rung.normalize();
  StateVector psi = StateVector::zero(2 * n, 2);
  psi.amplitudes(0) = 1.0;
  Eigen::VectorXcd acc = Eigen::VectorXcd::Ones(1);
  for (int r = 0; r < n; ++r) {
    const double a = theta * r;
    Eigen::MatrixXcd u = std::cos(a / 2) * Eigen::MatrixXcd::Identity(2, 2) - i * std::sin(a / 2) * 2.0 * ops.sy;
    Eigen::MatrixXcd u2 = on(u, 0) * on(u, 1);
    Eigen::VectorXcd v = u2 * rung;
    Eigen::VectorXcd next(acc.size() * 4);
    for (Eigen::Index b = 0; b < 4; ++b) next.segment(b * acc.size(), acc.size()) = v(b) * acc;
    acc = next;
  }
  psi.amplitudes = acc;
  return psi;
}

}  // namespace

TEST_SUITE("exact") {

TEST_CASE("sector basis is a bijection onto fixed Sz") {
  auto s = ladder(4, 1, 1, 1, 0, 0);
  std::size_t total = 0;
  for (int tsz : available_sectors(s)) {
    SectorBasis b(s, tsz);
    BasisCodec codec(s.n_sites(), s.local_dim());
    for (std::size_t k = 0; k < b.dimension(); ++k) {
      CHECK(codec.twice_sz(b.config(k)) == tsz);
      CHECK(b.index_of(b.config(k)) == k);
    }
    total += b.dimension();
  }
  CHECK(total == s.dimension());
  CHECK(SectorBasis(s, 0).dimension() == 70);
  auto t = ladder(2, 2, 1, 0.5, 0.2, 0.2);
  CHECK(available_sectors(t).front() == -8);
  CHECK(SectorBasis(t, 0).dimension() == 19);
}

TEST_CASE("sector Hamiltonian is the restriction of the full one") {
  auto s = ladder(2, 2, 1, 0.7, 0.3, 0.1);
  Eigen::MatrixXcd h = oracle::kron_hamiltonian(s);
  for (int tsz : {0, 2, 4}) {
    SectorBasis b(s, tsz);
    Eigen::MatrixXd hs = sector_hamiltonian_dense(s, b);
    for (std::size_t r = 0; r < b.dimension(); ++r)
      for (std::size_t c = 0; c < b.dimension(); ++c)
        CHECK(std::abs(hs(r, c) - h(b.config(r), b.config(c))) < 1e-13);
  }
}

TEST_CASE("Heisenberg ring of eight spins") {
  auto s = ladder(4, 1, 1, 1, 0, 0);
  auto r = lanczos_ground(s, 0);
  auto d = dense_spectrum(s, SectorBasis(s, 0), 1);
  CHECK(d.energies[0] == doctest::Approx(-3.6510934).epsilon(1e-7));
  CHECK(r.energies[0] == doctest::Approx(d.energies[0]).epsilon(1e-12));
  CHECK(r.converged);
  CHECK(r.residuals[0] < 1e-9);
}

TEST_CASE("dimer line ground state") {
  auto s = ladder(4, 1, 1, 0.6, 0.3, 0.3);
  GroundStateOptions o;
  o.dense_threshold = 0;
  auto r = lanczos_ground(s, 0, LanczosOptions{.n_levels = 2});
  CHECK(r.energies[0] == doctest::Approx(-3.0).epsilon(1e-12));
  CHECK(r.energies[1] > -3.0 + 1e-3);
  auto g = ground_state_full(s, o);
  CHECK(g.energy == doctest::Approx(-3.0).epsilon(1e-12));
  CHECK(pure_fidelity(g.state, dimer_state(s)) > 1 - 1e-10);
}

TEST_CASE("Majumdar-Ghosh point is two-fold degenerate") {
  auto s = ladder(4, 1, 1, 1, 0.5, 0.5);
  auto r = lanczos_ground(s, 0, LanczosOptions{.n_levels = 3});
  REQUIRE(r.degeneracy_groups.size() >= 2);
  CHECK(r.degeneracy_groups[0].size() == 2);
  CHECK(r.energies[0] == doctest::Approx(-3.0).epsilon(1e-12));
  CHECK(r.energies[1] == doctest::Approx(-3.0).epsilon(1e-12));
  auto levels = low_levels(s, 3);
  CHECK(levels[0].degeneracy == 2);
}

TEST_CASE("ground state sweeps") {
  auto s = ladder(3, 2, 1, 0.4, 0.2, 0.2, Boundary::open);
  CHECK(ground_state_full(s).energy == doctest::Approx(-6.0).epsilon(1e-12));
  CHECK(ground_state_full(ladder(4, 1, 1, 1.6, 0.8, 0.8)).energy < -3.0 - 1e-6);
  GroundStateOptions full;
  full.full_sweep = true;
  auto h = ladder(2, 3, 1, 0.3, 0.9, 0.2);
  CHECK(ground_state_full(h, full).energy == doctest::Approx(dense_ground(h)).epsilon(1e-11));
  CHECK(ground_state_full(h).energy == doctest::Approx(dense_ground(h)).epsilon(1e-11));
  // ferromagnetic-leaning couplings are outside the model; odd site counts need a full sweep
  auto odd = ladder(3, 1, 1, 0.8, 0.1, 0.7, Boundary::open);
  CHECK(ground_state_full(odd, full).energy == doctest::Approx(dense_ground(odd)).epsilon(1e-11));
}

TEST_CASE("Lanczos matches dense diagonalization") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 4; ++trial) {
    auto s = ladder(trial < 2 ? 4 : 3, trial < 2 ? 1 : 2, 1, u(rng), u(rng), u(rng),
                    trial < 2 ? Boundary::periodic : Boundary::open);
    SectorBasis b(s, 0);
    auto d = dense_spectrum(s, b, 3);
    auto l = lanczos_ground(s, b, LanczosOptions{.n_levels = 3});
    for (int k = 0; k < 3; ++k) CHECK(l.energies[k] == doctest::Approx(d.energies[k]).epsilon(1e-10));
    for (double res : l.residuals) CHECK(res < 1e-9);
  }
}

TEST_CASE("variational consistency") {
  for (double jp : {0.3, 0.8, 1.4}) {
    auto s = ladder(4, 1, 1, jp, 0.35, 0.35);
    const double e0 = ground_state_full(s).energy;
    CHECK(e0 <= energy_expectation(s, dimer_state(s)) + 1e-12);
    auto c = s.uniform_couplings();
    REQUIRE(c.has_value());
    auto ph = classical_phase(*c, s.spin);
    CHECK(e0 <= energy_expectation(s, spiral_state(s, ph.angles)) + 1e-12);
    for (double th : {0.0, pi / 2, pi})
      CHECK(e0 <= energy_expectation(s, pair_mf_state(4, 0.7, 2.1, 0.3, th)) + 1e-12);
  }
  auto s = ladder(3, 1, 1, 0.8, 0.3, 0.4, Boundary::open);
  const double e0 = ground_state_full(s, GroundStateOptions{.full_sweep = true}).energy;
  CHECK(e0 <= energy_expectation(s, pair_mf_state(3, 1.1, 0.4, 1.2, 0.77)) + 1e-12);
}

TEST_CASE("reduced density matrices of the dimer state") {
  for (int ts = 1; ts <= 3; ++ts) {
    SpinValue sp{ts};
    const int n = ts == 1 ? 3 : 2;
    auto s = build_spec(n, sp, CouplingPattern::uniform(n, 1, 0.2, 0.1, 0.1), Boundary::open);
    auto d = dimer_state(s);
    auto rung = reduced_density_matrix(d, {2, 3});
    auto sing = singlet_state(sp);
    Eigen::MatrixXcd proj = sing.amplitudes * sing.amplitudes.adjoint();
    CHECK((rung.matrix - proj).cwiseAbs().maxCoeff() < 1e-14);
    auto off = reduced_density_matrix(d, {1, 2});
    const int dd = sp.local_dim();
    CHECK((off.matrix - Eigen::MatrixXcd::Identity(dd * dd, dd * dd) / double(dd * dd)).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(rung.valid());
    CHECK(off.valid());
  }
  std::vector<Eigen::VectorXcd> sites;
  for (int k = 0; k < 4; ++k) sites.push_back(coherent_state(SpinValue{2}, 0.3 * k + 0.1, 0.2 * k));
  auto p = product_state(sites);
  auto r = reduced_density_matrix(p, {1, 3});
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(r.matrix);
  CHECK(es.eigenvalues()(8) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(std::abs(es.eigenvalues()(7)) < 1e-13);
  CHECK_THROWS_AS(reduced_density_matrix(p, {1, 1}), InvalidInput);
  CHECK_THROWS_AS(reduced_density_matrix(p, {4}), InvalidInput);
  CHECK_THROWS_AS(reduced_density_matrix(p, {0, 1, 2}, 20), CapExceeded);
}

TEST_CASE("partial trace consistency") {
  std::mt19937_64 rng(17);
  auto psi = oracle::random_state(5, 2, rng);
  // trace out site 4 first, then sites 1 and 3
  auto step = reduced_density_matrix(psi, {0, 1, 2, 3});
  Eigen::MatrixXcd direct = reduced_density_matrix(psi, {0, 2}).matrix;
  Eigen::MatrixXcd two = Eigen::MatrixXcd::Zero(4, 4);
  for (int a = 0; a < 16; ++a)
    for (int b = 0; b < 16; ++b) {
      if (((a >> 1) & 1) != ((b >> 1) & 1) || ((a >> 3) & 1) != ((b >> 3) & 1)) continue;
      const int ra = (a & 1) | (((a >> 2) & 1) << 1), rb = (b & 1) | (((b >> 2) & 1) << 1);
      two(ra, rb) += step.matrix(a, b);
    }
  CHECK((two - direct).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("fidelity and Bures angle") {
  std::mt19937_64 rng(23);
  for (int ts = 1; ts <= 4; ++ts) {
    SpinValue sp{ts};
    const int d = sp.local_dim();
    auto sing = pure_density_matrix(singlet_state(sp).amplitudes, {0, 1}, d);
    CHECK(fidelity(sing, sing) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fidelity(sing, maximally_mixed(d)) == doctest::Approx(1.0 / d).epsilon(1e-12));
    CHECK(fidelity(maximally_mixed(d), sing) == doctest::Approx(1.0 / d).epsilon(1e-12));
  }
  auto a = oracle::random_state(2, 2, rng), b = oracle::random_state(2, 2, rng);
  auto ra = pure_density_matrix(a.amplitudes, {0, 1}, 2), rb = pure_density_matrix(b.amplitudes, {0, 1}, 2);
  CHECK(fidelity(ra, rb) == doctest::Approx(std::abs(inner(a, b))).epsilon(1e-10));
  CHECK(fidelity(ra, rb) == doctest::Approx(fidelity(rb, ra)).epsilon(1e-12));
  CHECK(bures_angle(ra, ra) == doctest::Approx(0.0).epsilon(1e-6));
  Eigen::VectorXcd e0 = Eigen::VectorXcd::Zero(4), e1 = Eigen::VectorXcd::Zero(4);
  e0(0) = 1, e1(3) = 1;
  CHECK(bures_angle(pure_density_matrix(e0, {0, 1}, 2), pure_density_matrix(e1, {0, 1}, 2)) ==
        doctest::Approx(pi / 2));
  auto mix = maximally_mixed(2);
  auto sing = pure_density_matrix(singlet_state(SpinValue{1}).amplitudes, {0, 1}, 2);
  CHECK(bures_angle(sing, mix) == doctest::Approx(pi / 3).epsilon(1e-12));
  DensityMatrix bad{{0}, 2, Eigen::MatrixXcd::Identity(2, 2)};
  CHECK_THROWS_AS(fidelity(bad, bad), InvalidInput);
  DensityMatrix neg{{0}, 2, Eigen::MatrixXcd::Zero(2, 2)};
  neg.matrix(0, 0) = 1.5, neg.matrix(1, 1) = -0.5;
  CHECK_THROWS_AS(fidelity(neg, neg), InvalidInput);
}

TEST_CASE("off-rung dimer pair vs spiral pair") {
  for (int ts = 1; ts <= 4; ++ts) {
    SpinValue sp{ts};
    const int d = sp.local_dim();
    auto pair = pure_density_matrix(coherent_pair(sp, 2.3), {0, 1}, d);
    CHECK(fidelity(maximally_mixed(d), pair) == doctest::Approx(1.0 / d).epsilon(1e-10));
  }
}

TEST_CASE("fidelity monotonicity under partial trace") {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 20; ++k) {
    auto a = oracle::random_state(4, 2, rng), b = oracle::random_state(4, 2, rng);
    const double global = std::abs(inner(a, b));
    const double local = fidelity(reduced_density_matrix(a, {0, 1}), reduced_density_matrix(b, {0, 1}));
    CHECK(global <= local + 1e-10);
  }
}

TEST_CASE("pair spin projectors") {
  for (int ts = 1; ts <= 4; ++ts) {
    SpinValue sp{ts};
    const int d = sp.local_dim();
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(d * d, d * d);
    for (int j = 0; j <= ts; ++j) {
      Eigen::MatrixXcd p = pair_spin_projector(sp, j);
      CHECK((p * p - p).cwiseAbs().maxCoeff() < 1e-10);
      CHECK(p.trace().real() == doctest::Approx(2 * j + 1).epsilon(1e-10));
      sum += p;
    }
    CHECK((sum - Eigen::MatrixXcd::Identity(d * d, d * d)).cwiseAbs().maxCoeff() < 1e-10);
    auto sing = singlet_state(sp).amplitudes;
    CHECK((pair_spin_projector(sp, 0) - sing * sing.adjoint()).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("symmetry-restored pair states") {
  SpinValue half{1};
  auto anti = srmf_local_pair_state(SpiralAngles{0.0, pi}, half, PairKind::rung);
  CHECK(anti.weights[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(anti.weights[1] == doctest::Approx(0.5).epsilon(1e-12));
  Eigen::MatrixXcd expect = 0.5 * pair_spin_projector(half, 0) + 0.5 / 3.0 * pair_spin_projector(half, 1);
  CHECK((anti.rho.matrix - expect).cwiseAbs().maxCoeff() < 1e-12);
  auto para = srmf_local_pair_state(SpiralAngles{0.0, 0.0}, half, PairKind::rung);
  CHECK(std::abs(para.weights[0]) < 1e-14);
  auto big = srmf_local_pair_state(SpiralAngles{0.0, 0.0}, SpinValue{4}, PairKind::rung);
  CHECK(big.weights[4] == doctest::Approx(1.0).epsilon(1e-12));
  // off-rung pair angle is theta - phi
  auto off = srmf_local_pair_state(SpiralAngles{1.0, 1.0}, SpinValue{2}, PairKind::off_rung);
  CHECK(off.weights[2] == doctest::Approx(1.0).epsilon(1e-12));

  for (int ts = 1; ts <= 4; ++ts) {
    SpinValue sp{ts};
    const int d = sp.local_dim();
    auto ops = local_spin_matrices(sp);
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
    for (auto kind : {PairKind::rung, PairKind::off_rung}) {
      auto r = srmf_local_pair_state(SpiralAngles{0.9, 2.2}, sp, kind);
      double total = 0;
      for (double w : r.weights) total += w;
      CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(r.rho.valid());
      for (const auto* s : {&ops.sx, &ops.sy, &ops.sz}) {
        Eigen::MatrixXcd jt = oracle::embed(*s, 0, 2, d) + oracle::embed(*s, 1, 2, d);
        CHECK((jt * r.rho.matrix - r.rho.matrix * jt).cwiseAbs().maxCoeff() < 1e-12);
      }
    }
  }
}

TEST_CASE("fidelity landscape") {
  std::vector<LadderSpec> line;
  for (double jp : {0.2, 0.5, 0.8}) line.push_back(ladder(4, 1, 1, jp, jp / 2, jp / 2));
  auto pts = fidelity_landscape(line, {FidelityReference::singlet, FidelityReference::srmf});
  for (const auto& p : pts) {
    CHECK(p.f_singlet == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(p.f_srmf >= 0.0);
    CHECK(p.f_srmf <= 1.0 + 1e-12);
  }
  std::vector<LadderSpec> cross;
  std::vector<double> j2s{0.1, 0.2, 0.3, 0.4, 0.5};
  for (double j2 : j2s) cross.push_back(ladder(4, 1, 1, 0.6, j2, j2));
  auto c = fidelity_landscape(cross, {FidelityReference::singlet});
  std::size_t best = 0;
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k].f_singlet > c[best].f_singlet) best = k;
  CHECK(j2s[best] == 0.3);
  CHECK(std::isnan(c[0].f_srmf));
  auto far = fidelity_landscape({ladder(4, 4, 1, 1.8, 0.9, 0.9)}, {FidelityReference::singlet});
  CHECK(far[0].f_singlet < 0.5);
}

TEST_CASE("relative energy curve and departure") {
  auto tmpl = ladder(4, 1, 1, 0, 0, 0);
  std::vector<double> grid;
  for (int k = 0; k <= 9; ++k) grid.push_back(0.1 * k);
  auto curve = relative_energy_curve(tmpl, SweepVariable::JpOnDimerLine, grid);
  for (const auto& p : curve) CHECK(std::abs(p.relative) < 1e-10);
  auto tj2 = ladder(4, 1, 1, 0.8, 0, 0);
  std::vector<double> j2s{0.2, 0.3, 0.4, 0.5, 0.6};
  auto c2 = relative_energy_curve(tj2, SweepVariable::J2, j2s);
  for (const auto& p : c2) CHECK(p.relative >= -1e-12);
  CHECK(std::abs(c2[2].relative) < 1e-10);
  CHECK(c2[0].relative > 1e-6);
  CHECK(c2[4].relative > 1e-6);
  CHECK(parse_sweep_variable("Jp_line") == SweepVariable::JpOnDimerLine);
  CHECK_THROWS_AS(parse_sweep_variable("K"), InvalidInput);
}

}  // TEST_SUITE
