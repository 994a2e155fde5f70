#include <cmath>
#include <random>

#include "doctest.h"
#include "support/oracles.hpp"
#include "zigzag/common/error.hpp"
#include "zigzag/model/dimer.hpp"
#include "zigzag/model/hamiltonian.hpp"
#include "zigzag/model/operators.hpp"

using namespace zigzag;

namespace {

LadderSpec ladder(int n, int twice_s, double J, double Jp, double J2, double J2p,
                  Boundary b = Boundary::periodic) {
  return build_spec(n, SpinValue{twice_s}, CouplingPattern::uniform(n, J, Jp, J2, J2p), b);
}

CouplingPattern random_dimer_pattern(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  CouplingPattern c;
  for (int i = 0; i < n; ++i) {
    c.J.push_back(0.5 + u(rng));
    const double jp = u(rng), split = u(rng);
    c.Jp.push_back(jp);
    c.J2.push_back(jp * split);
    c.J2p.push_back(jp - jp * split);
  }
  return c;
}

}  // namespace

TEST_SUITE("model") {

TEST_CASE("spin values parse exactly") {
  CHECK(SpinValue::parse("1/2").twice_s == 1);
  CHECK(SpinValue::parse("3/2").twice_s == 3);
  CHECK(SpinValue::parse("2").twice_s == 4);
  CHECK(SpinValue::parse("1.5").twice_s == 3);
  CHECK(SpinValue::parse("5/2").str() == "5/2");
  CHECK_THROWS_AS(SpinValue::parse("0"), InvalidInput);
  CHECK_THROWS_AS(SpinValue::parse("1/3"), InvalidInput);
  CHECK_THROWS_AS(SpinValue::parse("abc"), InvalidInput);
}

TEST_CASE("ladder matrix elements follow sqrt(S(S+1) - m(m+1))") {
  for (int ts = 1; ts <= 6; ++ts) {
    SpinValue s{ts};
    for (int d = 0; d < s.local_dim(); ++d) {
      const double m = d - s.s();
      CHECK(raise_element(s, d) == doctest::Approx(std::sqrt(std::max(0.0, s.casimir() - m * (m + 1)))).epsilon(1e-15));
      CHECK(lower_element(s, d) == doctest::Approx(std::sqrt(std::max(0.0, s.casimir() - m * (m - 1)))).epsilon(1e-15));
    }
  }
}

TEST_CASE("coherent states point along the requested axis") {
  for (int ts : {1, 2, 3, 4}) {
    SpinValue s{ts};
    auto ops = local_spin_matrices(s);
    const double polar = 0.7;
    Eigen::VectorXcd v = coherent_state(s, polar);
    CHECK(v.norm() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK((v.adjoint() * ops.sx * v)(0, 0).real() == doctest::Approx(s.s() * std::sin(polar)).epsilon(1e-13));
    CHECK((v.adjoint() * ops.sz * v)(0, 0).real() == doctest::Approx(s.s() * std::cos(polar)).epsilon(1e-13));
    CHECK(std::abs((v.adjoint() * ops.sy * v)(0, 0)) < 1e-14);
  }
}

TEST_CASE("build_spec validates and reports dimensions") {
  auto s = ladder(4, 1, 1.0, 0.6, 0.3, 0.3);
  CHECK(s.dimension() == 256);
  CHECK(s.uniform);
  CHECK_THROWS_AS(ladder(3, 1, 1, 0.6, 0.3, 0.3), InvalidInput);
  CHECK(ladder(4, 5, 1, 0.6, 0.3, 0.3).dimension() == 1679616);
  CHECK_THROWS_AS(ladder(4, 1, 1, -0.1, 0.3, 0.3), InvalidInput);
  CHECK_THROWS_AS(build_spec(4, SpinValue{1}, CouplingPattern::uniform(3, 1, 0, 0, 0), Boundary::periodic),
                  InvalidInput);
  CHECK_THROWS_AS(build_spec(12, SpinValue{3}, CouplingPattern::uniform(12, 1, 0, 0, 0), Boundary::periodic),
                  CapExceeded);
  CHECK(ladder(3, 2, 1, 0.4, 0.2, 0.2, Boundary::open).dimension() == 729);
  auto nu = build_spec(2, SpinValue{1}, CouplingPattern{{1, 2}, {0, 0}, {0, 0}, {0, 0}}, Boundary::periodic);
  CHECK_FALSE(nu.uniform);
}

TEST_CASE("singlet amplitudes") {
  auto s = singlet_state(SpinValue{1});
  // index = lower digit + 2 * upper digit; digit 1 is m = +1/2
  CHECK(s.amplitudes(1).real() == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK(s.amplitudes(2).real() == doctest::Approx(-1 / std::sqrt(2.0)));
  CHECK(std::abs(s.amplitudes(0)) == 0.0);
  CHECK(std::abs(s.amplitudes(3)) == 0.0);

  auto t = singlet_state(SpinValue{2});
  const double c = 1 / std::sqrt(3.0);
  // (m1, m2) = (1, -1): lower digit 2, upper digit 0 -> index 2; (0,0) -> 4; (-1,1) -> 6
  CHECK(t.amplitudes(2).real() == doctest::Approx(c));
  CHECK(t.amplitudes(4).real() == doctest::Approx(-c));
  CHECK(t.amplitudes(6).real() == doctest::Approx(c));
  CHECK(t.norm() == doctest::Approx(1.0));
}

TEST_CASE("total rung spin annihilates the singlet") {
  for (int ts = 1; ts <= 5; ++ts) {
    auto s = singlet_state(SpinValue{ts});
    for (Component mu : {Component::x, Component::y, Component::z})
      CHECK(apply_rung_operator(RungOperator::J, 0, mu, s).amplitudes.norm() < 1e-14);
  }
}

TEST_CASE("K acting on the singlet has norm^2 (4/3) S(S+1)") {
  for (int ts = 1; ts <= 5; ++ts) {
    SpinValue sp{ts};
    auto s = singlet_state(sp);
    for (Component mu : {Component::x, Component::y, Component::z}) {
      const double n2 = apply_rung_operator(RungOperator::K, 0, mu, s).amplitudes.squaredNorm();
      CHECK(n2 == doctest::Approx(4.0 / 3.0 * sp.casimir()).epsilon(1e-13));
    }
  }
}

TEST_CASE("rung operator algebra") {
  std::mt19937_64 rng(7);
  const Component c[3] = {Component::x, Component::y, Component::z};
  const std::complex<double> i(0, 1);
  for (int ts : {1, 2, 3}) {
    auto psi = oracle::random_state(4, ts + 1, rng);
    auto app = [&](RungOperator k, int mu, const StateVector& v) { return apply_rung_operator(k, 1, c[mu], v); };
    for (int a = 0; a < 3; ++a) {
      const int b = (a + 1) % 3, g = (a + 2) % 3;
      using R = RungOperator;
      // [J_a, J_b] = i J_c, [J_a, K_b] = i K_c, [K_a, K_b] = i J_c
      auto comm = [&](R x, int p, R y, int q) {
        return (app(x, p, app(y, q, psi)).amplitudes - app(y, q, app(x, p, psi)).amplitudes).eval();
      };
      CHECK((comm(R::J, a, R::J, b) - i * app(R::J, g, psi).amplitudes).norm() < 1e-12);
      CHECK((comm(R::J, a, R::K, b) - i * app(R::K, g, psi).amplitudes).norm() < 1e-12);
      CHECK((comm(R::K, a, R::K, b) - i * app(R::J, g, psi).amplitudes).norm() < 1e-12);
      CHECK(comm(R::J, a, R::K, a).norm() < 1e-12);
    }
  }
}

TEST_CASE("dimer state structure") {
  SpinValue half{1};
  auto one = dimer_state(build_spec(1, half, CouplingPattern::uniform(1, 1, 0, 0, 0), Boundary::open));
  CHECK((one.amplitudes - singlet_state(half).amplitudes).norm() == 0.0);
  auto s = ladder(4, 2, 1, 0.3, 0.15, 0.15);
  auto d = dimer_state(s);
  CHECK(d.norm() == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(d.in_sector(0, 0.0));
}

TEST_CASE("dimer energy and its eigenstate flag") {
  CHECK(dimer_energy(ladder(4, 1, 1, 0.6, 0.3, 0.3)).energy == doctest::Approx(-3.0));
  CHECK(dimer_energy(ladder(4, 1, 1, 0.6, 0.3, 0.3)).eigenstate);
  CHECK(dimer_energy(ladder(3, 2, 1, 0.4, 0.2, 0.2, Boundary::open)).energy == doctest::Approx(-6.0));
  auto nu = build_spec(2, SpinValue{1}, CouplingPattern{{1, 2}, {0, 0}, {0, 0}, {0, 0}}, Boundary::periodic);
  auto de = dimer_energy(nu);
  CHECK(de.energy == doctest::Approx(-2.25));
  auto d = dimer_state(nu);
  CHECK(energy_expectation(nu, d) == doctest::Approx(-2.25).epsilon(1e-14));
  auto off = ladder(2, 1, 1, 0.6, 0.4, 0.3);
  CHECK_FALSE(dimer_energy(off).eigenstate);
}

TEST_CASE("dimer constraint per rung") {
  CouplingPattern c{{1, 1, 1}, {0.6, 0.6, 0.6}, {0.3, 0.4, 0.45}, {0.3, 0.3, 0.15}};
  auto ok = check_dimer_constraint(c);
  CHECK(ok[0]);
  CHECK_FALSE(ok[1]);
  CHECK(ok[2]);
  CHECK(check_dimer_constraint(CouplingPattern{{1}, {0.6}, {0.3}, {0.3 + 1e-9}}, 1e-8)[0]);
}

TEST_CASE("sufficient ground-state condition") {
  CHECK(sufficient_gs_condition(ladder(4, 1, 1, 0.9, 0.45, 0.45)));
  CHECK_FALSE(sufficient_gs_condition(ladder(4, 2, 1, 0.6, 0.3, 0.3)));
  CHECK(sufficient_gs_condition(ladder(4, 2, 1, 0.4, 0.2, 0.2)));
  CHECK_FALSE(sufficient_gs_condition(ladder(4, 1, 1, 0.6, 0.4, 0.4)));
  auto nu = build_spec(2, SpinValue{1}, CouplingPattern{{1, 2}, {0, 0}, {0, 0}, {0, 0}}, Boundary::periodic);
  CHECK_THROWS_AS(sufficient_gs_condition(nu), Unsupported);
}

TEST_CASE("ground-state lower bound") {
  CHECK(gs_energy_lower_bound(ladder(4, 1, 1, 0.6, 0.3, 0.3)) == doctest::Approx(-3.0).epsilon(1e-14));
  CHECK(gs_energy_lower_bound(ladder(3, 2, 1, 0.4, 0.2, 0.2, Boundary::open)) == doctest::Approx(-6.0).epsilon(1e-14));
  // explicit enumeration for S = 1, J' = 0.8: l = 0, 1, 2
  const double jp = 0.8, dj = 0.2, s = 1.0;
  double v[3];
  for (int l = 0; l < 3; ++l) {
    const double a = std::abs(s - l);
    v[l] = jp / 2 * a * (a + 1) + dj / 2 * l * (l + 1) - (1 + jp / 2) * s * (s + 1);
  }
  const double expect = 3 * std::min({v[0], v[1], v[2]});
  const double got = gs_energy_lower_bound(ladder(3, 2, 1, 0.8, 0.4, 0.4, Boundary::open));
  CHECK(got == doctest::Approx(expect).epsilon(1e-14));
  CHECK(got < -6.0);
  CHECK_THROWS_AS(gs_energy_lower_bound(ladder(4, 1, 1, 0.6, 0.2, 0.2)), Unsupported);
}

TEST_CASE("matrix-free Hamiltonian matches the Kronecker oracle") {
  std::mt19937_64 rng(11);
  std::vector<LadderSpec> specs{ladder(2, 1, 1, 0.6, 0.3, 0.3), ladder(2, 2, 1, 0.7, 0.2, 0.5, Boundary::open),
                                ladder(3, 1, 0.9, 0.4, 0.35, 0.1, Boundary::open),
                                build_spec(4, SpinValue{1}, random_dimer_pattern(4, rng), Boundary::periodic),
                                ladder(2, 3, 1, 0.5, 0.25, 0.25)};
  for (const auto& s : specs) {
    Eigen::MatrixXcd h_ref = oracle::kron_hamiltonian(s);
    Eigen::MatrixXd h = hamiltonian_dense(s);
    CHECK((h.cast<std::complex<double>>() - h_ref).cwiseAbs().maxCoeff() < 1e-13);
    auto psi = oracle::random_state(s.n_sites(), s.local_dim(), rng);
    auto out = apply_hamiltonian(s, psi);
    CHECK((out.amplitudes - h_ref * psi.amplitudes).norm() < 1e-12);
  }
}

TEST_CASE("dense Hamiltonian: trace, columns, rung spectrum") {
  auto s = ladder(2, 1, 1, 0.6, 0.3, 0.3);
  Eigen::MatrixXd h = hamiltonian_dense(s);
  CHECK(h.rows() == 16);
  CHECK(std::abs(h.trace()) < 1e-14);
  CHECK((h - h.transpose()).cwiseAbs().maxCoeff() == 0.0);
  for (std::uint64_t c = 0; c < 16; ++c) {
    auto col = apply_hamiltonian(s, StateVector::basis(s, c));
    CHECK((col.amplitudes.real() - h.col(static_cast<Eigen::Index>(c))).cwiseAbs().maxCoeff() == 0.0);
  }
  // J only, S = 1: each rung contributes J/2 [j(j+1) - 2 S(S+1)] with multiplicity 2j+1
  auto r = ladder(2, 2, 1, 0, 0, 0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(hamiltonian_dense(r));
  std::vector<double> expect;
  for (int j1 = 0; j1 <= 2; ++j1)
    for (int j2 = 0; j2 <= 2; ++j2)
      for (int k = 0; k < (2 * j1 + 1) * (2 * j2 + 1); ++k)
        expect.push_back(0.5 * (j1 * (j1 + 1) - 4) + 0.5 * (j2 * (j2 + 1) - 4));
  std::sort(expect.begin(), expect.end());
  for (std::size_t k = 0; k < expect.size(); ++k) CHECK(es.eigenvalues()(k) == doctest::Approx(expect[k]).epsilon(1e-12));
  CHECK_THROWS_AS(hamiltonian_dense(ladder(4, 3, 1, 0, 0, 0)), CapExceeded);
}

TEST_CASE("apply_hamiltonian basics") {
  std::mt19937_64 rng(3);
  auto s = ladder(4, 1, 1, 0.6, 0.3, 0.3);
  auto z = apply_hamiltonian(s, StateVector::zero(s));
  CHECK(z.amplitudes.norm() == 0.0);
  auto a = oracle::random_state(8, 2, rng), b = oracle::random_state(8, 2, rng);
  auto ha = apply_hamiltonian(s, a), hb = apply_hamiltonian(s, b);
  CHECK(std::abs(inner(b, ha) - std::conj(inner(a, hb))) < 1e-12);
  auto d = dimer_state(s);
  auto hd = apply_hamiltonian(s, d);
  CHECK((hd.amplitudes + 3.0 * d.amplitudes).cwiseAbs().maxCoeff() < 1e-12);
  CHECK_THROWS_AS(apply_hamiltonian(ladder(2, 1, 1, 0, 0, 0), d), InvalidInput);
}

TEST_CASE("dimer is an eigenstate for random couplings obeying the constraint") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 10; ++trial) {
    for (int ts : {1, 2}) {
      const int n = ts == 1 ? 4 : 3;
      auto s = build_spec(n, SpinValue{ts}, random_dimer_pattern(n, rng), ts == 1 ? Boundary::periodic : Boundary::open);
      auto d = dimer_state(s);
      auto hd = apply_hamiltonian(s, d);
      const double e = dimer_energy(s).energy;
      CHECK((hd.amplitudes - e * d.amplitudes).norm() < 1e-10);
    }
  }
}

TEST_CASE("SU(2) symmetry of H") {
  std::mt19937_64 rng(5);
  for (const auto& s : {ladder(2, 2, 1, 0.7, 0.2, 0.5), ladder(4, 1, 1, 0.6, 0.4, 0.1)}) {
    auto psi = oracle::random_state(s.n_sites(), s.local_dim(), rng);
    auto a = apply_hamiltonian(s, apply_total_spin(psi, Component::z));
    auto b = apply_total_spin(apply_hamiltonian(s, psi), Component::z);
    CHECK((a.amplitudes - b.amplitudes).norm() < 1e-12);
    auto c = apply_hamiltonian(s, apply_total_spin_squared(psi));
    auto d = apply_total_spin_squared(apply_hamiltonian(s, psi));
    CHECK((c.amplitudes - d.amplitudes).norm() < 1e-11);
  }
}

TEST_CASE("gamma parameter") {
  CHECK(gamma_of(ladder(4, 1, 1, 0.6, 0.3, 0.3)).gamma == 0.0);
  CHECK(gamma_of(ladder(4, 1, 1, 0.6, 0.8, 0.8)).gamma == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(gamma_of(ladder(4, 2, 1, 0.6, 0.3, 0.3)).gamma == 0.0);
  CHECK(gamma_of(ladder(4, 2, 1, 0.6, 0.4, 0.4)).gamma == doctest::Approx(0.2 * 8.0 / 3.0).epsilon(1e-14));
}

}  // TEST_SUITE
