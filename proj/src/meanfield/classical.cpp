#include "zigzag/meanfield/classical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "zigzag/common/error.hpp"
#include "zigzag/model/spin.hpp"

namespace zigzag {

using std::numbers::pi;

double pair_angle(const SpiralAngles& a, PairKind kind) {
  return kind == PairKind::rung ? a.phi : a.theta - a.phi;
}

std::string to_string(PhaseLabel label) {
  switch (label) {
    case PhaseLabel::Dimer: return "Dimer";
    case PhaseLabel::Neel_0pi: return "Neel_0pi";
    case PhaseLabel::Neel_pi0: return "Neel_pi0";
    case PhaseLabel::Neel_pipi: return "Neel_pipi";
    case PhaseLabel::Spiral: return "Spiral";
    default: return "ColinearBroken";
  }
}

double spiral_energy(const SpiralAngles& a, const UniformCouplings& c, SpinValue spin, int n_rungs) {
  const double s2 = spin.s() * spin.s();
  return n_rungs * s2 * (c.J * std::cos(a.phi) + c.Jp * std::cos(a.theta - a.phi) + 2.0 * c.J2 * std::cos(a.theta));
}

Eigen::Vector2d spiral_gradient(const SpiralAngles& a, const UniformCouplings& c, SpinValue spin) {
  const double s2 = spin.s() * spin.s();
  const double dj = c.Jp * std::sin(a.theta - a.phi);
  return {s2 * (-dj - 2.0 * c.J2 * std::sin(a.theta)), s2 * (-c.J * std::sin(a.phi) + dj)};
}

std::vector<ClassicalExtremum> classical_extrema(const UniformCouplings& c, SpinValue spin) {
  std::vector<ClassicalExtremum> out;
  auto push = [&](double th, double ph, PhaseLabel l) {
    SpiralAngles a{th, ph};
    out.push_back({a, spiral_energy(a, c, spin), l});
  };
  push(0.0, pi, PhaseLabel::Neel_pipi);
  push(pi, 0.0, PhaseLabel::Neel_pi0);
  push(pi, pi, PhaseLabel::Neel_0pi);
  if (c.J > 0.0 && c.Jp > 0.0 && c.J2 > 0.0) {
    const double ct = c.J * c.Jp / (8.0 * c.J2 * c.J2) - c.J / (2.0 * c.Jp) - c.Jp / (2.0 * c.J);
    if (std::abs(ct) < 1.0) {
      // theta < 0 puts phi in (0, pi); the mirror (-theta, -phi) is the same state
      const double th = -std::acos(ct);
      double ph = std::atan2(c.Jp * std::sin(th), c.J + c.Jp * std::cos(th));
      if (std::sin(ph) < 0.0 || (std::sin(ph) == 0.0 && ph < 0.0)) ph += pi;
      if (ph > pi) ph -= 2.0 * pi;
      SpiralAngles a{th, ph};
      // |cos(phi)| <= 1 holds by construction; the stationarity check catches
      // the case where the sign branch is inconsistent
      if (spiral_gradient(a, c, spin).norm() < 1e-9 * std::max({c.J, c.Jp, c.J2}) * spin.s() * spin.s())
        out.push_back({a, spiral_energy(a, c, spin), PhaseLabel::Spiral});
    }
  }
  return out;
}

PhasePoint classical_phase(const UniformCouplings& c, SpinValue spin) {
  auto ext = classical_extrema(c, spin);
  const ClassicalExtremum* best = nullptr;
  for (const auto& e : ext) {
    if (!best) {
      best = &e;
      continue;
    }
    const double tie = 1e-12 * std::max(1.0, std::abs(best->energy_per_rung));
    const bool spiral = e.label == PhaseLabel::Spiral;
    if (spiral ? e.energy_per_rung < best->energy_per_rung - tie : e.energy_per_rung < best->energy_per_rung)
      best = &e;
  }
  PhasePoint p;
  p.label = best->label;
  p.energy_per_rung = best->energy_per_rung;
  p.angles = best->angles;
  p.gamma = c.J != 0.0 ? (2.0 * c.J2 - c.Jp) / c.J * spin.casimir() / 0.75 : 0.0;
  return p;
}

double dimer_vs_classical_crossover(SpinValue spin) { return std::sqrt(2.0 / spin.s()); }

double line_phi_tilde(double jp_over_j) {
  if (std::abs(jp_over_j) > 2.0) throw InvalidInput("no line spiral for |J'/J| > 2");
  return 2.0 * (pi - std::acos(-0.5 * jp_over_j));
}

StateVector spiral_state(const LadderSpec& spec, const SpiralAngles& a) {
  std::vector<Eigen::VectorXcd> sites;
  sites.reserve(static_cast<std::size_t>(spec.n_sites()));
  for (int i = 0; i < spec.n_rungs; ++i) {
    sites.push_back(coherent_state(spec.spin, a.theta * i));
    sites.push_back(coherent_state(spec.spin, a.theta * i + a.phi));
  }
  return product_state(sites);
}

}  // namespace zigzag
