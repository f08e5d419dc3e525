#pragma once

// Spherical-coordinate solutions of the three-dimensional oscillator,
// Phi = R(rho) Y(theta, phi), with quaternionic radial part
//
//   R_uv(rho) = rho^l e^{-rho^2/2} [cos(theta) N_u L_u^(l+1/2)(rho^2)
//                                   + sin(theta) N_v L_v^(l+1/2)(rho^2) j]
//
// and quaternionic spherical harmonic
//
//   Y_l^{m1 m2} = cos(theta) Y_l^{m1} + sin(theta) Y_l^{m2} j.
//
// Everything here is in the dimensionless radius rho = sqrt(mu omega/hbar) r;
// radial energies are returned in physical units.

#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qho/gram.hpp"
#include "qho/params.hpp"
#include "qho/quadrature.hpp"
#include "qho/quaternion.hpp"
#include "qho/specfun.hpp"

namespace qho {

namespace detail {

inline Complex horner(const std::vector<Complex>& c, double x) {
  Complex acc(0.0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

inline std::vector<Complex> poly_derivative(const std::vector<Complex>& c) {
  if (c.size() <= 1) return {Complex(0.0)};
  std::vector<Complex> d(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = static_cast<double>(i) * c[i];
  return d;
}

}  // namespace detail

/// Radial solution: per slot, complex coefficients of a polynomial in
/// s = rho^2, sharing the prefactor rho^l e^{-rho^2/2}.
struct RadialState {
  int u = 0;
  int v = 0;
  int l = 0;
  double theta = 0.0;
  std::array<std::vector<Complex>, 2> slot_polys;
  PhysicalParams params{};

  /// Slot polynomial rewritten in rho, with the rho^l factor absorbed.
  std::vector<Complex> rho_polynomial(int slot) const {
    const auto& c = slot_polys[slot];
    std::vector<Complex> g(static_cast<std::size_t>(l) + 2 * c.size(), Complex(0.0));
    for (std::size_t i = 0; i < c.size(); ++i) g[l + 2 * i] = c[i];
    return g;
  }

  Quaternion value(double rho) const {
    const double env = std::pow(rho, l) * std::exp(-0.5 * rho * rho);
    return Quaternion::from_symplectic(env * detail::horner(slot_polys[0], rho * rho),
                                       env * detail::horner(slot_polys[1], rho * rho));
  }

  std::string label() const {
    std::ostringstream os;
    os.precision(17);
    os << "(u=" << u << ",v=" << v << ",l=" << l << ",theta=" << theta << ")";
    return os.str();
  }
};

inline RadialState radial_state(int u, int v, int l, double theta, const PhysicalParams& params = {}) {
  if (u < 0 || v < 0 || l < 0) throw ValidationError("radial_state: u, v, l must be non-negative");
  if (!std::isfinite(theta)) throw ValidationError("radial_state: theta must be finite");
  params.validate();
  RadialState r{u, v, l, theta, {}, params};
  const double alpha = l + 0.5;
  auto slot = [&](int degree, double weight) {
    const double scale = weight * laguerre_norm_const(degree, l);
    std::vector<Complex> out;
    for (double c : laguerre_coefficients(degree, alpha)) out.emplace_back(scale * c);
    return out;
  };
  r.slot_polys[0] = slot(u, std::cos(theta));
  r.slot_polys[1] = slot(v, std::sin(theta));
  return r;
}

/// integral_0^inf Sc(R conj(R')) rho^2 d rho, from exact half-line moments.
inline double radial_inner(const RadialState& a, const RadialState& b) {
  double acc = 0.0;
  for (int slot = 0; slot < 2; ++slot) {
    const auto& pa = a.slot_polys[slot];
    const auto& pb = b.slot_polys[slot];
    for (std::size_t i = 0; i < pa.size(); ++i) {
      for (std::size_t j = 0; j < pb.size(); ++j) {
        const int power = static_cast<int>(a.l + b.l + 2 * (i + j));
        const double moment = a.l == b.l ? radial_moment(a.l + static_cast<int>(i + j))
                                         : half_line_moment(power + 2);
        acc += (pa[i] * std::conj(pb[j])).real() * moment;
      }
    }
  }
  return acc;
}

/// Same integral by half-line Gauss quadrature (weight rho^2 e^{-rho^2}).
inline double radial_inner_quad(const RadialState& a, const RadialState& b, int order = 64) {
  const QuadratureRule rule = make_rule(RuleKind::half_line_gaussian, order);
  return rule.integrate([&](double rho) {
    // value() carries e^{-rho^2/2} twice; undo it to leave the rule's weight.
    return sc(a.value(rho) * conj(b.value(rho))) * std::exp(rho * rho);
  });
}

inline double radial_gram_closed_form(const RadialState& a, const RadialState& b) {
  if (a.l != b.l) return 0.0;
  return (a.u == b.u ? std::cos(a.theta) * std::cos(b.theta) : 0.0) +
         (a.v == b.v ? std::sin(a.theta) * std::sin(b.theta) : 0.0);
}

namespace detail {

template <class State, class Eval, class Inner, class Closed>
GramMatrix assemble_gram(const std::vector<State>& states, Eval&& eval, Inner&& inner_fn,
                         Closed&& closed, const std::vector<std::vector<double>>& sample_points) {
  GramMatrix g;
  const auto count = static_cast<Eigen::Index>(states.size());
  g.entries.resize(count, count);
  g.closed_form.resize(count, count);
  for (const auto& s : states) g.labels.push_back(s.label());
  for (Eigen::Index r = 0; r < count; ++r) {
    for (Eigen::Index c = 0; c < count; ++c) {
      g.entries(r, c) = inner_fn(states[r], states[c]);
      g.closed_form(r, c) = closed(states[r], states[c]);
    }
  }
  for (std::size_t r = 0; r < states.size(); ++r) {
    for (std::size_t c = r + 1; c < states.size(); ++c) {
      bool parallel = true;
      for (const auto& pt : sample_points) {
        parallel = parallel && is_parallel(eval(states[r], pt), eval(states[c], pt));
      }
      g.parallelism.push_back({r, c, parallel, states[r].theta == states[c].theta});
    }
  }
  return g;
}

inline std::vector<std::vector<double>> sample_points(int count, int coords,
                                                      const std::array<double, 2>& lo_hi_first,
                                                      const std::array<double, 2>& lo_hi_rest) {
  std::mt19937_64 rng(20210u);
  std::vector<std::vector<double>> pts;
  for (int i = 0; i < count; ++i) {
    std::vector<double> p;
    for (int c = 0; c < coords; ++c) {
      const auto& r = c == 0 ? lo_hi_first : lo_hi_rest;
      p.push_back(std::uniform_real_distribution<double>(r[0], r[1])(rng));
    }
    pts.push_back(std::move(p));
  }
  return pts;
}

}  // namespace detail

/// Gram matrix of radial states; all must share l.
inline GramMatrix radial_gram(const std::vector<RadialState>& states) {
  for (const auto& s : states) {
    if (s.l != states.front().l) throw ValidationError("radial_gram: states must share l");
  }
  return detail::assemble_gram(
      states, [](const RadialState& s, const std::vector<double>& p) { return s.value(p[0]); },
      radial_inner, radial_gram_closed_form, detail::sample_points(5, 1, {0.1, 4.0}, {0.0, 0.0}));
}

/// E_{u l} = (2u + l + 3/2) hbar omega.
inline double radial_energy(int u, int l, const PhysicalParams& params = {}) {
  if (u < 0 || l < 0) throw DomainError("radial_energy: u and l must be non-negative");
  return (2.0 * u + l + 1.5) * params.quantum();
}

/// 40 points rho = 0.15, 0.30, ..., 6.0.
inline std::vector<double> default_radial_grid() {
  std::vector<double> g;
  for (int i = 1; i <= 40; ++i) g.push_back(0.15 * i);
  return g;
}

/// sup over the grid and both slots of
///   | -R''/2 - R'/rho + (rho^2/2 + l(l+1)/(2 rho^2) - E_slot/(hbar omega)) R |,
/// derivatives taken exactly on rho^l P(rho^2) e^{-rho^2/2}.
inline double radial_ode_residual(const RadialState& state, std::array<double, 2> slot_energies,
                                  const std::vector<double>& grid) {
  for (double rho : grid) {
    if (!(rho > 0.0)) throw DomainError("radial_ode_residual: grid points must be positive");
  }
  const double ll1 = state.l * (state.l + 1.0);
  double worst = 0.0;
  for (int slot = 0; slot < 2; ++slot) {
    const double e = slot_energies[slot] / state.params.quantum();
    const auto g = state.rho_polynomial(slot);
    const auto g1 = detail::poly_derivative(g);
    const auto g2 = detail::poly_derivative(g1);
    for (double rho : grid) {
      const double env = std::exp(-0.5 * rho * rho);
      const Complex gv = detail::horner(g, rho);
      const Complex g1v = detail::horner(g1, rho);
      const Complex g2v = detail::horner(g2, rho);
      const Complex f = gv * env;
      const Complex f1 = (g1v - rho * gv) * env;
      const Complex f2 = (g2v - 2.0 * rho * g1v + (rho * rho - 1.0) * gv) * env;
      const Complex r = -0.5 * f2 - f1 / rho + (0.5 * rho * rho + 0.5 * ll1 / (rho * rho) - e) * f;
      worst = std::max(worst, std::abs(r));
    }
  }
  return worst;
}

inline double radial_ode_residual(const RadialState& state, std::array<double, 2> slot_energies) {
  return radial_ode_residual(state, slot_energies, default_radial_grid());
}

/// Largest |R(rho)| over a grid.
inline double radial_max_abs(const RadialState& state, const std::vector<double>& grid) {
  double m = 0.0;
  for (double rho : grid) m = std::max(m, abs(state.value(rho)));
  return m;
}

/// <H_radial> = integral Sc((H R) conj(R)) rho^2 d rho in physical energy
/// units, with H_radial = -(1/2)(d^2/d rho^2 + (2/rho) d/d rho) + rho^2/2 + l(l+1)/(2 rho^2).
/// Computed exactly: rho^2 (H R) e^{rho^2/2} is a polynomial.
inline double radial_expectation_energy(const RadialState& state) {
  const double ll1 = state.l * (state.l + 1.0);
  double acc = 0.0;
  for (int slot = 0; slot < 2; ++slot) {
    const auto g = state.rho_polynomial(slot);
    const auto g1 = detail::poly_derivative(g);
    const auto g2 = detail::poly_derivative(g1);
    // h = (H f) e^{rho^2/2} = -g''/2 + rho g' - g'/rho + 3g/2 + l(l+1) g/(2 rho^2);
    // q = rho^2 h has no negative powers.
    std::vector<Complex> q(g.size() + 3, Complex(0.0));
    for (std::size_t i = 0; i < g2.size(); ++i) q[i + 2] -= 0.5 * g2[i];
    for (std::size_t i = 0; i < g1.size(); ++i) {
      q[i + 3] += g1[i];
      q[i + 1] -= g1[i];
    }
    for (std::size_t i = 0; i < g.size(); ++i) {
      q[i + 2] += 1.5 * g[i];
      q[i] += 0.5 * ll1 * g[i];
    }
    for (std::size_t i = 0; i < q.size(); ++i) {
      for (std::size_t j = 0; j < g.size(); ++j) {
        if (q[i] == Complex(0.0) || g[j] == Complex(0.0)) continue;
        acc += (q[i] * std::conj(g[j])).real() * half_line_moment(static_cast<int>(i + j));
      }
    }
  }
  return acc * state.params.quantum();
}

/// cos^2(theta) E_{u l} + sin^2(theta) E_{v l}.
inline double full_spherical_energy(int u, int v, int l, double theta, const PhysicalParams& params = {}) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return c * c * radial_energy(u, l, params) + s * s * radial_energy(v, l, params);
}

/// Quaternionic spherical harmonic cos(theta) Y_l^{m1} + sin(theta) Y_l^{m2} j.
/// With `conjugate_slot1` the j-slot holds conj(Y_l^{m2}) instead, mirroring
/// the conjugated second component of the one-dimensional states.
struct QSphericalHarmonic {
  int l = 0;
  int m1 = 0;
  int m2 = 0;
  double theta = 0.0;
  bool conjugate_slot1 = false;

  void validate() const {
    if (l < 0) throw ValidationError("QSphericalHarmonic: l must be non-negative");
    if (m1 < -l || m1 > l || m2 < -l || m2 > l) {
      throw ValidationError("QSphericalHarmonic: m1 and m2 must lie in [-l, l]");
    }
    if (!std::isfinite(theta)) throw ValidationError("QSphericalHarmonic: theta must be finite");
  }

  /// Value at polar angle `polar` and azimuth `azimuth`.
  Quaternion operator()(double polar, double azimuth) const {
    const Complex y1 = sph_harm(l, m1, polar, azimuth);
    Complex y2 = sph_harm(l, m2, polar, azimuth);
    if (conjugate_slot1) y2 = std::conj(y2);
    return Quaternion::from_symplectic(std::cos(theta) * y1, std::sin(theta) * y2);
  }

  std::string label() const {
    std::ostringstream os;
    os.precision(17);
    os << "(l=" << l << ",m1=" << m1 << ",m2=" << m2 << ",theta=" << theta
       << (conjugate_slot1 ? ",conj" : "") << ")";
    return os.str();
  }
};

inline QSphericalHarmonic qsph_harm(const QSphericalHarmonic& spec) {
  spec.validate();
  return spec;
}

/// Gauss-Legendre in cos(polar) times uniform in azimuth.
struct SphereQuadrature {
  QuadratureRule polar;
  QuadratureRule azimuth;

  static SphereQuadrature make(int polar_order = 64, int azimuth_order = 128) {
    return {make_rule(RuleKind::gauss_legendre, polar_order),
            make_rule(RuleKind::uniform_periodic, azimuth_order)};
  }

  template <class F>
  double integrate(F&& f) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < polar.size(); ++i) {
      const double th = std::acos(polar.nodes[i]);
      for (std::size_t k = 0; k < azimuth.size(); ++k) {
        acc += polar.weights[i] * azimuth.weights[k] * f(th, azimuth.nodes[k]);
      }
    }
    return acc;
  }
};

/// integral over the sphere of Sc(Y conj(Y')) d Omega.
inline double angular_inner(const QSphericalHarmonic& a, const QSphericalHarmonic& b,
                            const SphereQuadrature& quad) {
  return quad.integrate([&](double th, double ph) { return sc(a(th, ph) * conj(b(th, ph))); });
}

/// delta_ll' [cos cos' delta_{m1 m1'} + sin sin' <Y2, Y2'>], where a
/// conjugated slot uses conj(Y_l^m) = (-1)^m Y_l^{-m}.
inline double angular_gram_closed_form(const QSphericalHarmonic& a, const QSphericalHarmonic& b) {
  if (a.l != b.l) return 0.0;
  auto slot1 = [](const QSphericalHarmonic& h) {
    if (!h.conjugate_slot1) return std::pair<int, double>{h.m2, 1.0};
    return std::pair<int, double>{-h.m2, h.m2 % 2 == 0 ? 1.0 : -1.0};
  };
  const auto [ia, sa] = slot1(a);
  const auto [ib, sb] = slot1(b);
  return (a.m1 == b.m1 ? std::cos(a.theta) * std::cos(b.theta) : 0.0) +
         (ia == ib ? sa * sb * std::sin(a.theta) * std::sin(b.theta) : 0.0);
}

/// Gram matrix of quaternionic spherical harmonics. Each harmonic is
/// tabulated once on the sphere grid, so the cost is one dot product per entry.
inline GramMatrix angular_gram(const std::vector<QSphericalHarmonic>& specs,
                               const SphereQuadrature& quad = SphereQuadrature::make()) {
  for (const auto& s : specs) s.validate();
  std::vector<double> weights;
  std::vector<std::pair<double, double>> nodes;
  for (std::size_t i = 0; i < quad.polar.size(); ++i) {
    for (std::size_t k = 0; k < quad.azimuth.size(); ++k) {
      weights.push_back(quad.polar.weights[i] * quad.azimuth.weights[k]);
      nodes.emplace_back(std::acos(quad.polar.nodes[i]), quad.azimuth.nodes[k]);
    }
  }
  std::vector<std::vector<Quaternion>> tables;
  for (const auto& s : specs) {
    std::vector<Quaternion> values;
    values.reserve(nodes.size());
    for (const auto& [th, ph] : nodes) values.push_back(s(th, ph));
    tables.push_back(std::move(values));
  }
  auto index_of = [&](const QSphericalHarmonic& h) { return static_cast<std::size_t>(&h - specs.data()); };
  return detail::assemble_gram(
      specs,
      [](const QSphericalHarmonic& s, const std::vector<double>& p) { return s(p[0], p[1]); },
      [&](const QSphericalHarmonic& a, const QSphericalHarmonic& b) {
        const auto& ta = tables[index_of(a)];
        const auto& tb = tables[index_of(b)];
        double acc = 0.0;
        for (std::size_t i = 0; i < weights.size(); ++i) acc += weights[i] * sc(ta[i] * conj(tb[i]));
        return acc;
      },
      angular_gram_closed_form, detail::sample_points(5, 2, {0.1, 3.0}, {0.0, 6.2}));
}

}  // namespace qho
