#pragma once

// One-dimensional quaternionic oscillator
//
//   Psi_nm = cos(theta) psi_n + sin(theta) conj(psi_m) j,
//
// where psi_n = A_n H_n(X) e^{-X^2/2} e^{-i E_n t / hbar}. Conjugating psi_m
// flips its time phase, so the j-slot mode carries frequency +E_m/hbar; with
// the energy operator acting as hbar (d/dt | i) both slots then solve the
// Schroedinger equation.

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qho/gram.hpp"
#include "qho/operator.hpp"
#include "qho/quaternion.hpp"
#include "qho/specfun.hpp"
#include "qho/wavestate.hpp"

namespace qho {

/// Quantum numbers and polarization angle (radians) of a basis element.
struct QPair {
  int n = 0;
  int m = 0;
  double theta = 0.0;

  void validate() const {
    if (n < 0 || m < 0) throw ValidationError("QPair: n and m must be non-negative");
    if (!std::isfinite(theta)) throw ValidationError("QPair: theta must be finite");
  }

  std::string label() const {
    std::ostringstream os;
    os.precision(17);
    os << "(" << n << "," << m << "," << theta << ")";
    return os.str();
  }
};

/// E_n = (n + 1/2) hbar omega.
inline double level_energy(int n, const PhysicalParams& params = {}) {
  return (n + 0.5) * params.quantum();
}

namespace detail {

inline WaveState hermite_mode_state(int slot, Complex coeff, int n, double freq,
                                    const PhysicalParams& params) {
  // A_n H_n(X) e^{-X^2/2} = A_n sqrt(2^n n! sqrt(pi)) h_n(X)
  const double amplitude = hermite_norm_const(n, params) * hermite_function_norm(n);
  WaveState s(1, params);
  s.add_mode(Mode{slot, coeff * amplitude, {HermiteExpansion::basis(n)}, freq});
  return s;
}

}  // namespace detail

/// The complex oscillator eigenfunction psi_n in slot 0.
inline WaveState psi_n(int n, const PhysicalParams& params = {}) {
  if (n < 0) throw ValidationError("psi_n: n must be non-negative");
  return detail::hermite_mode_state(0, 1.0, n, -level_energy(n, params) / params.hbar, params);
}

inline WaveState psi_nm(const QPair& q, const PhysicalParams& params = {}) {
  q.validate();
  WaveState s = detail::hermite_mode_state(0, std::cos(q.theta), q.n,
                                           -level_energy(q.n, params) / params.hbar, params);
  s += detail::hermite_mode_state(1, std::sin(q.theta), q.m,
                                  level_energy(q.m, params) / params.hbar, params);
  return s;
}

/// (n cos^2 theta + m sin^2 theta + 1/2) hbar omega.
inline double energy_nm(const QPair& q, const PhysicalParams& params = {}) {
  const double c = std::cos(q.theta);
  const double s = std::sin(q.theta);
  return (q.n * c * c + q.m * s * s + 0.5) * params.quantum();
}

/// The same energy written as a correction to the complex level,
/// (n + 1/2 + (m - n) sin^2 theta) hbar omega.
inline double energy_nm_correction_form(const QPair& q, const PhysicalParams& params = {}) {
  const double s = std::sin(q.theta);
  return (q.n + 0.5 + (q.m - q.n) * s * s) * params.quantum();
}

/// cos(theta_a) cos(theta_b) delta_nn' + sin(theta_a) sin(theta_b) delta_mm'.
inline double gram_closed_form(const QPair& a, const QPair& b) {
  return (a.n == b.n ? std::cos(a.theta) * std::cos(b.theta) : 0.0) +
         (a.m == b.m ? std::sin(a.theta) * std::sin(b.theta) : 0.0);
}

inline constexpr int kParallelSamples = 5;
inline constexpr unsigned kParallelSeed = 20210u;

/// Gram matrix of the Psi_nm built from `pairs`, with the closed form and a
/// pointwise parallelism table (sampled at fixed pseudo-random positions).
///
/// Equal angles alone do not give delta_nn' delta_mm': two elements sharing
/// n (or m) overlap by cos^2 (or sin^2) theta. The table makes this visible
/// rather than hiding it.
inline GramMatrix gram(const std::vector<QPair>& pairs, double t, const PhysicalParams& params = {}) {
  GramMatrix g;
  g.time = t;
  const auto count = static_cast<Eigen::Index>(pairs.size());
  g.entries.resize(count, count);
  g.closed_form.resize(count, count);
  std::vector<WaveState> states;
  for (const auto& q : pairs) {
    states.push_back(psi_nm(q, params));
    g.labels.push_back(q.label());
  }
  for (Eigen::Index r = 0; r < count; ++r) {
    for (Eigen::Index c = 0; c < count; ++c) {
      g.entries(r, c) = inner(states[r], states[c], t);
      g.closed_form(r, c) = gram_closed_form(pairs[r], pairs[c]);
    }
  }

  std::mt19937_64 rng(kParallelSeed);
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  std::vector<double> xs;
  for (int i = 0; i < kParallelSamples; ++i) xs.push_back(dist(rng) / params.length_scale());
  for (std::size_t r = 0; r < pairs.size(); ++r) {
    for (std::size_t c = r + 1; c < pairs.size(); ++c) {
      bool parallel = true;
      for (double x : xs) {
        parallel = parallel && is_parallel(evaluate(states[r], x, t), evaluate(states[c], x, t));
      }
      g.parallelism.push_back({r, c, parallel, pairs[r].theta == pairs[c].theta});
    }
  }
  return g;
}

enum class LadderKind { raise, lower };

/// a = (X + (P|i)) / sqrt(2), a^dagger = (X - (P|i)) / sqrt(2). Since
/// (P|i) = -(d/dX | i)(|i) = d/dX, these reduce to (X -+ d/dX)/sqrt(2)
/// when applied.
inline OperatorExpr ladder(LadderKind which, const PhysicalParams& params = {}) {
  const OperatorExpr pi_right = OperatorExpr::right_i() * momentum(params);
  const double sign = which == LadderKind::lower ? 1.0 : -1.0;
  return (1.0 / std::numbers::sqrt2) * (position() + sign * pi_right);
}

/// [a, a^dagger] = a a^dagger - a^dagger a.
inline OperatorExpr ladder_commutator(const PhysicalParams& params = {}) {
  const OperatorExpr a = ladder(LadderKind::lower, params);
  const OperatorExpr ad = ladder(LadderKind::raise, params);
  return a * ad - ad * a;
}

/// Normalization of (a^dagger)^n e^{-X^2/2}: (mu omega / (pi hbar))^{1/4} / sqrt(n!).
/// Differs from A_n by 2^{n/2} because (a^dagger)^n e^{-X^2/2} = 2^{-n/2} H_n e^{-X^2/2}.
inline double ladder_norm_const(int n, const PhysicalParams& params = {}) {
  return std::exp(0.25 * std::log(params.mu * params.omega / (std::numbers::pi * params.hbar)) -
                  0.5 * std::lgamma(n + 1.0));
}

/// Psi_nm assembled from repeated creation operators acting on the Gaussian.
inline WaveState build_via_ladder(const QPair& q, const PhysicalParams& params = {},
                                  bool time_phases = true) {
  q.validate();
  const OperatorExpr raise = ladder(LadderKind::raise, params);
  auto slot_state = [&](int slot, int level, double amplitude, double freq) {
    WaveState s(1, params);
    s.add_mode(Mode{slot, 1.0, {HermiteExpansion::unit()}, 0.0});
    for (int k = 0; k < level; ++k) s = apply(raise, s);
    WaveState out(1, params);
    for (Mode m : s.modes()) {
      m.coeff *= amplitude;
      m.freq = time_phases ? freq : 0.0;
      out.add_mode(std::move(m));
    }
    return out;
  };
  WaveState s = slot_state(0, q.n, std::cos(q.theta) * ladder_norm_const(q.n, params),
                           -level_energy(q.n, params) / params.hbar);
  s += slot_state(1, q.m, std::sin(q.theta) * ladder_norm_const(q.m, params),
                  level_energy(q.m, params) / params.hbar);
  return s;
}

/// 41 uniform points covering X in [-6, 6], as physical positions.
inline std::vector<double> default_residual_grid(const PhysicalParams& params = {}) {
  std::vector<double> xs;
  for (int i = 0; i < 41; ++i) xs.push_back((-6.0 + 12.0 * i / 40.0) / params.length_scale());
  return xs;
}

/// sup over grid points of | hbar (dPsi/dt) i - H Psi |, with H the sum of
/// the per-dimension oscillator Hamiltonians.
inline double schrodinger_residual(const WaveState& s, const std::vector<std::vector<double>>& grid,
                                   double t) {
  if (grid.empty()) throw DomainError("schrodinger_residual: grid must be nonempty");
  const PhysicalParams& params = s.params();
  const WaveState lhs = apply(OperatorExpr::right_i(), time_derivative(s)).scaled(params.hbar);
  const WaveState rhs = apply(total_hamiltonian(params, s.dims()), s);
  const WaveState diff = (lhs - rhs).merged();
  double worst = 0.0;
  for (const auto& x : grid) worst = std::max(worst, abs(evaluate(diff, x, t)));
  return worst;
}

inline double schrodinger_residual(const WaveState& s, const std::vector<double>& grid, double t) {
  std::vector<std::vector<double>> pts;
  for (double x : grid) pts.push_back({x});
  return schrodinger_residual(s, pts, t);
}

}  // namespace qho
