#pragma once

// Invariant suites run by `qho verify`. Every check reports the worst value
// it measured and the tolerance it was held to.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "cli/report.hpp"
#include "qho/qho.hpp"

namespace qho::cli {

inline constexpr unsigned kVerifySeed = 1729u;

inline std::vector<Check> verify_algebra() {
  std::mt19937_64 rng(kVerifySeed);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  auto rq = [&] { return Quaternion(u(rng), u(rng), u(rng), u(rng)); };
  double norm_err = 0.0, assoc_err = 0.0, sc_err = 0.0, i4_err = 0.0, sym_err = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    const Quaternion p = rq(), q = rq(), r = rq();
    norm_err = std::max(norm_err, std::abs(abs(p * q) - abs(p) * abs(q)));
    assoc_err = std::max(assoc_err, abs((p * q) * r - p * (q * r)));
    sc_err = std::max(sc_err, std::abs(sc(p * conj(q)) - sc(q * conj(p))));
    i4_err = std::max(i4_err, abs(right_mul_i(right_mul_i(right_mul_i(right_mul_i(p)))) - p));
    const SymplecticPair z = p.to_symplectic();
    const SymplecticPair w = right_mul_i(p).to_symplectic();
    sym_err = std::max({sym_err, std::abs(w.z0 - Complex(0, 1) * z.z0), std::abs(w.z1 + Complex(0, 1) * z.z1)});
  }
  return {{"norm_multiplicative", norm_err, 1e-12},
          {"associativity", assoc_err, 1e-12},
          {"scalar_part_symmetry", sc_err, 1e-14},
          {"right_i_fourth_power_identity", i4_err, 0.0},
          {"right_i_symplectic_law", sym_err, 1e-15}};
}

inline std::vector<Check> verify_ladder(const PhysicalParams& params = {}) {
  const OperatorExpr lower = ladder(LadderKind::lower, params);
  const double ground = norm(apply(lower, psi_n(0, params)));
  double comm = 0.0;
  const OperatorExpr c = ladder_commutator(params);
  for (int n = 0; n <= 20; ++n) {
    const WaveState s = psi_n(n, params);
    comm = std::max(comm, norm((apply(c, s) - s).merged()));
  }
  double build = 0.0;
  const auto grid = uniform_grid_1d(-6.0 / params.length_scale(), 6.0 / params.length_scale(), 121);
  for (int n = 0; n <= 6; ++n) {
    for (int m = 0; m <= 6; ++m) {
      const QPair q{n, m, 0.7};
      build = std::max(build, max_pointwise_difference(build_via_ladder(q, params), psi_nm(q, params), grid, 0.9));
    }
  }
  return {{"lower_annihilates_ground", ground, 1e-13},
          {"commutator_is_identity_n_le_20", comm, 1e-10},
          {"ladder_build_matches_psi_nm_n_m_le_6", build, 1e-10}};
}

inline std::vector<Check> verify_residual(const PhysicalParams& params = {}) {
  std::mt19937_64 rng(kVerifySeed);
  std::uniform_int_distribution<int> level(0, 10);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> when(0.0, 5.0);
  const auto grid = default_residual_grid(params);
  double worst = 0.0, fd = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const QPair q{level(rng), level(rng), angle(rng)};
    const WaveState s = psi_nm(q, params);
    const double t = when(rng) / params.omega;
    worst = std::max(worst, schrodinger_residual(s, grid, t));
    const WaveState ds = time_derivative(s);
    constexpr double h = 1e-6;
    for (double x : {-1.3, 0.0, 0.4, 2.1}) {
      const double xp = x / params.length_scale();
      const Quaternion numeric = (evaluate(s, xp, t + h) - evaluate(s, xp, t - h)) * (0.5 / h);
      fd = std::max(fd, abs(numeric - evaluate(ds, xp, t)));
    }
  }
  return {{"schrodinger_residual_20_states", worst, 1e-10},
          {"time_derivative_vs_finite_difference", fd, 1e-6}};
}

inline std::vector<Check> verify_radial(const PhysicalParams& params = {}) {
  double at_root = 0.0, expectation_err = 0.0, gram_dev = 0.0;
  double min_ratio = std::numeric_limits<double>::infinity();
  const auto grid = default_radial_grid();
  const double theta = 0.6;
  for (int l = 0; l <= 3; ++l) {
    std::vector<RadialState> family;
    for (int u = 0; u <= 4; ++u) {
      for (int v = 0; v <= 4; ++v) {
        const RadialState r = radial_state(u, v, l, theta, params);
        family.push_back(r);
        const double eu = radial_energy(u, l, params);
        const double ev = radial_energy(v, l, params);
        at_root = std::max(at_root, radial_ode_residual(r, {eu, ev}, grid));
        const double scale = radial_max_abs(r, grid);
        for (double shift : {-1.0, 1.0}) {
          const double q = shift * params.quantum();
          min_ratio = std::min(min_ratio, radial_ode_residual(r, {eu + q, ev + q}, grid) / scale);
        }
        expectation_err = std::max(
            expectation_err, std::abs(radial_expectation_energy(r) - full_spherical_energy(u, v, l, theta, params)));
      }
    }
    gram_dev = std::max(gram_dev, radial_gram(family).max_deviation());
  }
  return {{"ode_residual_at_level_energies", at_root, 1e-9},
          {"ode_residual_ratio_off_level", min_ratio, 0.05, true},
          {"radial_gram_vs_closed_form", gram_dev, 1e-10},
          {"radial_energy_expectation", expectation_err, 1e-10}};
}

/// Specs for l <= 6: every m1 paired with m2 = m1 and m2 = -m1, at one shared angle.
inline std::vector<QSphericalHarmonic> angular_family(double theta, bool conjugate) {
  std::vector<QSphericalHarmonic> specs;
  for (int l = 0; l <= 6; ++l) {
    for (int m = -l; m <= l; ++m) {
      specs.push_back({l, m, m, theta, conjugate});
      if (m != 0) specs.push_back({l, m, -m, theta, conjugate});
    }
  }
  return specs;
}

inline std::vector<Check> verify_angular(int polar_order = 64, int azimuth_order = 128) {
  const auto quad = SphereQuadrature::make(polar_order, azimuth_order);
  const double theta = std::numbers::pi / 3.0;
  return {{"angular_gram_vs_closed_form", angular_gram(angular_family(theta, false), quad).max_deviation(), 1e-9},
          {"angular_gram_vs_closed_form_conjugated",
           angular_gram(angular_family(theta, true), quad).max_deviation(), 1e-9}};
}

}  // namespace qho::cli
