#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "qho/multidim.hpp"

using namespace qho;
using std::numbers::pi;

namespace {

// Complex eigenfunction psi_n(x, t) computed directly from the Hermite recurrence.
Complex psi_direct(int n, double x, double t, const PhysicalParams& p) {
  const double X = x * std::sqrt(p.mu * p.omega / p.hbar);
  return hermite_norm_const(n, p) * hermite(n, X) * std::exp(-0.5 * X * X) *
         std::polar(1.0, -(n + 0.5) * p.omega * t);
}

std::vector<QPair> random_factors(std::mt19937_64& rng, int p) {
  std::uniform_int_distribution<int> level(0, 4);
  std::uniform_real_distribution<double> th(-pi, pi);
  std::vector<QPair> f;
  for (int k = 0; k < p; ++k) f.push_back({level(rng), level(rng), th(rng)});
  return f;
}

}  // namespace

TEST(ProductState, ThetaZeroIsComplexProduct) {
  const PhysicalParams p{1.1, 0.7, 0.9};
  const std::vector<QPair> f{{2, 5, 0.0}, {0, 1, 0.0}, {3, 0, 0.0}};
  const WaveState s = product_state(f, p);
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 20; ++i) {
    const std::vector<double> x{u(rng), u(rng), u(rng)};
    const double t = u(rng);
    const Complex expected = psi_direct(2, x[0], t, p) * psi_direct(0, x[1], t, p) * psi_direct(3, x[2], t, p);
    const Quaternion got = evaluate(s, x, t);
    EXPECT_LE(abs(got - Quaternion::from_symplectic(expected, 0.0)), 1e-13);
  }
}

TEST(ProductState, PointwiseQuaternionProduct) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  const std::vector<QPair> f{{1, 2, 0.4}, {0, 3, 1.2}};
  const WaveState s = product_state(f);
  for (int i = 0; i < 10; ++i) {
    const double x = u(rng), y = u(rng), t = u(rng);
    const Quaternion expected = evaluate(psi_nm(f[0]), x, t) * evaluate(psi_nm(f[1]), y, t);
    EXPECT_LE(abs(evaluate(s, std::vector<double>{x, y}, t) - expected), 1e-13);
  }
}

TEST(ProductState, Norms) {
  EXPECT_NEAR(norm(product_state({{0, 0, 0.3}, {0, 0, 1.9}})), 1.0, 1e-12);
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const int p = 1 + trial % 3;
    const WaveState s = product_state(random_factors(rng, p));
    EXPECT_NEAR(inner(s, s, 0.0), 1.0, 1e-10);
    EXPECT_NEAR(inner(s, s, 2.5), 1.0, 1e-10);
    if (p <= 2) EXPECT_NEAR(inner_quad(s, s, 1.0, 12), 1.0, 1e-10);
  }
  EXPECT_THROW(product_state({}), ValidationError);
}

TEST(ProductState, EnergyExamples) {
  const std::vector<QPair> f(3, QPair{1, 2, pi / 4});
  EXPECT_NEAR(cartesian_energy(product_state(f)), 6.0, 1e-10);
  EXPECT_NEAR(product_energy_closed_form(f), 6.0, 1e-14);
  EXPECT_NEAR(expectation_quad(total_hamiltonian({}, 3), product_state(f), 0.0, 8), 6.0, 1e-10);
  EXPECT_NEAR(cartesian_energy(product_state({{0, 0, 0.0}, {0, 0, 0.0}})), 1.0, 1e-12);
}

TEST(ProductStateProperty, EnergyIsSumAndReorderInvariant) {
  const PhysicalParams params{0.8, 1.3, 1.0};
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    const int p = 1 + trial % 3;
    auto f = random_factors(rng, p);
    const WaveState s = product_state(f, params);
    const double e = product_energy_closed_form(f, params);
    EXPECT_NEAR(cartesian_energy(s, 0.4), e, 1e-10);
    std::shuffle(f.begin(), f.end(), rng);
    const WaveState r = product_state(f, params);
    EXPECT_NEAR(norm(r), 1.0, 1e-10);
    EXPECT_NEAR(cartesian_energy(r, 0.4), e, 1e-10);
  }
}

TEST(SplitState, Example2D) {
  const SplitSpec spec{2, {1}, {2}, 0, 0, pi / 4};
  const WaveState s = split_state(spec);
  const Quaternion v = evaluate(s, std::vector<double>{0.0, 0.0}, 0.0);
  const double c = std::cos(pi / 4) / std::sqrt(pi);
  EXPECT_NEAR(v.x0, c, 1e-15);
  EXPECT_NEAR(v.x2, c, 1e-15);
  EXPECT_NEAR(v.x1, 0.0, 1e-15);
  EXPECT_NEAR(v.x3, 0.0, 1e-15);
  EXPECT_NEAR(norm(s), 1.0, 1e-12);
  EXPECT_NEAR(inner_quad(s, s, 0.0, 8), 1.0, 1e-12);
}

TEST(SplitState, ThetaZeroIsComplexOnP) {
  const PhysicalParams p{1.0, 2.0, 1.0};
  const WaveState s = split_state({3, {1, 3}, {2}, 2, 4, 0.0}, p);
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int i = 0; i < 10; ++i) {
    const std::vector<double> x{u(rng), u(rng), u(rng)};
    const double t = u(rng);
    // two P directions at level 2 share one phase -2 E_2 / hbar; direction 2 carries the bare ground Gaussian
    const Complex expected = psi_direct(2, x[0], t, p) * psi_direct(2, x[2], t, p) *
                             psi_direct(0, x[1], 0.0, p);
    EXPECT_LE(abs(evaluate(s, x, t) - Quaternion::from_symplectic(expected, 0.0)), 1e-14);
  }
}

TEST(SplitState, EnergyAndResidual) {
  for (const SplitSpec& spec : {SplitSpec{2, {1}, {2}, 1, 3, 0.7}, SplitSpec{3, {1, 2}, {3}, 2, 0, 1.2},
                                SplitSpec{3, {1, 2, 3}, {2}, 1, 1, 0.4, true}}) {
    const WaveState s = split_state(spec);
    EXPECT_NEAR(norm(s), 1.0, 1e-12);
    EXPECT_NEAR(cartesian_energy(s), split_energy_closed_form(spec), 1e-10);
  }
  // when every direction is listed in both slots, the phases are exact eigenphases
  const WaveState full = split_state({2, {1, 2}, {1, 2}, 1, 2, 0.5, true});
  std::vector<std::vector<double>> pts{{0.0, 0.3}, {1.2, -0.7}, {-2.0, 1.5}};
  EXPECT_LE(schrodinger_residual(full, pts, 0.8), 1e-10);
}

TEST(SplitState, Validation) {
  EXPECT_THROW(split_state({2, {1}, {1}, 0, 0, 0.1}), ValidationError);
  EXPECT_NO_THROW(split_state({2, {1, 2}, {1}, 0, 0, 0.1, true}));
  EXPECT_THROW(split_state({3, {1}, {2}, 0, 0, 0.1}), ValidationError);
  EXPECT_THROW(split_state({2, {1}, {3}, 0, 0, 0.1}), ValidationError);
  EXPECT_THROW(split_state({2, {0}, {1, 2}, 0, 0, 0.1}), ValidationError);
  EXPECT_THROW(split_state({2, {1}, {2}, -1, 0, 0.1}), ValidationError);
  EXPECT_THROW(split_state({0, {}, {}, 0, 0, 0.1}), ValidationError);
}
