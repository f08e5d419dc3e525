#pragma once

// Gaussian and periodic quadrature rules. Gaussian rules come from the
// Golub-Welsch eigenproblem on the Jacobi matrix, after which every node is
// polished by Newton iteration on the orthonormal recurrence and its weight
// is recomputed from the Christoffel function 1 / sum_k p_k(x)^2. The
// Christoffel form keeps tiny tail weights accurate to full relative
// precision, which eigenvector components do not.

#include <Eigen/Eigenvalues>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "qho/errors.hpp"

namespace qho {

enum class RuleKind {
  /// Weight e^{-x^2} on the real line.
  gauss_hermite,
  /// Unit weight on [-1, 1].
  gauss_legendre,
  /// Weight rho^2 e^{-rho^2} on [0, inf); exact for even polynomials of
  /// degree below 4*order. Built from Gauss-Laguerre (alpha = 1/2) in s = rho^2.
  half_line_gaussian,
  /// Equal weights 2*pi/order at uniform nodes on [0, 2*pi).
  uniform_periodic,
};

inline std::string_view to_string(RuleKind kind) {
  switch (kind) {
    case RuleKind::gauss_hermite: return "gauss_hermite";
    case RuleKind::gauss_legendre: return "gauss_legendre";
    case RuleKind::half_line_gaussian: return "half_line_gaussian";
    case RuleKind::uniform_periodic: return "uniform_periodic";
  }
  return "unknown";
}

inline RuleKind rule_kind_from_string(std::string_view name) {
  if (name == "gauss_hermite") return RuleKind::gauss_hermite;
  if (name == "gauss_legendre") return RuleKind::gauss_legendre;
  if (name == "half_line_gaussian") return RuleKind::half_line_gaussian;
  if (name == "uniform_periodic") return RuleKind::uniform_periodic;
  throw DomainError("unsupported quadrature kind '" + std::string(name) + "'");
}

struct QuadratureRule {
  RuleKind kind = RuleKind::gauss_hermite;
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }

  /// Sum of w_i f(x_i); the rule's weight function is implied.
  template <class F>
  auto integrate(F&& f) const {
    using R = decltype(f(0.0));
    R acc{};
    for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
    return acc;
  }
};

/// Largest order accepted per kind; beyond these the Christoffel sums overflow.
inline constexpr int kMaxGaussHermiteOrder = 256;
inline constexpr int kMaxHalfLineOrder = 128;
inline constexpr int kMaxGaussLegendreOrder = 4096;

namespace detail {

// Orthonormal polynomial recurrence
//   b_{k+1} p_{k+1} = (x - a_k) p_k - b_k p_{k-1},  p_0 = 1/sqrt(mu0)
struct JacobiRecurrence {
  std::vector<double> a;  // size n
  std::vector<double> b;  // size n + 1, b[0] unused
  double mu0 = 1.0;
};

struct RecurrenceEval {
  double pn = 0.0;
  double dpn = 0.0;
  double christoffel_sum = 0.0;
};

inline RecurrenceEval eval_recurrence(const JacobiRecurrence& r, int n, double x) {
  double p_prev = 0.0;
  double p = 1.0 / std::sqrt(r.mu0);
  double d_prev = 0.0;
  double d = 0.0;
  double sum = 0.0;
  for (int k = 0; k < n; ++k) {
    sum += p * p;
    const double bk = k > 0 ? r.b[k] : 0.0;
    const double p_next = ((x - r.a[k]) * p - bk * p_prev) / r.b[k + 1];
    const double d_next = (p + (x - r.a[k]) * d - bk * d_prev) / r.b[k + 1];
    p_prev = p;
    p = p_next;
    d_prev = d;
    d = d_next;
  }
  return {p, d, sum};
}

inline void golub_welsch(const JacobiRecurrence& r, int n, std::vector<double>& nodes,
                         std::vector<double>& weights) {
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(std::max(n - 1, 0));
  for (int k = 0; k < n; ++k) diag[k] = r.a[k];
  for (int k = 0; k + 1 < n; ++k) sub[k] = r.b[k + 1];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw DomainError("Golub-Welsch eigensolver failed");
  nodes.resize(n);
  weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = solver.eigenvalues()[i];
    for (int it = 0; it < 8; ++it) {
      const RecurrenceEval e = eval_recurrence(r, n, x);
      if (e.dpn == 0.0) break;
      const double step = e.pn / e.dpn;
      x -= step;
      if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x))) break;
    }
    nodes[i] = x;
    weights[i] = 1.0 / eval_recurrence(r, n, x).christoffel_sum;
  }
}

inline void check_order(int order, int max_order, RuleKind kind) {
  if (order < 1) throw DomainError("quadrature order must be at least 1");
  if (order > max_order) {
    throw DomainError(std::string(to_string(kind)) + " order " + std::to_string(order) +
                      " exceeds supported maximum " + std::to_string(max_order));
  }
}

}  // namespace detail

inline QuadratureRule make_rule(RuleKind kind, int order) {
  QuadratureRule rule;
  rule.kind = kind;
  detail::JacobiRecurrence rec;
  rec.a.assign(order, 0.0);
  rec.b.assign(order + 1, 0.0);
  switch (kind) {
    case RuleKind::gauss_hermite:
      detail::check_order(order, kMaxGaussHermiteOrder, kind);
      for (int k = 1; k <= order; ++k) rec.b[k] = std::sqrt(0.5 * k);
      rec.mu0 = std::sqrt(std::numbers::pi);
      detail::golub_welsch(rec, order, rule.nodes, rule.weights);
      break;
    case RuleKind::gauss_legendre:
      detail::check_order(order, kMaxGaussLegendreOrder, kind);
      for (int k = 1; k <= order; ++k) rec.b[k] = k / std::sqrt(4.0 * k * k - 1.0);
      rec.mu0 = 2.0;
      detail::golub_welsch(rec, order, rule.nodes, rule.weights);
      break;
    case RuleKind::half_line_gaussian: {
      detail::check_order(order, kMaxHalfLineOrder, kind);
      constexpr double alpha = 0.5;
      for (int k = 0; k < order; ++k) rec.a[k] = 2.0 * k + alpha + 1.0;
      for (int k = 1; k <= order; ++k) rec.b[k] = std::sqrt(k * (k + alpha));
      rec.mu0 = std::tgamma(alpha + 1.0);
      detail::golub_welsch(rec, order, rule.nodes, rule.weights);
      // s = rho^2: integral f(rho) rho^2 e^{-rho^2} d rho = 1/2 integral f(sqrt s) s^{1/2} e^{-s} ds
      for (int i = 0; i < order; ++i) {
        rule.nodes[i] = std::sqrt(rule.nodes[i]);
        rule.weights[i] *= 0.5;
      }
      break;
    }
    case RuleKind::uniform_periodic:
      if (order < 1) throw DomainError("quadrature order must be at least 1");
      rule.nodes.resize(order);
      rule.weights.assign(order, 2.0 * std::numbers::pi / order);
      for (int i = 0; i < order; ++i) rule.nodes[i] = 2.0 * std::numbers::pi * i / order;
      break;
    default:
      throw DomainError("unsupported quadrature kind");
  }
  return rule;
}

}  // namespace qho
