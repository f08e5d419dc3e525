#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "qho/errors.hpp"
#include "qho/wavestate.hpp"

namespace qho {

/// Expression tree over the primitive actions on a WaveState:
/// multiplication by X_d, d/dX_d on the enveloped polynomial, right
/// multiplication by i, real scaling, sums and compositions.
///
/// `a * b` composes (b acts first); `a + b` sums; `c * a` scales.
class OperatorExpr {
 public:
  enum class Kind { mul_x, d_dx, right_i, scale, sum, compose };

  static OperatorExpr mul_x(int dim = 0) { return OperatorExpr(Kind::mul_x, dim, 1.0, {}); }
  static OperatorExpr d_dx(int dim = 0) { return OperatorExpr(Kind::d_dx, dim, 1.0, {}); }
  static OperatorExpr right_i() { return OperatorExpr(Kind::right_i, 0, 1.0, {}); }
  static OperatorExpr scale(double factor) { return OperatorExpr(Kind::scale, 0, factor, {}); }
  static OperatorExpr identity() { return scale(1.0); }
  static OperatorExpr sum(std::vector<OperatorExpr> terms) {
    return OperatorExpr(Kind::sum, 0, 1.0, std::move(terms));
  }
  /// compose({A, B, C}) = A B C, so C acts first.
  static OperatorExpr compose(std::vector<OperatorExpr> factors) {
    return OperatorExpr(Kind::compose, 0, 1.0, std::move(factors));
  }

  Kind kind() const { return kind_; }
  int dim() const { return dim_; }
  double factor() const { return factor_; }
  const std::vector<OperatorExpr>& children() const { return children_; }

  /// Largest dimension index referenced anywhere in the tree, -1 if none.
  int max_dim() const {
    int d = (kind_ == Kind::mul_x || kind_ == Kind::d_dx) ? dim_ : -1;
    for (const auto& c : children_) d = std::max(d, c.max_dim());
    return d;
  }

  friend OperatorExpr operator+(const OperatorExpr& a, const OperatorExpr& b) { return sum({a, b}); }
  friend OperatorExpr operator-(const OperatorExpr& a, const OperatorExpr& b) {
    return sum({a, compose({scale(-1.0), b})});
  }
  friend OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b) { return compose({a, b}); }
  friend OperatorExpr operator*(double c, const OperatorExpr& a) { return compose({scale(c), a}); }

 private:
  OperatorExpr(Kind k, int dim, double factor, std::vector<OperatorExpr> children)
      : kind_(k), dim_(dim), factor_(factor), children_(std::move(children)) {
    if (dim < 0) throw DomainError("operator dimension index must be non-negative");
  }

  Kind kind_;
  int dim_;
  double factor_;
  std::vector<OperatorExpr> children_;
};

namespace detail {

inline WaveState apply_unchecked(const OperatorExpr& op, const WaveState& s) {
  using K = OperatorExpr::Kind;
  WaveState out(s.dims(), s.params());
  switch (op.kind()) {
    case K::mul_x:
    case K::d_dx:
      for (Mode m : s.modes()) {
        auto& p = m.polys[op.dim()];
        p = op.kind() == K::mul_x ? p.mul_x() : p.derivative();
        out.add_mode(std::move(m));
      }
      return out;
    case K::right_i:
      // (z0 + z1 j) i = (i z0) + (-i z1) j
      for (Mode m : s.modes()) {
        m.coeff *= m.slot == 0 ? Complex(0.0, 1.0) : Complex(0.0, -1.0);
        out.add_mode(std::move(m));
      }
      return out;
    case K::scale:
      return s.scaled(op.factor());
    case K::sum:
      for (const auto& term : op.children()) out += apply_unchecked(term, s);
      return out.merged();
    case K::compose: {
      WaveState cur = s;
      for (auto it = op.children().rbegin(); it != op.children().rend(); ++it) {
        cur = apply_unchecked(*it, cur);
      }
      return cur;
    }
  }
  return out;
}

}  // namespace detail

/// Exact symbolic action of `op` on `s`.
inline WaveState apply(const OperatorExpr& op, const WaveState& s) {
  if (op.max_dim() >= s.dims()) {
    throw DomainError("operator acts on dim " + std::to_string(op.max_dim()) + " but state has " +
                      std::to_string(s.dims()) + " dims");
  }
  return detail::apply_unchecked(op, s);
}

// Building blocks of the oscillator in the dimensionless coordinate
// X = sqrt(mu*omega/hbar) x. The momentum acts through right multiplication
// by i: p_x = -hbar (d/dx | i), with (a|b) f = a f b.

inline OperatorExpr position(int dim = 0) { return OperatorExpr::mul_x(dim); }

/// p_x = -hbar (d/dx | i); d/dx = sqrt(mu*omega/hbar) d/dX.
inline OperatorExpr momentum_px(const PhysicalParams& params, int dim = 0) {
  return (-params.hbar * params.length_scale()) *
         (OperatorExpr::right_i() * OperatorExpr::d_dx(dim));
}

/// Dimensionless momentum P = p_x / sqrt(mu hbar omega).
inline OperatorExpr momentum(const PhysicalParams& params, int dim = 0) {
  return (1.0 / std::sqrt(params.mu * params.hbar * params.omega)) * momentum_px(params, dim);
}

/// H = (hbar omega / 2) (P^2 + X^2) along one dimension.
inline OperatorExpr hamiltonian(const PhysicalParams& params, int dim = 0) {
  const OperatorExpr P = momentum(params, dim);
  const OperatorExpr X = position(dim);
  return (0.5 * params.quantum()) * (P * P + X * X);
}

/// Sum of the per-dimension Hamiltonians over `dims` directions.
inline OperatorExpr total_hamiltonian(const PhysicalParams& params, int dims) {
  std::vector<OperatorExpr> terms;
  for (int k = 0; k < dims; ++k) terms.push_back(hamiltonian(params, k));
  return OperatorExpr::sum(std::move(terms));
}

/// Kinetic part (hbar omega / 2) P^2.
inline OperatorExpr kinetic(const PhysicalParams& params, int dim = 0) {
  const OperatorExpr P = momentum(params, dim);
  return (0.5 * params.quantum()) * (P * P);
}

/// Potential part (hbar omega / 2) X^2.
inline OperatorExpr potential(const PhysicalParams& params, int dim = 0) {
  return (0.5 * params.quantum()) * (position(dim) * position(dim));
}

struct ExpectationOptions {
  bool allow_unnormalized = false;
  double norm_tol = 1e-8;
};

inline void check_normalized(const WaveState& s, double t, const ExpectationOptions& opts) {
  if (opts.allow_unnormalized) return;
  const double n2 = inner(s, s, t);
  if (std::abs(n2 - 1.0) > opts.norm_tol) {
    throw ValidationError("state is not normalized: <Psi,Psi> = " + std::to_string(n2));
  }
}

/// <O> = integral Sc((O Psi) conj(Psi)), the scalar part of
/// (1/2) integral [(O Psi) conj(Psi) + Psi conj(O Psi)].
inline double expectation(const OperatorExpr& op, const WaveState& s, double t,
                          const ExpectationOptions& opts = {}) {
  check_normalized(s, t, opts);
  return inner(apply(op, s), s, t);
}

/// Same expectation with the inner product done by Gauss-Hermite quadrature.
inline double expectation_quad(const OperatorExpr& op, const WaveState& s, double t, int order,
                               const ExpectationOptions& opts = {}) {
  check_normalized(s, t, opts);
  return inner_quad(apply(op, s), s, t, order);
}

struct QuaternionicExpectation {
  double total = 0.0;
  double first = 0.0;   ///< <O>
  double second = 0.0;  ///< <(O | i)>, i.e. inner((O Psi) i, Psi)
};

inline QuaternionicExpectation expectation_quaternionic(const OperatorExpr& op, const WaveState& s,
                                                        double t,
                                                        const ExpectationOptions& opts = {}) {
  QuaternionicExpectation r;
  r.first = expectation(op, s, t, opts);
  r.second = expectation(OperatorExpr::right_i() * op, s, t, opts);
  r.total = r.first + r.second;
  return r;
}

}  // namespace qho
