#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "qho/specfun.hpp"

namespace qho {

using Complex = std::complex<double>;

/// A complex polynomial p(X) carried together with its Gaussian envelope,
/// stored by its coordinates over the orthonormal Hermite functions
///
///   p(X) e^{-X^2/2} = sum_k c_k h_k(X),   h_k = H_k(X) e^{-X^2/2} / sqrt(2^k k! sqrt(pi)).
///
/// The basis change keeps the exact Gaussian-moment integrals well
/// conditioned: the moment expansion of int p conj(q) e^{-X^2} collapses to
/// sum_k c_k conj(d_k). Expanding in monomials instead loses about eight
/// digits by degree 40.
class HermiteExpansion {
 public:
  HermiteExpansion() = default;
  explicit HermiteExpansion(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {}

  /// p(X) = 1, i.e. the bare envelope e^{-X^2/2}.
  static HermiteExpansion unit() { return HermiteExpansion({Complex(std::pow(std::numbers::pi, 0.25))}); }

  /// The single orthonormal Hermite function h_k.
  static HermiteExpansion basis(int k) {
    std::vector<Complex> c(static_cast<std::size_t>(k) + 1, Complex(0.0));
    c.back() = 1.0;
    return HermiteExpansion(std::move(c));
  }

  /// From ascending monomial coefficients of p(X). Ill-conditioned at high
  /// degree; intended for small hand-written polynomials.
  static HermiteExpansion from_monomial(const std::vector<Complex>& mono) {
    // X^j e^{-X^2/2} expanded by repeated application of X h_k relations.
    HermiteExpansion result;
    HermiteExpansion power = unit();
    for (std::size_t j = 0; j < mono.size(); ++j) {
      result += power * mono[j];
      power = power.mul_x();
    }
    return result;
  }

  const std::vector<Complex>& coeffs() const { return c_; }
  int degree() const {
    for (std::size_t k = c_.size(); k-- > 0;) {
      if (c_[k] != Complex(0.0)) return static_cast<int>(k);
    }
    return -1;
  }
  bool is_zero() const { return degree() < 0; }

  /// X * (p e^{-X^2/2}).
  HermiteExpansion mul_x() const {
    std::vector<Complex> out(c_.size() + 1, Complex(0.0));
    for (std::size_t k = 0; k < c_.size(); ++k) {
      out[k + 1] += std::sqrt(0.5 * (k + 1.0)) * c_[k];
      if (k > 0) out[k - 1] += std::sqrt(0.5 * k) * c_[k];
    }
    return HermiteExpansion(std::move(out));
  }

  /// d/dX (p e^{-X^2/2}) = (p' - X p) e^{-X^2/2}.
  HermiteExpansion derivative() const {
    std::vector<Complex> out(c_.size() + 1, Complex(0.0));
    for (std::size_t k = 0; k < c_.size(); ++k) {
      out[k + 1] -= std::sqrt(0.5 * (k + 1.0)) * c_[k];
      if (k > 0) out[k - 1] += std::sqrt(0.5 * k) * c_[k];
    }
    return HermiteExpansion(std::move(out));
  }

  HermiteExpansion conj() const {
    std::vector<Complex> out(c_);
    for (Complex& v : out) v = std::conj(v);
    return HermiteExpansion(std::move(out));
  }

  HermiteExpansion& operator+=(const HermiteExpansion& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Complex(0.0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
  }
  friend HermiteExpansion operator+(HermiteExpansion a, const HermiteExpansion& b) { return a += b; }
  friend HermiteExpansion operator*(HermiteExpansion a, Complex s) {
    for (Complex& v : a.c_) v *= s;
    return a;
  }
  friend bool operator==(const HermiteExpansion&, const HermiteExpansion&) = default;

  /// Value of p(X) e^{-X^2/2}.
  Complex value(double x) const { return sum(x, std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x * x)); }

  /// Value of p(X) alone, the envelope stripped. Used by Gauss-Hermite
  /// quadrature, whose weight supplies e^{-X^2}.
  Complex reduced_value(double x) const { return sum(x, std::pow(std::numbers::pi, -0.25)); }

  /// Ascending monomial coefficients of p(X).
  std::vector<Complex> to_monomial() const {
    std::vector<Complex> out(std::max<std::size_t>(c_.size(), 1), Complex(0.0));
    std::vector<double> h_prev;
    std::vector<double> h{1.0};
    for (std::size_t k = 0; k < c_.size(); ++k) {
      const double norm = hermite_function_norm(static_cast<int>(k));
      for (std::size_t j = 0; j < h.size(); ++j) out[j] += c_[k] * (h[j] / norm);
      // H_{k+1} = 2X H_k - 2k H_{k-1}
      std::vector<double> next(h.size() + 1, 0.0);
      for (std::size_t j = 0; j < h.size(); ++j) next[j + 1] += 2.0 * h[j];
      for (std::size_t j = 0; j < h_prev.size(); ++j) next[j] -= 2.0 * k * h_prev[j];
      h_prev = std::move(h);
      h = std::move(next);
    }
    return out;
  }

 private:
  Complex sum(double x, double h0) const {
    Complex acc(0.0);
    double prev = 0.0;
    double cur = h0;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      acc += c_[k] * cur;
      const double next = std::sqrt(2.0 / (k + 1.0)) * x * cur - std::sqrt(k / (k + 1.0)) * prev;
      prev = cur;
      cur = next;
    }
    return acc;
  }

  std::vector<Complex> c_;
};

/// Exact integral of (p e^{-X^2/2}) conj(q e^{-X^2/2}) over the real line.
inline Complex overlap(const HermiteExpansion& p, const HermiteExpansion& q) {
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  Complex acc(0.0);
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t k = 0; k < n; ++k) acc += a[k] * std::conj(b[k]);
  return acc;
}

}  // namespace qho
