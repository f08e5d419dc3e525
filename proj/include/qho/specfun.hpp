#pragma once

// Special functions for the oscillator families: Hermite, generalized
// Laguerre, associated Legendre and spherical harmonics, plus their
// normalization constants and the closed-form Gaussian moments used to
// evaluate inner products exactly.

#include <cmath>
#include <complex>
#include <cstdlib>
#include <numbers>
#include <string>
#include <vector>

#include "qho/errors.hpp"
#include "qho/params.hpp"

namespace qho {

inline constexpr int kDefaultDegreeCap = 200;

namespace detail {

inline void check_degree(int n, int cap, const char* what) {
  if (n < 0) throw DomainError(std::string(what) + ": degree must be non-negative");
  if (n > cap) {
    throw DomainError(std::string(what) + ": degree " + std::to_string(n) +
                      " exceeds cap " + std::to_string(cap));
  }
}

}  // namespace detail

/// Physicists' Hermite polynomial H_n(x), H_{n+1} = 2x H_n - 2n H_{n-1}.
inline double hermite(int n, double x, int cap = kDefaultDegreeCap) {
  detail::check_degree(n, cap, "hermite");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Generalized Laguerre polynomial L_u^(alpha)(x).
inline double laguerre(int u, double alpha, double x, int cap = kDefaultDegreeCap) {
  detail::check_degree(u, cap, "laguerre");
  if (!(alpha > -1.0)) throw DomainError("laguerre: alpha must exceed -1");
  if (u == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + alpha - x;
  for (int k = 1; k < u; ++k) {
    const double next = ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Monomial coefficients (ascending powers of x) of L_u^(alpha)(x), built
/// with the same three-term recurrence as `laguerre`.
inline std::vector<double> laguerre_coefficients(int u, double alpha,
                                                 int cap = kDefaultDegreeCap) {
  detail::check_degree(u, cap, "laguerre_coefficients");
  if (!(alpha > -1.0)) throw DomainError("laguerre_coefficients: alpha must exceed -1");
  std::vector<double> prev{1.0};
  if (u == 0) return prev;
  std::vector<double> cur{1.0 + alpha, -1.0};
  for (int k = 1; k < u; ++k) {
    std::vector<double> next(cur.size() + 1, 0.0);
    for (std::size_t i = 0; i < cur.size(); ++i) {
      next[i] += (2.0 * k + 1.0 + alpha) * cur[i];
      next[i + 1] -= cur[i];
    }
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= (k + alpha) * prev[i];
    for (double& c : next) c /= (k + 1.0);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// Associated Legendre function P_l^m(x) for 0 <= m <= l, including the
/// Condon-Shortley phase (-1)^m.
inline double assoc_legendre(int l, int m, double x) {
  if (l < 0 || m < 0 || m > l) throw DomainError("assoc_legendre: need 0 <= m <= l");
  if (std::abs(x) > 1.0) throw DomainError("assoc_legendre: |x| must not exceed 1");
  double pmm = 1.0;
  const double s = std::sqrt((1.0 - x) * (1.0 + x));
  for (int k = 1; k <= m; ++k) pmm *= -(2.0 * k - 1.0) * s;
  if (l == m) return pmm;
  double pm1 = x * (2.0 * m + 1.0) * pmm;
  for (int ll = m + 2; ll <= l; ++ll) {
    const double next = ((2.0 * ll - 1.0) * x * pm1 - (ll + m - 1.0) * pmm) / (ll - m);
    pmm = pm1;
    pm1 = next;
  }
  return pm1;
}

namespace detail {

// Orthonormalized P_l^m(cos theta) such that Y_l^m = value * e^{i m phi};
// recurrences on the normalized functions avoid factorial ratios.
inline double normalized_legendre(int l, int m, double x) {
  const double s = std::sqrt(std::max(0.0, (1.0 - x) * (1.0 + x)));
  double pmm = 0.5 / std::sqrt(std::numbers::pi);
  for (int k = 1; k <= m; ++k) pmm *= -std::sqrt((2.0 * k + 1.0) / (2.0 * k)) * s;
  if (l == m) return pmm;
  double pm1 = x * std::sqrt(2.0 * m + 3.0) * pmm;
  for (int ll = m + 2; ll <= l; ++ll) {
    const double l2 = static_cast<double>(ll) * ll;
    const double m2 = static_cast<double>(m) * m;
    const double a = std::sqrt((4.0 * l2 - 1.0) / (l2 - m2));
    const double lp = ll - 1.0;
    const double b = std::sqrt((lp * lp - m2) / (4.0 * lp * lp - 1.0));
    const double next = a * (x * pm1 - b * pmm);
    pmm = pm1;
    pm1 = next;
  }
  return pm1;
}

}  // namespace detail

/// Orthonormal complex spherical harmonic Y_l^m(theta, phi), Condon-Shortley
/// phase; theta is the polar angle.
inline std::complex<double> sph_harm(int l, int m, double theta, double phi) {
  if (l < 0) throw DomainError("sph_harm: l must be non-negative");
  if (m < -l || m > l) {
    throw DomainError("sph_harm: m=" + std::to_string(m) + " outside [-l, l] for l=" +
                      std::to_string(l));
  }
  const int am = std::abs(m);
  const double p = detail::normalized_legendre(l, am, std::cos(theta));
  const std::complex<double> y = std::polar(p, am * phi);
  if (m >= 0) return y;
  return (am % 2 == 0 ? 1.0 : -1.0) * std::conj(y);
}

/// A_n = (mu*omega/(pi*hbar))^(1/4) / sqrt(2^n n!), evaluated through lgamma.
inline double hermite_norm_const(int n, const PhysicalParams& params = {}) {
  if (n < 0) throw DomainError("hermite_norm_const: n must be non-negative");
  const double log_a = 0.25 * std::log(params.mu * params.omega / (std::numbers::pi * params.hbar)) -
                       0.5 * (n * std::numbers::ln2 + std::lgamma(n + 1.0));
  return std::exp(log_a);
}

/// sqrt(2^n n! sqrt(pi)): the L2 norm of H_n(X) e^{-X^2/2} over the real line.
inline double hermite_function_norm(int n) {
  if (n < 0) throw DomainError("hermite_function_norm: n must be non-negative");
  return std::exp(0.5 * (n * std::numbers::ln2 + std::lgamma(n + 1.0) +
                         0.5 * std::log(std::numbers::pi)));
}

/// N_u = sqrt(2 u! / Gamma(u + l + 3/2)), making
/// N_u rho^l e^{-rho^2/2} L_u^(l+1/2)(rho^2) unit-normed under rho^2 d rho.
inline double laguerre_norm_const(int u, int l) {
  if (u < 0 || l < 0) throw DomainError("laguerre_norm_const: u and l must be non-negative");
  return std::exp(0.5 * (std::numbers::ln2 + std::lgamma(u + 1.0) - std::lgamma(u + l + 1.5)));
}

/// Integral of x^k e^{-x^2} over the real line.
inline double gaussian_moment(int k) {
  if (k < 0) throw DomainError("gaussian_moment: k must be non-negative");
  if (k % 2 != 0) return 0.0;
  double m = std::sqrt(std::numbers::pi);
  for (int j = 2; j <= k; j += 2) m *= 0.5 * (j - 1);
  return m;
}

/// Integral of rho^(2k) e^{-rho^2} rho^2 over [0, inf) = Gamma(k + 3/2) / 2.
inline double radial_moment(int k) {
  if (k < 0) throw DomainError("radial_moment: k must be non-negative");
  double m = 0.25 * std::sqrt(std::numbers::pi);
  for (int j = 1; j <= k; ++j) m *= j + 0.5;
  return m;
}

/// Integral of rho^j e^{-rho^2} over [0, inf) = Gamma((j+1)/2) / 2, any j >= 0.
inline double half_line_moment(int j) {
  if (j < 0) throw DomainError("half_line_moment: j must be non-negative");
  return 0.5 * std::tgamma(0.5 * (j + 1));
}

}  // namespace qho
