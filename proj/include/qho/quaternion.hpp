#pragma once

#include <cmath>
#include <complex>
#include <ostream>

namespace qho {

using Complex = std::complex<double>;

/// Symplectic form q = z0 + z1 j with z0 = x0 + x1 i and z1 = x2 + x3 i.
struct SymplecticPair {
  Complex z0;
  Complex z1;
};

/// Real quaternion x0 + x1 i + x2 j + x3 k.
///
/// Units obey i^2 = j^2 = k^2 = ijk = -1, so ij = k = -ji. A complex number
/// z placed to the left of j satisfies j z = conj(z) j, which is the only
/// rule needed to multiply in symplectic form.
struct Quaternion {
  double x0 = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double a, double b = 0.0, double c = 0.0, double d = 0.0)
      : x0(a), x1(b), x2(c), x3(d) {}

  static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

  static Quaternion from_symplectic(const SymplecticPair& s) {
    return {s.z0.real(), s.z0.imag(), s.z1.real(), s.z1.imag()};
  }
  static Quaternion from_symplectic(Complex z0, Complex z1) {
    return from_symplectic(SymplecticPair{z0, z1});
  }
  SymplecticPair to_symplectic() const { return {Complex(x0, x1), Complex(x2, x3)}; }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    x0 += o.x0;
    x1 += o.x1;
    x2 += o.x2;
    x3 += o.x3;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    x0 -= o.x0;
    x1 -= o.x1;
    x2 -= o.x2;
    x3 -= o.x3;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    x0 *= s;
    x1 *= s;
    x2 *= s;
    x3 *= s;
    return *this;
  }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator-(const Quaternion& a) { return {-a.x0, -a.x1, -a.x2, -a.x3}; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }

/// Hamilton product.
constexpr Quaternion mul(const Quaternion& a, const Quaternion& b) {
  return {a.x0 * b.x0 - a.x1 * b.x1 - a.x2 * b.x2 - a.x3 * b.x3,
          a.x0 * b.x1 + a.x1 * b.x0 + a.x2 * b.x3 - a.x3 * b.x2,
          a.x0 * b.x2 - a.x1 * b.x3 + a.x2 * b.x0 + a.x3 * b.x1,
          a.x0 * b.x3 + a.x1 * b.x2 - a.x2 * b.x1 + a.x3 * b.x0};
}
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) { return mul(a, b); }

constexpr Quaternion conj(const Quaternion& q) { return {q.x0, -q.x1, -q.x2, -q.x3}; }

/// Scalar (real) part.
constexpr double sc(const Quaternion& q) { return q.x0; }

/// Imaginary part as a pure quaternion.
constexpr Quaternion im(const Quaternion& q) { return {0.0, q.x1, q.x2, q.x3}; }

constexpr double norm2(const Quaternion& q) {
  return q.x0 * q.x0 + q.x1 * q.x1 + q.x2 * q.x2 + q.x3 * q.x3;
}
inline double abs(const Quaternion& q) { return std::sqrt(norm2(q)); }

/// q * i. In symplectic form (z0, z1) -> (i z0, -i z1).
constexpr Quaternion right_mul_i(const Quaternion& q) { return {-q.x1, q.x0, q.x3, -q.x2}; }

inline constexpr double kDefaultParallelTol = 1e-10;

/// p and q are parallel when Im[p conj(q)] vanishes; checked componentwise
/// against an absolute tolerance.
inline bool is_parallel(const Quaternion& p, const Quaternion& q,
                        double tol = kDefaultParallelTol) {
  const Quaternion r = p * conj(q);
  return std::abs(r.x1) <= tol && std::abs(r.x2) <= tol && std::abs(r.x3) <= tol;
}

inline bool isfinite(const Quaternion& q) {
  return std::isfinite(q.x0) && std::isfinite(q.x1) && std::isfinite(q.x2) &&
         std::isfinite(q.x3);
}

inline std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << '(' << q.x0 << ", " << q.x1 << "i, " << q.x2 << "j, " << q.x3 << "k)";
}

}  // namespace qho
