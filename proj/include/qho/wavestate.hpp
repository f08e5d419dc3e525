#pragma once

// Exact representation of quaternionic wavefunctions as sums of
// Gaussian-enveloped polynomial modes, and the real inner product
//
//   <Phi, Psi> = integral Sc(Phi conj(Psi)) d^p x.
//
// For Phi = a0 + a1 j and Psi = b0 + b1 j the scalar part of Phi conj(Psi)
// is Re(a0 conj(b0)) + Re(a1 conj(b1)), so only modes sharing a symplectic
// slot interact. The symmetrized form (Phi conj(Psi) + conj(Phi) Psi)/2 is
// not real for general quaternionic arguments; its scalar part is what is
// computed here, and it agrees with the symmetrized form whenever the
// latter is real.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qho/errors.hpp"
#include "qho/hermite_expansion.hpp"
#include "qho/params.hpp"
#include "qho/quadrature.hpp"
#include "qho/quaternion.hpp"

namespace qho {

/// One term coeff * e^{i freq t} * prod_k p_k(X_k) e^{-X_k^2/2}, placed in
/// symplectic slot 0 (z0) or slot 1 (z1).
struct Mode {
  int slot = 0;
  Complex coeff{1.0, 0.0};
  std::vector<HermiteExpansion> polys;
  double freq = 0.0;

  Complex value(std::span<const double> X, double t) const {
    Complex v = coeff * std::polar(1.0, freq * t);
    for (std::size_t k = 0; k < polys.size(); ++k) v *= polys[k].value(X[k]);
    return v;
  }

  int total_degree() const {
    int d = 0;
    for (const auto& p : polys) d += std::max(p.degree(), 0);
    return d;
  }
};

class WaveState {
 public:
  WaveState() = default;
  explicit WaveState(int dims, PhysicalParams params = {}) : dims_(dims), params_(params) {
    if (dims < 1) throw DomainError("WaveState: dims must be at least 1");
    params_.validate();
  }

  int dims() const { return dims_; }
  const PhysicalParams& params() const { return params_; }
  const std::vector<Mode>& modes() const { return modes_; }
  bool empty() const { return modes_.empty(); }

  WaveState& add_mode(Mode m) {
    if (static_cast<int>(m.polys.size()) != dims_) {
      throw DomainError("mode has " + std::to_string(m.polys.size()) + " polynomials, state has " +
                        std::to_string(dims_) + " dims");
    }
    if (m.slot != 0 && m.slot != 1) throw DomainError("mode slot must be 0 or 1");
    modes_.push_back(std::move(m));
    return *this;
  }

  WaveState& operator+=(const WaveState& o) {
    check_compatible(o);
    if (&o == this) {
      const std::vector<Mode> copy = modes_;
      modes_.insert(modes_.end(), copy.begin(), copy.end());
      return *this;
    }
    modes_.insert(modes_.end(), o.modes_.begin(), o.modes_.end());
    return *this;
  }
  friend WaveState operator+(WaveState a, const WaveState& b) { return a += b; }
  friend WaveState operator-(WaveState a, const WaveState& b) { return a += b.scaled(-1.0); }

  /// Multiply every mode coefficient by a complex factor from the left. For
  /// real factors this is the real-coefficient scaling of the expansion.
  WaveState scaled(Complex s) const {
    WaveState out = *this;
    for (Mode& m : out.modes_) m.coeff *= s;
    return out;
  }

  /// Combine like terms: modes with equal slot, frequency and identical
  /// polynomials in every dim after the first are folded into one mode by
  /// summing their first-dim polynomials. Exact-zero modes are dropped.
  WaveState merged() const {
    WaveState out(dims_, params_);
    using Key = std::pair<int, double>;
    std::map<Key, std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < modes_.size(); ++i) {
      const Mode& m = modes_[i];
      if (m.coeff == Complex(0.0)) continue;
      bool zero = false;
      for (const auto& p : m.polys) zero = zero || p.is_zero();
      if (zero) continue;
      buckets[{m.slot, m.freq}].push_back(i);
    }
    for (auto& [key, idx] : buckets) {
      std::vector<Mode> group;
      for (std::size_t i : idx) {
        const Mode& m = modes_[i];
        bool folded = false;
        for (Mode& g : group) {
          if (std::equal(g.polys.begin() + 1, g.polys.end(), m.polys.begin() + 1)) {
            g.polys[0] = g.polys[0] * g.coeff + m.polys[0] * m.coeff;
            g.coeff = 1.0;
            folded = true;
            break;
          }
        }
        if (!folded) group.push_back(m);
      }
      for (Mode& g : group) {
        if (!g.polys[0].is_zero()) out.modes_.push_back(std::move(g));
      }
    }
    return out;
  }

  void check_compatible(const WaveState& o) const {
    if (dims_ != o.dims_) {
      throw DomainError("dimension mismatch: " + std::to_string(dims_) + " vs " +
                        std::to_string(o.dims_));
    }
    if (!(params_ == o.params_)) throw DomainError("physical parameters differ between states");
  }

 private:
  int dims_ = 1;
  PhysicalParams params_{};
  std::vector<Mode> modes_;
};

/// Psi(x, t) as z0 + z1 j, x in physical units.
inline Quaternion evaluate(const WaveState& s, std::span<const double> x, double t) {
  if (static_cast<int>(x.size()) != s.dims()) {
    throw DomainError("evaluate: expected " + std::to_string(s.dims()) + " coordinates, got " +
                      std::to_string(x.size()));
  }
  const double scale = s.params().length_scale();
  std::vector<double> X(x.begin(), x.end());
  for (double& v : X) v *= scale;
  Complex z[2] = {Complex(0.0), Complex(0.0)};
  for (const Mode& m : s.modes()) z[m.slot] += m.value(X, t);
  return Quaternion::from_symplectic(z[0], z[1]);
}

inline Quaternion evaluate(const WaveState& s, double x, double t) {
  return evaluate(s, std::span<const double>(&x, 1), t);
}

/// Exact real inner product integral Sc(a conj(b)) d^p x at time t.
inline double inner(const WaveState& a, const WaveState& b, double t) {
  a.check_compatible(b);
  double acc = 0.0;
  for (const Mode& ma : a.modes()) {
    for (const Mode& mb : b.modes()) {
      if (ma.slot != mb.slot) continue;
      Complex term = ma.coeff * std::conj(mb.coeff) * std::polar(1.0, (ma.freq - mb.freq) * t);
      for (int k = 0; k < a.dims(); ++k) term *= overlap(ma.polys[k], mb.polys[k]);
      acc += term.real();
    }
  }
  return acc / std::pow(a.params().length_scale(), a.dims());
}

inline double norm(const WaveState& s, double t = 0.0) { return std::sqrt(std::max(0.0, inner(s, s, t))); }

/// Largest polynomial degree per dim over all modes (-1 for an empty state).
inline std::vector<int> max_degrees(const WaveState& s) {
  std::vector<int> d(static_cast<std::size_t>(s.dims()), -1);
  for (const Mode& m : s.modes()) {
    for (int k = 0; k < s.dims(); ++k) d[k] = std::max(d[k], m.polys[k].degree());
  }
  return d;
}

/// True when Gauss-Hermite rules of the given orders integrate a conj(b)
/// without truncation error.
inline bool quadrature_order_sufficient(const WaveState& a, const WaveState& b,
                                        std::span<const QuadratureRule> rules) {
  const auto da = max_degrees(a);
  const auto db = max_degrees(b);
  for (int k = 0; k < a.dims(); ++k) {
    if (da[k] + db[k] > 2 * static_cast<int>(rules[k].size()) - 1) return false;
  }
  return true;
}

/// Quadrature estimate of `inner`, evaluating both states pointwise on a
/// tensor Gauss-Hermite grid. The product of the two envelopes is exactly
/// the rule's weight e^{-sum X^2}, so only the stripped polynomial values
/// enter the sum.
inline double inner_quad(const WaveState& a, const WaveState& b, double t,
                         std::span<const QuadratureRule> rules) {
  a.check_compatible(b);
  const int p = a.dims();
  if (static_cast<int>(rules.size()) != p) throw DomainError("inner_quad: need one rule per dimension");
  for (const auto& r : rules) {
    if (r.kind != RuleKind::gauss_hermite) throw DomainError("inner_quad: rules must be gauss_hermite");
  }

  // Per mode, per dim: stripped values at every node of that dim's rule.
  struct Table {
    int slot;
    Complex phase;
    std::vector<std::vector<Complex>> values;
  };
  auto tabulate = [&](const WaveState& s) {
    std::vector<Table> out;
    for (const Mode& m : s.modes()) {
      Table tab{m.slot, m.coeff * std::polar(1.0, m.freq * t), {}};
      for (int k = 0; k < p; ++k) {
        std::vector<Complex> col(rules[k].size());
        for (std::size_t i = 0; i < rules[k].size(); ++i) col[i] = m.polys[k].reduced_value(rules[k].nodes[i]);
        tab.values.push_back(std::move(col));
      }
      out.push_back(std::move(tab));
    }
    return out;
  };
  const auto ta = tabulate(a);
  const auto tb = tabulate(b);

  std::vector<std::size_t> idx(static_cast<std::size_t>(p), 0);
  double acc = 0.0;
  while (true) {
    double w = 1.0;
    for (int k = 0; k < p; ++k) w *= rules[k].weights[idx[k]];
    Complex za[2] = {Complex(0.0), Complex(0.0)};
    Complex zb[2] = {Complex(0.0), Complex(0.0)};
    for (const Table& tab : ta) {
      Complex v = tab.phase;
      for (int k = 0; k < p; ++k) v *= tab.values[k][idx[k]];
      za[tab.slot] += v;
    }
    for (const Table& tab : tb) {
      Complex v = tab.phase;
      for (int k = 0; k < p; ++k) v *= tab.values[k][idx[k]];
      zb[tab.slot] += v;
    }
    acc += w * sc(Quaternion::from_symplectic(za[0], za[1]) *
                  conj(Quaternion::from_symplectic(zb[0], zb[1])));
    int k = 0;
    for (; k < p; ++k) {
      if (++idx[k] < rules[k].size()) break;
      idx[k] = 0;
    }
    if (k == p) break;
  }
  return acc / std::pow(a.params().length_scale(), p);
}

inline double inner_quad(const WaveState& a, const WaveState& b, double t, int order) {
  std::vector<QuadratureRule> rules(static_cast<std::size_t>(a.dims()),
                                    make_rule(RuleKind::gauss_hermite, order));
  return inner_quad(a, b, t, rules);
}

/// d/dt of the state: each mode's coefficient picks up i * freq.
inline WaveState time_derivative(const WaveState& s) {
  WaveState out(s.dims(), s.params());
  for (Mode m : s.modes()) {
    m.coeff *= Complex(0.0, m.freq);
    out.add_mode(std::move(m));
  }
  return out;
}

/// Quaternionic product a(X_1..X_p) * b(X_{p+1}..X_{p+q}) of states on
/// disjoint coordinates. Slots combine by
/// (a0 + a1 j)(b0 + b1 j) = (a0 b0 - a1 conj(b1)) + (a0 b1 + a1 conj(b0)) j,
/// where conjugating a mode conjugates its coefficient and polynomial and
/// negates its frequency.
inline WaveState tensor_product(const WaveState& a, const WaveState& b) {
  if (!(a.params() == b.params())) throw DomainError("tensor_product: physical parameters differ");
  WaveState out(a.dims() + b.dims(), a.params());
  for (const Mode& ma : a.modes()) {
    for (const Mode& mb : b.modes()) {
      Mode m;
      const bool conj_b = ma.slot == 1;
      m.slot = ma.slot ^ mb.slot;
      m.coeff = ma.coeff * (conj_b ? std::conj(mb.coeff) : mb.coeff);
      if (ma.slot == 1 && mb.slot == 1) m.coeff = -m.coeff;
      m.freq = ma.freq + (conj_b ? -mb.freq : mb.freq);
      m.polys = ma.polys;
      for (const auto& p : mb.polys) m.polys.push_back(conj_b ? p.conj() : p);
      out.add_mode(std::move(m));
    }
  }
  return out;
}

/// Largest |a - b| over the given sample points (physical coordinates).
inline double max_pointwise_difference(const WaveState& a, const WaveState& b,
                                       const std::vector<std::vector<double>>& points, double t) {
  double worst = 0.0;
  for (const auto& x : points) worst = std::max(worst, abs(evaluate(a, x, t) - evaluate(b, x, t)));
  return worst;
}

/// n uniform points on [lo, hi] as one-dimensional sample points.
inline std::vector<std::vector<double>> uniform_grid_1d(double lo, double hi, int n) {
  std::vector<std::vector<double>> pts;
  for (int i = 0; i < n; ++i) pts.push_back({n == 1 ? lo : lo + (hi - lo) * i / (n - 1)});
  return pts;
}

}  // namespace qho
