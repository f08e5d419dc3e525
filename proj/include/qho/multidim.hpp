#pragma once

// Cartesian multi-dimensional oscillators: ordered quaternionic products of
// one-dimensional Psi_nm factors, and split states whose complex and j parts
// vibrate along different sets of directions.

#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "qho/oscillator1d.hpp"

namespace qho {

/// Quaternion product Psi^(1)(X_1) Psi^(2)(X_2) ... taken left to right,
/// factor k living on dimension k.
inline WaveState product_state(const std::vector<QPair>& factors, const PhysicalParams& params = {}) {
  if (factors.empty()) throw ValidationError("product_state: need at least one factor");
  WaveState s = psi_nm(factors.front(), params);
  for (std::size_t k = 1; k < factors.size(); ++k) s = tensor_product(s, psi_nm(factors[k], params));
  return s;
}

/// Direction sets of a split state, 1-based. P carries the complex
/// psi_n vibrations and Pprime the conj(psi_m) j vibrations; together they
/// must cover every direction. Overlap is rejected unless allowed.
struct SplitSpec {
  int dims = 1;
  std::set<int> P;
  std::set<int> Pprime;
  int n = 0;
  int m = 0;
  double theta = 0.0;
  bool allow_overlap = false;

  void validate() const {
    if (dims < 1) throw ValidationError("SplitSpec: dims must be at least 1");
    if (n < 0 || m < 0) throw ValidationError("SplitSpec: n and m must be non-negative");
    if (!std::isfinite(theta)) throw ValidationError("SplitSpec: theta must be finite");
    std::set<int> all;
    for (int k : P) {
      if (k < 1 || k > dims) throw ValidationError("SplitSpec: index " + std::to_string(k) + " out of range");
      all.insert(k);
    }
    for (int k : Pprime) {
      if (k < 1 || k > dims) throw ValidationError("SplitSpec: index " + std::to_string(k) + " out of range");
      if (!allow_overlap && P.count(k) != 0) {
        throw ValidationError("SplitSpec: direction " + std::to_string(k) +
                              " in both P and Pprime (overlap not allowed)");
      }
      all.insert(k);
    }
    if (static_cast<int>(all.size()) != dims) {
      throw ValidationError("SplitSpec: P and Pprime must together cover all directions");
    }
  }
};

/// cos(theta) prod_{k in P} psi_n(X_k) + sin(theta) prod_{k in P'} conj(psi_m(X_k)) j.
///
/// Directions a slot does not list carry the normalized ground Gaussian
/// psi_0 without a time phase, so the state stays normalizable in all dims.
/// Slot frequencies are -|P| E_n / hbar and +|P'| E_m / hbar.
inline WaveState split_state(const SplitSpec& spec, const PhysicalParams& params = {}) {
  spec.validate();
  WaveState s(spec.dims, params);
  auto add_slot = [&](int slot, double weight, int level, const std::set<int>& dirs, double freq) {
    Mode mode{slot, weight, {}, freq};
    for (int k = 1; k <= spec.dims; ++k) {
      const int lvl = dirs.count(k) != 0 ? level : 0;
      mode.coeff *= hermite_norm_const(lvl, params) * hermite_function_norm(lvl);
      mode.polys.push_back(HermiteExpansion::basis(lvl));
    }
    s.add_mode(std::move(mode));
  };
  const double hbar = params.hbar;
  add_slot(0, std::cos(spec.theta), spec.n, spec.P,
           -static_cast<double>(spec.P.size()) * level_energy(spec.n, params) / hbar);
  add_slot(1, std::sin(spec.theta), spec.m, spec.Pprime,
           static_cast<double>(spec.Pprime.size()) * level_energy(spec.m, params) / hbar);
  return s;
}

/// <sum_k H_k> on a normalized Cartesian state.
inline double cartesian_energy(const WaveState& s, double t = 0.0, const ExpectationOptions& opts = {}) {
  return expectation(total_hamiltonian(s.params(), s.dims()), s, t, opts);
}

/// Sum of the per-factor energies of a product state.
inline double product_energy_closed_form(const std::vector<QPair>& factors,
                                         const PhysicalParams& params = {}) {
  double e = 0.0;
  for (const auto& q : factors) e += energy_nm(q, params);
  return e;
}

/// Slot-weighted energy of a split state; unlisted directions contribute
/// the ground energy.
inline double split_energy_closed_form(const SplitSpec& spec, const PhysicalParams& params = {}) {
  const double c2 = std::cos(spec.theta) * std::cos(spec.theta);
  const double s2 = std::sin(spec.theta) * std::sin(spec.theta);
  const auto np = static_cast<double>(spec.P.size());
  const auto npp = static_cast<double>(spec.Pprime.size());
  const double slot0 = np * (spec.n + 0.5) + (spec.dims - np) * 0.5;
  const double slot1 = npp * (spec.m + 0.5) + (spec.dims - npp) * 0.5;
  return (c2 * slot0 + s2 * slot1) * params.quantum();
}

}  // namespace qho
