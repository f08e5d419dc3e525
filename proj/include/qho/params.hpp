#pragma once

#include <cmath>
#include <string>

#include "qho/errors.hpp"

namespace qho {

/// Mass, angular frequency and reduced Planck constant of the oscillator.
/// Defaults are natural units, in which X = x and energies read in units of hbar*omega.
struct PhysicalParams {
  double mu = 1.0;
  double omega = 1.0;
  double hbar = 1.0;

  /// sqrt(mu*omega/hbar), the factor taking x to the dimensionless X.
  double length_scale() const { return std::sqrt(mu * omega / hbar); }
  double quantum() const { return hbar * omega; }

  void validate() const {
    if (!(mu > 0.0) || !(omega > 0.0) || !(hbar > 0.0) || !std::isfinite(mu) ||
        !std::isfinite(omega) || !std::isfinite(hbar)) {
      throw ValidationError("physical parameters must be finite and strictly positive");
    }
  }

  friend bool operator==(const PhysicalParams&, const PhysicalParams&) = default;
};

}  // namespace qho
