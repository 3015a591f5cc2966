#pragma once

#include <cmath>
#include <optional>

#include "spincrit/errors.hpp"

namespace spincrit {

/// Zero temperature or a finite inverse temperature beta (k_B = 1).
class Temperature {
 public:
  static Temperature zero() { return Temperature{}; }

  static Temperature inverse(double beta) {
    if (!(beta > 0.0) || !std::isfinite(beta)) throw ArgumentError("inverse temperature must be finite and > 0");
    Temperature t;
    t.beta_ = beta;
    return t;
  }

  bool is_zero() const noexcept { return !beta_.has_value(); }
  /// Only meaningful when !is_zero().
  double beta() const noexcept { return beta_.value_or(0.0); }

  /// tanh(beta * energy), or 1 at zero temperature.
  double occupation_factor(double energy) const {
    return beta_ ? std::tanh(*beta_ * energy) : 1.0;
  }

  /// tanh(beta * energy) / energy with its gapless limits: beta at finite
  /// temperature, 0 at zero temperature (energy below `gapless`).
  double weight(double energy, double gapless = 1e-14) const {
    if (energy < gapless) return beta_ ? *beta_ : 0.0;
    return occupation_factor(energy) / energy;
  }

  friend bool operator==(const Temperature&, const Temperature&) = default;

 private:
  Temperature() = default;
  std::optional<double> beta_;
};

}  // namespace spincrit
