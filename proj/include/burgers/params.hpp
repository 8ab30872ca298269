#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "burgers/errors.hpp"

namespace burgers {

/// Physical scales of the dimensional problem v_t + v v_x = nu v_xx with
/// v(0, x) = -2 v0 (x/a) / (1 + (x/a)^2).
struct DimensionalScales {
  double v0 = 1.0;
  double a = 1.0;
  double nu = 1.0;
};

/// Reynolds-like number s = v0 a / nu, plus optional dimensional scales for
/// converting to and from (v, t, x).
class Params {
 public:
  explicit Params(long s) : s_(s) {
    if (s < 2 || s % 2 != 0) {
      throw DomainError("s must be a positive even integer, got " + std::to_string(s));
    }
  }

  /// Derives s from the dimensional scales; s must come out an even integer.
  static Params from_dimensional(const DimensionalScales& d) {
    if (!(d.v0 > 0.0 && d.a > 0.0 && d.nu > 0.0)) throw DomainError("v0, a, nu must be positive");
    const double s = d.v0 * d.a / d.nu;
    const double rounded = std::round(s);
    if (std::fabs(s - rounded) > 1e-9 * std::max(1.0, s)) {
      throw DomainError("v0*a/nu = " + std::to_string(s) + " is not an integer");
    }
    Params p(static_cast<long>(rounded));
    p.scales_ = d;
    return p;
  }

  [[nodiscard]] long s() const noexcept { return s_; }
  [[nodiscard]] long half_s() const noexcept { return s_ / 2; }
  [[nodiscard]] const std::optional<DimensionalScales>& scales() const noexcept { return scales_; }

  // Rescaling helpers: v = v0 V, t = (a / v0) T, x = a Z.
  [[nodiscard]] double to_velocity(double V) const { return scale().v0 * V; }
  [[nodiscard]] double to_time(double T) const { return scale().a / scale().v0 * T; }
  [[nodiscard]] double to_position(double Z) const { return scale().a * Z; }
  [[nodiscard]] double from_time(double t) const { return scale().v0 / scale().a * t; }
  [[nodiscard]] double from_position(double x) const { return x / scale().a; }

 private:
  [[nodiscard]] const DimensionalScales& scale() const {
    if (!scales_) throw DomainError("no dimensional scales attached");
    return *scales_;
  }

  long s_;
  std::optional<DimensionalScales> scales_;
};

}  // namespace burgers
