#pragma once

#include <algorithm>
#include <cmath>

#include "burgers/fast_viscous.hpp"
#include "burgers/inviscid.hpp"

namespace burgers {

/// max |V_s(T, Z) - weak inviscid value| over n uniform points of [zmin, zmax],
/// skipping |Z| <= exclusion (the shock layer).
inline double max_viscous_inviscid_gap(long s, double T, double zmin, double zmax, long n, double exclusion) {
  const auto profile = FastViscous(s).at_time(T);
  double gap = 0.0;
  for (long i = 0; i < n; ++i) {
    const double Z = zmin + (zmax - zmin) * static_cast<double>(i) / static_cast<double>(n - 1);
    if (std::fabs(Z) <= exclusion) continue;
    gap = std::max(gap, std::fabs(profile(Z).V - eval_inviscid(T, Z).weak_value));
  }
  return gap;
}

}  // namespace burgers
