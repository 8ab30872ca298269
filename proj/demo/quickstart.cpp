// Exact viscous profile, its slope at the origin, and the inviscid limit.
#include <iostream>

#include "burgers/burgers.hpp"

int main() {
  using namespace burgers;
  const long s = 10;
  const ViscousSolution sol(s);
  const ExactRational T = exact::make(1, 2);

  std::cout << "V(s=10, T=1/2, Z=1) = " << exact::to_string(sol.value(T, 1)) << '\n';
  std::cout << "dV/dZ(0) at T=1/2  = " << exact::to_decimal(sol.slope_at_origin(T), 10) << '\n';

  for (double Z : {-2.0, -1.0, -0.5}) {
    const double visc = exact::to_double(sol.value(1, exact::from_double(Z)));
    const double inv = eval_inviscid(1.0, Z).weak_value;
    std::cout << "T=1 Z=" << Z << "  viscous " << visc << "  inviscid " << inv << '\n';
  }

  const auto ext = find_critical_time(100, {});
  std::cout << "s=100 steepest slope " << ext.min_slope_numeric << " at T=" << ext.Tc_numeric << '\n';
}
