#pragma once

// APPROXIMATE double-precision evaluation of the viscous solution for plotting
// and benchmark grids. The exact W coefficients are converted once to logs so
// that neither the huge factorial ratios nor Z^{s} overflow; all sums are of
// positive terms and are evaluated with a log-sum-exp shift.

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "burgers/rational_core.hpp"

namespace burgers {

struct ViscousValue {
  double V = 0.0;
  double dVdZ = 0.0;
};

/// Logs of the coefficients c[k](T) at one time; evaluates V over Z.
class FastViscousProfile {
 public:
  FastViscousProfile(long s, std::vector<double> log_a) : s_(s), log_a_(std::move(log_a)) {}

  [[nodiscard]] ViscousValue operator()(double Z) const {
    const double scale = -2.0 / static_cast<double>(s_);
    if (Z == 0.0) {
      // -(2/s) * 2 a1 / a0
      return {0.0, scale * 2.0 * std::exp(log_a_[1] - log_a_[0])};
    }
    const double log_z2 = std::log(Z * Z);
    double shift = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < log_a_.size(); ++k) {
      shift = std::max(shift, log_a_[k] + static_cast<double>(k) * log_z2);
    }
    // Moments of the weights w_k proportional to a_k Z^{2k}.
    double s0 = 0.0, s1 = 0.0, s2 = 0.0;
    for (std::size_t k = 0; k < log_a_.size(); ++k) {
      const double w = std::exp(log_a_[k] + static_cast<double>(k) * log_z2 - shift);
      const double twok = 2.0 * static_cast<double>(k);
      s0 += w;
      s1 += twok * w;
      s2 += twok * (twok - 1.0) * w;
    }
    const double mean = s1 / s0;
    // W_Z / W = E[2k] / Z, (W_ZZ W - W_Z^2) / W^2 = (E[2k(2k-1)] - E[2k]^2) / Z^2
    return {scale * mean / Z, scale * (s2 / s0 - mean * mean) / (Z * Z)};
  }

 private:
  long s_;
  std::vector<double> log_a_;
};

class FastViscous {
 public:
  explicit FastViscous(long s) : FastViscous(build_w(s)) {}

  explicit FastViscous(const WPolynomial& w) : s_(w.s) {
    log_coeffs_.reserve(w.c.size());
    for (const auto& ck : w.c) {
      std::vector<double> logs;
      logs.reserve(ck.coefficients().size());
      for (const auto& q : ck.coefficients()) logs.push_back(exact::log_abs(q));
      log_coeffs_.push_back(std::move(logs));
    }
  }

  [[nodiscard]] long s() const noexcept { return s_; }

  [[nodiscard]] FastViscousProfile at_time(double T) const {
    if (!(T >= 0.0)) throw DomainError("time must be non-negative");
    std::vector<double> log_a;
    log_a.reserve(log_coeffs_.size());
    const double log_t = T > 0.0 ? std::log(T) : -std::numeric_limits<double>::infinity();
    for (const auto& logs : log_coeffs_) {
      if (T == 0.0) {
        log_a.push_back(logs.front());
        continue;
      }
      double shift = -std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < logs.size(); ++j) shift = std::max(shift, logs[j] + static_cast<double>(j) * log_t);
      double sum = 0.0;
      for (std::size_t j = 0; j < logs.size(); ++j) sum += std::exp(logs[j] + static_cast<double>(j) * log_t - shift);
      log_a.push_back(shift + std::log(sum));
    }
    return FastViscousProfile(s_, std::move(log_a));
  }

  [[nodiscard]] ViscousValue operator()(double T, double Z) const { return at_time(T)(Z); }

 private:
  long s_;
  std::vector<std::vector<double>> log_coeffs_;
};

}  // namespace burgers
