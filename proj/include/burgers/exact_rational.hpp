#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "burgers/errors.hpp"

namespace burgers {

/// Arbitrary-precision rational. GMP keeps every result in canonical form
/// (positive denominator, gcd(num, den) = 1).
using ExactRational = mpq_class;
using ExactInteger = mpz_class;

namespace exact {

inline ExactRational make(long num, long den = 1) {
  if (den == 0) throw DomainError("zero denominator");
  ExactRational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_canonical(const ExactRational& q) {
  if (sgn(q.get_den()) <= 0) return false;
  ExactInteger g;
  mpz_gcd(g.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return g == 1;
}

/// Exact value of a finite double (every double is a dyadic rational).
inline ExactRational from_double(double x) {
  if (!std::isfinite(x)) throw DomainError("cannot convert non-finite double to a rational");
  return ExactRational(x);
}

inline double to_double(const ExactRational& q) { return q.get_d(); }

/// Natural log of |q|, valid far outside the double exponent range.
inline double log_abs(const ExactRational& q) {
  if (sgn(q) == 0) return -std::numeric_limits<double>::infinity();
  long en = 0, ed = 0;
  const double mn = mpz_get_d_2exp(&en, q.get_num_mpz_t());
  const double md = mpz_get_d_2exp(&ed, q.get_den_mpz_t());
  return std::log(std::fabs(mn)) - std::log(md) + static_cast<double>(en - ed) * std::log(2.0);
}

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const ExactRational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Parses "p", "p/q", or a plain decimal such as "-0.125" or "1e-3"; decimals
/// are read exactly (0.1 becomes 1/10).
inline ExactRational parse(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) throw DomainError("empty rational literal");

  auto parse_int = [&](const std::string& digits) {
    ExactInteger z;
    if (digits.empty() || z.set_str(digits, 10) != 0) {
      throw DomainError("malformed rational literal '" + std::string(text) + "'");
    }
    return z;
  };

  if (const auto slash = s.find('/'); slash != std::string::npos) {
    const ExactInteger den = parse_int(s.substr(slash + 1));
    if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    ExactRational q(parse_int(s.substr(0, slash)), den);
    q.canonicalize();
    return q;
  }

  long exponent = 0;
  if (const auto e = s.find_first_of("eE"); e != std::string::npos) {
    try {
      std::size_t used = 0;
      exponent = std::stol(s.substr(e + 1), &used);
      if (used != s.size() - e - 1) throw DomainError("bad exponent");
    } catch (const std::exception&) {
      throw DomainError("malformed exponent in '" + std::string(text) + "'");
    }
    s = s.substr(0, e);
  }
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s = s.substr(1);
  }
  if (s.find_first_not_of("0123456789.") != std::string::npos) {
    throw DomainError("malformed rational literal '" + std::string(text) + "'");
  }
  std::string digits = s;
  if (const auto dot = s.find('.'); dot != std::string::npos) {
    digits = s.substr(0, dot) + s.substr(dot + 1);
    exponent -= static_cast<long>(s.size() - dot - 1);
    if (digits.empty()) throw DomainError("malformed rational literal '" + std::string(text) + "'");
  }
  ExactRational q(parse_int(digits));
  ExactInteger scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  if (exponent >= 0) {
    q *= scale;
  } else {
    q /= scale;
  }
  return negative ? ExactRational(-q) : q;
}

/// Fixed-point decimal with `digits` places after the point, rounded half to
/// even. Deterministic for any rational input.
inline std::string to_decimal(const ExactRational& q, int digits) {
  if (digits < 0) throw DomainError("digits must be non-negative");
  ExactInteger scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const ExactRational scaled = abs(q) * scale;
  ExactInteger whole, rem;
  mpz_fdiv_qr(whole.get_mpz_t(), rem.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  const int cmp_half = cmp(ExactInteger(2 * rem), scaled.get_den());
  if (cmp_half > 0 || (cmp_half == 0 && mpz_odd_p(whole.get_mpz_t()))) whole += 1;

  std::string body = whole.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  const bool negative = sgn(q) < 0 && whole != 0;
  return negative ? "-" + body : body;
}

inline std::string to_decimal(double x, int digits) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return to_decimal(from_double(x), digits);
}

inline ExactInteger factorial(unsigned long n) {
  ExactInteger f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

inline ExactInteger binomial(unsigned long n, unsigned long k) {
  ExactInteger b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

/// (2k-1)!! with the convention (-1)!! = 1.
inline ExactInteger odd_double_factorial(long k) {
  if (k <= 0) return 1;
  ExactInteger f;
  mpz_2fac_ui(f.get_mpz_t(), static_cast<unsigned long>(2 * k - 1));
  return f;
}

inline ExactRational pow(const ExactRational& base, unsigned long exponent) {
  ExactRational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  return out;
}

}  // namespace exact
}  // namespace burgers
