#include <gtest/gtest.h>

#include "burgers/exact_rational.hpp"
#include "burgers/params.hpp"
#include "burgers/polynomial.hpp"

using namespace burgers;

TEST(ExactRational, MakeCanonicalizes) {
  const auto q = exact::make(4, -6);
  EXPECT_EQ(q, ExactRational(-2, 3));
  EXPECT_TRUE(exact::is_canonical(q));
  EXPECT_EQ(q.get_num(), -2);
  EXPECT_EQ(q.get_den(), 3);
  EXPECT_THROW(exact::make(1, 0), DomainError);
}

TEST(ExactRational, ParseFractionsAndDecimalsExactly) {
  EXPECT_EQ(exact::parse("3/4"), ExactRational(3, 4));
  EXPECT_EQ(exact::parse("-6/8"), ExactRational(-3, 4));
  EXPECT_EQ(exact::parse("-0.125"), ExactRational(-1, 8));
  EXPECT_EQ(exact::parse("0.1"), ExactRational(1, 10));
  EXPECT_EQ(exact::parse("1e-3"), ExactRational(1, 1000));
  EXPECT_EQ(exact::parse("2.5E2"), ExactRational(250));
  EXPECT_EQ(exact::parse(" 7 "), ExactRational(7));
  for (const char* bad : {"", "abc", "1/0", "1.2.3", "1e", "--1", ".", "1/-", "0x10", "1-2"}) {
    EXPECT_THROW(exact::parse(bad), DomainError) << bad;
  }
}

TEST(ExactRational, StringRoundTrip) {
  for (const auto& q : {ExactRational(-22, 7), ExactRational(0), ExactRational(5), ExactRational(1, 1000003)}) {
    EXPECT_EQ(exact::parse(exact::to_string(q)), q);
  }
  EXPECT_EQ(exact::to_string(ExactRational(-2, 3)), "-2/3");
  EXPECT_EQ(exact::to_string(exact::make(4, 2)), "2");
}

TEST(ExactRational, DecimalRoundsHalfToEven) {
  EXPECT_EQ(exact::to_decimal(ExactRational(1, 8), 2), "0.12");
  EXPECT_EQ(exact::to_decimal(ExactRational(3, 8), 2), "0.38");
  EXPECT_EQ(exact::to_decimal(ExactRational(-1, 8), 2), "-0.12");
  EXPECT_EQ(exact::to_decimal(ExactRational(5, 2), 0), "2");
  EXPECT_EQ(exact::to_decimal(ExactRational(7, 2), 0), "4");
  EXPECT_EQ(exact::to_decimal(ExactRational(-1, 3), 12), "-0.333333333333");
  EXPECT_EQ(exact::to_decimal(ExactRational(-1, 1000), 2), "0.00");
  EXPECT_EQ(exact::to_decimal(ExactRational(2, 3), 12), "0.666666666667");
  EXPECT_EQ(exact::to_decimal(std::numeric_limits<double>::quiet_NaN(), 3), "nan");
  EXPECT_EQ(exact::to_decimal(-std::numeric_limits<double>::infinity(), 3), "-inf");
}

TEST(ExactRational, DoubleConversionIsExact) {
  EXPECT_EQ(exact::from_double(0.375), ExactRational(3, 8));
  EXPECT_EQ(exact::to_double(exact::from_double(0.1)), 0.1);
  EXPECT_THROW(exact::from_double(std::nan("")), DomainError);
}

TEST(ExactRational, LogAbsBeyondDoubleRange) {
  const ExactRational huge(exact::factorial(400));
  EXPECT_NEAR(exact::log_abs(huge), std::lgamma(401.0), 1e-9 * std::lgamma(401.0));
  EXPECT_NEAR(exact::log_abs(1 / huge), -std::lgamma(401.0), 1e-9 * std::lgamma(401.0));
}

TEST(ExactRational, Combinatorics) {
  EXPECT_EQ(exact::factorial(0), 1);
  EXPECT_EQ(exact::factorial(20), ExactInteger("2432902008176640000"));
  EXPECT_EQ(exact::binomial(10, 3), 120);
  EXPECT_EQ(exact::odd_double_factorial(0), 1);  // (-1)!!
  EXPECT_EQ(exact::odd_double_factorial(1), 1);
  EXPECT_EQ(exact::odd_double_factorial(3), 15);
  for (unsigned long k = 0; k < 30; ++k) {
    // 2^k k! (2k-1)!! = (2k)!
    ExactInteger two_k = 1;
    for (unsigned long i = 0; i < k; ++i) two_k *= 2;
    EXPECT_EQ(two_k * exact::factorial(k) * exact::odd_double_factorial(static_cast<long>(k)), exact::factorial(2 * k));
  }
  EXPECT_EQ(exact::pow(ExactRational(-2, 3), 3), ExactRational(-8, 27));
}

TEST(Params, RejectsOddOrNonPositiveS) {
  for (long s : {-2L, 0L, 1L, 3L, 101L}) EXPECT_THROW(Params{s}, DomainError) << s;
  EXPECT_NO_THROW(Params{2});
}

TEST(Params, DimensionalRescaling) {
  const auto p = Params::from_dimensional({2.0, 0.5, 0.25});  // s = v0 a / nu = 4
  EXPECT_EQ(p.s(), 4);
  EXPECT_DOUBLE_EQ(p.to_velocity(-0.5), -1.0);
  EXPECT_DOUBLE_EQ(p.from_time(p.to_time(1.3)), 1.3);
  EXPECT_DOUBLE_EQ(p.from_position(p.to_position(-0.7)), -0.7);
  EXPECT_THROW(Params::from_dimensional({1.0, 1.0, 0.3}), DomainError);
}

TEST(Polynomial, HornerDerivativeTrim) {
  const TPolynomial p({ExactRational(1), ExactRational(-3), ExactRational(2), ExactRational(0)});
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p(ExactRational(1, 2)), ExactRational(0));
  EXPECT_EQ(p.derivative(), TPolynomial({ExactRational(-3), ExactRational(4)}));
  EXPECT_EQ((p * ExactRational(0)).degree(), -1);
}
