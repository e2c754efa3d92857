#include <gtest/gtest.h>

#include <sstream>

#include "certiroot/error.hpp"
#include "certiroot/rational.hpp"
#include "certiroot/testkit.hpp"

namespace certiroot {
namespace {

TEST(Rational, ReducesOnConstruction) {
  EXPECT_EQ(Rational(6, 4), Rational(3, 2));
  EXPECT_EQ(Rational(3, -6).to_string(), "-1/2");
  EXPECT_EQ(Rational(0, 7).to_string(), "0/1");
}

TEST(Rational, ZeroDenominatorThrows) {
  EXPECT_THROW(Rational(1, 0), Error);
  EXPECT_THROW(Rational(1) / Rational(0), Error);
}

TEST(Rational, ParseForms) {
  EXPECT_EQ(Rational::parse("-7"), Rational(-7));
  EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2));
  EXPECT_EQ(Rational::parse("123456789012345678901234567890/3").numerator_string(),
            "41152263004115226300411522630");
  for (const char* bad : {"", "1/", "/2", "1/0", "x", "1.5", "1/2/3"}) {
    try {
      Rational::parse(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError) << bad;
    }
  }
}

TEST(Rational, PowersOfTwo) {
  EXPECT_EQ(Rational::pow2(3), Rational(8));
  EXPECT_EQ(Rational::pow2(-4), Rational(1, 16));
  EXPECT_EQ(Rational::dyadic(-3, 2), Rational(-3, 4));
  EXPECT_EQ(Rational(3, 8).dyadic_exponent(), 3u);
  EXPECT_EQ(Rational(5).dyadic_exponent(), 0u);
  EXPECT_FALSE(Rational(1, 3).dyadic_exponent().has_value());
}

TEST(Rational, CeilLog2) {
  EXPECT_EQ(Rational(1).ceil_log2(), 0);
  EXPECT_EQ(Rational(3).ceil_log2(), 2);
  EXPECT_EQ(Rational(4).ceil_log2(), 2);
  EXPECT_EQ(Rational(5).ceil_log2(), 3);
  EXPECT_EQ(Rational(1, 4).ceil_log2(), -2);
  EXPECT_EQ(Rational(1, 3).ceil_log2(), -1);
}

TEST(Rational, FloorAndPow) {
  EXPECT_EQ(Rational(7, 2).floor(), Rational(3));
  EXPECT_EQ(Rational(-7, 2).floor(), Rational(-4));
  EXPECT_EQ(Rational(-2, 3).pow(3), Rational(-8, 27));
  EXPECT_EQ(Rational(5).pow(0), Rational(1));
}

TEST(Rational, StreamsCompactForm) {
  std::ostringstream os;
  os << Rational(4) << ' ' << Rational(-1, 3);
  EXPECT_EQ(os.str(), "4 -1/3");
}

TEST(RationalProperty, FieldIdentitiesAndCanonicalForm) {
  testkit::Generator gen(7);
  for (int i = 0; i < 500; ++i) {
    const Rational a = gen.rational(Rational(-50), Rational(50), 97);
    const Rational b = gen.nonzero_rational(1000, 61);
    EXPECT_EQ((a + b) - b, a);
    EXPECT_EQ((a * b) / b, a);
    EXPECT_EQ(a * (b + Rational(1)), a * b + a);
    const Rational q = a / b;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), q.raw().get_num_mpz_t(), q.raw().get_den_mpz_t());
    EXPECT_EQ(g, 1);
    EXPECT_GT(q.raw().get_den(), 0);
    EXPECT_EQ(Rational::parse(q.to_string()), q);
  }
}

}  // namespace
}  // namespace certiroot
