#include <gtest/gtest.h>

#include "certiroot/error.hpp"
#include "certiroot/error_bounds.hpp"
#include "certiroot/testkit.hpp"

namespace certiroot {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::PreconditionViolated;
}

TEST(PowerDiffBound, Examples) {
  // |2 - 15/8| = 2^-3 sits on the boundary of the strict precondition at r = 3.
  EXPECT_EQ(code_of([] { power_diff_bound(2, Rational(15, 8), 3, 3); }), ErrorCode::PreconditionViolated);
  EXPECT_EQ(power_diff_bound(2, Rational(15, 8), 3, 2), Rational(6));
  EXPECT_LT((Rational(2).pow(3) - Rational(15, 8).pow(3)).abs(), Rational(6));

  const Rational a(1, 2);
  const Rational b = a - Rational(1, 32);
  EXPECT_EQ(power_diff_bound(a, b, 4, 4), Rational(1, 8));
  EXPECT_LT((a.pow(4) - b.pow(4)).abs(), Rational(1, 8));

  EXPECT_GE(power_diff_bound(Rational(3, 7), Rational(3, 7), 5, 8), Rational(0));
}

TEST(PowerDiffBound, Preconditions) {
  EXPECT_EQ(code_of([] { power_diff_bound(0, Rational(1, 16), 2, 4); }), ErrorCode::PreconditionViolated);
  EXPECT_EQ(code_of([] { power_diff_bound(0, 0, 0, 4); }), ErrorCode::PreconditionViolated);
}

// For k = 1 the bound is 2^-r max{|a|, |b|}, which falls below |a - b| once both
// values are small. The inequality as stated has no slack left to absorb this.
TEST(PowerDiffBound, LinearCaseCounterexample) {
  const Rational a(0);
  const Rational b(1, 32);
  ASSERT_LT((a - b).abs(), Rational::pow2(-4));
  EXPECT_EQ(power_diff_bound(a, b, 1, 4), Rational(1, 512));
  EXPECT_GT((a - b).abs(), power_diff_bound(a, b, 1, 4));
}

TEST(PowerDiffBoundProperty, HoldsForHigherPowersAwayFromZero) {
  testkit::Generator gen(51);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto k = static_cast<std::uint32_t>(gen.integer(2, 8));
    const auto r = static_cast<std::uint32_t>(gen.integer(1, 16));
    const Rational eps = Rational::pow2(-static_cast<std::int64_t>(r));
    const Rational a = gen.rational(Rational(1), Rational(4), 64) * (gen.integer(0, 1) ? 1 : -1);
    const Rational b = a + gen.rational(Rational(-1), Rational(1), 1000) * Rational(999, 1000) * eps;
    EXPECT_LT((a.pow(k) - b.pow(k)).abs(), power_diff_bound(a, b, k, r)) << a << ' ' << b << ' ' << k << ' ' << r;
  }
}

TEST(EvalTolerance, Examples) {
  EXPECT_EQ(eval_tolerance({0, 1}, 0, 4), Rational(1, 64));
  EXPECT_EQ(eval_tolerance({1, 0, 1}, 1, 8), Rational(594441, 16777216));
}

TEST(IntersectionPredicate, ExactTriplesPassAndBoundaryIsStrict) {
  const Polynomial a{1, 0, 1};
  EXPECT_TRUE(intersection_predicate(a, 1, 2, 8));
  const Rational tol = eval_tolerance(a, 1, 8);
  EXPECT_FALSE(intersection_predicate(a, 1, Rational(2) + tol, 8));
  EXPECT_TRUE(intersection_predicate(a, 1, Rational(2) + tol / Rational(2), 8));
}

TEST(SnapPolynomial, Examples) {
  const Polynomial a{0, 0, 1};
  EXPECT_EQ(snap_polynomial(a, a, Rational(3, 4)), a);
  const Polynomial approx{0, 0, Rational(17, 16)};
  EXPECT_EQ(snap_polynomial(a, approx, 1), Polynomial({Rational(-1, 16), 0, Rational(17, 16)}));
  EXPECT_EQ(snap_polynomial(a, approx, 0).coeff(0), Rational(0));
  EXPECT_EQ(code_of([&] { snap_polynomial(a, Polynomial{0, 1}, 1); }), ErrorCode::DegreeMismatch);
}

TEST(PerturbationBound, Examples) {
  EXPECT_EQ(perturbation_bound(1, ApproxContext(4, 2)), Rational(1, 32));
  EXPECT_EQ(perturbation_bound(0, ApproxContext(4, 2)), Rational(4, 256));
  EXPECT_EQ(coefficient_distance_sq({1, 2}, {0, 4}), Rational(5));
}

TEST(LipschitzConstant, Examples) {
  EXPECT_EQ(lipschitz_constant({0, 0, 1}), Rational(2));
  EXPECT_EQ(lipschitz_constant({0, -1, 0, 3}), Rational(10));
  EXPECT_EQ(lipschitz_constant(Polynomial::constant(7)), Rational(0));
}

TEST(SmallValueThreshold, Examples) {
  const Polynomial p{-1, 0, 1};
  EXPECT_EQ(small_value_threshold(p, 1, ApproxContext(4, 2)).value(), Rational::pow2(-9));
  EXPECT_EQ(small_value_threshold(p, 2, ApproxContext(4, 2)).value(), Rational::pow2(-8));
  EXPECT_EQ(small_value_threshold(Polynomial{3, 0, 3}, 2, ApproxContext(4, 2), 3).value(), Rational(3, 256));
  EXPECT_EQ(code_of([&] { small_value_threshold(p, Rational(1, 8), ApproxContext(4, 2)); }),
            ErrorCode::SeparationTooSmall);
  EXPECT_EQ(code_of([&] { small_value_threshold(p, 1, ApproxContext(4, 3)); }), ErrorCode::DegreeMismatch);
  EXPECT_EQ(code_of([] { ApproxContext(0, 2); }), ErrorCode::PreconditionViolated);
}

TEST(SmallValueThreshold, RootlessQuadraticStaysAbove) {
  const Polynomial p{1, 0, 1};
  const Threshold gamma = small_value_threshold(p, 2, ApproxContext(8, 2));
  EXPECT_EQ(gamma.value(), Rational::pow2(-16));
  testkit::Generator gen(52);
  for (int i = 0; i < 200; ++i) {
    EXPECT_GT(eval(p, gen.rational(Rational(-5), Rational(5), 256)), gamma.value());
  }
}

TEST(ErrorBoundsProperty, SnapPreservesValueAndStaysClose) {
  testkit::Generator gen(53);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto d = static_cast<std::uint32_t>(gen.integer(1, 6));
    const auto r = static_cast<std::uint32_t>(gen.integer(2, 16));
    const Rational eps = Rational::pow2(-static_cast<std::int64_t>(r));
    const Polynomial a = gen.polynomial(d, 10, 4);
    std::vector<Rational> c(a.coeffs().begin(), a.coeffs().end());
    for (auto& x : c) x += gen.rational(Rational(-1), Rational(1), 997) * Rational(996, 997) * eps;
    const Polynomial approx(c);
    if (approx.degree() != a.degree()) continue;
    const Rational x = gen.rational(Rational(-2), Rational(2), 128);
    const Polynomial b = snap_polynomial(a, approx, x);
    EXPECT_EQ(eval(b, x), eval(a, x));
    EXPECT_LT(coefficient_distance_sq(a, b), perturbation_bound(x, ApproxContext(r, d)));
  }
}

TEST(ErrorBoundsProperty, LipschitzOnUnitInterval) {
  testkit::Generator gen(54);
  for (int trial = 0; trial < 50; ++trial) {
    const Polynomial p = gen.polynomial(static_cast<std::size_t>(gen.integer(0, 6)), 20, 5);
    const Rational c = lipschitz_constant(p);
    for (int i = 0; i < 50; ++i) {
      const Rational x = gen.rational(Rational(0), Rational(1), 1024);
      const Rational y = gen.rational(Rational(0), Rational(1), 1024);
      EXPECT_LE((eval(p, y) - eval(p, x)).abs(), c * (y - x).abs());
    }
  }
}

}  // namespace
}  // namespace certiroot
