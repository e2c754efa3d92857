#include <gtest/gtest.h>

#include <algorithm>
#include <array>

#include "certiroot/error.hpp"
#include "certiroot/sturm.hpp"
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

std::vector<Polynomial> chain_of(const Polynomial& p) {
  const auto c = sturm_chain(p);
  return {c.polys().begin(), c.polys().end()};
}

TEST(Sturm, ChainExamples) {
  EXPECT_EQ(chain_of({-2, 0, 1}), (std::vector<Polynomial>{{-2, 0, 1}, {0, 2}, {2}}));
  EXPECT_EQ(chain_of({1, 0, 1}), (std::vector<Polynomial>{{1, 0, 1}, {0, 2}, {-1}}));
  EXPECT_EQ(chain_of({0, 1}), (std::vector<Polynomial>{{0, 1}, {1}}));
}

TEST(Sturm, ChainStopsAtZeroRemainderForRepeatedRoots) {
  // (x - 1)^2: P1 = 2x - 2 divides P0, so the chain ends at the gcd.
  EXPECT_EQ(chain_of({1, -2, 1}), (std::vector<Polynomial>{{1, -2, 1}, {-2, 2}}));
}

TEST(Sturm, ConstantHasNoChain) {
  EXPECT_EQ(code_of([] { sturm_chain(Polynomial::constant(3)); }), ErrorCode::DegreeTooLow);
}

TEST(Sturm, EvalExamples) {
  const auto chain = sturm_chain({-2, 0, 1});
  EXPECT_EQ(sturm_eval(chain, 0).values, (std::vector<Rational>{-2, 0, 2}));
  EXPECT_EQ(sturm_eval(chain, -3).values, (std::vector<Rational>{7, -6, 2}));
  EXPECT_EQ(sturm_eval(sturm_chain({0, 1}), 0).values, (std::vector<Rational>{0, 1}));
}

TEST(Sturm, SignVariationsDeleteZeros) {
  EXPECT_EQ(sign_variations({{7, -6, 2}}), 2u);
  EXPECT_EQ(sign_variations({{-2, 0, 2}}), 1u);
  EXPECT_EQ(sign_variations({{1, 1, 1}}), 0u);
  EXPECT_EQ(sign_variations({{0, 0, 0}}), 0u);
  EXPECT_EQ(sign_variations({}), 0u);
}

TEST(Sturm, CountExamples) {
  EXPECT_EQ(count_roots(Polynomial{-2, 0, 1}, -3, 3), 2u);
  EXPECT_EQ(count_roots(Polynomial{1, 0, 1}, -10, 10), 0u);
  EXPECT_EQ(count_roots(Polynomial{1, -2, 1}, 0, 2), 1u);
  EXPECT_EQ(count_roots(Polynomial{-2, 0, 1}, 0, 3), 1u);
}

TEST(Sturm, CountRejectsBadIntervals) {
  EXPECT_EQ(code_of([] { count_roots(Polynomial{-2, 0, 1}, 3, -3); }), ErrorCode::PreconditionViolated);
  EXPECT_EQ(code_of([] { count_roots(Polynomial{-2, 0, 1}, 1, 1); }), ErrorCode::PreconditionViolated);
  EXPECT_EQ(code_of([] { count_roots(Polynomial{-1, 0, 1}, -1, 3); }), ErrorCode::EndpointIsRoot);
}

TEST(Sturm, RightEndpointRootIsRejected) {
  EXPECT_EQ(code_of([] { count_roots(Polynomial{-1, 1}, 0, 1); }), ErrorCode::EndpointIsRoot);
  EXPECT_EQ(count_roots(Polynomial{-1, 1}, 0, Rational(1000001, 1000000)), 1u);
}

TEST(Sturm, CauchyBoundExamples) {
  EXPECT_EQ(cauchy_bound({-2, 0, 1}), Rational(3));
  EXPECT_EQ(cauchy_bound({-6, 11, -6, 1}), Rational(12));
  EXPECT_EQ(cauchy_bound({0, 1}), Rational(1));
  EXPECT_EQ(cauchy_bound({1, 0, 2}), Rational(3, 2));
}

TEST(SturmProperty, CountMatchesPlantedRoots) {
  testkit::Generator gen(21);
  testkit::PlantOptions opts;
  opts.square_free = true;
  for (int trial = 0; trial < 60; ++trial) {
    const auto planted = testkit::plant(gen.planted_spec(opts));
    if (planted.poly.degree() < 1) continue;
    const auto chain = sturm_chain(planted.poly);
    const Rational beta = cauchy_bound(planted.poly);
    EXPECT_EQ(count_roots(chain, -beta, beta), planted.distinct_roots.size());
    EXPECT_LE(chain.size(), static_cast<std::size_t>(planted.poly.degree()) + 1);
    for (const auto& root : planted.distinct_roots) {
      EXPECT_LT(root.abs(), beta);
    }
  }
}

TEST(SturmProperty, MonotoneAndAdditive) {
  testkit::Generator gen(22);
  for (int trial = 0; trial < 60; ++trial) {
    const auto planted = testkit::plant(gen.planted_spec({}));
    if (planted.poly.degree() < 1) continue;
    const auto chain = sturm_chain(planted.poly);
    auto is_root = [&](const Rational& t) { return eval(planted.poly, t).is_zero(); };
    Rational a = gen.rational(Rational(-11), Rational(11), 97);
    Rational b = gen.rational(Rational(-11), Rational(11), 97);
    Rational m = gen.rational(Rational(-11), Rational(11), 97);
    std::array<Rational, 3> pts{a, m, b};
    std::sort(pts.begin(), pts.end());
    if (pts[0] == pts[1] || pts[1] == pts[2] || std::any_of(pts.begin(), pts.end(), is_root)) continue;
    const auto left = count_roots(chain, pts[0], pts[1]);
    const auto right = count_roots(chain, pts[1], pts[2]);
    const auto whole = count_roots(chain, pts[0], pts[2]);
    EXPECT_EQ(left + right, whole);
    EXPECT_GE(whole, left);
    const auto expected = std::count_if(planted.distinct_roots.begin(), planted.distinct_roots.end(),
                                        [&](const Rational& r) { return pts[0] < r && r <= pts[2]; });
    EXPECT_EQ(whole, static_cast<std::size_t>(expected));
  }
}

}  // namespace
}  // namespace certiroot
