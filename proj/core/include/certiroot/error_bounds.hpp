#pragma once

#include <cstdint>

#include "certiroot/approx_sign.hpp"
#include "certiroot/polynomial.hpp"

namespace certiroot {

/// Precision exponent r (approximations within 2^-r) and degree d.
struct ApproxContext {
  /// Throws PreconditionViolated unless r >= 1 and d >= 1.
  ApproxContext(std::uint32_t r, std::uint32_t d);

  std::uint32_t r;
  std::uint32_t d;
};

/// 2^-r * k * max{|a|, |a|^k, |b|, |b|^k}, the claimed bound on |a^k - b^k|
/// when |a - b| < 2^-r. Throws PreconditionViolated if |a - b| >= 2^-r or
/// k == 0.
///
/// For k == 1 the claim needs max{|a|, |b|} >= 1 (or a == b): with
/// a = 0, b = 2^-(r+1) the difference is 2^-(r+1) but the bound is
/// 2^-(2r+1). For k >= 2 it holds strictly whenever a != b.
Rational power_diff_bound(const Rational& a, const Rational& b, std::uint32_t k, std::uint32_t r);

/// T = (d+1) 2^-r (t + d t max|a_i|) with t = max{u, u^d}, u = |x| + 2^-r.
/// Throws DegreeTooLow for constant coefficient vectors.
Rational eval_tolerance(const Polynomial& coeffs, const Rational& x, std::uint32_t r);

/// |y - P(x)| < eval_tolerance(P, x, r).
bool intersection_predicate(const Polynomial& coeffs, const Rational& x, const Rational& y, std::uint32_t r);

/// Keeps a~_i for i >= 1 and picks the constant term so that the result
/// agrees with a at x: b_0 = a(x) - sum_{i>=1} a~_i x^i.
/// Throws DegreeMismatch unless deg a == deg a~ >= 1.
Polynomial snap_polynomial(const Polynomial& a, const Polynomial& approx, const Rational& x);

/// W = d^2 2^-2r (1 + max{|x|, |x|^2d}).
Rational perturbation_bound(const Rational& x, const ApproxContext& ctx);

/// Squared Euclidean distance between coefficient vectors.
Rational coefficient_distance_sq(const Polynomial& a, const Polynomial& b);

/// sum_{i>=1} i |c_i|, which dominates |P'| on [0, 1].
Rational lipschitz_constant(const Polynomial& p);

/// gamma = min{1, min_separation / 2} * rootless_floor * 2^-(d r).
///
/// min_separation must lower-bound the gap between distinct real roots of
/// p (pass anything >= 2 when p has fewer than two); rootless_floor must
/// lower-bound |leading coefficient * q(y)| over the reals, where q is the
/// monic factor without real roots. Then |p(y)| > gamma whenever y is
/// farther than 2^-r from every real root.
///
/// Throws SeparationTooSmall if 2^-r >= min_separation / 2, DegreeMismatch
/// if deg p != ctx.d, PreconditionViolated for non-positive inputs.
Threshold small_value_threshold(const Polynomial& p, const Rational& min_separation, const ApproxContext& ctx,
                                const Rational& rootless_floor = Rational(1));

}  // namespace certiroot
