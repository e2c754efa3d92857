#include "certiroot/error_bounds.hpp"

#include <algorithm>
#include <string>

#include "certiroot/error.hpp"

namespace certiroot {

ApproxContext::ApproxContext(std::uint32_t r_, std::uint32_t d_) : r(r_), d(d_) {
  if (r < 1 || d < 1) throw Error(ErrorCode::PreconditionViolated, "context needs r >= 1 and d >= 1");
}

namespace {

Rational eps(std::uint32_t r) { return Rational::pow2(-static_cast<std::int64_t>(r)); }

}  // namespace

Rational power_diff_bound(const Rational& a, const Rational& b, std::uint32_t k, std::uint32_t r) {
  if (k == 0) throw Error(ErrorCode::PreconditionViolated, "power_diff_bound needs k >= 1");
  if ((a - b).abs() >= eps(r)) {
    throw Error(ErrorCode::PreconditionViolated, "power_diff_bound needs |a - b| < 2^-r");
  }
  const Rational m = max(max(a.abs(), a.abs().pow(k)), max(b.abs(), b.abs().pow(k)));
  return eps(r) * Rational(static_cast<std::int64_t>(k)) * m;
}

Rational eval_tolerance(const Polynomial& coeffs, const Rational& x, std::uint32_t r) {
  if (coeffs.degree() < 1) throw Error(ErrorCode::DegreeTooLow, "eval_tolerance needs degree >= 1");
  const auto d = static_cast<std::uint64_t>(coeffs.degree());
  const Rational u = x.abs() + eps(r);
  const Rational t = max(u, u.pow(d));
  Rational biggest;
  for (const auto& c : coeffs.coeffs()) biggest = max(biggest, c.abs());
  const Rational dd(static_cast<std::int64_t>(d));
  return (dd + Rational(1)) * eps(r) * (t + dd * t * biggest);
}

bool intersection_predicate(const Polynomial& coeffs, const Rational& x, const Rational& y, std::uint32_t r) {
  return (y - eval(coeffs, x)).abs() < eval_tolerance(coeffs, x, r);
}

Polynomial snap_polynomial(const Polynomial& a, const Polynomial& approx, const Rational& x) {
  if (a.degree() < 1 || a.degree() != approx.degree()) {
    throw Error(ErrorCode::DegreeMismatch, "snap_polynomial needs equal degrees >= 1, got " +
                                               std::to_string(a.degree()) + " and " +
                                               std::to_string(approx.degree()));
  }
  std::vector<Rational> b(approx.coeffs().begin(), approx.coeffs().end());
  b[0] = Rational();
  b[0] = eval(a, x) - eval(Polynomial(b), x);
  return Polynomial(std::move(b));
}

Rational perturbation_bound(const Rational& x, const ApproxContext& ctx) {
  const Rational dd(static_cast<std::int64_t>(ctx.d));
  const Rational m = max(x.abs(), x.abs().pow(2 * static_cast<std::uint64_t>(ctx.d)));
  return dd * dd * Rational::pow2(-2 * static_cast<std::int64_t>(ctx.r)) * (Rational(1) + m);
}

Rational coefficient_distance_sq(const Polynomial& a, const Polynomial& b) {
  const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  Rational total;
  for (std::size_t i = 0; i < n; ++i) {
    const Rational diff = a.coeff(i) - b.coeff(i);
    total += diff * diff;
  }
  return total;
}

Rational lipschitz_constant(const Polynomial& p) {
  Rational c;
  const auto cs = p.coeffs();
  for (std::size_t i = 1; i < cs.size(); ++i) c += Rational(static_cast<std::int64_t>(i)) * cs[i].abs();
  return c;
}

Threshold small_value_threshold(const Polynomial& p, const Rational& min_separation, const ApproxContext& ctx,
                                const Rational& rootless_floor) {
  if (p.degree() != static_cast<int>(ctx.d)) {
    throw Error(ErrorCode::DegreeMismatch, "context degree " + std::to_string(ctx.d) +
                                               " does not match polynomial degree " + std::to_string(p.degree()));
  }
  if (min_separation.sign() <= 0 || rootless_floor.sign() <= 0) {
    throw Error(ErrorCode::PreconditionViolated, "separation and rootless floor must be positive");
  }
  const Rational half_gap = min_separation / Rational(2);
  if (eps(ctx.r) >= half_gap) {
    throw Error(ErrorCode::SeparationTooSmall,
                "2^-" + std::to_string(ctx.r) + " is not below half the root separation " + min_separation.to_string());
  }
  const Rational scale = min(Rational(1), half_gap) * rootless_floor;
  return Threshold(scale * Rational::pow2(-static_cast<std::int64_t>(ctx.d) * static_cast<std::int64_t>(ctx.r)));
}

}  // namespace certiroot
