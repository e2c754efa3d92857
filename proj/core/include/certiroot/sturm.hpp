#pragma once

#include <cstddef>
#include <vector>

#include "certiroot/polynomial.hpp"

namespace certiroot {

/// P0 = p, P1 = p', Pi = -rem(P(i-2), P(i-1)); stops before the first zero
/// remainder, so the last member is nonzero and degrees strictly decrease
/// from P1 on. For a non-square-free p the last member is gcd(p, p') up to
/// a constant.
class SturmChain {
 public:
  explicit SturmChain(std::vector<Polynomial> chain) : chain_(std::move(chain)) {}

  std::span<const Polynomial> polys() const noexcept { return chain_; }
  std::size_t size() const noexcept { return chain_.size(); }
  const Polynomial& operator[](std::size_t i) const { return chain_[i]; }
  const Polynomial& source() const { return chain_.front(); }

 private:
  std::vector<Polynomial> chain_;
};

/// Chain members evaluated at a single point.
struct EvaluationVector {
  std::vector<Rational> values;

  friend bool operator==(const EvaluationVector&, const EvaluationVector&) = default;
};

/// Throws DegreeTooLow for constant or zero p.
SturmChain sturm_chain(const Polynomial& p);

EvaluationVector sturm_eval(const SturmChain& chain, const Rational& at);

/// Sign alternations after deleting zero entries.
std::size_t sign_variations(const EvaluationVector& v);

/// Number of distinct real roots in (a, b]. Requires a < b and that neither
/// endpoint is a root (EndpointIsRoot, PreconditionViolated).
std::size_t count_roots(const Polynomial& p, const Rational& a, const Rational& b);
std::size_t count_roots(const SturmChain& chain, const Rational& a, const Rational& b);

/// 1 + max |c_i / c_d| over i < d; every real root lies strictly inside
/// (-bound, bound). Throws DegreeTooLow for constants.
Rational cauchy_bound(const Polynomial& p);

}  // namespace certiroot
