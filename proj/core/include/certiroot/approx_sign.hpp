#pragma once

#include <cstddef>
#include <span>

#include "certiroot/rational.hpp"
#include "certiroot/sturm.hpp"

namespace certiroot {

/// Magnitude below which the sign of an approximate value is unknown.
class Threshold {
 public:
  /// Throws ThresholdNonPositive unless gamma > 0.
  explicit Threshold(Rational gamma);

  const Rational& value() const noexcept { return gamma_; }
  /// |x| < gamma.
  bool is_small(const Rational& x) const { return x.abs() < gamma_; }

 private:
  Rational gamma_;
};

struct SignChangeBounds {
  std::size_t min = 0;
  std::size_t max = 0;
};

/// Extreme sign-change counts over every real sequence within gamma of
/// `values` componentwise. Entries with |v| >= gamma keep their sign; the
/// rest may take either sign (a zero never adds a change, so it cannot
/// produce a new extreme). Linear time.
SignChangeBounds sign_change_bounds(std::span<const Rational> values, const Threshold& gamma);

/// Upper bound on the sign changes of any sequence within gamma of theta.
std::size_t max_sign_change(const EvaluationVector& theta, const Threshold& gamma);

/// Lower bound on the sign changes of any sequence within gamma of theta.
std::size_t min_sign_change(const EvaluationVector& theta, const Threshold& gamma);

}  // namespace certiroot
