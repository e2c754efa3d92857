#include "certiroot/approx_sign.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "certiroot/error.hpp"

namespace certiroot {

Threshold::Threshold(Rational gamma) : gamma_(std::move(gamma)) {
  if (gamma_.sign() <= 0) {
    throw Error(ErrorCode::ThresholdNonPositive, "threshold must be positive, got " + gamma_.to_string());
  }
}

SignChangeBounds sign_change_bounds(std::span<const Rational> values, const Threshold& gamma) {
  if (values.empty()) return {};

  // State: sign chosen for the latest entry (0 = negative, 1 = positive).
  // Each slot holds the best count of any assignment ending in that sign.
  constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();
  std::array<std::size_t, 2> lo{kUnreachable, kUnreachable};
  std::array<std::size_t, 2> hi{0, 0};
  std::array<bool, 2> live{false, false};

  auto allowed = [&](const Rational& v) -> std::array<bool, 2> {
    if (gamma.is_small(v)) return {true, true};
    return {v.sign() < 0, v.sign() > 0};
  };

  const auto first = allowed(values.front());
  for (int s = 0; s < 2; ++s) {
    if (!first[s]) continue;
    live[s] = true;
    lo[s] = 0;
    hi[s] = 0;
  }

  for (std::size_t i = 1; i < values.size(); ++i) {
    const auto next = allowed(values[i]);
    std::array<std::size_t, 2> nlo{kUnreachable, kUnreachable};
    std::array<std::size_t, 2> nhi{0, 0};
    std::array<bool, 2> nlive{false, false};
    for (int s = 0; s < 2; ++s) {
      if (!next[s]) continue;
      for (int p = 0; p < 2; ++p) {
        if (!live[p]) continue;
        const std::size_t step = p != s ? 1 : 0;
        nlo[s] = std::min(nlo[s], lo[p] + step);
        nhi[s] = nlive[s] ? std::max(nhi[s], hi[p] + step) : hi[p] + step;
        nlive[s] = true;
      }
    }
    lo = nlo;
    hi = nhi;
    live = nlive;
  }

  SignChangeBounds out{kUnreachable, 0};
  for (int s = 0; s < 2; ++s) {
    if (!live[s]) continue;
    out.min = std::min(out.min, lo[s]);
    out.max = std::max(out.max, hi[s]);
  }
  return out;
}

std::size_t max_sign_change(const EvaluationVector& theta, const Threshold& gamma) {
  return sign_change_bounds(theta.values, gamma).max;
}

std::size_t min_sign_change(const EvaluationVector& theta, const Threshold& gamma) {
  return sign_change_bounds(theta.values, gamma).min;
}

}  // namespace certiroot
