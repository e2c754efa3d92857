#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "certiroot/approx_sign.hpp"
#include "certiroot/polynomial.hpp"

namespace certiroot {

struct PrecisionParams {
  /// Throws PreconditionViolated unless r >= 1.
  PrecisionParams(std::uint32_t r, Threshold gamma);

  std::uint32_t r;
  Threshold gamma;
};

/// The uniform grid scanned for a polynomial at output precision r:
/// points -bound + k * width for k = 0 .. 2^refined_precision, with
/// width = bound / 2^(refined_precision - 1) and
/// refined_precision = r + 1 + ceil(log2 bound).
struct GridGeometry {
  Rational bound;
  std::int64_t refined_precision = 0;
  Rational width;
};

GridGeometry grid_geometry(const Polynomial& p, std::uint32_t r);

struct RootCandidateList {
  /// Strictly increasing cell midpoints of the firing cells.
  std::vector<Rational> candidates;
  Rational interval_width;
  std::size_t length_bound = 0;  // 6 d^2
  Rational cauchy_bound;
  std::int64_t grid_precision = 0;
  int degree = 0;

  std::size_t cells_fired() const noexcept { return candidates.size(); }

  friend bool operator==(const RootCandidateList&, const RootCandidateList&) = default;
};

/// Every real root of c lies within 2^-r of some candidate, whatever gamma
/// is, as long as the coefficients are exact. The 6 d^2 length bound needs
/// gamma at or below the polynomial's small-value floor.
///
/// A cell [z, z + width] fires when
///   max_sign_change(chain at z) - min_sign_change(chain at z + width) >= 1
/// and contributes its midpoint. Output equals a left-to-right scan of all
/// 2^refined_precision cells; blocks of cells are skipped only when every
/// chain member is certified to stay at or above gamma in magnitude across
/// the block, which makes every cell in it silent.
///
/// Throws DegreeTooLow for constants and DegreeUnresolved when
/// |leading coefficient| <= 2 gamma.
RootCandidateList root_enum(const Polynomial& c, const PrecisionParams& params);

/// Candidates for the points where a and b agree, i.e. root_enum(a - b).
/// A nonzero constant difference yields an empty list; identical inputs
/// throw IdenticalPolynomials.
RootCandidateList intersect(const Polynomial& a, const Polynomial& b, const PrecisionParams& params);

}  // namespace certiroot
