#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "certiroot/approx_sign.hpp"
#include "certiroot/polynomial.hpp"
#include "certiroot/root_enum.hpp"

// Slow, independent oracles and seeded instance generators for checking the
// library's guarantees. Kept at desk scale: degree <= 8, vectors <= 20.
namespace certiroot::testkit {

struct PlantedRoot {
  Rational value;
  std::uint32_t multiplicity = 1;
};

/// x^2 + p x + q with p^2 - 4q < 0.
struct RootlessQuadratic {
  Rational p;
  Rational q;
};

struct PlantedSpec {
  std::vector<PlantedRoot> real_roots;
  std::vector<RootlessQuadratic> quadratics;
  Rational leading{1};
};

struct PlantedPolynomial {
  Polynomial poly;
  /// Sorted distinct real roots.
  std::vector<Rational> distinct_roots;
  /// Smallest gap between distinct real roots; empty with fewer than two.
  std::optional<Rational> min_separation;
  /// |leading| times the minimum of every quadratic factor: a lower bound
  /// on the magnitude of the factor without real roots.
  Rational rootless_floor;
};

/// Throws InvalidSpec for zero multiplicities, duplicate roots, a zero
/// leading coefficient or a quadratic with real roots; DegreeOverflow past
/// max_degree.
PlantedPolynomial plant(const PlantedSpec& spec, std::size_t max_degree = 8);

/// Exact min and max sign-change counts over all sequences within gamma,
/// by enumerating both signs of every entry with |theta_i| < gamma.
/// Throws TooLong beyond 20 entries.
SignChangeBounds sign_extremes(std::span<const Rational> theta, const Threshold& gamma);

/// Rational bisection; returns q with a sign change of p in
/// [q - 2^-r, q + 2^-r]. Throws NoSignChange unless p(lo) p(hi) < 0.
Rational bisect_root(const Polynomial& p, Rational lo, Rational hi, std::uint32_t r);

/// Cell-by-cell scan of the whole enumeration grid with no pruning.
/// Exponential in r; use r <= 10.
std::vector<Rational> scan_grid(const Polynomial& c, const PrecisionParams& params);

/// True when some candidate lies within tol of target.
bool covered(std::span<const Rational> candidates, const Rational& target, const Rational& tol);

struct PlantOptions {
  std::size_t max_degree = 6;
  std::uint32_t max_multiplicity = 3;
  std::int64_t root_bound = 10;      // roots in (-bound, bound)
  std::int64_t max_denominator = 8;  // keeps distinct roots >= 1/56 apart
  bool allow_quadratic = true;
  bool square_free = false;
};

/// Deterministic instance generator.
class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  /// num / den with den in [1, max_den], value in [lo, hi].
  Rational rational(const Rational& lo, const Rational& hi, std::int64_t max_den);
  /// Uniform on {lo, lo + 2^-k, ...} within [lo, hi).
  Rational dyadic_in(const Rational& lo, const Rational& hi, std::uint32_t k);
  Rational nonzero_rational(std::int64_t max_num, std::int64_t max_den);
  PlantedSpec planted_spec(const PlantOptions& opts);
  Polynomial polynomial(std::size_t degree, std::int64_t max_num, std::int64_t max_den);

  std::mt19937_64& engine() noexcept { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace certiroot::testkit
