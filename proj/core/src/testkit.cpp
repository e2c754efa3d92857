#include "certiroot/testkit.hpp"

#include <algorithm>
#include <string>

#include "certiroot/error.hpp"
#include "certiroot/sturm.hpp"

namespace certiroot::testkit {

PlantedPolynomial plant(const PlantedSpec& spec, std::size_t max_degree) {
  if (spec.leading.is_zero()) throw Error(ErrorCode::InvalidSpec, "leading coefficient must be nonzero");
  std::size_t degree = 2 * spec.quadratics.size();
  for (const auto& root : spec.real_roots) {
    if (root.multiplicity == 0) throw Error(ErrorCode::InvalidSpec, "root multiplicity must be >= 1");
    degree += root.multiplicity;
  }
  if (degree > max_degree) {
    throw Error(ErrorCode::DegreeOverflow,
                "planted degree " + std::to_string(degree) + " exceeds " + std::to_string(max_degree));
  }

  PlantedPolynomial out;
  out.rootless_floor = spec.leading.abs();
  Polynomial poly = Polynomial::constant(spec.leading);
  for (const auto& quad : spec.quadratics) {
    const Rational floor = quad.q - quad.p * quad.p / Rational(4);
    if (floor.sign() <= 0) throw Error(ErrorCode::InvalidSpec, "quadratic factor has real roots");
    out.rootless_floor *= floor;
    poly = poly * Polynomial({quad.q, quad.p, Rational(1)});
  }
  for (const auto& root : spec.real_roots) {
    const Polynomial linear({-root.value, Rational(1)});
    for (std::uint32_t k = 0; k < root.multiplicity; ++k) poly = poly * linear;
    out.distinct_roots.push_back(root.value);
  }
  std::sort(out.distinct_roots.begin(), out.distinct_roots.end());
  for (std::size_t i = 1; i < out.distinct_roots.size(); ++i) {
    const Rational gap = out.distinct_roots[i] - out.distinct_roots[i - 1];
    if (gap.is_zero()) throw Error(ErrorCode::InvalidSpec, "duplicate planted root " + gap.to_string());
    if (!out.min_separation || gap < *out.min_separation) out.min_separation = gap;
  }
  out.poly = std::move(poly);
  return out;
}

SignChangeBounds sign_extremes(std::span<const Rational> theta, const Threshold& gamma) {
  if (theta.size() > 20) throw Error(ErrorCode::TooLong, "sign_extremes handles at most 20 entries");
  std::vector<std::size_t> free_slots;
  std::vector<int> signs(theta.size());
  for (std::size_t i = 0; i < theta.size(); ++i) {
    if (gamma.is_small(theta[i])) {
      free_slots.push_back(i);
    } else {
      signs[i] = theta[i].sign();
    }
  }
  SignChangeBounds out{theta.size(), 0};
  if (theta.empty()) return {0, 0};
  const std::uint64_t combos = std::uint64_t{1} << free_slots.size();
  for (std::uint64_t mask = 0; mask < combos; ++mask) {
    for (std::size_t j = 0; j < free_slots.size(); ++j) signs[free_slots[j]] = (mask >> j) & 1U ? 1 : -1;
    std::size_t changes = 0;
    for (std::size_t i = 1; i < signs.size(); ++i) changes += signs[i] != signs[i - 1] ? 1 : 0;
    out.min = std::min(out.min, changes);
    out.max = std::max(out.max, changes);
  }
  return out;
}

Rational bisect_root(const Polynomial& p, Rational lo, Rational hi, std::uint32_t r) {
  if (hi < lo) std::swap(lo, hi);
  const int s_lo = eval(p, lo).sign();
  const int s_hi = eval(p, hi).sign();
  if (s_lo * s_hi >= 0) throw Error(ErrorCode::NoSignChange, "bisect_root needs p(lo) p(hi) < 0");
  const Rational target = Rational::pow2(1 - static_cast<std::int64_t>(r));
  while (hi - lo > target) {
    Rational mid = (lo + hi) / Rational(2);
    const int s = eval(p, mid).sign();
    if (s == 0) return mid;
    (s == s_lo ? lo : hi) = std::move(mid);
  }
  return (lo + hi) / Rational(2);
}

std::vector<Rational> scan_grid(const Polynomial& c, const PrecisionParams& params) {
  const SturmChain chain = sturm_chain(c);
  const GridGeometry geom = grid_geometry(c, params.r);
  const Rational half = geom.width / Rational(2);
  std::vector<Rational> out;
  Rational z = -geom.bound;
  EvaluationVector left = sturm_eval(chain, z);
  while (z < geom.bound) {
    const Rational next = z + geom.width;
    EvaluationVector right = sturm_eval(chain, next);
    if (max_sign_change(left, params.gamma) >= min_sign_change(right, params.gamma) + 1) out.push_back(z + half);
    left = std::move(right);
    z = next;
  }
  return out;
}

bool covered(std::span<const Rational> candidates, const Rational& target, const Rational& tol) {
  return std::any_of(candidates.begin(), candidates.end(),
                     [&](const Rational& q) { return (q - target).abs() <= tol; });
}

std::int64_t Generator::integer(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
}

Rational Generator::rational(const Rational& lo, const Rational& hi, std::int64_t max_den) {
  const std::int64_t den = integer(1, max_den);
  const Rational d(den);
  // Integers n with lo <= n / den <= hi.
  const std::int64_t nlo = -((-(lo * d)).floor().to_int64());
  const std::int64_t nhi = (hi * d).floor().to_int64();
  return Rational(integer(nlo, nhi), den);
}

Rational Generator::dyadic_in(const Rational& lo, const Rational& hi, std::uint32_t k) {
  const Rational scale = Rational::pow2(k);
  const std::int64_t steps = ((hi - lo) * scale).floor().to_int64();
  const std::int64_t pick = integer(0, std::max<std::int64_t>(steps - 1, 0));
  return lo + Rational(pick) / scale;
}

Rational Generator::nonzero_rational(std::int64_t max_num, std::int64_t max_den) {
  std::int64_t num = 0;
  while (num == 0) num = integer(-max_num, max_num);
  return Rational(num, integer(1, max_den));
}

PlantedSpec Generator::planted_spec(const PlantOptions& opts) {
  PlantedSpec spec;
  spec.leading = nonzero_rational(5, 4);
  std::size_t budget = opts.max_degree;
  if (opts.allow_quadratic && budget >= 3 && integer(0, 2) == 0) {
    // p^2 < 4q: pick q first, then |p| < 2 sqrt(q) via p^2 < 4q.
    RootlessQuadratic quad;
    quad.q = rational(Rational(1, 4), Rational(4), 4);
    do {
      quad.p = rational(Rational(-4), Rational(4), 4);
    } while (!(quad.p * quad.p < Rational(4) * quad.q));
    spec.quadratics.push_back(quad);
    budget -= 2;
  }
  const Rational bound(opts.root_bound);
  const auto target = static_cast<std::size_t>(integer(1, static_cast<std::int64_t>(budget)));
  std::size_t used = 0;
  std::vector<Rational> seen;
  while (used < target) {
    const std::uint32_t max_mult = opts.square_free ? 1U
                                                    : static_cast<std::uint32_t>(std::min<std::size_t>(
                                                          opts.max_multiplicity, target - used));
    const auto mult = static_cast<std::uint32_t>(integer(1, max_mult));
    Rational value;
    do {
      value = rational(-bound, bound, opts.max_denominator);
    } while (value.abs() == bound || std::find(seen.begin(), seen.end(), value) != seen.end());
    seen.push_back(value);
    spec.real_roots.push_back({value, mult});
    used += mult;
  }
  return spec;
}

Polynomial Generator::polynomial(std::size_t degree, std::int64_t max_num, std::int64_t max_den) {
  std::vector<Rational> c(degree + 1);
  for (auto& x : c) x = Rational(integer(-max_num, max_num), integer(1, max_den));
  c.back() = nonzero_rational(max_num, max_den);
  return Polynomial(std::move(c));
}

}  // namespace certiroot::testkit
