#include "certiroot/root_enum.hpp"

#include "certiroot/error.hpp"
#include "certiroot/sturm.hpp"

namespace certiroot {

PrecisionParams::PrecisionParams(std::uint32_t r_, Threshold gamma_) : r(r_), gamma(std::move(gamma_)) {
  if (r < 1) throw Error(ErrorCode::PreconditionViolated, "precision r must be >= 1");
}

GridGeometry grid_geometry(const Polynomial& p, std::uint32_t r) {
  GridGeometry g;
  g.bound = cauchy_bound(p);
  g.refined_precision = static_cast<std::int64_t>(r) + 1 + g.bound.ceil_log2();
  g.width = g.bound * Rational::pow2(1 - g.refined_precision);
  return g;
}

namespace {

class GridScanner {
 public:
  GridScanner(const SturmChain& chain, const Threshold& gamma, Rational width)
      : chain_(chain), gamma_(gamma), width_(std::move(width)), half_width_(width_ / Rational(2)) {}

  void scan(const Rational& lo, const Rational& hi, const EvaluationVector& at_lo, const EvaluationVector& at_hi,
            std::vector<Rational>& out) const {
    if (hi - lo == width_) {
      const auto left = max_sign_change(at_lo, gamma_);
      const auto right = min_sign_change(at_hi, gamma_);
      if (left >= right + 1) out.push_back(lo + half_width_);
      return;
    }
    if (clear_of_small_values(lo, hi, at_lo, at_hi)) return;
    const Rational mid = (lo + hi) / Rational(2);
    const auto at_mid = sturm_eval(chain_, mid);
    scan(lo, mid, at_lo, at_mid, out);
    scan(mid, hi, at_mid, at_hi, out);
  }

 private:
  // True when |P_i(x)| >= gamma for every chain member and every x in
  // [lo, hi], via |P(m + t)| >= |a_0| - sum_k |a_k| rho^k for |t| <= rho.
  bool clear_of_small_values(const Rational& lo, const Rational& hi, const EvaluationVector& at_lo,
                             const EvaluationVector& at_hi) const {
    for (std::size_t i = 0; i < at_lo.values.size(); ++i) {
      if (gamma_.is_small(at_lo.values[i]) || gamma_.is_small(at_hi.values[i])) return false;
      // A sign change across the block means a zero inside it.
      if (at_lo.values[i].sign() != at_hi.values[i].sign()) return false;
    }
    const Rational center = (lo + hi) / Rational(2);
    const Rational radius = (hi - lo) / Rational(2);
    for (const auto& poly : chain_.polys()) {
      const Polynomial shifted = taylor_shift(poly, center);
      const auto c = shifted.coeffs();
      Rational floor = c[0].abs();
      Rational rho_k = radius;
      for (std::size_t k = 1; k < c.size(); ++k) {
        floor -= c[k].abs() * rho_k;
        if (floor < gamma_.value()) return false;
        rho_k *= radius;
      }
      if (floor < gamma_.value()) return false;
    }
    return true;
  }

  const SturmChain& chain_;
  const Threshold& gamma_;
  Rational width_;
  Rational half_width_;
};

}  // namespace

RootCandidateList root_enum(const Polynomial& c, const PrecisionParams& params) {
  if (c.degree() < 1) throw Error(ErrorCode::DegreeTooLow, "root_enum needs a polynomial of degree >= 1");
  if (c.leading().abs() <= Rational(2) * params.gamma.value()) {
    throw Error(ErrorCode::DegreeUnresolved, "leading coefficient " + c.leading().to_string() +
                                                 " is within twice the threshold of zero");
  }
  const auto d = static_cast<std::size_t>(c.degree());
  const GridGeometry geom = grid_geometry(c, params.r);
  const SturmChain chain = sturm_chain(c);

  RootCandidateList out;
  out.interval_width = geom.width;
  out.length_bound = 6 * d * d;
  out.cauchy_bound = geom.bound;
  out.grid_precision = geom.refined_precision;
  out.degree = c.degree();

  const Rational lo = -geom.bound;
  const Rational& hi = geom.bound;
  GridScanner scanner(chain, params.gamma, geom.width);
  scanner.scan(lo, hi, sturm_eval(chain, lo), sturm_eval(chain, hi), out.candidates);
  return out;
}

RootCandidateList intersect(const Polynomial& a, const Polynomial& b, const PrecisionParams& params) {
  const Polynomial diff = a - b;
  if (diff.is_zero()) throw Error(ErrorCode::IdenticalPolynomials, "the two polynomials are identical");
  if (diff.degree() == 0) {
    RootCandidateList none;
    none.degree = 0;
    return none;
  }
  return root_enum(diff, params);
}

}  // namespace certiroot
