#include "certiroot/sturm.hpp"

#include <string>

#include "certiroot/error.hpp"

namespace certiroot {

namespace {

void require_nonconstant(const Polynomial& p, const char* what) {
  if (p.degree() < 1) {
    throw Error(ErrorCode::DegreeTooLow, std::string(what) + " needs a polynomial of degree >= 1");
  }
}

}  // namespace

SturmChain sturm_chain(const Polynomial& p) {
  require_nonconstant(p, "sturm_chain");
  std::vector<Polynomial> chain;
  chain.reserve(static_cast<std::size_t>(p.degree()) + 1);
  chain.push_back(p);
  chain.push_back(derivative(p));
  while (!chain.back().is_constant()) {
    Polynomial next = -euclid_rem(chain[chain.size() - 2], chain.back());
    if (next.is_zero()) break;
    chain.push_back(std::move(next));
  }
  return SturmChain(std::move(chain));
}

EvaluationVector sturm_eval(const SturmChain& chain, const Rational& at) {
  EvaluationVector out;
  out.values.reserve(chain.size());
  for (const auto& poly : chain.polys()) out.values.push_back(eval(poly, at));
  return out;
}

std::size_t sign_variations(const EvaluationVector& v) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& x : v.values) {
    const int s = x.sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::size_t count_roots(const SturmChain& chain, const Rational& a, const Rational& b) {
  if (!(a < b)) throw Error(ErrorCode::PreconditionViolated, "count_roots needs a < b");
  const auto va = sturm_eval(chain, a);
  const auto vb = sturm_eval(chain, b);
  if (va.values.front().is_zero() || vb.values.front().is_zero()) {
    throw Error(ErrorCode::EndpointIsRoot, "interval endpoint is a root");
  }
  return sign_variations(va) - sign_variations(vb);
}

std::size_t count_roots(const Polynomial& p, const Rational& a, const Rational& b) {
  return count_roots(sturm_chain(p), a, b);
}

Rational cauchy_bound(const Polynomial& p) {
  require_nonconstant(p, "cauchy_bound");
  const auto c = p.coeffs();
  const Rational lead = c.back().abs();
  Rational biggest;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) biggest = max(biggest, c[i].abs());
  return Rational(1) + biggest / lead;
}

}  // namespace certiroot
