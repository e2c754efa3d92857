#include "certiroot/polynomial.hpp"

#include <ostream>

#include "certiroot/error.hpp"

namespace certiroot {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.emplace_back();
  trim();
}

Polynomial Polynomial::monomial(Rational c, std::size_t k) {
  std::vector<Rational> v(k + 1);
  v[k] = std::move(c);
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Rational eval(const Polynomial& p, const Rational& q) {
  const auto c = p.coeffs();
  Rational acc = c.back();
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    acc *= q;
    acc += c[i];
  }
  return acc;
}

Polynomial derivative(const Polynomial& p) {
  const auto c = p.coeffs();
  if (c.size() <= 1) return Polynomial();
  std::vector<Rational> d(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * Rational(static_cast<std::int64_t>(i));
  return Polynomial(std::move(d));
}

DivRem div_rem(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) throw Error(ErrorCode::DivisionByZeroPolynomial, "division by the zero polynomial");
  const int dq = q.degree();
  if (p.degree() < dq) return {Polynomial(), p};

  std::vector<Rational> rem(p.coeffs().begin(), p.coeffs().end());
  std::vector<Rational> quot(static_cast<std::size_t>(p.degree() - dq) + 1);
  const auto qc = q.coeffs();
  const Rational& lead = q.leading();
  for (int k = p.degree() - dq; k >= 0; --k) {
    const auto top = static_cast<std::size_t>(k + dq);
    if (rem[top].is_zero()) continue;
    Rational f = rem[top] / lead;
    for (std::size_t j = 0; j < qc.size(); ++j) rem[static_cast<std::size_t>(k) + j] -= f * qc[j];
    quot[static_cast<std::size_t>(k)] = std::move(f);
  }
  rem.resize(static_cast<std::size_t>(dq > 0 ? dq : 1));
  if (dq == 0) rem[0] = Rational();
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial euclid_rem(const Polynomial& p, const Polynomial& q) { return div_rem(p, q).remainder; }

Polynomial taylor_shift(const Polynomial& p, const Rational& center) {
  std::vector<Rational> c(p.coeffs().begin(), p.coeffs().end());
  const std::size_t n = c.size();
  // Repeated synthetic division by (x - center).
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j > i; --j) c[j - 1] += center * c[j];
  }
  return Polynomial(std::move(c));
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  if (p.is_zero()) return os << "0";
  const auto c = p.coeffs();
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i].is_zero()) continue;
    Rational mag = c[i].abs();
    if (first) {
      if (c[i].sign() < 0) os << "-";
    } else {
      os << (c[i].sign() < 0 ? " - " : " + ");
    }
    if (i == 0 || mag != Rational(1)) os << mag;
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os;
}

}  // namespace certiroot
