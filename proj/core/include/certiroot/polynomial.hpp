#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "certiroot/rational.hpp"

namespace certiroot {

/// Dense univariate polynomial with exact rational coefficients; index i
/// holds the coefficient of x^i. Trailing zeros are always trimmed, so the
/// zero polynomial is the single coefficient 0 and has degree -1.
class Polynomial {
 public:
  Polynomial() : coeffs_(1) {}
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs) : Polynomial(std::vector<Rational>(coeffs)) {}

  static Polynomial constant(Rational c) { return Polynomial({std::move(c)}); }
  static Polynomial monomial(Rational c, std::size_t k);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return is_zero() ? -1 : static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.size() == 1 && coeffs_.front().is_zero(); }
  bool is_constant() const noexcept { return coeffs_.size() == 1; }

  const Rational& leading() const noexcept { return coeffs_.back(); }
  /// Coefficient of x^i; zero past the degree.
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(); }
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

struct DivRem {
  Polynomial quotient;
  Polynomial remainder;
};

/// Exact value at q, Horner order. The zero polynomial evaluates to 0.
Rational eval(const Polynomial& p, const Rational& q);

/// Formal derivative; constants (and zero) map to the zero polynomial.
Polynomial derivative(const Polynomial& p);

/// p = quotient * q + remainder with deg(remainder) < deg(q).
/// Throws DivisionByZeroPolynomial when q is zero.
DivRem div_rem(const Polynomial& p, const Polynomial& q);

Polynomial euclid_rem(const Polynomial& p, const Polynomial& q);

/// Coefficients of t -> p(center + t).
Polynomial taylor_shift(const Polynomial& p, const Rational& center);

/// Human-readable form, highest degree first, e.g. "3x^2 - 1/2x + 5".
std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace certiroot
