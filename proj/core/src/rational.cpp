#include "certiroot/rational.hpp"

#include <ostream>

#include "certiroot/error.hpp"

namespace certiroot {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::PreconditionViolated, "rational with zero denominator");
  value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto digits_ok = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false)) {
    throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
  }
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  mpz_class zn(n, 10);
  mpz_class zd(std::string(den), 10);
  if (zd == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  mpq_class q(zn, zd);
  q.canonicalize();
  return Rational(std::move(q));
}

Rational Rational::pow2(std::int64_t e) {
  mpz_class p(1);
  const auto magnitude = static_cast<mp_bitcnt_t>(e < 0 ? -e : e);
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), magnitude);
  if (e >= 0) return Rational(mpq_class(p));
  return Rational(mpq_class(mpz_class(1), p));
}

Rational Rational::pow(std::uint64_t k) const {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), k);
  mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), k);
  // Powers of a reduced fraction stay reduced.
  mpq_class q;
  q.get_num() = n;
  q.get_den() = d;
  return Rational(std::move(q));
}

Rational Rational::floor() const {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return Rational(mpq_class(f));
}

std::int64_t Rational::ceil_log2() const {
  if (sign() <= 0) throw Error(ErrorCode::PreconditionViolated, "ceil_log2 of a non-positive value");
  const mpz_class& n = value_.get_num();
  const mpz_class& d = value_.get_den();
  // 2^e >= n/d  <=>  d * 2^e >= n.
  auto fits = [&](std::int64_t e) {
    if (e >= 0) {
      mpz_class lhs;
      mpz_mul_2exp(lhs.get_mpz_t(), d.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
      return lhs >= n;
    }
    mpz_class rhs;
    mpz_mul_2exp(rhs.get_mpz_t(), n.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
    return d >= rhs;
  };
  std::int64_t e = static_cast<std::int64_t>(mpz_sizeinbase(n.get_mpz_t(), 2)) -
                   static_cast<std::int64_t>(mpz_sizeinbase(d.get_mpz_t(), 2)) - 1;
  while (!fits(e)) ++e;
  while (fits(e - 1)) --e;
  return e;
}

std::optional<std::uint64_t> Rational::dyadic_exponent() const {
  const mpz_class& d = value_.get_den();
  const auto k = mpz_scan1(d.get_mpz_t(), 0);
  if (mpz_sizeinbase(d.get_mpz_t(), 2) != k + 1) return std::nullopt;
  return static_cast<std::uint64_t>(k);
}

std::int64_t Rational::to_int64() const {
  if (!is_integer() || !value_.get_num().fits_slong_p()) {
    throw Error(ErrorCode::PreconditionViolated, "value " + to_string() + " is not a 64-bit integer");
  }
  return value_.get_num().get_si();
}

std::string Rational::to_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::PreconditionViolated, "division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
  if (q.is_integer()) return os << q.numerator_string();
  return os << q.numerator_string() << '/' << q.denominator_string();
}

}  // namespace certiroot
