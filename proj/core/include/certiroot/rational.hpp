#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace certiroot {

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Backed by GMP's mpq_class.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : value_(static_cast<long>(value)) {}  // NOLINT
  Rational(int value) : value_(value) {}                               // NOLINT
  /// Throws PreconditionViolated when den == 0.
  Rational(std::int64_t num, std::int64_t den);

  /// Accepts "n" or "n/d" with an optional leading sign; no whitespace, no
  /// decimal point. Throws ParseError.
  static Rational parse(std::string_view text);

  /// 2^e for any integer e.
  static Rational pow2(std::int64_t e);

  /// m / 2^k.
  static Rational dyadic(std::int64_t m, std::uint64_t k) { return Rational(m) * pow2(-static_cast<std::int64_t>(k)); }

  int sign() const noexcept { return sgn(value_); }
  bool is_zero() const noexcept { return sign() == 0; }
  bool is_integer() const noexcept { return value_.get_den() == 1; }

  Rational abs() const { return Rational(mpq_class(::abs(value_))); }
  Rational pow(std::uint64_t k) const;
  /// Largest integer not exceeding the value.
  Rational floor() const;

  /// Smallest integer e with 2^e >= value. Requires value > 0.
  std::int64_t ceil_log2() const;

  /// k such that the value equals m / 2^k in lowest terms, if the
  /// denominator is a power of two.
  std::optional<std::uint64_t> dyadic_exponent() const;

  /// Requires an integer value that fits in int64; throws PreconditionViolated otherwise.
  std::int64_t to_int64() const;
  double to_double() const { return value_.get_d(); }

  /// Canonical "num/den" form; the denominator is always written.
  std::string to_string() const;
  std::string numerator_string() const { return value_.get_num().get_str(); }
  std::string denominator_string() const { return value_.get_den().get_str(); }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  const mpq_class& raw() const noexcept { return value_; }

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) {}

  mpq_class value_;
};

inline Rational abs(const Rational& q) { return q.abs(); }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }

/// Compact form: "n" for integers, "n/d" otherwise.
std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace certiroot
