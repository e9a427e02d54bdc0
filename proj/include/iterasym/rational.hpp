#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace iterasym {

/// Exact arbitrary-precision fraction, always kept in lowest terms with a
/// positive denominator. Backed by GMP's mpq.
class Rational {
 public:
  Rational() = default;

  template <std::signed_integral I>
  Rational(I v) : value_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

  template <std::unsigned_integral I>
  Rational(I v) : value_(static_cast<unsigned long>(v)) {}  // NOLINT(google-explicit-constructor)

  Rational(long numerator, long denominator);
  Rational(const mpz_class& numerator, const mpz_class& denominator);
  explicit Rational(mpq_class value);

  /// Accepts "p", "-p", "p/q" (decimal integers, no whitespace). The result
  /// is canonicalized; a zero denominator is rejected with ValidationError.
  static Rational parse(std::string_view text);

  /// Like parse(), but additionally rejects fractions that are not already
  /// in lowest terms or that carry a non-positive denominator. Used for
  /// bit-exact ingestion of stored tables.
  static Rational parseReduced(std::string_view text);

  const mpq_class& raw() const noexcept { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool isZero() const noexcept { return sgn(value_) == 0; }
  bool isInteger() const noexcept { return value_.get_den() == 1; }
  int sign() const noexcept { return sgn(value_); }

  Rational abs() const;
  Rational reciprocal() const;
  Rational pow(int exponent) const;
  double toDouble() const { return value_.get_d(); }

  /// "p/q", or "p" when the denominator is 1.
  std::string toString() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::size_t hash() const;

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// n! as an exact rational (n >= 0).
Rational factorial(int n);

/// Binomial coefficient C(n, k) for integers 0 <= k <= n; zero otherwise.
Rational binomial(int n, int k);

}  // namespace iterasym

template <>
struct std::hash<iterasym::Rational> {
  std::size_t operator()(const iterasym::Rational& r) const { return r.hash(); }
};
