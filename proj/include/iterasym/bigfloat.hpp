#pragma once

#include <mpfr.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "iterasym/rational.hpp"

namespace iterasym {

/// Arbitrary-precision binary float (MPFR, round-to-nearest) with its
/// precision stated in decimal digits. Every operation is correctly rounded
/// at the result precision, which is the larger of the operands'.
class BigFloat {
 public:
  /// Binary precision used for `digits` decimal digits (plus a few guard bits).
  static mpfr_prec_t bitsFor(int digits);

  /// Zero at the given decimal precision.
  explicit BigFloat(int digits = 30);
  BigFloat(long value, int digits);
  BigFloat(const Rational& value, int digits);
  /// Decimal literal such as "1.4304553465" or "-2e-5".
  BigFloat(std::string_view decimal, int digits);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  static BigFloat pi(int digits);

  int digits() const noexcept { return digits_; }
  mpfr_prec_t bits() const { return mpfr_get_prec(v_); }
  mpfr_srcptr raw() const noexcept { return v_; }
  mpfr_ptr raw() noexcept { return v_; }

  /// Copy rounded to a different precision.
  BigFloat withDigits(int digits) const;

  int sign() const { return mpfr_sgn(v_); }
  bool isZero() const { return mpfr_zero_p(v_) != 0; }
  bool isFinite() const { return mpfr_number_p(v_) != 0; }
  double toDouble() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Base-2 exponent e with 0.5 <= |x| / 2^e < 1 (x nonzero).
  long exponent2() const { return mpfr_get_exp(v_); }

  /// `significant` significant decimal digits, fixed notation when the
  /// magnitude allows (e.g. "1.76799378613615405044"), scientific otherwise.
  std::string toString(int significant) const;
  std::string toString() const { return toString(digits_); }

  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);

  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
  BigFloat operator-() const;

  BigFloat mul(const Rational& r) const;
  BigFloat mul(long v) const;
  BigFloat div(long v) const;

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);

 private:
  void adoptMaxPrecision(const BigFloat& o);
  int digits_;
  mpfr_t v_;
};

std::ostream& operator<<(std::ostream& os, const BigFloat& x);

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
/// x^(1/k) for x >= 0, k >= 1.
BigFloat rootn(const BigFloat& x, unsigned long k);
BigFloat pow(const BigFloat& x, long e);
BigFloat pow(const BigFloat& x, const BigFloat& e);
BigFloat exp(const BigFloat& x);
BigFloat expm1(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat log1p(const BigFloat& x);
BigFloat log10(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat atan(const BigFloat& x);
BigFloat asinh(const BigFloat& x);
BigFloat tanh(const BigFloat& x);

/// Parses an initial-value expression: a rational ("1/2", "1"), a decimal
/// ("0.25"), or a rational multiple of pi ("pi", "pi/2", "3pi/4", "2*pi/3").
BigFloat parseRealExpression(std::string_view text, int digits);

}  // namespace iterasym
