#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "iterasym/rational.hpp"

namespace iterasym {

/// Dense univariate polynomial over Rational; coeffs()[d] multiplies X^d.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  RatPoly(std::initializer_list<Rational> coeffs);

  static RatPoly constant(const Rational& c);
  static RatPoly monomial(const Rational& c, int degree);
  static RatPoly x() { return monomial(Rational(1), 1); }

  /// Builds from coefficients listed highest degree first (the order tables
  /// are usually printed in).
  static RatPoly fromDescending(const std::vector<Rational>& coeffs);

  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool isZero() const noexcept { return coeffs_.empty(); }
  Rational coeff(int d) const;
  Rational leading() const;

  Rational operator()(const Rational& x) const;

  RatPoly derivative() const;
  RatPoly pow(int e) const;
  /// p(c X)
  RatPoly scaleArgument(const Rational& c) const;
  /// p(X + c)
  RatPoly shift(const Rational& c) const;
  /// p(q(X))
  RatPoly compose(const RatPoly& q) const;

  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const Rational& c);

  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(RatPoly a, const Rational& c) { return a *= c; }
  friend RatPoly operator*(const Rational& c, RatPoly a) { return a *= c; }
  RatPoly operator-() const;

  friend bool operator==(const RatPoly&, const RatPoly&) = default;

  /// Human-readable form in `var`, highest degree first, e.g. "X^2 - 1/2*X + 3".
  std::string toString(const std::string& var = "X") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace iterasym
