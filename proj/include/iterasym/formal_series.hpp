#pragma once

#include <vector>

#include "iterasym/rational.hpp"

namespace iterasym {

/// Truncated formal power series c_0 + c_1 t + ... + c_{N-1} t^{N-1} over
/// Rational. All operations keep the length N of their first argument.
class TruncSeries {
 public:
  explicit TruncSeries(int length);
  TruncSeries(std::vector<Rational> coeffs, int length);

  /// 1 + sum_{m>=1} values[m-1] t^m.
  static TruncSeries onePlus(const std::vector<Rational>& values, int length);

  int length() const noexcept { return static_cast<int>(c_.size()); }
  const Rational& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  Rational& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  const std::vector<Rational>& coeffs() const noexcept { return c_; }

  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  TruncSeries scaled(const Rational& s) const;

  /// Multiplicative inverse; requires c_0 != 0.
  TruncSeries inverse() const;
  /// Nonnegative integer power by repeated squaring.
  TruncSeries pow(int e) const;
  /// (this)^alpha for rational alpha; requires c_0 = 1.
  TruncSeries powRational(const Rational& alpha) const;
  /// Natural logarithm; requires c_0 = 1.
  TruncSeries log() const;
  /// this(inner(t)); requires inner's constant term to be 0.
  TruncSeries compose(const TruncSeries& inner) const;
  /// t -> s t.
  TruncSeries scaleArgument(const Rational& s) const;

 private:
  std::vector<Rational> c_;
};

}  // namespace iterasym
