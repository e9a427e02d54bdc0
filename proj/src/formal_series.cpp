#include "iterasym/formal_series.hpp"

#include "iterasym/errors.hpp"

namespace iterasym {

TruncSeries::TruncSeries(int length) : c_(static_cast<std::size_t>(length < 0 ? 0 : length)) {}

TruncSeries::TruncSeries(std::vector<Rational> coeffs, int length) : c_(std::move(coeffs)) {
  c_.resize(static_cast<std::size_t>(length));
}

TruncSeries TruncSeries::onePlus(const std::vector<Rational>& values, int length) {
  TruncSeries s(length);
  if (length > 0) s[0] = Rational(1);
  for (int m = 1; m < length && m - 1 < static_cast<int>(values.size()); ++m) {
    s[m] = values[static_cast<std::size_t>(m - 1)];
  }
  return s;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  for (int i = 0; i < length() && i < o.length(); ++i) (*this)[i] += o[i];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
  for (int i = 0; i < length() && i < o.length(); ++i) (*this)[i] -= o[i];
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  const int n = a.length();
  TruncSeries r(n);
  for (int i = 0; i < n; ++i) {
    if (a[i].isZero()) continue;
    for (int j = 0; i + j < n && j < b.length(); ++j) {
      if (!b[j].isZero()) r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

TruncSeries TruncSeries::scaled(const Rational& s) const {
  TruncSeries r = *this;
  for (auto& x : r.c_) x *= s;
  return r;
}

TruncSeries TruncSeries::inverse() const {
  const int n = length();
  if (n == 0) return *this;
  if (c_[0].isZero()) throw ValidationError("series inverse requires a nonzero constant term");
  TruncSeries r(n);
  const Rational inv0 = c_[0].reciprocal();
  r[0] = inv0;
  for (int k = 1; k < n; ++k) {
    Rational acc(0);
    for (int j = 1; j <= k; ++j) acc += (*this)[j] * r[k - j];
    r[k] = -acc * inv0;
  }
  return r;
}

TruncSeries TruncSeries::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  TruncSeries result(length());
  if (length() > 0) result[0] = Rational(1);
  TruncSeries base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

TruncSeries TruncSeries::powRational(const Rational& alpha) const {
  const int n = length();
  if (n == 0) return *this;
  if (c_[0] != Rational(1)) throw ValidationError("rational power requires constant term 1");
  // k g_k = sum_{j=1}^{k} ((alpha + 1) j - k) f_j g_{k-j}
  TruncSeries g(n);
  g[0] = Rational(1);
  for (int k = 1; k < n; ++k) {
    Rational acc(0);
    for (int j = 1; j <= k; ++j) {
      if ((*this)[j].isZero()) continue;
      acc += ((alpha + Rational(1)) * Rational(j) - Rational(k)) * (*this)[j] * g[k - j];
    }
    g[k] = acc / Rational(k);
  }
  return g;
}

TruncSeries TruncSeries::log() const {
  const int n = length();
  if (n == 0) return *this;
  if (c_[0] != Rational(1)) throw ValidationError("series log requires constant term 1");
  // (log f)' = f' / f, integrated termwise.
  TruncSeries deriv(n);
  for (int k = 1; k < n; ++k) deriv[k - 1] = (*this)[k] * Rational(k);
  const TruncSeries q = deriv * inverse();
  TruncSeries r(n);
  for (int k = 1; k < n; ++k) r[k] = q[k - 1] / Rational(k);
  return r;
}

TruncSeries TruncSeries::compose(const TruncSeries& inner) const {
  const int n = length();
  if (inner.length() > 0 && !inner[0].isZero()) {
    throw ValidationError("composition requires an inner series without constant term");
  }
  TruncSeries in(inner.coeffs(), n);
  TruncSeries acc(n);
  for (int k = n - 1; k >= 0; --k) {
    acc = acc * in;
    acc[0] += (*this)[k];
  }
  return acc;
}

TruncSeries TruncSeries::scaleArgument(const Rational& s) const {
  TruncSeries r = *this;
  Rational f(1);
  for (auto& x : r.c_) {
    x *= f;
    f *= s;
  }
  return r;
}

}  // namespace iterasym
