#include "iterasym/ratpoly.hpp"

#include <algorithm>

#include "iterasym/errors.hpp"

namespace iterasym {

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RatPoly::RatPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

RatPoly RatPoly::constant(const Rational& c) { return RatPoly({c}); }

RatPoly RatPoly::monomial(const Rational& c, int degree) {
  if (degree < 0) throw ValidationError("negative monomial degree");
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return RatPoly(std::move(v));
}

RatPoly RatPoly::fromDescending(const std::vector<Rational>& coeffs) {
  return RatPoly(std::vector<Rational>(coeffs.rbegin(), coeffs.rend()));
}

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().isZero()) coeffs_.pop_back();
}

Rational RatPoly::coeff(int d) const {
  if (d < 0 || d > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(d)];
}

Rational RatPoly::leading() const { return isZero() ? Rational(0) : coeffs_.back(); }

Rational RatPoly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly RatPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rational(i);
  return RatPoly(std::move(d));
}

RatPoly RatPoly::pow(int e) const {
  if (e < 0) throw ValidationError("negative polynomial power");
  RatPoly result = constant(Rational(1));
  RatPoly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

RatPoly RatPoly::scaleArgument(const Rational& c) const {
  std::vector<Rational> v = coeffs_;
  Rational f(1);
  for (auto& x : v) {
    x *= f;
    f *= c;
  }
  return RatPoly(std::move(v));
}

RatPoly RatPoly::shift(const Rational& c) const { return compose(RatPoly({c, Rational(1)})); }

RatPoly RatPoly::compose(const RatPoly& q) const {
  RatPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * q;
    acc += constant(*it);
  }
  return acc;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const Rational& c) {
  if (c.isZero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.isZero() || b.isZero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].isZero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RatPoly(std::move(v));
}

RatPoly RatPoly::operator-() const {
  RatPoly r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

std::string RatPoly::toString(const std::string& var) const {
  if (isZero()) return "0";
  std::string out;
  for (int d = degree(); d >= 0; --d) {
    const Rational& c = coeffs_[static_cast<std::size_t>(d)];
    if (c.isZero()) continue;
    const Rational mag = c.abs();
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    const bool unit = mag == Rational(1);
    if (d == 0) {
      out += mag.toString();
      continue;
    }
    if (!unit) out += mag.toString() + "*";
    out += var;
    if (d > 1) out += "^" + std::to_string(d);
  }
  return out;
}

}  // namespace iterasym
