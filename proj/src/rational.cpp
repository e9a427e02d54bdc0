#include "iterasym/rational.hpp"

#include <ostream>
#include <vector>

#include "iterasym/errors.hpp"

namespace iterasym {

namespace {

bool isIntegerLiteral(std::string_view s, bool allowSign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allowSign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

mpz_class parseInteger(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw ValidationError("rational with zero denominator");
  value_ = mpq_class(mpz_class(numerator), mpz_class(denominator));
  value_.canonicalize();
}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw ValidationError("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) throw ValidationError("rational with zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!isIntegerLiteral(text, true)) {
      throw ValidationError("malformed rational '" + std::string(text) + "'");
    }
    return Rational(mpz_class(parseInteger(text)), mpz_class(1));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!isIntegerLiteral(num, true) || !isIntegerLiteral(den, true)) {
    throw ValidationError("malformed rational '" + std::string(text) + "'");
  }
  const mpz_class d = parseInteger(den);
  if (d == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
  return Rational(parseInteger(num), d);
}

Rational Rational::parseReduced(std::string_view text) {
  Rational r = parse(text);
  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    const auto den = text.substr(slash + 1);
    if (den[0] == '-' || den[0] == '+') {
      throw ValidationError("denominator must be an unsigned positive integer in '" +
                            std::string(text) + "'");
    }
    const mpz_class num = parseInteger(text.substr(0, slash));
    const mpz_class d = parseInteger(den);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), d.get_mpz_t());
    if (g != 1 || d == 1) {
      throw ValidationError("rational '" + std::string(text) + "' is not in lowest terms");
    }
  }
  return r;
}

Rational Rational::abs() const {
  Rational r = *this;
  if (r.sign() < 0) r.value_ = -r.value_;
  return r;
}

Rational Rational::reciprocal() const {
  if (isZero()) throw ValidationError("reciprocal of zero");
  return Rational(mpq_class(value_.get_den(), value_.get_num()));
}

Rational Rational::pow(int exponent) const {
  if (exponent < 0) return reciprocal().pow(-exponent);
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  Rational r;
  r.value_ = mpq_class(num, den);  // already coprime
  return r;
}

std::string Rational::toString() const {
  if (isInteger()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.isZero()) throw ValidationError("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

std::size_t Rational::hash() const {
  const std::hash<std::string> h;
  return h(toString());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.toString(); }

Rational factorial(int n) {
  if (n < 0) throw ValidationError("factorial of negative integer");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f, mpz_class(1));
}

Rational binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(b, mpz_class(1));
}

}  // namespace iterasym
