#include "iterasym/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <ostream>

#include "iterasym/errors.hpp"

namespace iterasym {

mpfr_prec_t BigFloat::bitsFor(int digits) {
  if (digits < 1) digits = 1;
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 8;
}

BigFloat::BigFloat(int digits) : digits_(std::max(digits, 1)) {
  mpfr_init2(v_, bitsFor(digits_));
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long value, int digits) : BigFloat(digits) { mpfr_set_si(v_, value, MPFR_RNDN); }

BigFloat::BigFloat(const Rational& value, int digits) : BigFloat(digits) {
  mpfr_set_q(v_, value.raw().get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(std::string_view decimal, int digits) : BigFloat(digits) {
  const std::string s(decimal);
  char* end = nullptr;
  if (!s.empty()) mpfr_strtofr(v_, s.c_str(), &end, 10, MPFR_RNDN);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw ValidationError("malformed decimal number '" + s + "'");
  }
}

BigFloat::BigFloat(const BigFloat& other) : digits_(other.digits_) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept : digits_(other.digits_) {
  // Leave `other` valid but minimal; mpfr_swap exchanges precision too.
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    digits_ = other.digits_;
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) {
    digits_ = other.digits_;
    mpfr_swap(v_, other.v_);
  }
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::pi(int digits) {
  BigFloat r(digits);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::withDigits(int digits) const {
  BigFloat r(digits);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

std::string BigFloat::toString(int significant) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return sign() < 0 ? "-inf" : "inf";
  if (isZero()) return "0";
  significant = std::max(significant, 1);
  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<std::size_t>(significant), v_, MPFR_RNDN);
  std::string digits(raw);
  mpfr_free_str(raw);
  std::string sign;
  if (!digits.empty() && digits[0] == '-') {
    sign = "-";
    digits.erase(0, 1);
  }
  // Value is 0.DIGITS * 10^exp10.
  const long e = static_cast<long>(exp10);
  std::string out;
  if (e > 0 && e <= significant) {
    out = digits.substr(0, static_cast<std::size_t>(e));
    if (static_cast<std::size_t>(e) < digits.size()) out += "." + digits.substr(static_cast<std::size_t>(e));
  } else if (e <= 0 && e > -6) {
    out = "0." + std::string(static_cast<std::size_t>(-e), '0') + digits;
  } else {
    out = digits.substr(0, 1);
    if (digits.size() > 1) out += "." + digits.substr(1);
    out += "e" + std::to_string(e - 1);
  }
  return sign + out;
}

void BigFloat::adoptMaxPrecision(const BigFloat& o) {
  if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) {
    mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
    digits_ = o.digits_;
  }
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  adoptMaxPrecision(o);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
  adoptMaxPrecision(o);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o) {
  adoptMaxPrecision(o);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& o) {
  adoptMaxPrecision(o);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::mul(const Rational& r) const {
  BigFloat out(*this);
  mpfr_mul_q(out.v_, v_, r.raw().get_mpq_t(), MPFR_RNDN);
  return out;
}

BigFloat BigFloat::mul(long v) const {
  BigFloat out(*this);
  mpfr_mul_si(out.v_, v_, v, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::div(long v) const {
  BigFloat out(*this);
  mpfr_div_si(out.v_, v_, v, MPFR_RNDN);
  return out;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.v_, b.v_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::ostream& operator<<(std::ostream& os, const BigFloat& x) { return os << x.toString(); }

namespace {

template <typename Fn>
BigFloat unary(const BigFloat& x, Fn fn) {
  BigFloat r(x.digits());
  fn(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

}  // namespace

BigFloat abs(const BigFloat& x) {
  BigFloat r(x);
  mpfr_abs(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}
BigFloat sqrt(const BigFloat& x) {
  if (x.sign() < 0) throw DomainError("sqrt of negative number");
  return unary(x, mpfr_sqrt);
}
BigFloat rootn(const BigFloat& x, unsigned long k) {
  if (k == 0) throw DomainError("zeroth root");
  if (x.sign() < 0) throw DomainError("root of negative number");
  BigFloat r(x.digits());
  mpfr_rootn_ui(r.raw(), x.raw(), k, MPFR_RNDN);
  return r;
}
BigFloat pow(const BigFloat& x, long e) {
  BigFloat r(x.digits());
  mpfr_pow_si(r.raw(), x.raw(), e, MPFR_RNDN);
  return r;
}
BigFloat pow(const BigFloat& x, const BigFloat& e) {
  BigFloat r(std::max(x.digits(), e.digits()));
  mpfr_pow(r.raw(), x.raw(), e.raw(), MPFR_RNDN);
  return r;
}
BigFloat exp(const BigFloat& x) { return unary(x, mpfr_exp); }
BigFloat expm1(const BigFloat& x) { return unary(x, mpfr_expm1); }
BigFloat log(const BigFloat& x) {
  if (x.sign() <= 0) throw DomainError("log of non-positive number");
  return unary(x, mpfr_log);
}
BigFloat log1p(const BigFloat& x) {
  if (x <= BigFloat(-1L, x.digits())) throw DomainError("log1p argument <= -1");
  return unary(x, mpfr_log1p);
}
BigFloat log10(const BigFloat& x) {
  if (x.sign() <= 0) throw DomainError("log10 of non-positive number");
  return unary(x, mpfr_log10);
}
BigFloat sin(const BigFloat& x) { return unary(x, mpfr_sin); }
BigFloat cos(const BigFloat& x) { return unary(x, mpfr_cos); }
BigFloat atan(const BigFloat& x) { return unary(x, mpfr_atan); }
BigFloat asinh(const BigFloat& x) { return unary(x, mpfr_asinh); }
BigFloat tanh(const BigFloat& x) { return unary(x, mpfr_tanh); }

BigFloat parseRealExpression(std::string_view text, int digits) {
  std::string s;
  for (char ch : text) {
    if (ch != ' ' && ch != '*') s.push_back(ch);
  }
  if (s.empty()) throw ValidationError("empty real expression");
  const auto piPos = s.find("pi");
  if (piPos == std::string::npos) {
    if (s.find_first_of(".eE") != std::string::npos) return BigFloat(s, digits);
    return BigFloat(Rational::parse(s), digits);
  }
  // [p]pi[/q]
  const std::string before = s.substr(0, piPos);
  const std::string after = s.substr(piPos + 2);
  Rational factor(1);
  if (!before.empty()) {
    factor = before == "-" ? Rational(-1) : Rational::parse(before);
  }
  if (!after.empty()) {
    if (after[0] != '/') throw ValidationError("malformed real expression '" + std::string(text) + "'");
    factor /= Rational::parse(after.substr(1));
  }
  return BigFloat::pi(digits + 5).mul(factor).withDigits(digits);
}

}  // namespace iterasym
