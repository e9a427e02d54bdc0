#include "iterasym/catalog.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <sstream>

#include "iterasym/errors.hpp"

namespace iterasym {

namespace {

Rational signAlt(int m) { return (m % 2 == 0) ? Rational(1) : Rational(-1); }

std::vector<Rational> generate(int K, const std::function<Rational(int)>& term) {
  if (K < 1) throw ValidationError("K must be at least 1");
  std::vector<Rational> a;
  a.reserve(static_cast<std::size_t>(K));
  for (int m = 1; m <= K; ++m) a.push_back(term(m));
  return a;
}

// tanh(x)/x = (sinh(x)/x) / cosh(x) as series in t = x^2.
std::vector<Rational> tanhCoeffs(int K) {
  TruncSeries num(K + 1), den(K + 1);
  for (int k = 0; k <= K; ++k) {
    num[k] = factorial(2 * k + 1).reciprocal();
    den[k] = factorial(2 * k).reciprocal();
  }
  const TruncSeries q = num * den.inverse();
  return {q.coeffs().begin() + 1, q.coeffs().end()};
}

// Reduced Fresnel coefficients: a_m = r_m pi^{2m}.
Rational fresnelReduced(int m) {
  return signAlt(m) / (Rational(4).pow(m) * factorial(2 * m) * Rational(4 * m + 1));
}

PowerSeries fresnelSeries(int K) {
  PowerSeries s;
  s.tau = 4;
  s.coeffs = generate(K, fresnelReduced);
  s.originName = "fresnel";
  return s;
}

// Coefficients of the reduced kindred-of-Fresnel series, grown on demand.
// Reversion cost rises steeply with the order, so the longest list computed
// so far is kept for the process lifetime.
class FresnelGCache {
 public:
  std::vector<Rational> get(int K) {
    std::lock_guard<std::mutex> lock(mu_);
    if (static_cast<int>(coeffs_.size()) < K) {
      const int target = std::max(K, 2 * static_cast<int>(coeffs_.size()));
      coeffs_ = kindredOf(fresnelSeries(target), target).coeffs;
    }
    return {coeffs_.begin(), coeffs_.begin() + K};
  }

 private:
  std::mutex mu_;
  std::vector<Rational> coeffs_;
};

FresnelGCache& fresnelGCache() {
  static FresnelGCache cache;
  return cache;
}

// Upper bound on the reduced-g order used by the adaptive evaluator.
constexpr int kFresnelGMaxOrder = 96;

BigFloat guarded(const BigFloat& x, int extra) { return x.withDigits(x.digits() + extra); }

// sum_k (-1)^k (pi/2)^{2k} x^{4k+1} / ((2k)! (4k+1)). The largest term is
// about exp(pi x^2 / 2), so that many extra digits cover the cancellation.
BigFloat fresnelC(const BigFloat& xIn) {
  const double xd = std::fabs(xIn.toDouble());
  const int extra = 6 + static_cast<int>(std::ceil(std::numbers::pi * xd * xd / 2.0 / std::log(10.0)));
  const BigFloat x = guarded(xIn, extra);
  const int d = x.digits();
  const BigFloat half = BigFloat::pi(d).div(2);
  const BigFloat q = half * half * pow(x, 4);
  BigFloat p(1L, d);  // q^k / (2k)!
  BigFloat sum = x;
  const BigFloat eps = BigFloat(Rational(1), d) / pow(BigFloat(10L, d), static_cast<long>(d));
  for (long k = 1; k < 100000; ++k) {
    p = p * q;
    p = p.div((2 * k - 1) * (2 * k));
    BigFloat term = (p * x).div(4 * k + 1);
    if (k % 2 == 1) term = -term;
    sum += term;
    // Terms decrease once q < (2k)^2; the alternating tail is then below |term|.
    if (q < BigFloat(4 * k * k, d) && abs(term) <= eps * abs(sum)) return sum.withDigits(xIn.digits());
  }
  throw PrecisionError("Fresnel series did not converge");
}

// g(x) = pi^{-1/2} h(sqrt(pi) x), h(u) = u (1 + sum g_m u^{4m}) with reduced g_m.
BigFloat fresnelG(const BigFloat& xIn) {
  const BigFloat x = guarded(xIn, 6);
  const int d = x.digits();
  const BigFloat sqrtPi = sqrt(BigFloat::pi(d));
  const BigFloat u = sqrtPi * x;
  const BigFloat t = pow(u, 4);
  const BigFloat eps = BigFloat(Rational(1), d) / pow(BigFloat(10L, d), static_cast<long>(d));
  BigFloat sum(1L, d);
  BigFloat tp(1L, d);
  BigFloat prev(0);
  bool havePrev = false;
  int K = 16;
  std::vector<Rational> g = fresnelGCache().get(K);
  for (int m = 1; m <= kFresnelGMaxOrder; ++m) {
    if (m > K) {
      K = std::min(2 * K, kFresnelGMaxOrder);
      g = fresnelGCache().get(K);
    }
    tp = tp * t;
    const BigFloat term = tp.mul(g[static_cast<std::size_t>(m - 1)]);
    sum += term;
    const BigFloat mag = abs(term);
    const bool decreasing = !havePrev || mag < prev;
    if (decreasing && mag <= eps) return (u * sum / sqrtPi).withDigits(xIn.digits());
    prev = mag;
    havePrev = true;
  }
  throw PrecisionError("reverted Fresnel series needs more than " + std::to_string(kFresnelGMaxOrder) +
                       " terms at this argument; use |x| <= 1/2");
}

// Principal branch of w e^w = x by Newton's method seeded with ln(1 + x).
BigFloat lambertW(const BigFloat& xIn) {
  const BigFloat x = guarded(xIn, 4);
  const int d = x.digits();
  if (x.isZero()) return BigFloat(xIn.digits());
  BigFloat w = log1p(x);
  const BigFloat tol = BigFloat(Rational(1), d) / pow(BigFloat(10L, d), static_cast<long>(d - 1));
  for (int it = 0; it < 200; ++it) {
    const BigFloat ew = exp(w);
    const BigFloat step = (w * ew - x) / (ew * (w + BigFloat(1L, d)));
    w -= step;
    if (abs(step) <= tol * abs(w)) return w.withDigits(xIn.digits());
  }
  throw ConvergenceError("Lambert W Newton iteration did not converge");
}

bool always(const BigFloat&) { return true; }

std::function<bool(const BigFloat&)> greaterThan(Rational lo) {
  return [lo](const BigFloat& x) { return x > BigFloat(lo, x.digits()); };
}

std::function<bool(const BigFloat&)> atLeast(Rational lo) {
  return [lo](const BigFloat& x) { return x >= BigFloat(lo, x.digits()); };
}

std::function<bool(const BigFloat&)> magnitudeAtMost(Rational hi) {
  return [hi](const BigFloat& x) { return abs(x) <= BigFloat(hi, x.digits()); };
}

std::function<bool(const BigFloat&)> openInterval(std::optional<Rational> hi, bool piMultiple = false) {
  return [hi, piMultiple](const BigFloat& x) {
    if (x.sign() <= 0) return false;
    if (!hi) return true;
    BigFloat bound(*hi, x.digits());
    if (piMultiple) bound = bound * BigFloat::pi(x.digits());
    return x < bound;
  };
}

std::vector<CatalogEntry> buildCatalog() {
  std::vector<CatalogEntry> c;
  auto add = [&](CatalogEntry e) { c.push_back(std::move(e)); };
  const Convention A{1, Rational(1)};
  const Convention B{-1, Rational(1)};

  {
    CatalogEntry e;
    e.name = "logistic";
    e.formulaText = "x(1-x)";
    e.convention = A;
    e.defaultX0 = "1/2";
    e.domainText = "all real x";
    e.iterationText = "0 < x0 < 1";
    e.partner = "radical";
    e.kindredSource = true;
    e.generator = [](int K) { return generate(K, [](int m) { return m == 1 ? Rational(-1) : Rational(0); }); };
    e.evaluator = [](const BigFloat& x) { return x * (BigFloat(1L, x.digits()) - x); };
    e.inDomain = always;
    e.validStart = openInterval(Rational(1));
    add(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "radical";
    e.formulaText = "(sqrt(1+4x)-1)/2";
    e.convention = B;
    e.defaultX0 = "1/2";
    e.domainText = "x >= -1/4";
    e.iterationText = "x0 > 0";
    e.partner = "logistic";
    e.generator = [](int K) {
      return generate(K, [](int m) { return signAlt(m) * binomial(2 * m, m) / Rational(m + 1); });
    };
    e.evaluator = [](const BigFloat& x) {
      const int d = x.digits();
      const BigFloat one(1L, d);
      return x.mul(2) / (one + sqrt(one + x.mul(4)));
    };
    e.inDomain = atLeast(Rational(-1, 4));
    e.validStart = openInterval(std::nullopt);
    add(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "log";
    e.formulaText = "ln(1+x)";
    e.convention = {1, Rational(2)};
    e.defaultX0 = "1/2";
    e.domainText = "x > -1";
    e.iterationText = "x0 > 0";
    e.partner = "exp";
    e.kindredSource = true;
    e.generator = [](int K) { return generate(K, [](int m) { return signAlt(m) / Rational(m + 1); }); };
    e.evaluator = [](const BigFloat& x) { return log1p(x); };
    e.inDomain = greaterThan(Rational(-1));
    e.validStart = openInterval(std::nullopt);
    add(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "exp";
    e.formulaText = "1-exp(-x)";
    e.convention = {-1, Rational(2)};
    e.defaultX0 = "1/2";
    e.domainText = "all real x";
    e.iterationText = "x0 > 0";
    e.partner = "log";
    e.generator = [](int K) { return generate(K, [](int m) { return signAlt(m) / factorial(m + 1); }); };
    e.evaluator = [](const BigFloat& x) { return -expm1(-x); };
    e.inDomain = always;
    e.validStart = openInterval(std::nullopt);
    add(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "sin";
    e.formulaText = "sin(x)";
    e.tau = 2;
    e.convention = A;
    e.defaultX0 = "pi/2";
    e.domainText = "all real x";
    e.iterationText = "0 < x0 < pi";
    e.partner = "arcsinh";
    e.kindredSource = true;
    e.generator = [](int K) { return generate(K, [](int m) { return signAlt(m) / factorial(2 * m + 1); }); };
    e.evaluator = [](const BigFloat& x) { return sin(x); };
    e.inDomain = always;
    e.validStart = openInterval(Rational(1), true);
    add(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "arcsinh";
    e.formulaText = "arcsinh(x)";
    e.tau = 2;
    e.convention = B;
    e.defaultX0 = "1";
    e.domainText = "all real x";
    e.iterationText = "x0 > 0";
    e.partner = "sin";
    e.generator = [](int K) {
      return generate(K, [](int m) {
        return signAlt(m) * binomial(2 * m, m) / (Rational(4).pow(m) * Rational(2 * m + 1));
      });
    };
    e.evaluator = [](const BigFloat& x) { return asinh(x); };
    e.inDomain = always;
    e.validStart = openInterval(std::nullopt);
    add(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "arctan";
    e.formulaText = "arctan(x)";
    e.tau = 2;
    e.convention = B;
    e.defaultX0 = "1";
    e.domainText = "all real x";
    e.iterationText = "x0 > 0";
    e.partner = "tanh";
    e.kindredSource = true;
    e.generator = [](int K) { return generate(K, [](int m) { return signAlt(m) / Rational(2 * m + 1); }); };
    e.evaluator = [](const BigFloat& x) { return atan(x); };
    e.inDomain = always;
    e.validStart = openInterval(std::nullopt);
    add(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "tanh";
    e.formulaText = "tanh(x)";
    e.tau = 2;
    e.convention = A;
    e.defaultX0 = "1";
    e.domainText = "all real x";
    e.iterationText = "x0 > 0";
    e.partner = "arctan";
    e.generator = tanhCoeffs;
    e.evaluator = [](const BigFloat& x) { return tanh(x); };
    e.inDomain = always;
    e.validStart = openInterval(std::nullopt);
    add(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "fresnel";
    e.formulaText = "FresnelC(x) = int_0^x cos(pi t^2/2) dt";
    e.tau = 4;
    e.theta = ThetaScale::PiSquared;
    e.convention = B;
    e.defaultX0 = "1";
    e.domainText = "|x| <= 4";
    e.iterationText = "0 < x0 <= 1";
    e.partner = "fresnel-g";
    e.kindredSource = true;
    e.generator = [](int K) { return generate(K, fresnelReduced); };
    e.evaluator = fresnelC;
    e.inDomain = magnitudeAtMost(Rational(4));
    e.validStart = [](const BigFloat& x) { return x.sign() > 0 && x <= BigFloat(1L, x.digits()); };
    add(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "fresnel-g";
    e.formulaText = "kindred partner of FresnelC (reverted series, alternating blocks)";
    e.tau = 4;
    e.theta = ThetaScale::PiSquared;
    e.convention = A;
    e.defaultX0 = "1/2";
    e.domainText = "|x| <= 1/2";
    e.iterationText = "0 < x0 <= 1/2";
    e.partner = "fresnel";
    e.generator = [](int K) { return fresnelGCache().get(K); };
    e.evaluator = fresnelG;
    e.inDomain = magnitudeAtMost(Rational(1, 2));
    e.validStart = [](const BigFloat& x) { return x.sign() > 0 && x <= BigFloat(Rational(1, 2), x.digits()); };
    add(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "lambert-w";
    e.formulaText = "W(x), the principal solution of w exp(w) = x";
    e.defaultTerms = 8;
    e.convention = B;
    e.defaultX0 = "1";
    e.domainText = "x >= -1/4";
    e.iterationText = "x0 > 0";
    e.partner = "z";
    e.kindredSource = true;
    e.generator = [](int K) {
      return generate(K, [](int m) { return Rational(-(m + 1)).pow(m) / factorial(m + 1); });
    };
    e.evaluator = lambertW;
    e.inDomain = atLeast(Rational(-1, 4));
    e.validStart = openInterval(std::nullopt);
    add(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "z";
    e.formulaText = "x exp(-x)";
    e.defaultTerms = 8;
    e.convention = A;
    e.defaultX0 = "1";
    e.domainText = "all real x";
    e.iterationText = "0 < x0 <= 1";
    e.partner = "lambert-w";
    e.generator = [](int K) { return generate(K, [](int m) { return signAlt(m) / factorial(m); }); };
    e.evaluator = [](const BigFloat& x) { return x * exp(-x); };
    e.inDomain = always;
    e.validStart = [](const BigFloat& x) { return x.sign() > 0 && x <= BigFloat(1L, x.digits()); };
    add(std::move(e));
  }
  return c;
}

}  // namespace

PowerSeries CatalogEntry::series(int K) const {
  PowerSeries s;
  s.tau = tau;
  s.coeffs = generator(K);
  s.originName = name;
  if (name == "fresnel-g") s.origin = SeriesOrigin::Kindred, s.originName = "fresnel";
  return s;
}

SeriesSpec CatalogEntry::spec(int K) const {
  SeriesSpec s;
  s.name = name;
  s.tau = tau;
  s.a = generator(K);
  s.theta = theta;
  s.convention = convention;
  return s;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = buildCatalog();
  return entries;
}

bool hasCatalogEntry(std::string_view name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return true;
  }
  return false;
}

const CatalogEntry& catalogEntry(std::string_view name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return e;
  }
  std::ostringstream os;
  os << "unknown function '" << name << "'; known:";
  for (const auto& e : catalog()) os << ' ' << e.name;
  throw ValidationError(os.str());
}

PowerSeries catalogSeries(std::string_view name, int K) { return catalogEntry(name).series(K); }

BigFloat evaluate(std::string_view name, const BigFloat& x, int digits) {
  const auto& e = catalogEntry(name);
  const BigFloat xw = x.withDigits(digits + 5);
  if (!e.inDomain(xw)) {
    throw DomainError(e.name + ": x = " + x.toString(12) + " outside the domain " + e.domainText);
  }
  return e.evaluator(xw).withDigits(digits);
}

BigFloat evaluateTruncated(const SeriesSpec& spec, const BigFloat& x) {
  const int d = x.digits();
  BigFloat t = pow(x, spec.tau);
  if (spec.theta == ThetaScale::PiSquared) {
    const BigFloat pi = BigFloat::pi(d);
    t = t * pi * pi;
  }
  // Horner in t over 1 + a_1 t + ... + a_K t^K.
  BigFloat acc(0L, d);
  for (int m = spec.terms(); m >= 1; --m) {
    acc += BigFloat(spec.a[static_cast<std::size_t>(m - 1)], d);
    acc = acc * t;
  }
  acc += BigFloat(1L, d);
  return x * acc;
}

MapModel catalogModel(std::string_view name, std::optional<int> K) {
  const auto& e = catalogEntry(name);
  return {e.spec(K.value_or(e.defaultTerms)), e.evaluator, e.validStart, e.defaultX0};
}

MapModel polynomialModel(const SeriesSpec& spec) {
  spec.validate();
  MapModel model;
  model.spec = spec;
  model.evaluator = [spec](const BigFloat& x) { return evaluateTruncated(spec, x); };
  return model;
}

}  // namespace iterasym
