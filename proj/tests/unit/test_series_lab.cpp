#include <doctest.h>

#include <fstream>
#include <random>

#include "iterasym/catalog.hpp"
#include "iterasym/coeff_engine.hpp"
#include "iterasym/errors.hpp"
#include "iterasym/kindred.hpp"
#include "iterasym/oracles.hpp"
#include "iterasym/power_series.hpp"
#include "iterasym/spec_io.hpp"
#include "support.hpp"

using namespace iterasym;
using testing::Q;
using testing::Qs;

namespace {

PowerSeries identitySeries(int tau, int K) {
  PowerSeries s;
  s.tau = tau;
  s.coeffs.assign(static_cast<std::size_t>(K), Rational(0));
  return s;
}

std::vector<SeriesSpec> randomSpecs(unsigned seed, int count) {
  std::mt19937 rng(seed);
  std::vector<SeriesSpec> out;
  for (int k = 0; k < count; ++k) {
    const int tau = 1 + k % 4;
    const int K = 2 + static_cast<int>(rng() % 6);  // 2..7
    out.push_back(testing::randomSpec(rng, tau, K));
  }
  return out;
}

void checkOracles(const SeriesSpec& s) {
  const Derivation d = deriveAll(s);
  const CoeffSet& cs = d.coeffs();
  const PowerSeries p = testing::asSeries(s);
  CHECK(oracleYDifference(p) == cs.b);
  CHECK(oracleLogRatio(p) == cs.a[0]);
  for (int i = 1; i < cs.J; ++i) {
    const auto row = oraclePowerDifference(p, i);
    for (int j = i + 1; j <= cs.J; ++j) CHECK(row[static_cast<std::size_t>(j)] == cs.aij(i, j));
  }
}

std::string writeTemp(const std::string& name, const std::string& text) {
  const std::string path = std::string(ITERASYM_TEST_TMP) + "/" + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_SUITE("series-lab") {

TEST_CASE("catalog series examples") {
  CHECK(catalogSeries("logistic", 7).coeffs == Qs({"-1", "0", "0", "0", "0", "0", "0"}));
  CHECK(catalogSeries("arcsinh", 7).coeffs ==
        Qs({"-1/6", "3/40", "-5/112", "35/1152", "-63/2816", "231/13312", "-143/10240"}));
  CHECK(catalogSeries("fresnel", 6).coeffs ==
        Qs({"-1/40", "1/3456", "-1/599040", "1/175472640", "-1/78033715200", "1/49049763840000"}));
  CHECK(catalog().size() == 12);
  CHECK_THROWS_AS(catalogEntry("cosine"), ValidationError);
}

TEST_CASE("reversion examples") {
  CHECK(revertSeries(catalogSeries("logistic", 7), 7).coeffs == Qs({"1", "2", "5", "14", "42", "132", "429"}));
  CHECK(revertSeries(catalogSeries("log", 5), 5).coeffs == Qs({"1/2", "1/6", "1/24", "1/120", "1/720"}));
  const auto fr = revertSeries(catalogSeries("fresnel", 4), 4).coeffs;
  CHECK(fr == Qs({"1/40", "49/17280", "4019/8985600", "42037157/513257472000"}));
}

TEST_CASE("kindred series examples") {
  CHECK(kindredOf(catalogSeries("logistic", 7)).coeffs == Qs({"-1", "2", "-5", "14", "-42", "132", "-429"}));
  CHECK(kindredOf(catalogSeries("log", 5)).coeffs == Qs({"-1/2", "1/6", "-1/24", "1/120", "-1/720"}));
  CHECK(kindredOf(catalogSeries("log", 7)) == catalogSeries("exp", 7));
  CHECK(kindredOf(catalogSeries("fresnel", 5)).coeffs ==
        Qs({"-1/40", "49/17280", "-4019/8985600", "42037157/513257472000", "-21129194183/1293408829440000"}));
  for (const auto& e : catalog()) {
    CAPTURE(e.name);
    const int K = e.defaultTerms;
    CHECK(kindredOf(e.series(K), K) == catalogEntry(e.partner).series(K));
  }
}

TEST_CASE("composition examples") {
  const PowerSeries s = catalogSeries("sin", 6);
  const PowerSeries id = identitySeries(2, 6);
  CHECK(composeSeries(s, id, 6) == s);
  CHECK(composeSeries(id, s, 6) == s);
  const PowerSeries l = catalogSeries("logistic", 8);
  CHECK(composeSeries(l, revertSeries(l, 8), 8) == identitySeries(1, 8));
}

TEST_CASE("property: reversion composes to the identity") {
  std::vector<PowerSeries> all;
  for (const auto& e : catalog()) all.push_back(e.series(e.defaultTerms));
  for (const auto& s : randomSpecs(5150, 50)) all.push_back(testing::asSeries(s));
  for (const auto& s : all) {
    const int K = s.terms();
    const PowerSeries r = revertSeries(s, K);
    CHECK(composeSeries(s, r, K) == identitySeries(s.tau, K));
    CHECK(composeSeries(r, s, K) == identitySeries(s.tau, K));
    CHECK(kindredOf(kindredOf(s, K), K) == s);
  }
}

TEST_CASE("oracle examples") {
  const auto yl = oracleYDifference(catalogSeries("logistic", 7));
  CHECK(yl == Qs({"1", "1", "1", "1", "1", "1", "1"}));
  CHECK(oracleYDifference(catalogSeries("exp", 7)) == Qs({"1", "1/3", "0", "-1/45", "0", "2/945", "0"}));
  const auto ys = oracleYDifference(catalogSeries("sin", 7));
  CHECK(std::vector<Rational>(ys.begin(), ys.begin() + 4) == Qs({"1", "3/5", "2/7", "3/25"}));
  CHECK(oracleLogRatio(catalogSeries("logistic", 7)) == Qs({"0", "1", "1/2", "1/3", "1/4", "1/5", "1/6"}));
  const auto lz = oracleLogRatio(catalogSeries("z", 6));
  CHECK(std::vector<Rational>(lz.begin() + 1, lz.end()) == Qs({"1", "0", "0", "0", "0"}));
  const auto pl = oraclePowerDifference(catalogSeries("logistic", 7), 1);
  CHECK(pl[2] == Rational(-1));
  for (std::size_t j = 3; j < pl.size(); ++j) CHECK(pl[j].isZero());
  const auto p3 = oraclePowerDifference(catalogSeries("tanh", 7), 3);
  CHECK(p3[4] == Rational(-3));
}

TEST_CASE("property: lemma formulas equal the formal-series oracles") {
  for (const auto& e : catalog()) checkOracles(e.spec());
  const auto specs = randomSpecs(31337, 100);
  for (const auto& s : specs) {
    CAPTURE(s.tau);
    CAPTURE(s.terms());
    checkOracles(s);
  }
}

TEST_CASE("property: kindred relations on all six pairs") {
  int pairs = 0;
  for (const auto& e : catalog()) {
    if (!e.kindredSource) continue;
    ++pairs;
    CAPTURE(e.name);
    const Derivation f = deriveAll(e.spec());
    const Derivation g = deriveAll(catalogEntry(e.partner).spec(e.defaultTerms));
    const KindredTowerReport r = kindredTowers(f, g);
    for (const auto& rel : r.relations) {
      CAPTURE(rel.statement);
      CHECK(rel.ok());
    }
    CHECK(r.expansion.magnitudesEqual);
    CHECK(r.expansion.signRelation);
    CHECK(kindredSpec(e.spec()).a == g.spec.a);
  }
  CHECK(pairs == 6);
}

TEST_CASE("evaluate examples") {
  const int d = 30;
  const BigFloat one(1L, d);
  CHECK(abs(evaluate("sin", BigFloat::pi(d).div(2), d) - one) < BigFloat("1e-29", d));
  const BigFloat omega("0.567143290409783872999968662210", d);
  CHECK(abs(evaluate("lambert-w", one, d) - omega) < BigFloat("1e-29", d));
  // Newton oracle: W(x) exp(W(x)) = x
  const BigFloat w = evaluate("lambert-w", BigFloat(Q("3/7"), d), d);
  CHECK(abs(w * exp(w) - BigFloat(Q("3/7"), d)) < BigFloat("1e-28", d));
  const BigFloat q = evaluate("logistic", BigFloat(Q("1/2"), d), d);
  CHECK(q == BigFloat(Q("1/4"), d));
  CHECK(evaluate("logistic", q, d) == BigFloat(Q("3/16"), d));
  CHECK_THROWS_AS(evaluate("log", BigFloat(-2L, d), d), DomainError);
  CHECK_THROWS_AS(evaluate("fresnel", BigFloat(5L, d), d), DomainError);
}

TEST_CASE("property: evaluators agree with their truncated series near 0") {
  const int d = 60;
  for (const auto& e : catalog()) {
    CAPTURE(e.name);
    const int K = e.defaultTerms;
    const SeriesSpec s = e.spec(K);
    const auto next = e.generator(K + 1);
    BigFloat theta(1L, d);
    if (e.theta == ThetaScale::PiSquared) theta = BigFloat::pi(d) * BigFloat::pi(d);
    const BigFloat aK = abs(BigFloat(s.a.back(), d) * pow(theta, static_cast<long>(K)));
    const BigFloat aK1 = abs(BigFloat(next.back(), d) * pow(theta, static_cast<long>(K + 1)));
    const BigFloat coef = (aK > aK1 ? aK : aK1).mul(2);
    for (const Rational& frac : {Rational(1), Q("1/2"), Q("1/4"), Q("-1/2")}) {
      const BigFloat x(e.checkRadius * frac, d);
      if (!e.inDomain(x)) continue;
      const BigFloat diff = abs(evaluate(e.name, x, d) - evaluateTruncated(s, x));
      const BigFloat bound = coef * pow(abs(x), static_cast<long>((K + 1) * e.tau + 1)) + BigFloat("1e-55", d);
      CAPTURE(frac);
      CHECK(diff <= bound);
    }
  }
}

TEST_CASE("custom spec ingestion") {
  const SeriesSpec w = loadSeriesSpec(ITERASYM_TEST_DATA "/specs/lambert-w.json");
  CHECK(w.tau == 1);
  CHECK(w.a == catalogEntry("lambert-w").spec().a);
  CHECK(w.convention.sigma == -1);

  const SeriesSpec f = loadSeriesSpec(ITERASYM_TEST_DATA "/specs/fresnel-reduced.json");
  CHECK(f.tau == 4);
  CHECK((f.theta == ThetaScale::PiSquared));
  CHECK(f.a == catalogEntry("fresnel").spec().a);

  try {
    loadSeriesSpec(ITERASYM_TEST_DATA "/specs/positive-a1.json");
    FAIL("a_1 = 1 accepted");
  } catch (const ParseError& e) {
    CHECK(e.field() == "a");
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("a_1 < 0") != std::string::npos);
  }
}

TEST_CASE("custom spec errors carry line and field") {
  auto failsAt = [](const std::string& text, int line, const std::string& field) {
    try {
      parseSeriesSpec(text);
      FAIL("accepted: " << text);
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
      CHECK(e.field() == field);
    }
  };
  failsAt("{\n  \"tau\": 1,\n  \"a\": [\"-1\", \"2/4\"]\n}", 3, "a");
  failsAt("{\n  \"tau\": 1,\n  \"a\": [\n    \"-1\",\n    \"1/0\"\n  ]\n}", 5, "a");
  failsAt("{\n  \"tau\": 0,\n  \"a\": [\"-1\", \"1\"]\n}", 2, "tau");
  failsAt("{\n  \"tau\": 1,\n  \"a\": [\"-1\", \"1\"],\n  \"colour\": \"red\"\n}", 4, "colour");
  failsAt("{\n  \"a\": [\"-1\", \"1\"]\n}", 0, "tau");
  CHECK_THROWS_AS(parseSeriesSpec("{ not json"), ParseError);
  CHECK_THROWS_AS(loadSeriesSpec(writeTemp("missing-dir/none.json", "")), ValidationError);
}

TEST_CASE("property: custom spec documents round-trip bit-exactly") {
  std::vector<SeriesSpec> specs = randomSpecs(77, 30);
  for (const auto& e : catalog()) specs.push_back(e.spec());
  for (const auto& s : specs) {
    const SeriesSpec back = parseSeriesSpec(writeSeriesSpec(s));
    CHECK(back.tau == s.tau);
    CHECK(back.a == s.a);
    CHECK((back.theta == s.theta));
    CHECK(back.convention == s.convention);
    CHECK(back.name == s.name);
  }
}

}  // TEST_SUITE
