// Acceptance run: one PASS/FAIL line per criterion 1-7, with timings.
// The exit status is nonzero only for failures that are not listed as known
// deviations (see the README, "Known deviations").

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "iterasym/catalog.hpp"
#include "iterasym/coeff_engine.hpp"
#include "iterasym/estimator.hpp"
#include "iterasym/expansion.hpp"
#include "iterasym/golden.hpp"
#include "iterasym/kindred.hpp"
#include "iterasym/oracles.hpp"
#include "iterasym/power_series.hpp"

using namespace iterasym;

namespace {

using Clock = std::chrono::steady_clock;

double secondsSince(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fixed(double v, int prec) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(prec);
  os << v;
  return os.str();
}

struct Outcome {
  bool pass = true;
  bool knownDeviation = false;  // failure that is documented and expected
  std::string summary;
  std::vector<std::string> details;
};

int unexpectedFailures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.summary = std::string("exception: ") + e.what();
  }
  const double dt = secondsSince(t0);
  std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << title << " - " << o.summary << " ["
            << fixed(dt, 2) << " s]";
  if (!o.pass && o.knownDeviation) std::cout << " (known deviation)";
  std::cout << "\n";
  for (const auto& d : o.details) std::cout << "    " << d << "\n";
  std::cout.flush();
  if (!o.pass && !o.knownDeviation) ++unexpectedFailures;
}

SeriesSpec randomSpec(std::mt19937& rng, int tau, int K) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  SeriesSpec s;
  s.name = "random";
  s.tau = tau;
  int n = 0;
  while (n == 0) n = num(rng);
  s.a.push_back(-Rational(n, den(rng)).abs());
  for (int m = 2; m <= K; ++m) s.a.push_back(Rational(num(rng), den(rng)));
  return s;
}

// ---- 1 ---------------------------------------------------------------------

Outcome goldenTables() {
  const auto t0 = Clock::now();
  const GoldenReport r = verifyCorpus(loadGoldenCorpus(ITERASYM_TEST_DATA "/golden"));
  const double dt = secondsSince(t0);
  Outcome o;
  o.pass = r.ok() && r.functions.size() == 12 && dt < 5.0;
  o.summary = std::to_string(r.functions.size()) + " functions, " + std::to_string(r.valuesChecked) +
              " exact values (" + std::to_string(r.correctedChecked) + " corrected entries), " +
              std::to_string(r.mismatches.size()) + " mismatches, limit 5 s";
  for (const auto& m : r.mismatches) o.details.push_back(formatMismatch(m));
  return o;
}

// ---- 2 ---------------------------------------------------------------------

Outcome differentialDifference() {
  Outcome o;
  int checked = 0;
  for (const auto& e : catalog()) {
    const Derivation d = deriveAll(e.spec());
    const auto& P = d.polys().P;
    const Rational b1 = d.coeffs().b[1];
    for (int m = 1; m < d.depth(); ++m) {
      ++checked;
      if (P[m + 1].derivative() != P[m].derivative() * b1 + P[m] * Rational(m * e.tau + 1)) {
        o.pass = false;
        o.details.push_back(e.name + ": fails at m = " + std::to_string(m));
      }
    }
  }
  o.summary = "P'_{m+1} = b_1 P'_m + (m tau + 1) P_m on " + std::to_string(checked) + " (function, m) pairs";
  return o;
}

// ---- 3 ---------------------------------------------------------------------

Outcome oracleEquivalence() {
  std::vector<SeriesSpec> specs;
  for (const auto& e : catalog()) specs.push_back(e.spec());
  std::mt19937 rng(20240601);
  for (int k = 0; k < 100; ++k) specs.push_back(randomSpec(rng, 1 + k % 4, 2 + static_cast<int>(rng() % 6)));

  Outcome o;
  long compared = 0;
  for (const auto& s : specs) {
    const CoeffSet& cs = deriveAll(s).coeffs();
    PowerSeries p;
    p.tau = s.tau;
    p.coeffs = s.a;
    bool ok = oracleYDifference(p) == cs.b && oracleLogRatio(p) == cs.a[0];
    compared += 2L * cs.J;
    for (int i = 1; i < cs.J && ok; ++i) {
      const auto row = oraclePowerDifference(p, i);
      for (int j = i + 1; j <= cs.J; ++j) {
        ++compared;
        ok = ok && row[static_cast<std::size_t>(j)] == cs.aij(i, j);
      }
    }
    if (!ok) {
      o.pass = false;
      o.details.push_back(s.name + " (tau " + std::to_string(s.tau) + ", K " + std::to_string(s.terms()) +
                          "): lemma and oracle disagree");
    }
  }
  o.summary = "12 catalog + 100 random specs (tau 1..4, K 2..7), " + std::to_string(compared) +
              " coefficients equal to the formal-series oracles";
  return o;
}

// ---- 4 ---------------------------------------------------------------------

Outcome kindredStructure() {
  Outcome o;
  int pairs = 0;
  for (const auto& e : catalog()) {
    if (!e.kindredSource) continue;
    ++pairs;
    const Derivation f = deriveAll(e.spec());
    const Derivation g = deriveAll(catalogEntry(e.partner).spec(e.defaultTerms));
    const KindredTowerReport r = kindredTowers(f, g);
    const bool partner = kindredSpec(e.spec()).a == g.spec.a;
    std::string line = e.name + " / " + e.partner + ": partner series " + (partner ? "ok" : "WRONG");
    for (const auto& rel : r.relations) line += ", " + rel.statement.substr(0, 1) + (rel.ok() ? " ok" : " FAIL");
    line += ", magnitudes " + std::string(r.expansion.magnitudesEqual ? "equal" : "DIFFER") + " (" +
            std::to_string(r.expansion.termsCompared) + " terms)";
    o.details.push_back(line);
    if (!partner || !r.ok()) o.pass = false;
  }
  o.summary = std::to_string(pairs) + " pairs: c, T, P sign relations and term magnitudes";
  return o;
}

// ---- 5 ---------------------------------------------------------------------

struct PrintedConstant {
  const char* function;
  const char* x0;
  const char* printed;
};

Outcome constants() {
  const std::vector<PrintedConstant> table = {
      {"logistic", "1/2", "1.76799378613615405044"},  {"radical", "1/2", "-2.88756384412875082823"},
      {"log", "1/2", "2.23775826599229897691"},       {"exp", "1/2", "-1.77611295395085782901"},
      {"sin", "pi/2", "1.43045534652867724470"},      {"sin", "pi/3", "2.23217214236864952692"},
      {"sin", "pi/4", "3.96568516776811188899"},      {"sin", "pi/6", "9.52859799064212800035"},
      {"z", "1", "-1.29024720868776429166"},
  };
  Outcome o;
  int good = 0;
  bool onlyZ = true;
  for (const auto& c : table) {
    const auto t0 = Clock::now();
    const EstimateResult r = estimateC(catalogModel(c.function), std::string(c.x0));
    const double dt = secondsSince(t0);
    const BigFloat want(std::string_view(c.printed), 60);
    const int digits = agreeingDigits(r.paperC, want, 40);
    const bool within = dt <= 60.0 && 2 * r.N_used <= 1000000;
    const bool ok = digits >= 15 && within;
    std::string line = std::string(c.function) + " x0=" + c.x0 + ": C = " + r.paperC.toString(22) + " vs printed " +
                       c.printed + ", " + std::to_string(digits) + " digits agree, N = " + std::to_string(r.N_used) +
                       "/" + std::to_string(2 * r.N_used) + ", " + fixed(dt, 2) + " s";
    if (!ok && std::string(c.function) == "z") {
      const int magnitude = agreeingDigits(abs(r.paperC), abs(want), 40);
      line += "; |C| agrees to " + std::to_string(magnitude) +
              " digits. The displayed Z expansion (formula A, -C/n^2 term) forces C > 0 for x0 = 1, "
              "so the printed sign contradicts it";
      if (magnitude < 15 || !within) onlyZ = false;
    } else if (!ok) {
      onlyZ = false;
    }
    o.details.push_back((ok ? "ok   " : "FAIL ") + line);
    good += ok ? 1 : 0;
  }
  o.pass = good == static_cast<int>(table.size());
  o.knownDeviation = !o.pass && onlyZ;
  o.summary = std::to_string(good) + "/" + std::to_string(table.size()) +
              " printed constants reproduced to >= 15 digits (each <= 60 s, N <= 10^6)";
  return o;
}

// ---- 6 ---------------------------------------------------------------------

Outcome shiftedIndex() {
  const MapModel m = catalogModel("sin");
  const EstimateResult x = estimateC(m, std::string("pi/2"));
  const EstimateResult y = estimateC(m, std::string("1"));
  const BigFloat diff = y.paperC - x.paperC;
  const double err = std::abs((diff - BigFloat(1L, diff.digits())).toDouble());
  Outcome o;
  o.pass = err < 1e-14;
  o.summary = "sine C_y - C_x = " + diff.toString(22) + " (x0 = pi/2, y0 = 1), |error| = " + fixed(err * 1e20, 3) +
              "e-20, tolerance 1e-14";
  return o;
}

// ---- 7 ---------------------------------------------------------------------

struct SlopeCheck {
  double slope;
  bool ok;
};

SlopeCheck slope(const std::string& name, int J, int lnPower, double target) {
  const MapModel m = catalogModel(name);
  EstimateOptions opt;
  opt.targetDigits = 24;
  const EstimateResult r = estimateC(m, *m.defaultX0, opt);
  const int d = 50;
  const AsymptoticExpansion e = assemble(deriveAll(m.spec));
  const auto xs = iterateCheckpoints(m, parseRealExpression(*m.defaultX0, d), {1000, 10000}, d);
  const long ns[2] = {1000, 10000};
  double y[2];
  for (int k = 0; k < 2; ++k) {
    const BigFloat res = abs(xs[static_cast<std::size_t>(k)] - evaluateAt(e, ns[k], r.K.withDigits(d), d, J));
    y[k] = log(res).toDouble() - lnPower * std::log(std::log(static_cast<double>(ns[k])));
  }
  const double s = (y[1] - y[0]) / std::log(10.0);
  return {s, std::abs(s - target) <= 0.25};
}

Outcome convergenceOrder() {
  Outcome o;
  const SlopeCheck sine = slope("sin", 4, 5, -5.5);
  const SlopeCheck logi = slope("logistic", 4, 5, -6.0);
  const SlopeCheck logi5 = slope("logistic", 5, 6, -7.0);
  const SlopeCheck literal = slope("logistic", 5, 5, -6.0);
  o.details.push_back(std::string(sine.ok ? "ok   " : "FAIL ") + "sin J=4, ln^5 removed: slope " + fixed(sine.slope, 3) +
                      " (target -5.5 +- 0.25)");
  o.details.push_back(std::string(logi.ok ? "ok   " : "FAIL ") + "logistic J=4, ln^5 removed: slope " +
                      fixed(logi.slope, 3) + " (target -6 +- 0.25)");
  o.details.push_back(std::string(logi5.ok ? "ok   " : "FAIL ") + "logistic J=5, ln^6 removed: slope " +
                      fixed(logi5.slope, 3) + " (target -7 +- 0.25)");
  o.details.push_back("info logistic J=5 with ln^5 removed (literal pairing of J=5 with -6): slope " +
                      fixed(literal.slope, 3) + "; a J=5 residual decays like ln^6/n^7, so -6 belongs to J=4");
  o.pass = sine.ok && logi.ok && logi5.ok;
  o.summary = "log-log slope of |x_n - expansion| between n = 10^3 and 10^4";
  return o;
}

}  // namespace

int main() {
  const auto t0 = Clock::now();
  report(1, "golden coefficient reproduction", goldenTables);
  report(2, "differential-difference identity", differentialDifference);
  report(3, "oracle equivalence", oracleEquivalence);
  report(4, "kindred structure", kindredStructure);
  report(5, "constant reproduction", constants);
  report(6, "shifted-index relation", shiftedIndex);
  report(7, "convergence order", convergenceOrder);
  std::cout << "total " << fixed(secondsSince(t0), 2) << " s; unexpected failures: " << unexpectedFailures << "\n";
  return unexpectedFailures == 0 ? 0 : 1;
}
