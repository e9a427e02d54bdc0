#include "iterasym/coeff_engine.hpp"

#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "iterasym/combinatorics.hpp"
#include "iterasym/errors.hpp"

namespace iterasym {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

// (t)_k / k! with (t)_k the falling factorial; k >= 1.
Rational fallingOverFactorial(const Rational& t, int k) { return fallingFactorial(t, k) / factorial(k); }

// beta_i = b_{i-1}: the coefficients of y_{n+1}/y_n - 1 in powers of 1/y.
std::vector<Rational> betaValues(const std::vector<Rational>& b, int count) {
  std::vector<Rational> beta(idx(count));
  for (int i = 1; i <= count && i - 1 < static_cast<int>(b.size()); ++i) beta[idx(i - 1)] = b[idx(i - 1)];
  return beta;
}

// Product T_1^{n_1} ... T_k^{n_k} times multinomial(sum n; n).
RatPoly weightedPolyProduct(const PartitionSolution& sol, const std::vector<RatPoly>& T) {
  int top = 0;
  for (int v : sol.n) top += v;
  RatPoly r = RatPoly::constant(multinomial(top, sol.n));
  for (std::size_t i = 0; i < sol.n.size(); ++i) {
    if (sol.n[i] == 0) continue;
    r = r * T[i + 1].pow(sol.n[i]);
  }
  return r;
}

}  // namespace

Rational computeLambda(const SeriesSpec& spec) {
  if (spec.a.empty() || spec.a.front().sign() >= 0) {
    throw ValidationError("lambda requires a_1 < 0");
  }
  return -(Rational(spec.tau) * spec.a.front()).reciprocal();
}

std::vector<Rational> computeB(const SeriesSpec& spec) {
  spec.validate();
  const int K = spec.terms();
  const int J = spec.depth();
  const Rational lambda = computeLambda(spec);
  const Rational minusTau(-spec.tau);

  std::vector<Rational> b(idx(J + 1));
  b[0] = Rational(1);
  for (int j = 1; j <= J; ++j) {
    Rational sum(0);
    for (int s = 0; s <= j; ++s) {
      Rational inner(0);
      for (const auto& sol : partitions(K, j + 1, s)) inner += weightedProduct(sol, spec.a);
      if (inner.isZero()) continue;
      sum += fallingOverFactorial(minusTau, j + 1 - s) * inner;
    }
    b[idx(j)] = lambda.pow(j + 1) * sum;
  }
  return b;
}

std::vector<Rational> computeA0(const SeriesSpec& spec, const std::vector<Rational>& b) {
  const int K = spec.terms();
  const int J = spec.depth();
  const auto beta = betaValues(b, K);

  std::vector<Rational> a0(idx(J + 1));
  for (int j = 1; j <= J; ++j) {
    Rational sum(0);
    for (int s = 0; s <= j - 1; ++s) {
      Rational inner(0);
      for (const auto& sol : partitions(K, j, s)) inner += weightedProduct(sol, beta);
      const Rational sign = ((j - 1 - s) % 2 == 0) ? Rational(1) : Rational(-1);
      sum += sign / Rational(j - s) * inner;
    }
    a0[idx(j)] = sum;
  }
  return a0;
}

std::vector<std::vector<Rational>> computeAij(const SeriesSpec& spec, const std::vector<Rational>& b) {
  const int K = spec.terms();
  const int J = spec.depth();
  const auto beta = betaValues(b, K);

  std::vector<std::vector<Rational>> a(idx(J + 1), std::vector<Rational>(idx(J + 1)));
  a[0] = computeA0(spec, b);
  for (int i = 1; i <= J; ++i) {
    for (int j = i + 1; j <= J; ++j) {
      Rational sum(0);
      for (int s = 0; s <= j - i - 1; ++s) {
        Rational inner(0);
        for (const auto& sol : partitions(K, j - i, s)) inner += weightedProduct(sol, beta);
        if (inner.isZero()) continue;
        // Weight (-i)_{j-i-s} / (j-i-s)!; the printed subscript j-1-s only
        // agrees with this at i = 1 and fails a_{i,i+1} = -i otherwise.
        sum += fallingOverFactorial(Rational(-i), j - i - s) * inner;
      }
      a[idx(i)][idx(j)] = sum;
    }
  }
  return a;
}

std::vector<Rational> computeC(const SeriesSpec& spec, const std::vector<Rational>& b,
                               const std::vector<std::vector<Rational>>& a) {
  const int J = spec.depth();
  std::vector<Rational> c(idx(J));
  c[0] = -b[1];
  for (int i = 1; i <= J - 1; ++i) {
    Rational sum = b[idx(i + 1)];
    for (int h = 0; h <= i - 1; ++h) sum += a[idx(h)][idx(i + 1)] * c[idx(h)];
    c[idx(i)] = sum / Rational(i);
  }
  return c;
}

std::vector<RatPoly> computeT(const SeriesSpec& spec, const std::vector<Rational>& b,
                              const std::vector<Rational>& c) {
  const int J = spec.depth();
  std::vector<RatPoly> T(idx(J + 1));
  T[1] = RatPoly::x();
  const Rational& b1 = b[1];
  // m = 1 reproduces T_2 = b_1 X - c_1, so the recursion runs from there.
  for (int m = 1; m <= J - 1; ++m) {
    RatPoly logPart;
    for (int s = 0; s <= m - 1; ++s) {
      RatPoly inner;
      for (const auto& sol : partitions(m, m, s)) inner += weightedPolyProduct(sol, T);
      const Rational sign = ((m - 1 - s) % 2 == 0) ? Rational(1) : Rational(-1);
      logPart += inner * (sign / Rational(m - s));
    }
    RatPoly next = logPart * b1 - RatPoly::constant(c[idx(m)]);
    for (int p = 1; p <= m - 1; ++p) {
      RatPoly powerPart;
      for (int q = 1; q <= m - p; ++q) {
        RatPoly inner;
        for (const auto& sol : partitions(m, m - p, m - p - q)) inner += weightedPolyProduct(sol, T);
        if (inner.isZero()) continue;
        powerPart += inner * fallingOverFactorial(Rational(-p), q);
      }
      next -= powerPart * c[idx(p)];
    }
    T[idx(m + 1)] = std::move(next);
  }
  return T;
}

std::vector<RatPoly> computeTtilde(const SeriesSpec& spec, const std::vector<RatPoly>& T) {
  std::vector<RatPoly> out(T.size());
  const Rational scale(-spec.tau);
  for (std::size_t m = 1; m < T.size(); ++m) out[m] = T[m].scaleArgument(scale);
  return out;
}

std::vector<RatPoly> computeP(const SeriesSpec& spec, const std::vector<RatPoly>& Ttilde) {
  const int J = spec.depth();
  const Rational exponent = -Rational(1, spec.tau);
  std::vector<RatPoly> P(idx(J + 1));
  P[0] = RatPoly::constant(Rational(1));
  for (int m = 1; m <= J; ++m) {
    RatPoly sum;
    for (int s = 0; s <= m - 1; ++s) {
      RatPoly inner;
      for (const auto& sol : partitions(J, m, s)) inner += weightedPolyProduct(sol, Ttilde);
      if (inner.isZero()) continue;
      sum += inner * fallingOverFactorial(exponent, m - s);
    }
    P[idx(m)] = std::move(sum);
  }
  return P;
}

DerivedTables deriveUncached(const SeriesSpec& spec) {
  spec.validate();
  DerivedTables out;
  CoeffSet& cs = out.coeffs;
  cs.J = spec.depth();
  cs.lambda = computeLambda(spec);
  cs.b = computeB(spec);
  cs.a = computeAij(spec, cs.b);
  cs.c = computeC(spec, cs.b, cs.a);

  PolySet& ps = out.polys;
  ps.T = computeT(spec, cs.b, cs.c);
  ps.Ttilde = computeTtilde(spec, ps.T);
  ps.P = computeP(spec, ps.Ttilde);
  return out;
}

Derivation deriveAll(const SeriesSpec& spec) {
  static std::shared_mutex mutex;
  static std::unordered_map<std::string, std::shared_ptr<const DerivedTables>> memo;

  spec.validate();
  const std::string key = spec.key();
  {
    std::shared_lock lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return {spec, it->second};
  }
  auto tables = std::make_shared<const DerivedTables>(deriveUncached(spec));
  std::unique_lock lock(mutex);
  auto [it, inserted] = memo.try_emplace(key, std::move(tables));
  return {spec, it->second};
}

}  // namespace iterasym
