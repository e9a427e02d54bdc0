#include "iterasym/oracles.hpp"

#include "iterasym/errors.hpp"

namespace iterasym {

namespace {

struct Transformed {
  int K;
  int tau;
  TruncSeries onePlusU;  // 1 + u(w), through w^K
};

Transformed transform(const PowerSeries& s) {
  const int K = s.terms();
  if (K < 2) throw ValidationError("oracle needs at least two coefficients");
  const Rational a1 = s.coeff(1);
  if (a1.sign() >= 0) throw ValidationError("oracle requires a_1 < 0");
  const Rational lambda = -(Rational(s.tau) * a1).reciprocal();
  return {K, s.tau, s.blockSeries(K).scaleArgument(lambda)};
}

}  // namespace

std::vector<Rational> oracleYDifference(const PowerSeries& s) {
  const auto t = transform(s);
  const TruncSeries ratio = t.onePlusU.pow(t.tau).inverse();
  // y_{n+1} - y_n = w^{-1} (ratio - 1)
  std::vector<Rational> r(static_cast<std::size_t>(t.K));
  for (int j = 0; j < t.K; ++j) r[static_cast<std::size_t>(j)] = ratio[j + 1];
  return r;
}

std::vector<Rational> oracleLogRatio(const PowerSeries& s) {
  const auto t = transform(s);
  const TruncSeries l = t.onePlusU.log().scaled(Rational(-t.tau));
  std::vector<Rational> r(static_cast<std::size_t>(t.K));
  for (int j = 1; j < t.K; ++j) r[static_cast<std::size_t>(j)] = l[j];
  return r;
}

std::vector<Rational> oraclePowerDifference(const PowerSeries& s, int i) {
  if (i < 1) throw ValidationError("oraclePowerDifference requires i >= 1");
  const auto t = transform(s);
  // y_{n+1}^{-i} - y_n^{-i} = w^i ((1 + u)^{tau i} - 1)
  const TruncSeries p = t.onePlusU.pow(t.tau * i);
  std::vector<Rational> r(static_cast<std::size_t>(t.K));
  for (int j = i + 1; j < t.K; ++j) r[static_cast<std::size_t>(j)] = p[j - i];
  return r;
}

}  // namespace iterasym
