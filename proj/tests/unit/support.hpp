#pragma once

#include <random>
#include <string>
#include <vector>

#include "iterasym/power_series.hpp"
#include "iterasym/rational.hpp"
#include "iterasym/series_spec.hpp"

namespace testing {

using iterasym::Rational;

inline Rational Q(const char* s) { return Rational::parse(s); }

inline std::vector<Rational> Qs(std::initializer_list<const char*> xs) {
  std::vector<Rational> out;
  for (const char* x : xs) out.push_back(Q(x));
  return out;
}

// Small random rationals p/q with |p| <= 9, 1 <= q <= 9.
inline Rational randomRational(std::mt19937& rng, bool nonzero = false) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  for (;;) {
    Rational r(num(rng), den(rng));
    if (!nonzero || !r.isZero()) return r;
  }
}

inline iterasym::SeriesSpec randomSpec(std::mt19937& rng, int tau, int K) {
  iterasym::SeriesSpec s;
  s.name = "random";
  s.tau = tau;
  s.a.push_back(-randomRational(rng, true).abs());
  for (int m = 2; m <= K; ++m) s.a.push_back(randomRational(rng));
  return s;
}

inline iterasym::PowerSeries asSeries(const iterasym::SeriesSpec& s) {
  iterasym::PowerSeries p;
  p.tau = s.tau;
  p.coeffs = s.a;
  return p;
}

}  // namespace testing
