#pragma once

#include <vector>

#include "iterasym/power_series.hpp"

namespace iterasym {

// Independent formal-series routes to the lemma coefficients. With
// y = lambda / x^tau and w = 1/y, one step of the map sends
//   y_{n+1} / y_n = (1 + u(w))^{-tau},   u(w) = sum_m a_m lambda^m w^m.
// Each oracle expands a closed expression in w with TruncSeries arithmetic
// and never touches the partition sums used by the coefficient engine.
// All results are indexed like the engine tables, up to J = K - 1.

/// Coefficients r_0..r_J of y_{n+1} - y_n = sum_j r_j w^j; r_0 = 1, r_j = b_j.
std::vector<Rational> oracleYDifference(const PowerSeries& s);

/// Index j in 1..J holds [w^j] ln(y_{n+1} / y_n) (= a_{0,j}); index 0 is 0.
std::vector<Rational> oracleLogRatio(const PowerSeries& s);

/// Index j in i+1..J holds [w^j] (y_{n+1}^{-i} - y_n^{-i}) (= a_{i,j}); others 0.
std::vector<Rational> oraclePowerDifference(const PowerSeries& s, int i);

}  // namespace iterasym
