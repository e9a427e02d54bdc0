#pragma once

#include <string>
#include <vector>

#include "iterasym/formal_series.hpp"
#include "iterasym/rational.hpp"

namespace iterasym {

enum class SeriesOrigin { ClosedForm, Reverted, Kindred };

/// x + sum_{m=1}^{K} a_m x^{m tau + 1}. The unit linear term is implicit.
/// When the map is handed to the engine the stored coefficients are taken
/// as exact; callers that truncate a transcendental series are responsible
/// for supplying enough of them.
struct PowerSeries {
  int tau = 1;
  std::vector<Rational> coeffs;  // coeffs[m-1] = a_m
  SeriesOrigin origin = SeriesOrigin::ClosedForm;
  std::string originName;        // source function for Reverted / Kindred

  int terms() const noexcept { return static_cast<int>(coeffs.size()); }
  Rational coeff(int m) const;

  /// phi(t) = 1 + sum a_m t^m, truncated to t^K; f(x) = x phi(x^tau).
  TruncSeries blockSeries(int K) const;

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
    return a.tau == b.tau && a.coeffs == b.coeffs;
  }
};

/// outer(inner(x)) to order x^{K tau + 1}. Requires equal tau.
PowerSeries composeSeries(const PowerSeries& outer, const PowerSeries& inner, int K);

/// Compositional inverse through x^{K tau + 1}, by Lagrange inversion:
///   [y^{m tau + 1}] f^{-1}(y) = [t^m] phi(t)^{-(m tau + 1)} / (m tau + 1).
PowerSeries revertSeries(const PowerSeries& s, int K);

/// Reverts, then flips the sign of the m-th block: g_m = (-1)^m revert(s)_m.
PowerSeries kindredOf(const PowerSeries& s, int K);
PowerSeries kindredOf(const PowerSeries& s);

}  // namespace iterasym
