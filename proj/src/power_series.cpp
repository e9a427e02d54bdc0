#include "iterasym/power_series.hpp"

#include "iterasym/errors.hpp"

namespace iterasym {

Rational PowerSeries::coeff(int m) const {
  if (m < 1 || m > terms()) return Rational(0);
  return coeffs[static_cast<std::size_t>(m - 1)];
}

TruncSeries PowerSeries::blockSeries(int K) const { return TruncSeries::onePlus(coeffs, K + 1); }

PowerSeries composeSeries(const PowerSeries& outer, const PowerSeries& inner, int K) {
  if (outer.tau != inner.tau) throw ValidationError("composeSeries: tau mismatch");
  const int tau = inner.tau;
  // outer(inner(x)) = x phi_g(t) phi_f(t phi_g(t)^tau), t = x^tau.
  const TruncSeries phiG = inner.blockSeries(K);
  const TruncSeries phiF = outer.blockSeries(K);
  TruncSeries w = phiG.pow(tau);
  TruncSeries shifted(K + 1);
  for (int i = 0; i + 1 <= K; ++i) shifted[i + 1] = w[i];
  const TruncSeries result = phiF.compose(shifted) * phiG;

  PowerSeries out;
  out.tau = tau;
  out.coeffs.assign(result.coeffs().begin() + 1, result.coeffs().end());
  return out;
}

PowerSeries revertSeries(const PowerSeries& s, int K) {
  const TruncSeries phi = s.blockSeries(K);
  PowerSeries out;
  out.tau = s.tau;
  out.origin = SeriesOrigin::Reverted;
  out.coeffs.resize(static_cast<std::size_t>(K));
  for (int m = 1; m <= K; ++m) {
    const int e = m * s.tau + 1;
    const TruncSeries p = phi.powRational(Rational(-e));
    out.coeffs[static_cast<std::size_t>(m - 1)] = p[m] / Rational(e);
  }
  return out;
}

PowerSeries kindredOf(const PowerSeries& s, int K) {
  PowerSeries g = revertSeries(s, K);
  for (int m = 1; m <= K; m += 2) g.coeffs[static_cast<std::size_t>(m - 1)] = -g.coeffs[static_cast<std::size_t>(m - 1)];
  g.origin = SeriesOrigin::Kindred;
  g.originName = s.originName;
  return g;
}

PowerSeries kindredOf(const PowerSeries& s) { return kindredOf(s, s.terms()); }

}  // namespace iterasym
