#include "iterasym/expansion.hpp"

#include "iterasym/errors.hpp"
#include "iterasym/formal_series.hpp"

namespace iterasym {

RatPoly AsymptoticExpansion::term(int m, int p) const {
  const auto it = terms.find({m, p});
  return it == terms.end() ? RatPoly() : it->second;
}

AsymptoticExpansion assemble(const Derivation& d, std::optional<int> J) {
  const int depth = d.depth();
  const int order = J.value_or(depth);
  if (order < 0 || order > depth) {
    throw ValidationError("order J = " + std::to_string(order) + " exceeds the available depth " +
                          std::to_string(depth) + " (K - 1 for K supplied coefficients)");
  }
  const auto& c = d.coeffs();
  AsymptoticExpansion e;
  e.function = d.spec.name;
  e.tau = d.spec.tau;
  e.lambda = c.lambda;
  e.theta = d.spec.theta;
  e.convention = d.spec.convention;
  e.b1 = depth >= 1 ? c.b[1] : Rational(0);
  e.J = order;

  const Rational minusInvTau = Rational(-1) / Rational(e.tau);
  for (int m = 0; m <= order; ++m) {
    const RatPoly& P = d.polys().P[static_cast<std::size_t>(m)];
    // X^k = (-1/tau)^k sum_q C(k, q) b_1^q L^q K^{k-q}
    std::vector<std::vector<Rational>> byP(static_cast<std::size_t>(m + 1),
                                           std::vector<Rational>(static_cast<std::size_t>(m + 1)));
    for (int k = 0; k <= P.degree(); ++k) {
      const Rational pk = P.coeff(k);
      if (pk.isZero()) continue;
      const Rational base = pk * minusInvTau.pow(k);
      for (int q = 0; q <= k; ++q) {
        byP[static_cast<std::size_t>(q)][static_cast<std::size_t>(k - q)] += base * binomial(k, q) * e.b1.pow(q);
      }
    }
    for (int p = 0; p <= m; ++p) e.terms[{m, p}] = RatPoly(byP[static_cast<std::size_t>(p)]);
  }
  return e;
}

namespace {

BigFloat prefactor(const AsymptoticExpansion& e, int digits) {
  BigFloat base(e.lambda, digits);
  if (e.theta == ThetaScale::PiSquared) {
    const BigFloat pi = BigFloat::pi(digits);
    base = base / (pi * pi);
  }
  return rootn(base, static_cast<unsigned long>(e.tau));
}

// Horner evaluation of p and p' at x.
std::pair<BigFloat, BigFloat> polyAndDerivative(const RatPoly& p, const BigFloat& x, int digits) {
  BigFloat v(0L, digits), dv(0L, digits);
  for (int k = p.degree(); k >= 0; --k) {
    dv = dv * x + v;
    v = v * x + BigFloat(p.coeff(k), digits);
  }
  return {v, dv};
}

}  // namespace

ExpansionValue evaluateWithDerivative(const AsymptoticExpansion& e, const BigFloat& n, const BigFloat& K,
                                      int digits, std::optional<int> order) {
  const int J = order.value_or(e.J);
  if (J < 0 || J > e.J) throw ValidationError("evaluation order exceeds the expansion's J");
  if (n < BigFloat(2L, digits)) throw ValidationError("evaluateAt requires n >= 2");
  const BigFloat nn = n.withDigits(digits);
  const BigFloat Kd = K.withDigits(digits);
  const BigFloat L = log(nn);
  const BigFloat invN = BigFloat(1L, digits) / nn;

  // sum over m of n^{-m} S_m, by Horner in 1/n from the top order down.
  BigFloat v(0L, digits), dv(0L, digits);
  for (int m = J; m >= 0; --m) {
    BigFloat sm(0L, digits), dsm(0L, digits);
    for (int p = m; p >= 0; --p) {
      const auto [q, dq] = polyAndDerivative(e.term(m, p), Kd, digits);
      sm = sm * L + q;
      dsm = dsm * L + dq;
    }
    v = v * invN + sm;
    dv = dv * invN + dsm;
  }
  const BigFloat scale = prefactor(e, digits) / rootn(nn, static_cast<unsigned long>(e.tau));
  return {v * scale, dv * scale};
}

BigFloat evaluateAt(const AsymptoticExpansion& e, const BigFloat& n, const BigFloat& K, int digits,
                    std::optional<int> order) {
  return evaluateWithDerivative(e, n, K, digits, order).value;
}

BigFloat evaluateAt(const AsymptoticExpansion& e, long n, const BigFloat& K, int digits, std::optional<int> order) {
  return evaluateAt(e, BigFloat(n, digits), K, digits, order);
}

BigFloat toPaperC(const BigFloat& K, const Convention& conv) {
  const Rational factor = Rational(conv.sigma) / conv.scale;
  return K.mul(factor);
}

BigFloat fromPaperC(const BigFloat& C, const Convention& conv) {
  return C.mul(Rational(conv.sigma) * conv.scale);
}

RatPoly termInPaperC(const AsymptoticExpansion& e, int m, int p) {
  return e.term(m, p).scaleArgument(Rational(e.convention.sigma) * e.convention.scale);
}

std::string signPattern(const AsymptoticExpansion& e) {
  bool block = true, positive = true;
  for (const auto& [key, poly] : e.terms) {
    const RatPoly q = termInPaperC(e, key.first, key.second);
    if (q.isZero()) continue;
    const int s = q.leading().sign();
    const int expect = key.first % 2 == 0 ? 1 : -1;
    block = block && s == expect;
    positive = positive && s > 0;
  }
  if (positive) return "all-positive";
  if (block) return "block-alternating";
  return "mixed";
}

KindredReport kindredCompare(const AsymptoticExpansion& f, const AsymptoticExpansion& g) {
  if (f.tau != g.tau) throw ValidationError("kindredCompare: tau differs");
  if (f.J != g.J) throw ValidationError("kindredCompare: expansions have different J");
  KindredReport r;
  for (int m = 0; m <= f.J; ++m) {
    for (int p = 0; p <= m; ++p) {
      const RatPoly pf = f.term(m, p);
      const RatPoly pg = g.term(m, p);
      ++r.termsCompared;
      const RatPoly expected = pf.scaleArgument(Rational(-1)) * Rational(m % 2 == 0 ? 1 : -1);
      if (pg != expected) r.signRelation = false;
      const int top = std::max(pf.degree(), pg.degree());
      for (int k = 0; k <= top; ++k) {
        if (pf.coeff(k).abs() != pg.coeff(k).abs()) {
          r.magnitudesEqual = false;
          r.mismatches.push_back({m, p, k, pf.coeff(k), pg.coeff(k)});
        }
      }
    }
  }
  r.patternF = signPattern(f);
  r.patternG = signPattern(g);
  return r;
}

AsymptoticExpansion substituteK(const AsymptoticExpansion& e, const Rational& shift) {
  AsymptoticExpansion out = e;
  for (auto& [key, poly] : out.terms) poly = poly.shift(shift);
  return out;
}

AsymptoticExpansion reexpandShifted(const AsymptoticExpansion& e, const Rational& s) {
  const int J = e.J;
  const int len = J + 1;
  // ln(1 + s eps) and its powers, eps = 1/n.
  TruncSeries ell(len);
  for (int k = 1; k < len; ++k) {
    ell[k] = (k % 2 == 1 ? Rational(1) : Rational(-1)) * s.pow(k) / Rational(k);
  }
  std::vector<TruncSeries> ellPow;
  ellPow.push_back(TruncSeries::onePlus({}, len));
  for (int r = 1; r <= J; ++r) ellPow.push_back(ellPow.back() * ell);

  // out[m][p][k]: coefficient of K^k L^p eps^m.
  std::vector<std::vector<std::vector<Rational>>> out(
      static_cast<std::size_t>(len),
      std::vector<std::vector<Rational>>(static_cast<std::size_t>(len), std::vector<Rational>(static_cast<std::size_t>(len))));

  for (int m = 0; m <= J; ++m) {
    // (n + s)^{-(m + 1/tau)} = n^{-(m + 1/tau)} (1 + s eps)^{-(m + 1/tau)}
    const Rational alpha = Rational(m) + Rational(1, e.tau);
    const TruncSeries binom = TruncSeries::onePlus({s}, len).powRational(-alpha);
    for (int p = 0; p <= m; ++p) {
      const RatPoly q = e.term(m, p);
      if (q.isZero()) continue;
      // (L + ell)^p = sum_r C(p, r) L^{p-r} ell^r
      for (int r = 0; r <= p; ++r) {
        const TruncSeries series = (ellPow[static_cast<std::size_t>(r)] * binom).scaled(binomial(p, r));
        for (int i = 0; m + i <= J; ++i) {
          if (series[i].isZero()) continue;
          for (int k = 0; k <= q.degree(); ++k) {
            out[static_cast<std::size_t>(m + i)][static_cast<std::size_t>(p - r)][static_cast<std::size_t>(k)] +=
                series[i] * q.coeff(k);
          }
        }
      }
    }
  }

  AsymptoticExpansion result = e;
  result.terms.clear();
  for (int m = 0; m <= J; ++m) {
    for (int p = 0; p <= m; ++p) {
      result.terms[{m, p}] = RatPoly(out[static_cast<std::size_t>(m)][static_cast<std::size_t>(p)]);
    }
    for (int p = m + 1; p <= J; ++p) {
      if (!RatPoly(out[static_cast<std::size_t>(m)][static_cast<std::size_t>(p)]).isZero()) {
        throw Error("re-expansion produced ln(n)^p with p > m; the term table is inconsistent");
      }
    }
  }
  return result;
}

}  // namespace iterasym
