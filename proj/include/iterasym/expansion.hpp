#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "iterasym/bigfloat.hpp"
#include "iterasym/coeff_engine.hpp"
#include "iterasym/ratpoly.hpp"

namespace iterasym {

/// x_n ~ (lambda / theta)^{1/tau} sum_{m=0}^{J} sum_{p=0}^{m} poly_{m,p}(K) ln(n)^p / n^{m + 1/tau},
/// with K the engine constant of X_n = -(1/tau)(b_1 ln n + K).
struct AsymptoticExpansion {
  std::string function;
  int tau = 1;
  Rational lambda;
  ThetaScale theta = ThetaScale::None;
  Convention convention;
  Rational b1;
  int J = 0;
  std::map<std::pair<int, int>, RatPoly> terms;  // (m, p) -> polynomial in K

  /// Zero polynomial when (m, p) is outside the table.
  RatPoly term(int m, int p) const;

  friend bool operator==(const AsymptoticExpansion&, const AsymptoticExpansion&) = default;
};

/// Substitutes X = -(1/tau)(b_1 L + K) into P_0..P_J and collects by (m, L^p).
/// J defaults to the derivation's depth; larger values are rejected.
AsymptoticExpansion assemble(const Derivation& d, std::optional<int> J = std::nullopt);

struct ExpansionValue {
  BigFloat value;
  BigFloat dValuedK;  // derivative with respect to K, used by Newton
};

/// Numeric value of the truncated expansion at (n, K). Orders above J (or
/// above `order` if given) are dropped.
ExpansionValue evaluateWithDerivative(const AsymptoticExpansion& e, const BigFloat& n, const BigFloat& K,
                                      int digits, std::optional<int> order = std::nullopt);
BigFloat evaluateAt(const AsymptoticExpansion& e, const BigFloat& n, const BigFloat& K, int digits,
                    std::optional<int> order = std::nullopt);
BigFloat evaluateAt(const AsymptoticExpansion& e, long n, const BigFloat& K, int digits,
                    std::optional<int> order = std::nullopt);

/// paperC = sigma * K / scale, and back.
BigFloat toPaperC(const BigFloat& K, const Convention& conv);
BigFloat fromPaperC(const BigFloat& C, const Convention& conv);

/// Term polynomial rewritten in the published constant C (K = sigma * scale * C).
RatPoly termInPaperC(const AsymptoticExpansion& e, int m, int p);

struct KindredMismatch {
  int m;
  int p;
  int degree;  // power of K
  Rational f;
  Rational g;
};

struct KindredReport {
  bool magnitudesEqual = true;   // |coeff| equal term by term under K -> -K
  bool signRelation = true;      // poly_g(m,p)(K) = (-1)^m poly_f(m,p)(-K)
  int termsCompared = 0;
  std::string patternF;          // "block-alternating", "all-positive", or "mixed"
  std::string patternG;
  std::vector<KindredMismatch> mismatches;

  bool ok() const { return magnitudesEqual && signRelation; }
};

/// Compares two expansions of equal tau and J term by term. Sign patterns
/// are read off the leading (highest power of C) coefficient of each
/// (m, p) term in the published convention.
KindredReport kindredCompare(const AsymptoticExpansion& f, const AsymptoticExpansion& g);

/// "block-alternating" when every term of order m carries sign (-1)^m,
/// "all-positive" when every term is positive, "mixed" otherwise.
std::string signPattern(const AsymptoticExpansion& e);

/// Exact re-expansion of x_{n+s} in powers of 1/n through order J, expressed
/// as a term table in (K, ln n). The result equals the table with K -> K + s,
/// which is what makes the shifted sequence's constant K + s.
AsymptoticExpansion reexpandShifted(const AsymptoticExpansion& e, const Rational& s);

/// K with the table shifted by `steps`: K + steps.
AsymptoticExpansion substituteK(const AsymptoticExpansion& e, const Rational& shift);

}  // namespace iterasym
