#pragma once

#include <memory>
#include <vector>

#include "iterasym/ratpoly.hpp"
#include "iterasym/series_spec.hpp"

namespace iterasym {

/// Lemma coefficients for one SeriesSpec at depth J = K - 1.
///
/// Indexing follows the mathematical subscripts:
///   b[j]    = b_j for 0 <= j <= J, with b_0 = 1 (leading term of y_{n+1} - y_n)
///   a[i][j] = a_{i,j} for 0 <= i < j <= J; row 0 holds a_{0,j}; other cells are 0
///   c[i]    = c_i for 0 <= i <= J - 1
struct CoeffSet {
  int J = 0;
  Rational lambda;
  std::vector<Rational> b;
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> c;

  const Rational& a0(int j) const { return a[0][static_cast<std::size_t>(j)]; }
  const Rational& aij(int i, int j) const {
    return a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
};

/// T[m], Ttilde[m] for 1 <= m <= J (index 0 unused, zero); P[m] for 0 <= m <= J.
struct PolySet {
  std::vector<RatPoly> T;
  std::vector<RatPoly> Ttilde;
  std::vector<RatPoly> P;
};

struct DerivedTables {
  CoeffSet coeffs;
  PolySet polys;
};

/// A spec together with its (possibly shared, memoized) derived tables.
struct Derivation {
  SeriesSpec spec;
  std::shared_ptr<const DerivedTables> tables;

  const CoeffSet& coeffs() const { return tables->coeffs; }
  const PolySet& polys() const { return tables->polys; }
  int depth() const { return tables->coeffs.J; }
};

Rational computeLambda(const SeriesSpec& spec);

/// b_0..b_J by the partition-sum formula over a_1..a_K.
std::vector<Rational> computeB(const SeriesSpec& spec);

/// Row a_{0,1..J}; entry 0 is zero.
std::vector<Rational> computeA0(const SeriesSpec& spec, const std::vector<Rational>& b);

/// Full table a[i][j], 0 <= i < j <= J (row 0 from computeA0).
std::vector<std::vector<Rational>> computeAij(const SeriesSpec& spec,
                                              const std::vector<Rational>& b);

std::vector<Rational> computeC(const SeriesSpec& spec, const std::vector<Rational>& b,
                               const std::vector<std::vector<Rational>>& a);

/// T_1..T_J (index 0 is the zero polynomial).
std::vector<RatPoly> computeT(const SeriesSpec& spec, const std::vector<Rational>& b,
                              const std::vector<Rational>& c);

/// T~_m(X) = T_m(-tau X).
std::vector<RatPoly> computeTtilde(const SeriesSpec& spec, const std::vector<RatPoly>& T);

/// P_0..P_J.
std::vector<RatPoly> computeP(const SeriesSpec& spec, const std::vector<RatPoly>& Ttilde);

/// Validates the spec and derives every table in dependency order. Tables
/// are memoized per (tau, theta, a) and shared; safe to call concurrently.
Derivation deriveAll(const SeriesSpec& spec);

/// Same as deriveAll but bypasses the memo table.
DerivedTables deriveUncached(const SeriesSpec& spec);

}  // namespace iterasym
