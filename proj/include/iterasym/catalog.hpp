#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "iterasym/bigfloat.hpp"
#include "iterasym/power_series.hpp"
#include "iterasym/series_spec.hpp"

namespace iterasym {

/// The true map at the working precision of its argument.
using Evaluator = std::function<BigFloat(const BigFloat&)>;

struct CatalogEntry {
  std::string name;
  std::string formulaText;       // e.g. "sin(x)"
  int tau = 1;
  int defaultTerms = 7;          // K used for the golden tables
  ThetaScale theta = ThetaScale::None;
  Convention convention;
  std::string defaultX0;         // parseRealExpression syntax
  std::string domainText;        // where evaluate() accepts x
  std::string iterationText;     // admissible starting values
  Rational checkRadius{1, 10};
  std::string partner;           // kindred partner
  bool kindredSource = false;    // true for the f side of (f, kindredOf(f))

  std::function<std::vector<Rational>(int K)> generator;
  Evaluator evaluator;
  std::function<bool(const BigFloat&)> inDomain;
  std::function<bool(const BigFloat&)> validStart;

  char formula() const { return convention.sigma > 0 ? 'A' : 'B'; }
  PowerSeries series(int K) const;
  SeriesSpec spec(int K) const;
  SeriesSpec spec() const { return spec(defaultTerms); }
};

/// The twelve built-in functions, in presentation order.
const std::vector<CatalogEntry>& catalog();
/// Throws ValidationError naming the known functions when `name` is unknown.
const CatalogEntry& catalogEntry(std::string_view name);
bool hasCatalogEntry(std::string_view name);

PowerSeries catalogSeries(std::string_view name, int K);

/// The true function at x, correct to the requested decimal precision.
/// Throws DomainError outside the declared domain and PrecisionError when
/// an internal series cannot reach the precision budget.
BigFloat evaluate(std::string_view name, const BigFloat& x, int digits);

/// x + sum a_m theta^m x^{m tau + 1} with the spec's stored coefficients.
BigFloat evaluateTruncated(const SeriesSpec& spec, const BigFloat& x);

/// Everything the estimator needs to iterate a map.
struct MapModel {
  SeriesSpec spec;
  Evaluator evaluator;
  std::function<bool(const BigFloat&)> validStart;  // may be empty
  std::optional<std::string> defaultX0;
};

MapModel catalogModel(std::string_view name, std::optional<int> K = std::nullopt);
/// A custom map is taken to be exactly its polynomial x + sum a_m x^{m tau + 1}
/// and is iterated as such.
MapModel polynomialModel(const SeriesSpec& spec);

}  // namespace iterasym
