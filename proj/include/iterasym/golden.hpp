#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "iterasym/rational.hpp"
#include "iterasym/series_spec.hpp"

namespace iterasym {

// Golden corpus file, one per function:
//   # comment
//   function NAME
//   corrected b3 a0_4 c2 T3@0     (optional; entries that fix an earlier table)
//   a  a_1 a_2 ...
//   lambda L
//   scale pi^2                    (optional)
//   b  b_1 b_2 ...
//   a0 a_{0,1} a_{0,2} ...
//   c  c_1 c_2 ...
//   T2 ... / P2 ...               coefficients from the highest degree down
// Lists may be shorter than what the engine derives; only the listed
// prefix is compared.
struct GoldenEntry {
  std::string function;
  std::string source;  // file path or label, for messages
  std::vector<Rational> a;
  Rational lambda;
  ThetaScale theta = ThetaScale::None;
  std::vector<Rational> b, a0, c;
  std::map<int, std::vector<Rational>> T, P;
  std::set<std::string> corrected;
};

GoldenEntry parseGolden(std::string_view text, const std::string& source = "<memory>");
std::vector<GoldenEntry> loadGoldenCorpus(const std::string& dir);

struct GoldenMismatch {
  std::string function;
  std::string table;  // "b", "a0", "c", "T3", "P4", "a", "lambda", "scale"
  std::string index;  // "3" for c_3, "X^2" for polynomials
  std::string expected;
  std::string got;
};

struct GoldenReport {
  std::vector<std::string> functions;
  int valuesChecked = 0;
  int correctedChecked = 0;
  std::vector<GoldenMismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
};

/// Derives the catalog entry named in `g` at its default depth and compares
/// every listed value exactly.
GoldenReport verifyGolden(const GoldenEntry& g);
GoldenReport verifyCorpus(const std::vector<GoldenEntry>& corpus, std::optional<std::string> only = std::nullopt);

/// Directory of the shipped corpus (ITERASYM_CORPUS overrides the build-time default).
std::string defaultCorpusDir();

std::string formatMismatch(const GoldenMismatch& m);

}  // namespace iterasym
