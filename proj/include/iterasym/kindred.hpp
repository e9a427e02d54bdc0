#pragma once

#include <string>
#include <vector>

#include "iterasym/coeff_engine.hpp"
#include "iterasym/expansion.hpp"

namespace iterasym {

/// Spec of the kindred partner g: revert f, flip the sign of every odd
/// block. The published convention flips too (formula A <-> B).
SeriesSpec kindredSpec(const SeriesSpec& f);

struct TowerRelation {
  std::string statement;   // e.g. "P_m^{(g)}(X) = (-1)^m P_m^{(f)}(-X)"
  int checked = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

struct KindredTowerReport {
  std::vector<TowerRelation> relations;  // c, T, P
  KindredReport expansion;

  bool ok() const;
};

/// Checks c_i(g) = (-1)^{i+1} c_i(f), T_m(g)(X) = (-1)^m T_m(f)(-X),
/// P_m(g)(X) = (-1)^m P_m(f)(-X) and the expansion magnitudes. Both
/// derivations must share tau and depth.
KindredTowerReport kindredTowers(const Derivation& f, const Derivation& g);

}  // namespace iterasym
