#include "iterasym/kindred.hpp"

#include "iterasym/errors.hpp"
#include "iterasym/power_series.hpp"

namespace iterasym {

SeriesSpec kindredSpec(const SeriesSpec& f) {
  f.validate();
  PowerSeries s;
  s.tau = f.tau;
  s.coeffs = f.a;
  const PowerSeries g = kindredOf(s, f.terms());
  SeriesSpec out;
  out.name = f.name + "-kindred";
  out.tau = f.tau;
  out.a = g.coeffs;
  out.theta = f.theta;
  out.convention = {-f.convention.sigma, f.convention.scale};
  return out;
}

bool KindredTowerReport::ok() const {
  for (const auto& r : relations) {
    if (!r.ok()) return false;
  }
  return expansion.ok();
}

KindredTowerReport kindredTowers(const Derivation& f, const Derivation& g) {
  if (f.spec.tau != g.spec.tau || f.depth() != g.depth()) {
    throw ValidationError("kindred comparison needs equal tau and depth");
  }
  const int J = f.depth();
  auto sign = [](int k) { return Rational(k % 2 == 0 ? 1 : -1); };
  KindredTowerReport rep;

  TowerRelation c{"c_i^{(g)} = (-1)^{i+1} c_i^{(f)}", 0, {}};
  for (int i = 1; i < J; ++i) {
    ++c.checked;
    const Rational want = sign(i + 1) * f.coeffs().c[i];
    if (g.coeffs().c[i] != want) {
      c.failures.push_back("c_" + std::to_string(i) + ": expected " + want.toString() + ", got " +
                           g.coeffs().c[i].toString());
    }
  }
  rep.relations.push_back(std::move(c));

  auto polyRelation = [&](const std::string& name, const std::vector<RatPoly>& pf, const std::vector<RatPoly>& pg,
                          int from) {
    TowerRelation r{name + "_m^{(g)}(X) = (-1)^m " + name + "_m^{(f)}(-X)", 0, {}};
    for (int m = from; m <= J; ++m) {
      ++r.checked;
      const RatPoly want = pf[m].scaleArgument(Rational(-1)) * sign(m);
      if (pg[m] != want) {
        r.failures.push_back(name + "_" + std::to_string(m) + ": expected " + want.toString() + ", got " +
                             pg[m].toString());
      }
    }
    return r;
  };
  rep.relations.push_back(polyRelation("T", f.polys().T, g.polys().T, 2));
  rep.relations.push_back(polyRelation("P", f.polys().P, g.polys().P, 0));

  rep.expansion = kindredCompare(assemble(f), assemble(g));
  return rep;
}

}  // namespace iterasym
