#include "iterasym/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "iterasym/catalog.hpp"
#include "iterasym/coeff_engine.hpp"
#include "iterasym/errors.hpp"
#include "iterasym/estimator.hpp"
#include "iterasym/expansion.hpp"
#include "iterasym/golden.hpp"
#include "iterasym/kindred.hpp"
#include "iterasym/render.hpp"
#include "iterasym/spec_io.hpp"

namespace iterasym {

namespace {

using json = nlohmann::ordered_json;

constexpr int kMaxOrder = 24;
constexpr int kMaxDigits = 1000;
constexpr long kMaxEstimateN = 500000;  // iterated to 2N
constexpr long kMaxIterations = 1000000;
constexpr int kFallbackDigits = 20;

struct Options {
  std::string function;
  std::string specPath;
  std::optional<int> order;
  std::optional<int> digits;
  std::optional<long> n;
  std::string x0;
  std::string K;
  std::string C;
  std::string format = "text";
  std::string output;
  std::string corpus;
};

int defaultDigits() {
  const char* env = std::getenv("ITERASYM_DIGITS");
  if (!env || !*env) return kFallbackDigits;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > kMaxDigits) {
    throw ValidationError(std::string("ITERASYM_DIGITS must be an integer in [1, ") + std::to_string(kMaxDigits) +
                          "], got '" + env + "'");
  }
  return static_cast<int>(v);
}

int digitsOf(const Options& o) {
  const int d = o.digits.value_or(defaultDigits());
  if (d < 1 || d > kMaxDigits) {
    throw ValidationError("--digits must be in [1, " + std::to_string(kMaxDigits) + "]");
  }
  return d;
}

// v[from..to] as "p/q" strings.
json rationalArray(const std::vector<Rational>& v, std::size_t from, std::size_t to) {
  json arr = json::array();
  for (std::size_t k = from; k <= to && k < v.size(); ++k) arr.push_back(v[k].toString());
  return arr;
}

json polyArray(const RatPoly& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.toString());
  return arr;
}

// Loads the target map. For catalog entries the depth follows --order (any
// J up to kMaxOrder); for custom specs J may not exceed K - 1.
SeriesSpec targetSpec(const Options& o, bool useOrder) {
  if (o.function.empty() == o.specPath.empty()) {
    throw ValidationError("give exactly one of --function NAME or --spec PATH");
  }
  if (useOrder && o.order) {
    if (*o.order < 1) throw ValidationError("--order must be at least 1");
    if (*o.order > kMaxOrder) {
      throw ValidationError("--order " + std::to_string(*o.order) + " exceeds the resource cap " +
                            std::to_string(kMaxOrder));
    }
  }
  if (!o.function.empty()) {
    const CatalogEntry& e = catalogEntry(o.function);
    if (useOrder && o.order) return e.spec(*o.order + 1);
    return e.spec();
  }
  SeriesSpec s = loadSeriesSpec(o.specPath);
  if (useOrder && o.order) {
    if (*o.order > s.depth()) {
      throw ValidationError("--order " + std::to_string(*o.order) + " exceeds the coefficient depth J = " +
                            std::to_string(s.depth()) + " of " + o.specPath + " (K = " + std::to_string(s.terms()) +
                            ")");
    }
    s.a.resize(static_cast<std::size_t>(*o.order) + 1);
  }
  return s;
}

MapModel targetModel(const Options& o) {
  if (!o.function.empty() && o.specPath.empty()) return catalogModel(o.function);
  return polynomialModel(targetSpec(o, false));
}

std::string formulaName(const Convention& c) { return c.sigma > 0 ? "A" : "B"; }

std::string header(const SeriesSpec& s) {
  std::ostringstream os;
  os << s.name << ": tau = " << s.tau << ", K = " << s.terms() << ", J = " << s.depth();
  if (s.theta == ThetaScale::PiSquared) os << ", a_m = r_m pi^(2m) (r_m shown)";
  return os.str();
}

void requireFormat(Format f, bool latexOk, const std::string& cmd) {
  if (f == Format::Latex && !latexOk) throw ValidationError(cmd + " has no latex output (use text or json)");
}

// ---- coeffs ----------------------------------------------------------------

std::string cmdCoeffs(const Options& o) {
  const Format f = parseFormat(o.format);
  const Derivation d = deriveAll(targetSpec(o, true));
  const CoeffSet& cs = d.coeffs();
  const int J = cs.J;
  std::ostringstream os;
  if (f == Format::Json) {
    json doc;
    doc["function"] = d.spec.name;
    doc["tau"] = d.spec.tau;
    doc["K"] = d.spec.terms();
    doc["J"] = J;
    doc["theta"] = toString(d.spec.theta);
    doc["a"] = rationalArray(d.spec.a, 0, d.spec.a.size() - 1);
    doc["lambda"] = cs.lambda.toString();
    doc["b"] = rationalArray(cs.b, 1, static_cast<std::size_t>(J));
    doc["a0"] = rationalArray(cs.a[0], 1, static_cast<std::size_t>(J));
    json aij = json::array();
    for (int i = 1; i < J; ++i) {
      for (int j = i + 1; j <= J; ++j) aij.push_back({{"i", i}, {"j", j}, {"value", cs.aij(i, j).toString()}});
    }
    doc["aij"] = aij;
    doc["c"] = rationalArray(cs.c, 1, static_cast<std::size_t>(J - 1));
    os << doc.dump(2) << "\n";
    return os.str();
  }
  if (f == Format::Latex) {
    os << "\\begin{align*}\n";
    os << "  \\lambda &= " << rationalLatex(cs.lambda) << " \\\\\n";
    for (int j = 1; j <= J; ++j) os << "  b_{" << j << "} &= " << rationalLatex(cs.b[j]) << " \\\\\n";
    for (int j = 1; j <= J; ++j) os << "  a_{0," << j << "} &= " << rationalLatex(cs.a0(j)) << " \\\\\n";
    for (int i = 1; i < J; ++i) {
      for (int j = i + 1; j <= J; ++j) {
        os << "  a_{" << i << "," << j << "} &= " << rationalLatex(cs.aij(i, j)) << " \\\\\n";
      }
    }
    for (int i = 1; i < J; ++i) {
      os << "  c_{" << i << "} &= " << rationalLatex(cs.c[i]) << (i + 1 < J ? " \\\\" : "") << "\n";
    }
    os << "\\end{align*}\n";
    return os.str();
  }
  os << header(d.spec) << "\n";
  os << "lambda = " << cs.lambda.toString() << "\n";
  for (int j = 1; j <= J; ++j) os << "b_" << j << " = " << cs.b[j].toString() << "\n";
  for (int j = 1; j <= J; ++j) os << "a_{0," << j << "} = " << cs.a0(j).toString() << "\n";
  for (int i = 1; i < J; ++i) {
    for (int j = i + 1; j <= J; ++j) os << "a_{" << i << "," << j << "} = " << cs.aij(i, j).toString() << "\n";
  }
  for (int i = 1; i < J; ++i) os << "c_" << i << " = " << cs.c[i].toString() << "\n";
  return os.str();
}

// ---- polys -----------------------------------------------------------------

std::string cmdPolys(const Options& o) {
  const Format f = parseFormat(o.format);
  const Derivation d = deriveAll(targetSpec(o, true));
  const PolySet& ps = d.polys();
  const int J = d.depth();
  std::ostringstream os;
  if (f == Format::Json) {
    json doc;
    doc["function"] = d.spec.name;
    doc["tau"] = d.spec.tau;
    doc["J"] = J;
    doc["order"] = "coefficients listed from X^0 upward";
    json T = json::object(), Tt = json::object(), P = json::object();
    for (int m = 2; m <= J; ++m) T[std::to_string(m)] = polyArray(ps.T[m]);
    for (int m = 2; m <= J; ++m) Tt[std::to_string(m)] = polyArray(ps.Ttilde[m]);
    for (int m = 0; m <= J; ++m) P[std::to_string(m)] = polyArray(ps.P[m]);
    doc["T"] = T;
    doc["Ttilde"] = Tt;
    doc["P"] = P;
    os << doc.dump(2) << "\n";
    return os.str();
  }
  if (f == Format::Latex) {
    os << "\\begin{align*}\n";
    for (int m = 2; m <= J; ++m) os << "  T_{" << m << "}(X) &= " << polyLatex(ps.T[m]) << " \\\\\n";
    for (int m = 0; m <= J; ++m) {
      os << "  P_{" << m << "}(X) &= " << polyLatex(ps.P[m]) << (m < J ? " \\\\" : "") << "\n";
    }
    os << "\\end{align*}\n";
    return os.str();
  }
  os << header(d.spec) << "\n";
  for (int m = 2; m <= J; ++m) os << "T_" << m << "(X) = " << ps.T[m].toString() << "\n";
  for (int m = 2; m <= J; ++m) os << "Tt_" << m << "(X) = " << ps.Ttilde[m].toString() << "\n";
  for (int m = 0; m <= J; ++m) os << "P_" << m << "(X) = " << ps.P[m].toString() << "\n";
  return os.str();
}

// ---- expand ----------------------------------------------------------------

std::string cmdExpand(const Options& o) {
  const Format f = parseFormat(o.format);
  const AsymptoticExpansion e = assemble(deriveAll(targetSpec(o, true)));
  switch (f) {
    case Format::Json: return renderExpansionJson(e);
    case Format::Latex: return renderExpansionLatex(e);
    case Format::Text: break;
  }
  return renderExpansionText(e);
}

// ---- eval ------------------------------------------------------------------

std::string cmdEval(const Options& o) {
  const Format f = parseFormat(o.format);
  requireFormat(f, false, "eval");
  if (!o.n) throw ValidationError("eval needs --n");
  if (*o.n < 2) throw ValidationError("--n must be at least 2");
  if (o.K.empty() == o.C.empty()) throw ValidationError("eval needs exactly one of --C or --K");
  const int digits = digitsOf(o);
  const int work = digits + 10;
  const SeriesSpec spec = targetSpec(o, true);
  const AsymptoticExpansion e = assemble(deriveAll(spec));
  BigFloat K = !o.K.empty() ? parseRealExpression(o.K, work)
                            : fromPaperC(parseRealExpression(o.C, work), spec.convention);
  const BigFloat v = evaluateAt(e, *o.n, K, work);

  std::optional<BigFloat> actual;
  if (!o.x0.empty()) {
    if (*o.n > kMaxIterations) {
      throw ValidationError("--n " + std::to_string(*o.n) + " exceeds the iteration cap " +
                            std::to_string(kMaxIterations));
    }
    const MapModel model = targetModel(o);
    actual = iterate(model, parseRealExpression(o.x0, work), *o.n, work);
  }

  if (f == Format::Json) {
    json doc;
    doc["function"] = spec.name;
    doc["n"] = *o.n;
    doc["J"] = e.J;
    doc["K"] = K.toString(digits);
    doc["C"] = toPaperC(K, spec.convention).toString(digits);
    doc["digits"] = digits;
    doc["expansion"] = v.toString(digits);
    if (actual) {
      doc["x0"] = o.x0;
      doc["iterate"] = actual->toString(digits);
      doc["difference"] = (*actual - v).toString(6);
    }
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  os << spec.name << ": n = " << *o.n << ", J = " << e.J << ", C = " << toPaperC(K, spec.convention).toString(digits)
     << " (formula " << formulaName(spec.convention) << ")\n";
  os << "expansion x_n = " << v.toString(digits) << "\n";
  if (actual) {
    os << "iterate   x_n = " << actual->toString(digits) << " (x0 = " << o.x0 << ")\n";
    os << "difference    = " << (*actual - v).toString(6) << "\n";
  }
  return os.str();
}

// ---- estimate-c ------------------------------------------------------------

struct EstimateOutcome {
  std::string document;
  bool reached = true;
};

EstimateOutcome cmdEstimate(const Options& o) {
  const Format f = parseFormat(o.format);
  requireFormat(f, false, "estimate-c");
  const int target = digitsOf(o);
  const MapModel model = targetModel(o);
  std::string x0 = o.x0;
  if (x0.empty()) {
    if (!model.defaultX0) throw ValidationError("custom specs need --x0");
    x0 = *model.defaultX0;
  }
  EstimateOptions opt;
  opt.targetDigits = target;
  if (o.order) {
    if (*o.order < 1 || *o.order > model.spec.depth()) {
      throw ValidationError("--order must be in [1, " + std::to_string(model.spec.depth()) + "]");
    }
    opt.order = o.order;
  }
  if (o.n) {
    if (*o.n > kMaxEstimateN) {
      throw ValidationError("--n " + std::to_string(*o.n) + " exceeds the resource cap " +
                            std::to_string(kMaxEstimateN) + " (the last stage iterates to 2N)");
    }
    if (*o.n < 10) throw ValidationError("--n must be at least 10");
    std::vector<long> sched;
    for (long s : opt.schedule) {
      if (s < *o.n) sched.push_back(s);
    }
    sched.push_back(*o.n);
    opt.schedule = sched;
  }
  const EstimateResult r = estimateC(model, x0, opt);
  const int shown = std::max(1, std::min(r.trustedDigits, r.precision_used - 5));
  const std::string C = r.paperC.toString(shown);

  std::ostringstream os;
  if (f == Format::Json) {
    json doc;
    doc["function"] = model.spec.name;
    doc["x0"] = x0;
    doc["formula"] = formulaName(model.spec.convention);
    doc["C"] = C;
    doc["K"] = r.K.toString(shown);
    doc["digits"] = shown;
    doc["target_digits"] = target;
    doc["reached_target"] = r.reachedTarget;
    doc["N"] = r.N_used;
    doc["precision"] = r.precision_used;
    doc["order"] = r.order;
    doc["residual"] = r.residual.toString(6);
    os << doc.dump(2) << "\n";
  } else {
    os << model.spec.name << " (formula " << formulaName(model.spec.convention) << "), x0 = " << x0 << "\n";
    os << "C = " << C << "\n";
    os << "trusted digits: " << r.trustedDigits << " (target " << target << "; N = " << r.N_used << " vs 2N = "
       << 2 * r.N_used << ", J = " << r.order << ", " << r.precision_used << " working digits)\n";
  }
  return {os.str(), r.reachedTarget};
}

// ---- kindred ---------------------------------------------------------------

struct KindredOutcome {
  std::string document;
  bool ok = true;
};

KindredOutcome cmdKindred(const Options& o) {
  const Format f = parseFormat(o.format);
  requireFormat(f, false, "kindred");
  const SeriesSpec fs = targetSpec(o, true);
  SeriesSpec gs = kindredSpec(fs);
  std::optional<std::string> partner;
  bool partnerMatches = true;
  if (!o.function.empty()) {
    const CatalogEntry& e = catalogEntry(o.function);
    partner = e.partner;
    const SeriesSpec ps = catalogEntry(e.partner).spec(fs.terms());
    partnerMatches = ps.a == gs.a;
    gs.name = e.partner;
    gs.convention = ps.convention;
  }
  const KindredTowerReport rep = kindredTowers(deriveAll(fs), deriveAll(gs));
  const bool ok = partnerMatches && rep.ok();

  std::ostringstream os;
  if (f == Format::Json) {
    json doc;
    doc["function"] = fs.name;
    doc["partner"] = gs.name;
    doc["tau"] = fs.tau;
    doc["partner_a"] = rationalArray(gs.a, 0, gs.a.size() - 1);
    if (partner) doc["partner_matches_catalog"] = partnerMatches;
    json rel = json::array();
    for (const auto& r : rep.relations) {
      rel.push_back({{"relation", r.statement}, {"checked", r.checked}, {"pass", r.ok()}, {"failures", r.failures}});
    }
    rel.push_back({{"relation", "|expansion terms| equal"},
                   {"checked", rep.expansion.termsCompared},
                   {"pass", rep.expansion.ok()},
                   {"failures", json::array()}});
    doc["relations"] = rel;
    doc["sign_pattern"] = {{fs.name, rep.expansion.patternF}, {gs.name, rep.expansion.patternG}};
    doc["pass"] = ok;
    os << doc.dump(2) << "\n";
    return {os.str(), ok};
  }
  auto verdict = [](bool b) { return b ? "PASS" : "FAIL"; };
  os << "f = " << fs.name << ", g = " << gs.name << " (revert f, flip odd blocks), tau = " << fs.tau << "\n";
  os << "partner series:";
  for (int m = 1; m <= gs.terms(); ++m) os << (m == 1 ? " " : ", ") << "a_" << m << " = " << gs.a[m - 1].toString();
  os << "\n";
  if (partner) os << "matches catalog entry " << *partner << ": " << verdict(partnerMatches) << "\n";
  for (const auto& r : rep.relations) {
    os << r.statement << ": " << verdict(r.ok()) << " (" << r.checked << " checked)\n";
    for (const auto& x : r.failures) os << "  " << x << "\n";
  }
  os << "expansion magnitudes equal term by term: " << verdict(rep.expansion.ok()) << " ("
     << rep.expansion.termsCompared << " terms)\n";
  os << "sign patterns: " << fs.name << " " << rep.expansion.patternF << ", " << gs.name << " "
     << rep.expansion.patternG << "\n";
  return {os.str(), ok};
}

// ---- list-functions --------------------------------------------------------

std::string cmdList(const Options& o) {
  const Format f = parseFormat(o.format);
  requireFormat(f, false, "list-functions");
  if (f == Format::Json) {
    json arr = json::array();
    for (const auto& e : catalog()) {
      arr.push_back({{"name", e.name},
                     {"map", e.formulaText},
                     {"tau", e.tau},
                     {"K", e.defaultTerms},
                     {"formula", std::string(1, e.formula())},
                     {"partner", e.partner},
                     {"x0", e.defaultX0},
                     {"domain", e.domainText}});
    }
    return arr.dump(2) + "\n";
  }
  std::ostringstream os;
  os << std::left << std::setw(11) << "name" << std::setw(5) << "tau" << std::setw(9) << "formula" << std::setw(11)
     << "partner" << std::setw(6) << "x0" << "map\n";
  for (const auto& e : catalog()) {
    os << std::setw(11) << e.name << std::setw(5) << e.tau << std::setw(9) << std::string(1, e.formula())
       << std::setw(11) << e.partner << std::setw(6) << e.defaultX0 << e.formulaText << "\n";
  }
  return os.str();
}

// ---- verify ----------------------------------------------------------------

struct VerifyOutcome {
  std::string document;
  bool ok = true;
};

VerifyOutcome cmdVerify(const Options& o) {
  const Format f = parseFormat(o.format);
  requireFormat(f, false, "verify");
  const std::string dir = o.corpus.empty() ? defaultCorpusDir() : o.corpus;
  const auto corpus = loadGoldenCorpus(dir);
  std::optional<std::string> only;
  if (!o.function.empty()) {
    catalogEntry(o.function);  // unknown names are a usage error
    only = o.function;
  }
  const GoldenReport r = verifyCorpus(corpus, only);
  std::ostringstream os;
  if (f == Format::Json) {
    json doc;
    doc["pass"] = r.ok();
    doc["functions"] = r.functions;
    doc["values_checked"] = r.valuesChecked;
    doc["corrected_checked"] = r.correctedChecked;
    json mm = json::array();
    for (const auto& m : r.mismatches) {
      mm.push_back({{"function", m.function},
                    {"table", m.table},
                    {"index", m.index},
                    {"expected", m.expected},
                    {"got", m.got}});
    }
    doc["mismatches"] = mm;
    os << doc.dump(2) << "\n";
    return {os.str(), r.ok()};
  }
  for (const auto& m : r.mismatches) os << "MISMATCH " << formatMismatch(m) << "\n";
  os << (r.ok() ? "PASS" : "FAIL") << ": " << r.functions.size() << (r.functions.size() == 1 ? " function, " : " functions, ")
     << r.valuesChecked << " values (" << r.correctedChecked << " corrected entries), " << r.mismatches.size()
     << " mismatches\n";
  return {os.str(), r.ok()};
}

void emit(const Options& o, const std::string& doc, std::ostream& out) {
  if (o.output.empty()) {
    out << doc;
    return;
  }
  std::ofstream file(o.output);
  if (!file) throw ValidationError("cannot write " + o.output);
  file << doc;
}

}  // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact coefficient towers and asymptotic expansions for iterates of x + a_1 x^(tau+1) + ..."};
  app.name("iterasym");
  app.require_subcommand(1, 1);
  Options o;

  auto addTarget = [&](CLI::App* sub) {
    auto* fn = sub->add_option("--function,-f", o.function, "catalog function (see list-functions)");
    auto* sp = sub->add_option("--spec", o.specPath, "custom series document (JSON)");
    fn->excludes(sp);
  };
  auto addFormat = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "text (default), json or latex");
    sub->add_option("--output,-o", o.output, "write the document to this file");
  };
  auto addOrder = [&](CLI::App* sub) { sub->add_option("--order,-J", o.order, "truncation order J"); };
  auto addDigits = [&](CLI::App* sub, const char* what) { sub->add_option("--digits,-d", o.digits, what); };

  auto* coeffs = app.add_subcommand("coeffs", "lambda, b_j, a_{0,j}, a_{i,j} and c_i");
  addTarget(coeffs);
  addOrder(coeffs);
  addFormat(coeffs);

  auto* polys = app.add_subcommand("polys", "T_m, Tt_m and P_m polynomials");
  addTarget(polys);
  addOrder(polys);
  addFormat(polys);

  auto* expand = app.add_subcommand("expand", "asymptotic expansion of x_n in the published constant C");
  addTarget(expand);
  addOrder(expand);
  addFormat(expand);

  auto* eval = app.add_subcommand("eval", "evaluate the truncated expansion at n");
  addTarget(eval);
  addOrder(eval);
  addFormat(eval);
  addDigits(eval, "significant digits (default $ITERASYM_DIGITS or 20)");
  eval->add_option("--n,-n", o.n, "index n >= 2");
  eval->add_option("--C", o.C, "published constant C");
  eval->add_option("--K", o.K, "engine constant K");
  eval->add_option("--x0", o.x0, "also iterate the map from x0 and compare");

  auto* est = app.add_subcommand("estimate-c", "estimate C for a starting value x0");
  addTarget(est);
  addFormat(est);
  addDigits(est, "target digits (default $ITERASYM_DIGITS or 20)");
  est->add_option("--order,-J", o.order, "expansion order used by the solver");
  est->add_option("--x0", o.x0, "starting value (number, or an expression like pi/3)");
  est->add_option("--n,-n", o.n, "largest stage N (iterates to 2N; at most 500000)");

  auto* kin = app.add_subcommand("kindred", "derive the kindred partner and check the sign relations");
  addTarget(kin);
  addOrder(kin);
  addFormat(kin);

  auto* list = app.add_subcommand("list-functions", "the built-in catalog");
  addFormat(list);

  auto* ver = app.add_subcommand("verify", "compare derived tables with the golden corpus");
  ver->add_option("--function,-f", o.function, "check a single function");
  ver->add_option("--corpus", o.corpus, "corpus directory (default $ITERASYM_CORPUS or the shipped corpus)");
  addFormat(ver);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitError;
  }

  try {
    if (coeffs->parsed()) {
      emit(o, cmdCoeffs(o), out);
    } else if (polys->parsed()) {
      emit(o, cmdPolys(o), out);
    } else if (expand->parsed()) {
      emit(o, cmdExpand(o), out);
    } else if (eval->parsed()) {
      emit(o, cmdEval(o), out);
    } else if (est->parsed()) {
      const auto r = cmdEstimate(o);
      emit(o, r.document, out);
      if (!r.reached) {
        err << "error: target precision not reached within the resource cap (N <= " << kMaxEstimateN
            << "); the printed digits are the trusted ones\n";
        return kExitError;
      }
    } else if (kin->parsed()) {
      const auto r = cmdKindred(o);
      emit(o, r.document, out);
      if (!r.ok) return kExitVerifyFailed;
    } else if (list->parsed()) {
      emit(o, cmdList(o), out);
    } else if (ver->parsed()) {
      const auto r = cmdVerify(o);
      emit(o, r.document, out);
      if (!r.ok) return kExitVerifyFailed;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitOk;
}

}  // namespace iterasym
