#include "iterasym/golden.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "iterasym/catalog.hpp"
#include "iterasym/coeff_engine.hpp"
#include "iterasym/errors.hpp"

#ifndef ITERASYM_GOLDEN_DIR
#define ITERASYM_GOLDEN_DIR "data/golden"
#endif

namespace iterasym {

namespace {

std::vector<Rational> parseValues(std::istringstream& in, const std::string& source, int line,
                                  const std::string& field) {
  std::vector<Rational> out;
  std::string tok;
  while (in >> tok) {
    try {
      out.push_back(Rational::parse(tok));
    } catch (const ValidationError& ex) {
      throw ParseError(source + ": " + ex.what(), line, field);
    }
  }
  if (out.empty()) throw ParseError(source + ": no values", line, field);
  return out;
}

// Polynomial label index: "T3" -> 3, or 0 if `key` is not of that shape.
int polyIndex(const std::string& key, char head) {
  if (key.size() < 2 || key[0] != head) return 0;
  if (!std::all_of(key.begin() + 1, key.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) return 0;
  return std::stoi(key.substr(1));
}

struct Checker {
  GoldenReport& report;
  const GoldenEntry& g;

  void check(const std::string& table, const std::string& index, const std::string& label, const Rational& want,
             const std::optional<Rational>& got) {
    ++report.valuesChecked;
    if (g.corrected.count(label)) ++report.correctedChecked;
    if (got && *got == want) return;
    report.mismatches.push_back({g.function, table, index, want.toString(), got ? got->toString() : "(not derived)"});
  }

  // Listed entry k (0-based) is subscript k + first.
  void list(const std::string& table, const std::string& labelHead, const std::vector<Rational>& want, int first,
            const std::vector<Rational>& have) {
    for (std::size_t k = 0; k < want.size(); ++k) {
      const int sub = static_cast<int>(k) + first;
      std::optional<Rational> got;
      if (sub >= 0 && static_cast<std::size_t>(sub) < have.size()) got = have[static_cast<std::size_t>(sub)];
      check(table, std::to_string(sub), labelHead + std::to_string(sub), want[k], got);
    }
  }

  void poly(char head, const std::map<int, std::vector<Rational>>& want, const std::vector<RatPoly>& have) {
    for (const auto& [m, desc] : want) {
      const std::string table = std::string(1, head) + std::to_string(m);
      const bool present = m >= 0 && static_cast<std::size_t>(m) < have.size();
      const int deg = static_cast<int>(desc.size()) - 1;
      for (int k = 0; k <= deg; ++k) {
        const int power = deg - k;
        std::optional<Rational> got;
        if (present) got = have[static_cast<std::size_t>(m)].coeff(power);
        check(table, "X^" + std::to_string(power), table + "@" + std::to_string(power), desc[static_cast<std::size_t>(k)],
              got);
      }
      // Extra higher-degree terms in the engine result are a mismatch too.
      if (present && have[static_cast<std::size_t>(m)].degree() > deg) {
        const int top = have[static_cast<std::size_t>(m)].degree();
        report.mismatches.push_back({g.function, table, "X^" + std::to_string(top), "0",
                                     have[static_cast<std::size_t>(m)].coeff(top).toString()});
      }
    }
  }
};

}  // namespace

GoldenEntry parseGolden(std::string_view text, const std::string& source) {
  GoldenEntry g;
  g.source = source;
  std::istringstream all{std::string(text)};
  std::string raw;
  int line = 0;
  bool sawLambda = false;
  while (std::getline(all, raw)) {
    ++line;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream in(raw);
    std::string key;
    if (!(in >> key)) continue;
    if (key == "function") {
      if (!(in >> g.function)) throw ParseError(source + ": missing function name", line, key);
    } else if (key == "corrected") {
      std::string tok;
      while (in >> tok) g.corrected.insert(tok);
    } else if (key == "scale") {
      std::string tok;
      in >> tok;
      if (tok != "pi^2") throw ParseError(source + ": unknown scale '" + tok + "'", line, key);
      g.theta = ThetaScale::PiSquared;
    } else if (key == "lambda") {
      g.lambda = parseValues(in, source, line, key).front();
      sawLambda = true;
    } else if (key == "a") {
      g.a = parseValues(in, source, line, key);
    } else if (key == "b") {
      g.b = parseValues(in, source, line, key);
    } else if (key == "a0") {
      g.a0 = parseValues(in, source, line, key);
    } else if (key == "c") {
      g.c = parseValues(in, source, line, key);
    } else if (int m = polyIndex(key, 'T'); m > 0) {
      g.T[m] = parseValues(in, source, line, key);
    } else if (int m = polyIndex(key, 'P'); m > 0) {
      g.P[m] = parseValues(in, source, line, key);
    } else {
      throw ParseError(source + ": unknown key '" + key + "'", line, key);
    }
  }
  if (g.function.empty()) throw ParseError(source + ": missing 'function' line", 0, "function");
  if (!sawLambda) throw ParseError(source + ": missing 'lambda' line", 0, "lambda");
  return g;
}

std::vector<GoldenEntry> loadGoldenCorpus(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw ValidationError("corpus directory not found: " + dir);
  std::vector<fs::path> files;
  for (const auto& ent : fs::directory_iterator(dir)) {
    if (ent.is_regular_file() && ent.path().extension() == ".txt") files.push_back(ent.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw ValidationError("no corpus files (*.txt) in " + dir);
  std::vector<GoldenEntry> out;
  for (const auto& f : files) {
    std::ifstream in(f);
    std::stringstream buf;
    buf << in.rdbuf();
    out.push_back(parseGolden(buf.str(), f.string()));
  }
  return out;
}

GoldenReport verifyGolden(const GoldenEntry& g) {
  GoldenReport report;
  report.functions.push_back(g.function);
  const CatalogEntry& entry = catalogEntry(g.function);
  const SeriesSpec spec = entry.spec();
  const Derivation d = deriveAll(spec);
  const CoeffSet& cs = d.coeffs();
  Checker ck{report, g};

  // a_m from the generator, before any theta reduction.
  ck.list("a", "a", g.a, 1, [&] {
    std::vector<Rational> v{Rational(0)};
    for (const auto& x : entry.generator(static_cast<int>(g.a.size()))) v.push_back(x);
    return v;
  }());
  ck.check("lambda", "", "lambda", g.lambda, cs.lambda);
  if (g.theta != spec.theta) {
    report.mismatches.push_back({g.function, "scale", "", toString(g.theta), toString(spec.theta)});
  }
  ck.list("b", "b", g.b, 1, cs.b);
  ck.list("a0", "a0_", g.a0, 1, cs.a[0]);
  ck.list("c", "c", g.c, 1, cs.c);
  ck.poly('T', g.T, d.polys().T);
  ck.poly('P', g.P, d.polys().P);
  return report;
}

GoldenReport verifyCorpus(const std::vector<GoldenEntry>& corpus, std::optional<std::string> only) {
  GoldenReport total;
  bool found = false;
  for (const auto& g : corpus) {
    if (only && g.function != *only) continue;
    found = true;
    GoldenReport r = verifyGolden(g);
    total.functions.push_back(g.function);
    total.valuesChecked += r.valuesChecked;
    total.correctedChecked += r.correctedChecked;
    total.mismatches.insert(total.mismatches.end(), r.mismatches.begin(), r.mismatches.end());
  }
  if (only && !found) throw ValidationError("no corpus entry for function '" + *only + "'");
  return total;
}

std::string defaultCorpusDir() {
  if (const char* env = std::getenv("ITERASYM_CORPUS"); env && *env) return env;
  return ITERASYM_GOLDEN_DIR;
}

std::string formatMismatch(const GoldenMismatch& m) {
  std::string where = m.table;
  if (!m.index.empty()) where += (m.table.size() > 1 && m.table[0] != 'a' ? "[" + m.index + "]" : "_" + m.index);
  return m.function + " " + where + ": expected " + m.expected + ", got " + m.got;
}

}  // namespace iterasym
