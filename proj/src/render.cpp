#include "iterasym/render.hpp"

#include <sstream>

#include <json.hpp>

#include "iterasym/errors.hpp"

namespace iterasym {

namespace {

using json = nlohmann::ordered_json;

// Prefactor handling shared by the text and LaTeX renderers.
struct Presentation {
  Rational fold{1};      // multiplies every coefficient
  std::string lhsText;   // "x_n", "x_n/sqrt(3)", ...
  std::string lhsLatex;
  std::string note;      // e.g. kappa definition
};

std::string rootText(const Rational& v, int tau) {
  if (tau == 2) return "sqrt(" + v.toString() + ")";
  return "(" + v.toString() + ")^(1/" + std::to_string(tau) + ")";
}

std::string rootLatex(const Rational& v, int tau) {
  const std::string body = v.isInteger() ? v.toString() : rationalLatex(v);
  if (tau == 2) return "\\sqrt{" + body + "}";
  return "\\sqrt[" + std::to_string(tau) + "]{" + body + "}";
}

Presentation presentation(const AsymptoticExpansion& e) {
  Presentation p;
  if (e.theta == ThetaScale::PiSquared) {
    if (e.tau == 4) {
      // (lambda/pi^2)^{1/4} = 2 sqrt(kappa), kappa = sqrt(lambda/16)/pi
      p.fold = Rational(2);
      p.lhsText = "x_n/sqrt(kappa)";
      p.lhsLatex = "\\frac{x_{n}}{\\sqrt{\\kappa}}";
      p.note = "kappa = sqrt(" + (e.lambda / Rational(16)).toString() + ")/pi";
    } else {
      p.lhsText = "x_n/(" + e.lambda.toString() + "/pi^2)^(1/" + std::to_string(e.tau) + ")";
      p.lhsLatex = "x_{n}\\Big/\\left(\\frac{" + e.lambda.toString() + "}{\\pi^{2}}\\right)^{1/" +
                   std::to_string(e.tau) + "}";
    }
    return p;
  }
  if (e.tau == 1) {
    p.fold = e.lambda;
    p.lhsText = "x_n";
    p.lhsLatex = "x_{n}";
    return p;
  }
  if (e.lambda == Rational(1)) {
    p.lhsText = "x_n";
    p.lhsLatex = "x_{n}";
  } else {
    p.lhsText = "x_n/" + rootText(e.lambda, e.tau);
    p.lhsLatex = "\\frac{x_{n}}{" + rootLatex(e.lambda, e.tau) + "}";
  }
  return p;
}

Rational exponentOf(const AsymptoticExpansion& e, int m) { return Rational(m) + Rational(1, e.tau); }

std::string powerText(const std::string& base, const Rational& ex) {
  if (ex == Rational(1)) return base;
  if (ex.isInteger()) return base + "^" + ex.toString();
  return base + "^(" + ex.toString() + ")";
}

std::string powerLatex(const std::string& base, const Rational& ex) {
  if (ex == Rational(1)) return base;
  return base + "^{" + ex.toString() + "}";
}

struct RenderTerm {
  int m;
  int p;
  RatPoly q;  // in C, with the presentation fold applied
};

std::vector<RenderTerm> orderedTerms(const AsymptoticExpansion& e, const Presentation& pres) {
  std::vector<RenderTerm> out;
  for (int m = 0; m <= e.J; ++m) {
    for (int p = m; p >= 0; --p) {
      RatPoly q = termInPaperC(e, m, p) * pres.fold;
      if (!q.isZero()) out.push_back({m, p, std::move(q)});
    }
  }
  return out;
}

bool isMonomial(const RatPoly& q) {
  int nz = 0;
  for (const auto& c : q.coeffs()) nz += c.isZero() ? 0 : 1;
  return nz == 1;
}

}  // namespace

Format parseFormat(std::string_view text) {
  if (text == "text") return Format::Text;
  if (text == "json") return Format::Json;
  if (text == "latex") return Format::Latex;
  throw ValidationError("unknown format '" + std::string(text) + "' (expected text, json or latex)");
}

std::string rationalLatex(const Rational& r) {
  const Rational a = r.abs();
  std::string body = a.isInteger() ? a.toString()
                                   : "\\frac{" + a.numerator().get_str() + "}{" + a.denominator().get_str() + "}";
  return r.sign() < 0 ? "-" + body : body;
}

std::string polyLatex(const RatPoly& p, const std::string& var) {
  if (p.isZero()) return "0";
  std::string out;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const Rational c = p.coeff(k);
    if (c.isZero()) continue;
    const Rational a = c.abs();
    if (!first) out += c.sign() < 0 ? "-" : "+";
    else if (c.sign() < 0) out += "-";
    first = false;
    const bool unit = a == Rational(1);
    if (!unit || k == 0) out += rationalLatex(a);
    if (k >= 1) out += var;
    if (k >= 2) out += "^{" + std::to_string(k) + "}";
  }
  return out;
}

std::string renderExpansionText(const AsymptoticExpansion& e) {
  const Presentation pres = presentation(e);
  std::ostringstream os;
  os << pres.lhsText << " ~ ";
  bool first = true;
  for (const auto& t : orderedTerms(e, pres)) {
    RatPoly q = t.q;
    const bool negative = q.leading().sign() < 0;
    if (negative) q = -q;
    std::string body;
    const std::string logPart = t.p == 0 ? "" : powerText("ln(n)", Rational(t.p));
    if (isMonomial(q)) {
      const int k = q.degree();
      std::vector<std::string> pieces;
      if (q.leading() != Rational(1)) pieces.push_back(q.leading().toString());
      if (k >= 1) pieces.push_back(k == 1 ? "C" : "C^" + std::to_string(k));
      if (!logPart.empty()) pieces.push_back(logPart);
      if (pieces.empty()) pieces.push_back("1");
      for (std::size_t i = 0; i < pieces.size(); ++i) body += (i ? "*" : "") + pieces[i];
    } else {
      body = "(" + q.toString("C") + ")";
      if (!logPart.empty()) body += "*" + logPart;
    }
    body += "/" + powerText("n", exponentOf(e, t.m));
    if (first) os << (negative ? "-" : "") << body;
    else os << (negative ? " - " : " + ") << body;
    first = false;
  }
  os << " + ...";
  if (!pres.note.empty()) os << "\n  where " << pres.note;
  os << "\n";
  return os.str();
}

std::string renderExpansionLatex(const AsymptoticExpansion& e) {
  const Presentation pres = presentation(e);
  std::ostringstream os;
  if (!pres.note.empty()) {
    os << "% \\kappa = \\sqrt{" << rationalLatex(e.lambda / Rational(16)) << "}/\\pi\n";
  }
  os << "\\begin{align*}\n  " << pres.lhsLatex << " &\\sim ";
  int count = 0;
  for (const auto& t : orderedTerms(e, pres)) {
    RatPoly q = t.q;
    const bool negative = q.leading().sign() < 0;
    if (negative) q = -q;
    if (count > 0 && count % 3 == 0) os << " \\\\\n  &\\quad ";
    if (negative) os << "-";
    else if (count > 0) os << "+";
    std::string coef;
    if (isMonomial(q)) {
      const int k = q.degree();
      if (q.leading() != Rational(1)) coef += rationalLatex(q.leading());
      if (k >= 1) coef += k == 1 ? "C" : "C^{" + std::to_string(k) + "}";
    } else {
      coef = "\\left(" + polyLatex(q, "C") + "\\right)";
    }
    const std::string num = t.p == 0 ? "1" : powerLatex("\\ln(n)", Rational(t.p));
    os << coef << "\\frac{" << num << "}{" << powerLatex("n", exponentOf(e, t.m)) << "}";
    ++count;
  }
  os << "+\\cdots\n\\end{align*}\n";
  return os.str();
}

std::string renderExpansionJson(const AsymptoticExpansion& e) {
  json doc = json::object();
  doc["function"] = e.function;
  doc["tau"] = e.tau;
  doc["lambda"] = e.lambda.toString();
  doc["theta"] = toString(e.theta);
  doc["scale"] = e.theta == ThetaScale::PiSquared ? "pi^-" + Rational(2, e.tau).toString() : "none";
  doc["sigma"] = e.convention.sigma;
  doc["c_scale"] = e.convention.scale.toString();
  doc["b1"] = e.b1.toString();
  doc["J"] = e.J;
  json terms = json::array();
  for (int m = 0; m <= e.J; ++m) {
    for (int p = m; p >= 0; --p) {
      json poly = json::array();
      const RatPoly q = e.term(m, p);
      for (const auto& c : q.coeffs()) poly.push_back(c.toString());
      terms.push_back({{"m", m}, {"p", p}, {"poly", poly}});
    }
  }
  doc["terms"] = terms;
  return doc.dump(2) + "\n";
}

AsymptoticExpansion parseExpansionJson(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& err) {
    throw ParseError(std::string("malformed JSON: ") + err.what());
  }
  auto need = [&](const char* key) -> const json& {
    if (!doc.contains(key)) throw ParseError("missing field", 0, key);
    return doc[key];
  };
  auto rational = [&](const json& v, const char* field) {
    if (!v.is_string()) throw ParseError("expected a \"p/q\" string", 0, field);
    try {
      return Rational::parseReduced(v.get<std::string>());
    } catch (const ValidationError& ex) {
      throw ParseError(ex.what(), 0, field);
    }
  };
  AsymptoticExpansion e;
  try {
    e.function = need("function").get<std::string>();
    e.tau = need("tau").get<int>();
    e.lambda = rational(need("lambda"), "lambda");
    e.theta = parseThetaScale(need("theta").get<std::string>());
    e.convention.sigma = need("sigma").get<int>();
    e.convention.scale = rational(need("c_scale"), "c_scale");
    e.b1 = rational(need("b1"), "b1");
    e.J = need("J").get<int>();
    for (const auto& t : need("terms")) {
      const int m = t.at("m").get<int>();
      const int p = t.at("p").get<int>();
      if (m < 0 || m > e.J || p < 0 || p > m) throw ParseError("term index out of range", 0, "terms");
      std::vector<Rational> coeffs;
      for (const auto& c : t.at("poly")) coeffs.push_back(rational(c, "terms"));
      e.terms[{m, p}] = RatPoly(std::move(coeffs));
    }
  } catch (const json::exception& ex) {
    throw ParseError(std::string("unexpected JSON shape: ") + ex.what());
  }
  return e;
}

}  // namespace iterasym
