#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "iterasym/catalog.hpp"
#include "iterasym/cli.hpp"
#include "iterasym/coeff_engine.hpp"
#include "iterasym/errors.hpp"
#include "iterasym/estimator.hpp"
#include "iterasym/expansion.hpp"
#include "iterasym/golden.hpp"
#include "iterasym/kindred.hpp"
#include "iterasym/render.hpp"
#include "iterasym/spec_io.hpp"

namespace py = pybind11;
using namespace iterasym;

namespace {

std::vector<std::string> strings(const std::vector<Rational>& v, std::size_t from, std::size_t to) {
  std::vector<std::string> out;
  for (std::size_t k = from; k <= to && k < v.size(); ++k) out.push_back(v[k].toString());
  return out;
}

std::vector<std::string> polyStrings(const RatPoly& p) {
  std::vector<std::string> out;
  for (const auto& c : p.coeffs()) out.push_back(c.toString());
  return out;
}

SeriesSpec resolve(const std::string& function, const std::optional<std::string>& specText, std::optional<int> K) {
  if (specText) return parseSeriesSpec(*specText);
  const CatalogEntry& e = catalogEntry(function);
  return K ? e.spec(*K) : e.spec();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact coefficient towers and asymptotic expansions for iterated maps";

  // Later registrations are tried first, so the subclass goes after its base.
  auto& validation = py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", validation.ptr());
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
  py::register_exception<PrecisionError>(m, "PrecisionError", PyExc_RuntimeError);

  m.def("list_functions", [] {
    std::vector<std::string> names;
    for (const auto& e : catalog()) names.push_back(e.name);
    return names;
  });

  m.def(
      "coefficients",
      [](const std::string& function, std::optional<std::string> spec, std::optional<int> K) {
        const Derivation d = deriveAll(resolve(function, spec, K));
        const CoeffSet& cs = d.coeffs();
        const auto J = static_cast<std::size_t>(cs.J);
        py::dict out;
        out["name"] = d.spec.name;
        out["tau"] = d.spec.tau;
        out["J"] = cs.J;
        out["lambda"] = cs.lambda.toString();
        out["b"] = strings(cs.b, 1, J);
        out["a0"] = strings(cs.a[0], 1, J);
        out["c"] = strings(cs.c, 1, J - 1);
        return out;
      },
      py::arg("function") = "", py::arg("spec") = py::none(), py::arg("K") = py::none(),
      "lambda, b_j, a_{0,j} and c_i as \"p/q\" strings (lists start at subscript 1)");

  m.def(
      "polynomials",
      [](const std::string& function, std::optional<std::string> spec, std::optional<int> K) {
        const Derivation d = deriveAll(resolve(function, spec, K));
        std::map<int, std::vector<std::string>> T, P;
        for (int k = 2; k <= d.depth(); ++k) T[k] = polyStrings(d.polys().T[k]);
        for (int k = 0; k <= d.depth(); ++k) P[k] = polyStrings(d.polys().P[k]);
        py::dict out;
        out["T"] = T;
        out["P"] = P;
        return out;
      },
      py::arg("function") = "", py::arg("spec") = py::none(), py::arg("K") = py::none(),
      "T_m and P_m with coefficients from X^0 upward");

  m.def(
      "expand",
      [](const std::string& function, std::optional<int> order, const std::string& format) {
        const CatalogEntry& e = catalogEntry(function);
        const AsymptoticExpansion x = assemble(deriveAll(order ? e.spec(*order + 1) : e.spec()));
        switch (parseFormat(format)) {
          case Format::Json: return renderExpansionJson(x);
          case Format::Latex: return renderExpansionLatex(x);
          case Format::Text: break;
        }
        return renderExpansionText(x);
      },
      py::arg("function"), py::arg("order") = py::none(), py::arg("format") = "text");

  m.def(
      "estimate_c",
      [](const std::string& function, std::optional<std::string> x0, int digits) {
        const MapModel model = catalogModel(function);
        EstimateOptions opt;
        opt.targetDigits = digits;
        EstimateResult r;
        {
          py::gil_scoped_release release;
          r = estimateC(model, x0.value_or(*model.defaultX0), opt);
        }
        py::dict out;
        out["C"] = r.paperC.toString(std::max(1, r.trustedDigits));
        out["K"] = r.K.toString(std::max(1, r.trustedDigits));
        out["trusted_digits"] = r.trustedDigits;
        out["N"] = r.N_used;
        out["precision"] = r.precision_used;
        out["reached_target"] = r.reachedTarget;
        return out;
      },
      py::arg("function"), py::arg("x0") = py::none(), py::arg("digits") = 20);

  m.def(
      "kindred_ok",
      [](const std::string& function) {
        const CatalogEntry& e = catalogEntry(function);
        const SeriesSpec f = e.spec();
        const SeriesSpec g = kindredSpec(f);
        return kindredTowers(deriveAll(f), deriveAll(g)).ok();
      },
      py::arg("function"));

  m.def(
      "verify",
      [](std::optional<std::string> corpus, std::optional<std::string> function) {
        const GoldenReport r = verifyCorpus(loadGoldenCorpus(corpus.value_or(defaultCorpusDir())), function);
        std::vector<std::string> mismatches;
        for (const auto& mm : r.mismatches) mismatches.push_back(formatMismatch(mm));
        py::dict out;
        out["pass"] = r.ok();
        out["functions"] = r.functions;
        out["values_checked"] = r.valuesChecked;
        out["mismatches"] = mismatches;
        return out;
      },
      py::arg("corpus") = py::none(), py::arg("function") = py::none());

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = runCli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line; returns (exit code, stdout, stderr).");
}
