#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "iterasym/catalog.hpp"
#include "iterasym/cli.hpp"
#include "iterasym/render.hpp"
#include "iterasym/spec_io.hpp"

using namespace iterasym;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = runCli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string tmpPath(const std::string& name) { return std::string(ITERASYM_TEST_TMP) + "/" + name; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("coeffs --format json serializes rationals as strings") {
  const Run r = run({"coeffs", "--function", "sin", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["b"] == nlohmann::json({"3/5", "2/7", "3/25", "18/385", "1382/79625", "12/1925"}));
  CHECK(doc["c"][0] == "79/350");
  CHECK(doc["lambda"] == "3");
  CHECK(doc["aij"][0]["value"] == "-1");
}

TEST_CASE("estimate-c prints the constant") {
  const Run r = run({"estimate-c", "--function", "logistic", "--x0", "1/2", "--digits", "18"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("C = 1.767993786136154050") != std::string::npos);
  const Run j = run({"estimate-c", "-f", "exp", "--format", "json", "--digits", "16"});
  REQUIRE(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["C"].get<std::string>().rfind("-1.776112953950857", 0) == 0);
  CHECK(doc["digits"].get<int>() >= 16);
}

TEST_CASE("ITERASYM_DIGITS sets the default precision") {
  setenv("ITERASYM_DIGITS", "12", 1);
  const Run r = run({"estimate-c", "-f", "sin", "--x0", "pi/4", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["target_digits"] == 12);
  setenv("ITERASYM_DIGITS", "many", 1);
  CHECK(run({"estimate-c", "-f", "sin"}).code == 1);
  unsetenv("ITERASYM_DIGITS");
}

TEST_CASE("kindred reports the partner and the relations") {
  const Run r = run({"kindred", "--function", "arctan"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("g = tanh") != std::string::npos);
  CHECK(r.out.find("a_1 = -1/3, a_2 = 2/15, a_3 = -17/315") != std::string::npos);
  CHECK(r.out.find("matches catalog entry tanh: PASS") != std::string::npos);
  CHECK(r.out.find("P_m^{(g)}(X) = (-1)^m P_m^{(f)}(-X): PASS") != std::string::npos);
  const Run w = run({"kindred", "--spec", ITERASYM_TEST_DATA "/specs/lambert-w.json", "--format", "json"});
  REQUIRE(w.code == 0);
  CHECK(nlohmann::json::parse(w.out)["pass"] == true);
}

TEST_CASE("verify") {
  const Run all = run({"verify"});
  CHECK(all.code == 0);
  CHECK(all.out.find("PASS: 12 functions") != std::string::npos);
  const Run one = run({"verify", "--function", "fresnel", "--format", "json"});
  CHECK(one.code == 0);
  CHECK(nlohmann::json::parse(one.out)["functions"] == nlohmann::json({"fresnel"}));

  // corrupt a copy of the corpus
  namespace fs = std::filesystem;
  const fs::path dir = tmpPath("corrupt-corpus");
  fs::remove_all(dir);
  fs::create_directories(dir);
  for (const auto& ent : fs::directory_iterator(ITERASYM_TEST_DATA "/golden")) fs::copy(ent.path(), dir / ent.path().filename());
  {
    std::ifstream in(dir / "logistic.txt");
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    text.replace(text.find("13/36"), 5, "13/35");
    std::ofstream(dir / "logistic.txt") << text;
  }
  const Run bad = run({"verify", "--corpus", dir.string()});
  CHECK(bad.code == 2);
  CHECK(bad.out.find("MISMATCH logistic c_3: expected 13/35, got 13/36") != std::string::npos);
  CHECK(bad.out.find("FAIL") != std::string::npos);
}

TEST_CASE("expand output formats") {
  const Run t = run({"expand", "-f", "logistic", "--order", "2"});
  CHECK(t.code == 0);
  CHECK(t.out.rfind("x_n ~ 1/n - ln(n)/n^2 - C/n^2", 0) == 0);
  const Run j = run({"expand", "-f", "sin", "--format", "json"});
  CHECK(j.code == 0);
  CHECK(parseExpansionJson(j.out) == assemble(deriveAll(catalogEntry("sin").spec())));
  const Run l = run({"expand", "-f", "sin", "-J", "1", "--format", "latex"});
  CHECK(l.out.find("\\begin{align*}") == 0);
  const Run deep = run({"expand", "-f", "logistic", "-J", "9", "--format", "json"});
  CHECK(deep.code == 0);
  CHECK(parseExpansionJson(deep.out).J == 9);
}

TEST_CASE("polys and eval") {
  const Run p = run({"polys", "-f", "logistic"});
  CHECK(p.code == 0);
  CHECK(p.out.find("T_2(X) = X - 1/2") != std::string::npos);
  CHECK(p.out.find("P_2(X) = X^2 + X + 1/2") != std::string::npos);
  const Run e = run({"eval", "-f", "logistic", "--n", "1000", "--C", "1.76799378613615405044", "--x0", "1/2",
                     "--format", "json"});
  REQUIRE(e.code == 0);
  const auto doc = nlohmann::json::parse(e.out);
  CHECK(std::abs(std::stod(doc["difference"].get<std::string>())) < 1e-17);
}

TEST_CASE("custom specs through the CLI") {
  const Run w = run({"coeffs", "--spec", ITERASYM_TEST_DATA "/specs/lambert-w.json", "--format", "json"});
  REQUIRE(w.code == 0);
  const Run c = run({"coeffs", "-f", "lambert-w", "--format", "json"});
  auto a = nlohmann::json::parse(w.out), b = nlohmann::json::parse(c.out);
  CHECK(a["c"] == b["c"]);
  CHECK(a["b"] == b["b"]);

  const Run bad = run({"coeffs", "--spec", ITERASYM_TEST_DATA "/specs/positive-a1.json"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("line 3") != std::string::npos);
  CHECK(bad.err.find("a_1 < 0") != std::string::npos);

  const Run deep = run({"coeffs", "--spec", ITERASYM_TEST_DATA "/specs/lambert-w.json", "--order", "8"});
  CHECK(deep.code == 1);
  CHECK(deep.err.find("exceeds the coefficient depth") != std::string::npos);
}

TEST_CASE("usage errors exit with 1") {
  CHECK(run({"coeffs", "--function", "cosine"}).code == 1);
  CHECK(run({"coeffs"}).code == 1);
  CHECK(run({"nonsense"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"coeffs", "-f", "sin", "--format", "yaml"}).code == 1);
  CHECK(run({"estimate-c", "-f", "sin", "--n", "2000000"}).code == 1);
  CHECK(run({"eval", "-f", "sin", "--n", "10"}).code == 1);
  CHECK(run({"estimate-c", "-f", "logistic", "--x0", "3"}).code == 1);
  const Run capped = run({"estimate-c", "-f", "logistic", "--digits", "40", "--n", "2000"});
  CHECK(capped.code == 1);
  CHECK(capped.out.find("C = 1.7679937") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("--output writes the document to a file") {
  const std::string path = tmpPath("sin-coeffs.json");
  const Run r = run({"coeffs", "-f", "sin", "--format", "json", "--output", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  const auto doc = nlohmann::json::parse(in);
  CHECK(doc["function"] == "sin");
}

TEST_CASE("list-functions") {
  const Run r = run({"list-functions", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc.size() == 12);
  CHECK(doc[0]["name"] == "logistic");
}

TEST_CASE("verify output is identical across runs") {
  CHECK(run({"verify", "--format", "json"}).out == run({"verify", "--format", "json"}).out);
}

}  // TEST_SUITE
