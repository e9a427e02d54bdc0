#include "iterasym/spec_io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "iterasym/errors.hpp"

namespace iterasym {

namespace {

using nlohmann::json;

int lineOfOffset(std::string_view text, std::size_t offset) {
  int line = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

// nlohmann::json keeps no source positions, so field errors are attributed
// to the line where the key first appears.
int lineOfKey(std::string_view text, const std::string& key) {
  const std::regex re("\"" + key + "\"\\s*:");
  std::match_results<std::string_view::const_iterator> m;
  if (std::regex_search(text.begin(), text.end(), m, re)) {
    return lineOfOffset(text, static_cast<std::size_t>(m.position(0)));
  }
  return 0;
}

// Line of the index-th element of the array under `key`, falling back to the key.
int lineOfArrayElement(std::string_view text, const std::string& key, std::size_t index) {
  const int keyLine = lineOfKey(text, key);
  if (keyLine == 0) return 0;
  std::size_t pos = text.find("\"" + key + "\"");
  pos = text.find('[', pos);
  if (pos == std::string_view::npos) return keyLine;
  std::size_t seen = 0;
  bool inString = false;
  for (std::size_t i = pos + 1; i < text.size(); ++i) {
    const char ch = text[i];
    if (inString) {
      if (ch == '\\') ++i;
      else if (ch == '"') inString = false;
      continue;
    }
    if (ch == ']') break;
    if (ch == ',') { ++seen; continue; }
    if (ch == '"' || ch == '-' || (ch >= '0' && ch <= '9')) {
      if (seen == index) return lineOfOffset(text, i);
      if (ch == '"') inString = true;
    }
  }
  return keyLine;
}

}  // namespace

SeriesSpec parseSeriesSpec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), lineOfOffset(text, e.byte > 0 ? e.byte - 1 : 0));
  }
  if (!doc.is_object()) throw ParseError("top level must be a JSON object", 1);

  auto fail = [&](const std::string& field, const std::string& msg) -> ParseError {
    return ParseError(msg, lineOfKey(text, field), field);
  };

  static const char* known[] = {"name", "tau", "a", "formula", "c_scale", "scale"};
  for (const auto& item : doc.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || item.key() == k;
    if (!ok) throw fail(item.key(), "unknown field (expected name, tau, a, formula, c_scale, scale)");
  }

  SeriesSpec spec;
  spec.name = "custom";
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw fail("name", "must be a string");
    spec.name = doc["name"].get<std::string>();
  }

  if (!doc.contains("tau")) throw ParseError("missing required field", 0, "tau");
  if (!doc["tau"].is_number_integer() || doc["tau"].get<long long>() < 1 || doc["tau"].get<long long>() > 64) {
    throw fail("tau", "must be an integer between 1 and 64");
  }
  spec.tau = doc["tau"].get<int>();

  if (!doc.contains("a")) throw ParseError("missing required field", 0, "a");
  const json& arr = doc["a"];
  if (!arr.is_array()) throw fail("a", "must be an array of \"p/q\" strings");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string label = "a[" + std::to_string(i) + "] (a_" + std::to_string(i + 1) + ")";
    if (!arr[i].is_string()) {
      throw ParseError(label + " must be a \"p/q\" string", lineOfArrayElement(text, "a", i), "a");
    }
    try {
      spec.a.push_back(Rational::parseReduced(arr[i].get<std::string>()));
    } catch (const ValidationError& e) {
      throw ParseError(label + ": " + e.what(), lineOfArrayElement(text, "a", i), "a");
    }
  }

  if (doc.contains("formula")) {
    const json& f = doc["formula"];
    if (f == "A") spec.convention.sigma = 1;
    else if (f == "B") spec.convention.sigma = -1;
    else throw fail("formula", "must be \"A\" or \"B\"");
  }
  if (doc.contains("c_scale")) {
    const json& s = doc["c_scale"];
    try {
      if (s.is_number_integer()) spec.convention.scale = Rational(s.get<long>());
      else if (s.is_string()) spec.convention.scale = Rational::parseReduced(s.get<std::string>());
      else throw ValidationError("must be a positive rational");
    } catch (const ValidationError& e) {
      throw fail("c_scale", e.what());
    }
    if (spec.convention.scale.sign() <= 0) throw fail("c_scale", "must be positive");
  }
  if (doc.contains("scale")) {
    if (!doc["scale"].is_string()) throw fail("scale", "must be \"pi^2\" or \"none\"");
    try {
      spec.theta = parseThetaScale(doc["scale"].get<std::string>());
    } catch (const ValidationError& e) {
      throw fail("scale", e.what());
    }
  }

  try {
    spec.validate();
  } catch (const ValidationError& e) {
    const std::string msg = e.what();
    const std::string field = msg.rfind("tau", 0) == 0 ? "tau" : "a";
    throw fail(field, msg);
  }
  return spec;
}

SeriesSpec loadSeriesSpec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open spec file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return parseSeriesSpec(os.str());
}

std::string writeSeriesSpec(const SeriesSpec& spec) {
  json doc = json::object();
  doc["name"] = spec.name;
  doc["tau"] = spec.tau;
  json arr = json::array();
  for (const auto& a : spec.a) arr.push_back(a.toString());
  doc["a"] = arr;
  doc["formula"] = spec.convention.sigma > 0 ? "A" : "B";
  doc["c_scale"] = spec.convention.scale.toString();
  doc["scale"] = toString(spec.theta);
  return doc.dump(2) + "\n";
}

}  // namespace iterasym
