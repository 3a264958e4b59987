#include "keane/params_json.hpp"

#include <istream>
#include <sstream>

#include <json.hpp>

namespace keane {

namespace {

using json = nlohmann::ordered_json;

Int int_from_node(const json& node, const char* what) {
  if (node.is_string()) {
    const std::string s = node.get<std::string>();
    try {
      return Int(s);
    } catch (const std::invalid_argument&) {
      throw domain_error(std::string(what) + " is not a decimal integer: " + s);
    }
  }
  if (node.is_number_integer()) return Int(node.get<long>());
  throw domain_error(std::string(what) + " must be a decimal string or integer");
}

Rat rat_from_node(const json& node, const char* what) {
  if (node.is_string()) return parse_rational(node.get<std::string>());
  if (node.is_number_integer()) return Rat(node.get<long>());
  throw domain_error(std::string(what) + " must be a rational string or integer");
}

}  // namespace

std::string params_to_json(const ParamSeq& seq) {
  json j;
  j["rule"] = seq.rule;
  if (seq.alpha) j["alpha"] = rat_string(*seq.alpha);
  json pairs = json::array();
  for (const auto& [m, n] : seq.pairs)
    pairs.push_back(json::array({m.get_str(), n.get_str()}));
  j["pairs"] = std::move(pairs);
  return j.dump(2) + "\n";
}

ParamSeq params_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw domain_error(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw domain_error("parameter file must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "rule" && key != "alpha" && key != "pairs")
      throw domain_error("unknown key '" + key + "' in parameter file");
  }
  if (!j.contains("rule") || !j["rule"].is_string())
    throw domain_error("parameter file needs a string 'rule'");
  if (!j.contains("pairs") || !j["pairs"].is_array() || j["pairs"].empty())
    throw domain_error("parameter file needs a nonempty 'pairs' array");

  ParamSeq seq;
  seq.rule = j["rule"].get<std::string>();
  if (j.contains("alpha")) seq.alpha = rat_from_node(j["alpha"], "alpha");
  for (const json& row : j["pairs"]) {
    if (!row.is_array() || row.size() != 2)
      throw domain_error("each pair must be a two-element array");
    Int m = int_from_node(row[0], "pair entry");
    Int n = int_from_node(row[1], "pair entry");
    if (m < 1 || n < 1) throw domain_error("multiplicity parameters must be positive");
    seq.pairs.emplace_back(std::move(m), std::move(n));
  }
  return seq;
}

ParamSeq params_from_stream(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return params_from_json(buf.str());
}

}  // namespace keane
