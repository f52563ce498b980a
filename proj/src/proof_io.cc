#include "ialc/proof_io.h"

#include <nlohmann/json.hpp>

#include "ialc/parser.h"

namespace ialc {

using nlohmann::ordered_json;

namespace {

std::string Where(const std::string& path) { return path.empty() ? "root" : path; }

const ordered_json& Field(const ordered_json& node, const char* key, const std::string& path) {
  auto it = node.find(key);
  if (it == node.end()) throw ProofFormatError(Where(path) + ": missing '" + key + "'");
  return *it;
}

std::string Text(const ordered_json& v, const std::string& what) {
  if (!v.is_string()) throw ProofFormatError(what + " must be a string");
  return v.get<std::string>();
}

ProofTree Read(const ordered_json& node, const std::string& path) {
  if (!node.is_object()) throw ProofFormatError(Where(path) + ": node must be an object");
  const std::string rule = Text(Field(node, "rule", path), Where(path) + ".rule");
  auto id = ParseRuleId(rule);
  if (!id) throw ProofFormatError(Where(path) + ": unknown rule '" + rule + "'");
  ProofTree t{ParseSequent(Text(Field(node, "conclusion", path), Where(path) + ".conclusion")), *id, {}, {}};
  if (auto it = node.find("params"); it != node.end()) {
    if (!it->is_object()) throw ProofFormatError(Where(path) + ".params must be an object");
    for (const auto& [key, value] : it->items()) {
      const std::string text = Text(value, Where(path) + ".params." + key);
      if (key == "principal") {
        t.params.principal = ParseFormula(text);
      } else if (key == "role") {
        t.params.role = text;
      } else if (key == "fresh") {
        t.params.fresh = text;
      } else if (key == "prefix") {
        t.params.prefix = text;
      } else {
        throw ProofFormatError(Where(path) + ": unknown param '" + key + "'");
      }
    }
  }
  if (auto it = node.find("premises"); it != node.end()) {
    if (!it->is_array()) throw ProofFormatError(Where(path) + ".premises must be a list");
    for (std::size_t i = 0; i < it->size(); ++i)
      t.premises.push_back(Read((*it)[i], path + (path.empty() ? "" : ".") + std::to_string(i)));
  }
  return t;
}

ordered_json Write(const ProofTree& t) {
  ordered_json node;
  node["rule"] = ToString(t.rule);
  node["conclusion"] = Render(t.conclusion);
  ordered_json params = ordered_json::object();
  if (t.params.principal) params["principal"] = Render(*t.params.principal);
  if (t.params.role) params["role"] = *t.params.role;
  if (t.params.fresh) params["fresh"] = *t.params.fresh;
  if (t.params.prefix) params["prefix"] = *t.params.prefix;
  if (!params.empty()) node["params"] = std::move(params);
  node["premises"] = ordered_json::array();
  for (const auto& p : t.premises) node["premises"].push_back(Write(p));
  return node;
}

}  // namespace

ProofTree ParseProofTree(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw ProofFormatError(std::string("not valid JSON: ") + e.what());
  }
  return Read(doc, "");
}

std::string SerializeProofTree(const ProofTree& tree) { return Write(tree).dump(2) + "\n"; }

}  // namespace ialc
