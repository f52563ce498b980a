#include "ialc/model_io.h"

#include <map>

#include <nlohmann/json.hpp>

#include "ialc/modelgen.h"

namespace ialc {

using nlohmann::json;

void ClosePreorder(Relation& rel) {
  const int n = rel.size();
  for (World w = 0; w < n; ++w) rel.insert(w, w);
  // Warshall.
  for (World k = 0; k < n; ++k)
    for (World i = 0; i < n; ++i)
      if (rel.contains(i, k))
        rel.successors(k).for_each([&](World j) { rel.insert(i, j); });
}

namespace {

std::string WorldKey(const json& id) {
  if (id.is_string()) return id.get<std::string>();
  if (id.is_number_integer()) return std::to_string(id.get<long long>());
  throw ModelFormatError("world ids must be strings or integers, got " + id.dump());
}

class WorldTable {
 public:
  explicit WorldTable(const json& worlds) {
    if (!worlds.is_array() || worlds.empty()) throw ModelFormatError("'worlds' must be a nonempty list");
    if (worlds.size() > static_cast<std::size_t>(kMaxWorlds))
      throw ModelFormatError("at most " + std::to_string(kMaxWorlds) + " worlds are supported");
    for (const auto& id : worlds) {
      std::string key = WorldKey(id);
      if (!index_.emplace(key, static_cast<World>(names_.size())).second)
        throw ModelFormatError("duplicate world id '" + key + "'");
      names_.push_back(std::move(key));
    }
  }

  World Lookup(const json& id) const {
    const std::string key = WorldKey(id);
    auto it = index_.find(key);
    if (it == index_.end()) throw ModelFormatError("unknown world '" + key + "'");
    return it->second;
  }

  void ReadPairs(const json& list, Relation& rel, const std::string& what) const {
    if (!list.is_array()) throw ModelFormatError("'" + what + "' must be a list of pairs");
    for (const auto& p : list) {
      if (!p.is_array() || p.size() != 2) throw ModelFormatError("'" + what + "' entries must be pairs");
      rel.insert(Lookup(p[0]), Lookup(p[1]));
    }
  }

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::map<std::string, World> index_;
  std::vector<std::string> names_;
};

const json& ObjectField(const json& doc, const char* key) {
  static const json kEmptyObject = json::object();
  if (!doc.contains(key)) return kEmptyObject;
  const json& v = doc.at(key);
  if (!v.is_object()) throw ModelFormatError(std::string("'") + key + "' must be an object");
  return v;
}

}  // namespace

LoadedModel ParseModel(std::string_view text, bool raw) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ModelFormatError(std::string("malformed model file: ") + e.what());
  }
  if (!doc.is_object()) throw ModelFormatError("model file must be a JSON object");
  if (!doc.contains("worlds")) throw ModelFormatError("missing 'worlds'");

  const WorldTable table(doc.at("worlds"));
  LoadedModel out{Interpretation(table.size()), {}};
  Interpretation& m = out.model;
  m.world_names = table.names();
  if (doc.contains("leq")) table.ReadPairs(doc.at("leq"), m.refinement, "leq");
  ClosePreorder(m.refinement);

  for (const auto& [role, pairs] : ObjectField(doc, "roles").items()) {
    Relation r(m.size);
    table.ReadPairs(pairs, r, "roles." + role);
    m.roles.emplace(role, std::move(r));
  }
  std::map<std::string, WorldSet> atoms;
  for (const auto& [atom, worlds] : ObjectField(doc, "atoms").items()) {
    if (!worlds.is_array()) throw ModelFormatError("'atoms." + atom + "' must be a list of worlds");
    WorldSet s;
    for (const auto& w : worlds) s.insert(table.Lookup(w));
    atoms.emplace(atom, s);
  }
  m.atoms = HeredityClosure(atoms, m.refinement);
  for (const auto& [atom, set] : m.atoms)
    if (set != atoms.at(atom)) out.warnings.push_back("atom " + atom + " closed upward under refinement");
  for (const auto& [nominal, w] : ObjectField(doc, "nominals").items()) m.nominals.emplace(nominal, table.Lookup(w));

  if (!raw) {
    const ValidationReport report = Validate(m);
    if (!report.ok()) {
      std::string msg = "model violates frame conditions:";
      for (const auto& v : report.violations) msg += "\n  " + Describe(v, m);
      throw ModelFormatError(msg);
    }
  }
  return out;
}

std::string SerializeModel(const Interpretation& m) {
  auto name = [&](World w) { return m.world_name(w); };
  json doc;
  doc["worlds"] = json::array();
  for (World w = 0; w < m.size; ++w) doc["worlds"].push_back(name(w));
  doc["leq"] = json::array();
  for (const auto& [a, b] : m.refinement.pairs())
    if (a != b) doc["leq"].push_back({name(a), name(b)});
  doc["roles"] = json::object();
  for (const auto& [role, rel] : m.roles) {
    json pairs = json::array();
    for (const auto& [a, b] : rel.pairs()) pairs.push_back({name(a), name(b)});
    doc["roles"][role] = std::move(pairs);
  }
  doc["atoms"] = json::object();
  for (const auto& [atom, set] : m.atoms) {
    json worlds = json::array();
    set.for_each([&](World w) { worlds.push_back(name(w)); });
    doc["atoms"][atom] = std::move(worlds);
  }
  doc["nominals"] = json::object();
  for (const auto& [x, w] : m.nominals) doc["nominals"][x] = name(w);
  return doc.dump(2) + "\n";
}

}  // namespace ialc
