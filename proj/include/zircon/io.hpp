#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "zircon/errors.hpp"
#include "zircon/fixed_points.hpp"
#include "zircon/matching.hpp"
#include "zircon/poset.hpp"
#include "zircon/poset_map.hpp"

namespace zircon {

using nlohmann::json;

namespace detail {

// Ids may be written as strings or as integers; integers are stringified.
inline std::string id_from_json(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return j.dump();
  throw InputError("element ids must be strings or integers, got " + j.dump());
}

inline std::vector<IdPair> pairs_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array of pairs");
  std::vector<IdPair> out;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2)
      throw InputError(std::string(what) + " entries must be two-element arrays");
    out.emplace_back(id_from_json(pair[0]), id_from_json(pair[1]));
  }
  return out;
}

}  // namespace detail

/// {"elements": [...], "covers": [[lower, upper], ...]}
inline json poset_to_json(const Poset& p) {
  json covers = json::array();
  for (const auto& [a, b] : p.covers()) covers.push_back({p.id(a), p.id(b)});
  return {{"elements", p.ids()}, {"covers", std::move(covers)}};
}

/// Reads the poset schema; covers must be exactly the Hasse diagram.
inline Poset poset_from_json(const json& j) {
  if (!j.is_object() || !j.contains("elements") || !j.contains("covers"))
    throw InputError("poset document needs \"elements\" and \"covers\"");
  if (!j["elements"].is_array()) throw InputError("\"elements\" must be an array");
  std::vector<std::string> ids;
  for (const auto& e : j["elements"]) ids.push_back(detail::id_from_json(e));
  auto covers = detail::pairs_from_json(j["covers"], "\"covers\"");
  return Poset::build(std::move(ids), covers, Poset::Input::covers);
}

/// {"map": {"a": "b", ...}}
inline json map_to_json(const Poset& p, const PosetMap& f) {
  json table = json::object();
  for (const auto& [from, to] : map_to_ids(p, f)) table[from] = to;
  return {{"map", std::move(table)}};
}

inline PosetMap map_from_json(const Poset& p, const json& j) {
  if (!j.is_object() || !j.contains("map") || !j["map"].is_object())
    throw InputError("map document needs a \"map\" object");
  std::map<std::string, std::string> table;
  for (const auto& [from, to] : j["map"].items()) table.emplace(from, detail::id_from_json(to));
  return map_from_ids(p, table);
}

/// {"pairs": [["a", "b"], ...]}: each unordered pair once, written in
/// lexicographic order within and across pairs.
inline json matching_to_json(const Poset& p, const Matching& m) {
  std::vector<IdPair> pairs;
  for (const auto& [a, b] : m.pairs()) {
    auto x = p.id(a), y = p.id(b);
    if (y < x) std::swap(x, y);
    pairs.emplace_back(std::move(x), std::move(y));
  }
  std::sort(pairs.begin(), pairs.end());
  json out = json::array();
  for (auto& [a, b] : pairs) out.push_back({a, b});
  return {{"pairs", std::move(out)}};
}

/// The mapping described by a matching document, not yet validated as a
/// matching (see `is_matching`).
inline std::vector<Index> matching_from_json(const Poset& p, const json& j) {
  if (!j.is_object() || !j.contains("pairs")) throw InputError("matching document needs \"pairs\"");
  return mapping_from_pairs(p, detail::pairs_from_json(j["pairs"], "\"pairs\""));
}

/// Summary of one fixed-point construction.
inline json fixed_point_report(const Poset& p, const FixedPointAnalysis& a) {
  json components = json::array();
  for (const auto& comp : a.components) {
    json ids = json::array();
    for (Index x : comp) ids.push_back(p.id(x));
    components.push_back(std::move(ids));
  }
  json fixed = json::array();
  for (Index x : a.fixed_points) fixed.push_back(p.id(x));
  json witness = nullptr;
  if (a.special.witness)
    witness = {a.subposet.id(a.special.witness->first), a.subposet.id(a.special.witness->second)};
  json report = {{"n", p.size()},
                 {"order_N", a.family.order},
                 {"components", std::move(components)},
                 {"fixed_points", std::move(fixed)},
                 {"special", a.is_matching && a.special.special},
                 {"witness", std::move(witness)}};
  if (a.is_matching) report["fixed_point_matching"] = matching_to_json(a.subposet, Matching{a.candidate})["pairs"];
  return report;
}

namespace detail {
inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}
}  // namespace detail

/// Graphviz digraph: one node per element, one edge per cover pointing upward,
/// and one `rank=same` group per level when the poset is ranked.
inline std::string to_dot(const Poset& p, const std::string& name = "poset") {
  std::ostringstream os;
  os << "digraph " << detail::dot_quote(name) << " {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=plaintext];\n";
  for (const auto& id : p.ids()) os << "  " << detail::dot_quote(id) << ";\n";
  if (auto rank = rank_function(p)) {
    std::map<int, std::vector<Index>> levels;
    for (Index x = 0; x < p.size(); ++x) levels[(*rank)[x]].push_back(x);
    for (const auto& [level, members] : levels) {
      os << "  { rank=same;";
      for (Index x : members) os << " " << detail::dot_quote(p.id(x)) << ";";
      os << " }\n";
    }
  }
  for (const auto& [a, b] : p.covers())
    os << "  " << detail::dot_quote(p.id(a)) << " -> " << detail::dot_quote(p.id(b)) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace zircon
