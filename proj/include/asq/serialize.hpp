#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "asq/poset.hpp"
#include "asq/schroder.hpp"
#include "asq/tree_poly.hpp"

namespace asq {

using Json = nlohmann::json;

// {"size": n, "covers": [[a,b], ...]} with a < b covers, or
// {"size": n, "leq": [[a,b], ...]} listing all non-reflexive pairs.
inline Poset parse_poset(const Json& j) {
  if (!j.is_object() || !j.contains("size") || !j.at("size").is_number_integer())
    fail(errc::parse_error, "poset document needs an integer 'size'");
  int n = j.at("size").get<int>();
  const char* key = j.contains("covers") ? "covers" : j.contains("leq") ? "leq" : nullptr;
  if (!key) fail(errc::parse_error, "poset document needs 'covers' or 'leq'");
  std::vector<std::pair<int, int>> pairs;
  for (const Json& e : j.at(key)) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      fail(errc::parse_error, "relation entries must be [lower, upper] pairs");
    pairs.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  return Poset::from_covers(n, pairs);
}

inline Poset parse_poset_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(errc::parse_error, "malformed JSON");
  return parse_poset(j);
}

inline Json poset_to_json(const Poset& P) {
  Json covers = Json::array();
  for (auto [a, b] : P.cover_pairs()) covers.push_back(Json::array({a, b}));
  return Json{{"size", P.size()}, {"covers", covers}};
}

// {"label": a, "children": [...]} with null for a leaf.
inline SchroderTree parse_schroder(const Json& j) {
  if (j.is_null()) return SchroderTree::leaf();
  if (!j.is_object() || !j.contains("label") || !j.contains("children"))
    fail(errc::parse_error, "tree node needs 'label' and 'children'");
  std::vector<SchroderTree> kids;
  for (const Json& c : j.at("children")) kids.push_back(parse_schroder(c));
  return SchroderTree::node(j.at("label").get<int>(), std::move(kids));
}

inline Json schroder_to_json(const SchroderTree& t) {
  if (t.is_leaf()) return nullptr;
  Json kids = Json::array();
  for (const SchroderTree& c : t.children()) kids.push_back(schroder_to_json(c));
  return Json{{"label", t.label()}, {"children", kids}};
}

// [{"coeff": "p/q", "tree": "(a _ _)"} ...]
inline Json poly_to_json(const TreePoly& p) {
  Json out = Json::array();
  for (const auto& [t, c] : p.terms())
    out.push_back(Json{{"coeff", to_string(c)}, {"tree", to_sexpr(t)}});
  return out;
}

inline TreePoly parse_poly(const Json& j, int arity) {
  TreePoly p(arity);
  for (const Json& e : j)
    p.add(parse_sexpr(e.at("tree").get<std::string>()),
          parse_rational(e.at("coeff").get<std::string>()));
  return p;
}

}  // namespace asq
