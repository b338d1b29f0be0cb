#pragma once

// JSON readers and writers for every structure the command line accepts or
// emits.  Shape problems (malformed text, missing members, non-integer
// entries, inconsistent sizes) raise parse_error; anything structural beyond
// shape is delegated to the semantic validators, so their error codes pass
// through unchanged.  Writers emit objects with sorted keys and integers
// only, and reading back what was written reproduces the structure exactly.

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "parcoh/bridge.hpp"
#include "parcoh/cohomology.hpp"
#include "parcoh/errors.hpp"
#include "parcoh/group.hpp"
#include "parcoh/inverse_semigroup.hpp"
#include "parcoh/partial_module.hpp"
#include "parcoh/schur.hpp"

namespace parcoh {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Parsing helpers: every shape defect names what was being read.
// ---------------------------------------------------------------------------

inline json parse_json_text(const std::string& text, const std::string& origin) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw parse_error(origin + ": not valid JSON");
  return j;
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), path);
}

namespace detail {

inline const json& member(const json& j, const char* key, const std::string& what) {
  if (!j.is_object()) throw parse_error(what + " must be a JSON object");
  auto it = j.find(key);
  if (it == j.end())
    throw parse_error(what + " is missing the \"" + key + "\" member");
  return *it;
}

inline int as_int(const json& j, const std::string& what) {
  if (!j.is_number_integer()) throw parse_error(what + " must be an integer");
  return j.get<int>();
}

inline std::vector<int> as_int_row(const json& j, const std::string& what) {
  if (!j.is_array()) throw parse_error(what + " must be an array");
  std::vector<int> row;
  row.reserve(j.size());
  for (const json& v : j) row.push_back(as_int(v, what + " entry"));
  return row;
}

inline std::vector<std::vector<int>> as_table(const json& j, const std::string& what) {
  if (!j.is_array()) throw parse_error(what + " must be an array of rows");
  std::vector<std::vector<int>> table;
  table.reserve(j.size());
  for (const json& row : j) table.push_back(as_int_row(row, what + " row"));
  return table;
}

// {"n": int, "table": [[int]]} with the stated size.
inline std::vector<std::vector<int>> sized_table(const json& j, const std::string& what) {
  int n = as_int(member(j, "n", what), what + " \"n\"");
  std::vector<std::vector<int>> table = as_table(member(j, "table", what), what + " \"table\"");
  if (static_cast<int>(table.size()) != n)
    throw parse_error(what + " \"table\" must have exactly \"n\" rows");
  for (const std::vector<int>& row : table)
    if (static_cast<int>(row.size()) != n)
      throw parse_error(what + " \"table\" rows must have exactly \"n\" entries");
  return table;
}

// An object whose keys are exactly the decimal element indices 0..n-1.
inline std::vector<json> per_element(const json& j, int n, const std::string& what) {
  if (!j.is_object()) throw parse_error(what + " must be a JSON object");
  if (static_cast<int>(j.size()) != n)
    throw parse_error(what + " must have one member per group element");
  std::vector<json> out(n);
  for (int x = 0; x < n; ++x) {
    auto it = j.find(std::to_string(x));
    if (it == j.end())
      throw parse_error(what + " is missing element \"" + std::to_string(x) + "\"");
    out[x] = *it;
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Readers.  Each returns a fully validated structure.
// ---------------------------------------------------------------------------

inline FiniteGroup group_from_json(const json& j, const std::string& what = "group") {
  return make_group(detail::sized_table(j, what));
}

inline InvSemigroup invsemigroup_from_json(const json& j,
                                           const std::string& what = "invsemigroup") {
  return make_inv_semigroup(detail::sized_table(j, what));
}

inline CommMonoid monoid_from_json(const json& j, const std::string& what = "monoid") {
  return make_comm_monoid(detail::sized_table(j, what));
}

// {"group": {...}, "monoid": {...},
//  "unit_idems": {"x": e, ...},
//  "theta": {"x": [[from, to], ...], ...}}
inline PartialGModule pmodule_from_json(const json& j, const std::string& what = "pmodule") {
  FiniteGroup g = group_from_json(detail::member(j, "group", what), what + " \"group\"");
  CommMonoid a = monoid_from_json(detail::member(j, "monoid", what), what + " \"monoid\"");

  std::vector<int> unit_idems(g.n);
  std::vector<json> ue =
      detail::per_element(detail::member(j, "unit_idems", what), g.n, what + " \"unit_idems\"");
  for (int x = 0; x < g.n; ++x)
    unit_idems[x] = detail::as_int(ue[x], what + " \"unit_idems\" value");

  std::vector<std::vector<int>> theta(g.n, std::vector<int>(a.n, -1));
  std::vector<json> te =
      detail::per_element(detail::member(j, "theta", what), g.n, what + " \"theta\"");
  for (int x = 0; x < g.n; ++x) {
    std::string where = what + " \"theta\" element " + std::to_string(x);
    std::vector<std::vector<int>> pairs = detail::as_table(te[x], where);
    for (const std::vector<int>& p : pairs) {
      if (p.size() != 2) throw parse_error(where + " entries must be [from, to] pairs");
      if (p[0] < 0 || p[0] >= a.n || p[1] < 0 || p[1] >= a.n)
        throw parse_error(where + " pair is out of range");
      if (theta[x][p[0]] != -1) throw parse_error(where + " maps an element twice");
      theta[x][p[0]] = p[1];
    }
  }
  return validate_partial_module(g, a, unit_idems, theta);
}

// pmodule members plus {"field_q": q, "scalar": [[int]]} (q rows, one per
// field element, each of carrier length).
inline KLinearModule kmodule_from_json(const json& j, const std::string& what = "kmodule") {
  PartialGModule m = pmodule_from_json(j, what);
  int q = detail::as_int(detail::member(j, "field_q", what), what + " \"field_q\"");
  std::vector<std::vector<int>> scalar =
      detail::as_table(detail::member(j, "scalar", what), what + " \"scalar\"");
  return validate_k_linear(m, q, scalar);
}

// {"group": {...}, "coeffs": {...}, "action": [[int]]} (one row per group
// element, each a permutation of the coefficient group).
inline GroupModule gmodule_from_json(const json& j, const std::string& what = "gmodule") {
  FiniteGroup g = group_from_json(detail::member(j, "group", what), what + " \"group\"");
  FiniteGroup a = group_from_json(detail::member(j, "coeffs", what), what + " \"coeffs\"");
  std::vector<std::vector<int>> action =
      detail::as_table(detail::member(j, "action", what), what + " \"action\"");
  return validate_group_module(g, a, action);
}

// ---------------------------------------------------------------------------
// Writers.
// ---------------------------------------------------------------------------

inline json sized_table_to_json(const std::vector<std::vector<int>>& table) {
  json j;
  j["n"] = static_cast<int>(table.size());
  j["table"] = table;
  return j;
}

inline json group_to_json(const FiniteGroup& g) { return sized_table_to_json(g.table); }

inline json invsemigroup_to_json(const InvSemigroup& s) { return sized_table_to_json(s.table); }

inline json pmodule_to_json(const PartialGModule& m) {
  json j;
  j["group"] = sized_table_to_json(m.group.table);
  j["monoid"] = sized_table_to_json(m.monoid.table);
  json ue = json::object();
  json te = json::object();
  for (int x = 0; x < m.group.n; ++x) {
    ue[std::to_string(x)] = m.unit_idem[x];
    json pairs = json::array();
    for (int from = 0; from < m.monoid.n; ++from)
      if (m.theta[x][from] >= 0) pairs.push_back(json::array({from, m.theta[x][from]}));
    te[std::to_string(x)] = std::move(pairs);
  }
  j["unit_idems"] = std::move(ue);
  j["theta"] = std::move(te);
  return j;
}

inline json kmodule_to_json(const KLinearModule& km) {
  json j = pmodule_to_json(km.mod);
  j["field_q"] = km.k.q;
  j["scalar"] = km.scalar;
  return j;
}

inline json gmodule_to_json(const GroupModule& m) {
  json j;
  j["group"] = sized_table_to_json(m.group.table);
  j["coeffs"] = sized_table_to_json(m.coeffs.table);
  j["action"] = m.action;
  return j;
}

inline json presentation_to_json(const AbelianPresentation& p) {
  json factors = json::array();
  for (i64 d : p.orders) factors.push_back(d);
  return factors;
}

inline json cohomology_to_json(const Cohomology& h) {
  json j;
  j["degree"] = h.degree;
  j["invariant_factors"] = presentation_to_json(h.group());
  json reps = json::array();
  for (const Cochain& f : h.reps) reps.push_back(f.values);
  j["representatives"] = std::move(reps);
  return j;
}

}  // namespace parcoh
