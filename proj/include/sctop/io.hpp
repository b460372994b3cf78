#pragma once

// JSON interchange. Subsets are sorted index arrays; families and opens are
// listed in canonical subset order; orders are given as the full relation.

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sctop/completion.hpp"
#include "sctop/dsl.hpp"
#include "sctop/error.hpp"
#include "sctop/maps.hpp"
#include "sctop/order.hpp"
#include "sctop/space.hpp"

namespace sctop::io {

using json = nlohmann::json;
using dsl::NamedSpace;

// ---------------------------------------------------------------------------
// Writing

inline json to_json(const Subset& s) { return s.indices(); }

inline json to_json(const SubsetFamily& f) {
  json sets = json::array();
  for (const auto& s : f) sets.push_back(to_json(s));
  return {{"kind", "family"}, {"size", f.universe()}, {"sets", sets}};
}

inline json relation_json(const FinPoset& p) {
  json leq = json::array();
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j)
      if (p.leq(i, j)) leq.push_back({i, j});
  return leq;
}

inline json to_json(const FinPoset& p, const std::vector<std::string>& names) {
  return {{"kind", "poset"}, {"size", p.size()}, {"names", names}, {"leq", relation_json(p)}};
}

inline json to_json(const NamedSpace& s) {
  json opens = json::array();
  for (const auto& u : s.space.opens()) opens.push_back(to_json(u));
  return {{"kind", "space"},
          {"size", s.space.size()},
          {"names", s.names},
          {"opens", opens},
          {"leq", relation_json(s.space.order())}};
}

inline json to_json(const FinSpace& x) { return to_json(NamedSpace{x, dsl::default_names(x.size())}); }

inline json to_json(const dsl::NamedMap& m) {
  return {{"kind", "map"}, {"from", to_json(m.from)}, {"to", to_json(m.to)}, {"table", m.map.table()}};
}

/// "{a,b}" for a subset of a named carrier.
inline std::string set_label(const Subset& s, const std::vector<std::string>& names) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t i) {
    out += (first ? "" : ",") + names.at(i);
    first = false;
  });
  return out + "}";
}

/// Names for the points of the completion: the closed set each point is.
inline std::vector<std::string> completion_names(const CompletionResult& c, const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (auto m : c.members) out.push_back(set_label(c.gamma.elements[m], names));
  return out;
}

inline json to_json(const CompletionResult& c, const std::vector<std::string>& names) {
  json elements = json::array();
  for (const auto& e : c.gamma.elements) elements.push_back(to_json(e));
  std::vector<std::string> gnames;
  for (const auto& e : c.gamma.elements) gnames.push_back(set_label(e, names));
  json eta = json::array();
  for (std::size_t i = 0; i < c.source.size(); ++i) {
    const auto& set = c.gamma.elements[c.members[c.eta(i)]];
    eta.push_back({{"point", names[i]}, {"image", c.eta(i)}, {"closure", to_json(set)}});
  }
  return {{"kind", "completion"},
          {"source", to_json(NamedSpace{c.source, names})},
          {"gamma", {{"elements", elements}, {"space", to_json(NamedSpace{c.gamma.space, gnames})}}},
          {"psi", to_json(c.psi_image)},
          {"closure", to_json(c.closure_image)},
          {"members", c.members},
          {"completion", to_json(NamedSpace{c.completion, completion_names(c, names)})},
          {"eta", eta},
          {"witnesses",
           {{"eta_si_plus_continuous", c.witnesses.eta_si_plus_continuous},
            {"completion_strongly_complete", c.witnesses.completion_strongly_complete}}}};
}

// ---------------------------------------------------------------------------
// Reading

namespace detail {

inline const json& field(const json& j, const std::string& key, const std::string& ptr) {
  if (!j.is_object()) throw SchemaError(ptr, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(ptr + "/" + key, "missing field");
  return *it;
}

inline void expect_kind(const json& j, const std::string& kind, const std::string& ptr) {
  const json& k = field(j, "kind", ptr);
  if (!k.is_string() || k.get<std::string>() != kind) throw SchemaError(ptr + "/kind", "expected \"" + kind + "\"");
}

inline std::size_t index(const json& j, const std::string& ptr) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    throw SchemaError(ptr, "expected a non-negative integer");
  return j.get<std::size_t>();
}

inline std::size_t bounded_index(const json& j, std::size_t n, const std::string& ptr) {
  const std::size_t i = index(j, ptr);
  if (i >= n) throw SchemaError(ptr, "index " + std::to_string(i) + " out of range for size " + std::to_string(n));
  return i;
}

inline const json& array(const json& j, const std::string& ptr) {
  if (!j.is_array()) throw SchemaError(ptr, "expected an array");
  return j;
}

inline std::size_t size_field(const json& j, const std::string& ptr, std::size_t limit = kDefaultCap) {
  const std::size_t n = index(field(j, "size", ptr), ptr + "/size");
  if (n > limit) throw SchemaError(ptr + "/size", "size " + std::to_string(n) + " exceeds cap " + std::to_string(limit));
  return n;
}

inline std::vector<std::string> names_field(const json& j, std::size_t n, const std::string& ptr) {
  auto it = j.find("names");
  if (it == j.end()) return dsl::default_names(n);
  const json& a = array(*it, ptr + "/names");
  if (a.size() != n) throw SchemaError(ptr + "/names", "expected " + std::to_string(n) + " names");
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < n; ++i) {
    if (!a[i].is_string()) throw SchemaError(ptr + "/names/" + std::to_string(i), "expected a string");
    out.push_back(a[i].get<std::string>());
    if (!seen.insert(out.back()).second)
      throw SchemaError(ptr + "/names/" + std::to_string(i), "duplicate name '" + out.back() + "'");
  }
  return out;
}

}  // namespace detail

inline Subset subset_from_json(const json& j, std::size_t n, const std::string& ptr = "") {
  detail::array(j, ptr);
  Subset s(n);
  for (std::size_t i = 0; i < j.size(); ++i) s.insert(detail::bounded_index(j[i], n, ptr + "/" + std::to_string(i)));
  return s;
}

inline SubsetFamily family_from_json(const json& j, const std::string& ptr = "") {
  detail::expect_kind(j, "family", ptr);
  const std::size_t n = detail::size_field(j, ptr, 64);
  const json& sets = detail::array(detail::field(j, "sets", ptr), ptr + "/sets");
  std::vector<Subset> out;
  for (std::size_t i = 0; i < sets.size(); ++i) out.push_back(subset_from_json(sets[i], n, ptr + "/sets/" + std::to_string(i)));
  return SubsetFamily(n, std::move(out));
}

inline std::pair<FinPoset, std::vector<std::string>> poset_from_json(const json& j, const std::string& ptr = "") {
  detail::expect_kind(j, "poset", ptr);
  const std::size_t n = detail::size_field(j, ptr);
  auto names = detail::names_field(j, n, ptr);
  const json& leq = detail::array(detail::field(j, "leq", ptr), ptr + "/leq");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t k = 0; k < leq.size(); ++k) {
    const std::string p = ptr + "/leq/" + std::to_string(k);
    if (!leq[k].is_array() || leq[k].size() != 2) throw SchemaError(p, "expected a pair [i, j]");
    pairs.emplace_back(detail::bounded_index(leq[k][0], n, p + "/0"), detail::bounded_index(leq[k][1], n, p + "/1"));
  }
  try {
    return {FinPoset::from_pairs(n, pairs), std::move(names)};
  } catch (const Error& e) {
    throw SchemaError(ptr + "/leq", e.what());
  }
}

inline NamedSpace space_from_json(const json& j, const std::string& ptr = "") {
  detail::expect_kind(j, "space", ptr);
  const std::size_t n = detail::size_field(j, ptr);
  auto names = detail::names_field(j, n, ptr);
  const json& opens = detail::array(detail::field(j, "opens", ptr), ptr + "/opens");
  std::vector<Subset> us;
  for (std::size_t i = 0; i < opens.size(); ++i)
    us.push_back(subset_from_json(opens[i], n, ptr + "/opens/" + std::to_string(i)));
  FinSpace x;
  try {
    x = FinSpace::from_opens(n, std::move(us));
  } catch (const Error& e) {
    throw SchemaError(ptr + "/opens", e.what());
  }
  if (auto it = j.find("leq"); it != j.end() && *it != relation_json(x.order()))
    throw SchemaError(ptr + "/leq", "relation differs from the specialization order of the opens");
  return {x, std::move(names)};
}

inline dsl::NamedMap map_from_json(const json& j, const std::string& ptr = "") {
  detail::expect_kind(j, "map", ptr);
  NamedSpace from = space_from_json(detail::field(j, "from", ptr), ptr + "/from");
  NamedSpace to = space_from_json(detail::field(j, "to", ptr), ptr + "/to");
  const json& t = detail::array(detail::field(j, "table", ptr), ptr + "/table");
  if (t.size() != from.space.size())
    throw SchemaError(ptr + "/table", "expected " + std::to_string(from.space.size()) + " entries");
  std::vector<std::size_t> table;
  for (std::size_t i = 0; i < t.size(); ++i)
    table.push_back(detail::bounded_index(t[i], to.space.size(), ptr + "/table/" + std::to_string(i)));
  SpaceMap m(from.space, to.space, std::move(table));
  return {std::move(from), std::move(to), std::move(m)};
}

/// Reads a completion report. The completion is rebuilt from the source and
/// every stored field must agree with it.
inline std::pair<CompletionResult, std::vector<std::string>> completion_from_json(const json& j,
                                                                                  const std::string& ptr = "") {
  detail::expect_kind(j, "completion", ptr);
  NamedSpace src = space_from_json(detail::field(j, "source", ptr), ptr + "/source");
  CompletionResult c = strong_completion(src.space);
  const json expected = to_json(c, src.names);
  for (const auto& [key, value] : expected.items()) {
    const json& got = detail::field(j, key, ptr);
    if (got == value) continue;
    std::string p = ptr + "/" + key;
    if (got.is_structured() && value.is_structured()) p += json::diff(value, got).at(0).at("path").get<std::string>();
    throw SchemaError(p, "value does not match the completion of the source");
  }
  return {std::move(c), std::move(src.names)};
}

}  // namespace sctop::io
