#pragma once

// Graphviz output of the Hasse diagram (covering pairs, drawn upwards).

#include <string>
#include <vector>

#include "sctop/order.hpp"
#include "sctop/space.hpp"

namespace sctop {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

inline std::string to_dot(const FinPoset& p, const std::vector<std::string>& names, const std::string& graph = "hasse") {
  std::string out = "digraph " + graph + " {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < p.size(); ++i) out += "  n" + std::to_string(i) + " [label=" + dot_quote(names.at(i)) + "];\n";
  for (auto [a, b] : p.covers()) out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
  return out + "}\n";
}

inline std::string to_dot(const FinPoset& p) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < p.size(); ++i) names.push_back(std::to_string(i));
  return to_dot(p, names);
}

inline std::string to_dot(const FinSpace& x, const std::vector<std::string>& names) { return to_dot(x.order(), names); }
inline std::string to_dot(const FinSpace& x) { return to_dot(x.order()); }

}  // namespace sctop
