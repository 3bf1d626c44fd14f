#pragma once

#include <string>
#include <vector>

#include "finduality/duality.hpp"
#include "finduality/lattice.hpp"
#include "finduality/pervin.hpp"
#include "finduality/poset.hpp"

namespace finduality {

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

/// Hasse diagram, edges drawn from the lower to the upper element.
inline std::string emit_dot(const FinPoset& P, const std::vector<std::string>& names, const std::string& graph = "G") {
  std::string s = "digraph " + detail::dot_quote(graph) + " {\n  rankdir=BT;\n";
  for (int a = 0; a < P.size(); ++a)
    s += "  n" + std::to_string(a) + " [label=" + detail::dot_quote(names[a]) + "];\n";
  for (auto [a, b] : P.covers()) s += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
  return s + "}\n";
}

inline std::string emit_dot(const FinLattice& L) { return emit_dot(L.poset(), L.names(), "lattice"); }

/// The family ordered by inclusion.
inline std::string emit_dot(const PervinSpace& P) {
  const FinLattice L = P.family_lattice();
  return emit_dot(L.poset(), L.names(), "pervin");
}

/// The order of a Priestley space on its points.
inline std::string emit_dot(const PriestleySpace& Y) { return emit_dot(Y.order, Y.ground, "priestley"); }

}  // namespace finduality
