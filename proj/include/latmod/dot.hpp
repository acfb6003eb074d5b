#pragma once

#include <string>

#include "latmod/lattice.hpp"
#include "latmod/module.hpp"

namespace latmod {

enum class Side { lattice, module };

namespace detail {

inline std::string dot_quote(std::string const& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

}  // namespace detail

/// Hasse diagram as a DOT digraph: nodes in name order, one edge per cover
/// from the lower element to the upper one.
template <class Tag>
std::string emit_dot(BasicLattice<Tag> const& lat, std::string const& graph_name) {
  std::string out = "digraph " + graph_name + " {\n";
  for (auto e : lat.elements()) out += "  " + detail::dot_quote(lat.name(e)) + ";\n";
  for (auto const& [lo, hi] : lat.covers()) {
    out += "  " + detail::dot_quote(lat.name(lo)) + " -> " + detail::dot_quote(lat.name(hi)) + ";\n";
  }
  return out + "}\n";
}

inline std::string emit_dot(InstanceBundle const& b, Side side) {
  return side == Side::lattice ? emit_dot(b.module.scalars().lattice(), "lattice")
                               : emit_dot(b.module.carrier(), "module");
}

}  // namespace latmod
