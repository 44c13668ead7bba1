#pragma once

#include <sstream>
#include <string>

#include "adc.hpp"
#include "basis.hpp"
#include "doublecat.hpp"
#include "graymaps.hpp"

namespace graycat {

namespace detail {
inline std::string dot_quote(const std::string& s) {
  std::string r = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') r += '\\';
    r += c;
  }
  return r + "\"";
}
}  // namespace detail

// Hasse diagram of the precedence relation on basis elements.
inline std::string export_dot(const Adc& a, const std::string& name = "adc") {
  std::ostringstream o;
  o << "digraph " << detail::dot_quote(name) << " {\n  rankdir=LR;\n";
  for (auto e : a.elements())
    o << "  " << detail::dot_quote(a.id(e)) << " [label=" << detail::dot_quote(a.id(e) + " (" + std::to_string(e.degree) + ")")
      << "];\n";
  for (auto [x, y] : precedence_edges(a)) o << "  " << detail::dot_quote(a.id(x)) << " -> " << detail::dot_quote(a.id(y)) << ";\n";
  o << "}\n";
  return o.str();
}

// Objects with vertical cells drawn downward and horizontal cells dashed, and one record per
// square laid out as a grid of its boundary.
inline std::string export_dot(const DoubleCat& d, const std::string& name = "double") {
  std::ostringstream o;
  o << "digraph " << detail::dot_quote(name) << " {\n  node [shape=circle];\n";
  for (auto& x : d.objects) o << "  " << detail::dot_quote("o:" + x) << " [label=" << detail::dot_quote(x) << "];\n";
  for (std::size_t f = 0; f < d.vcells.size(); ++f) {
    if (std::find(d.vunit.begin(), d.vunit.end(), f) != d.vunit.end()) continue;
    auto& a = d.vcells[f];
    o << "  " << detail::dot_quote("o:" + d.objects[a.source]) << " -> " << detail::dot_quote("o:" + d.objects[a.target])
      << " [label=" << detail::dot_quote(a.label) << "];\n";
  }
  for (std::size_t u = 0; u < d.hcells.size(); ++u) {
    if (std::find(d.hunit.begin(), d.hunit.end(), u) != d.hunit.end()) continue;
    auto& a = d.hcells[u];
    o << "  " << detail::dot_quote("o:" + d.objects[a.source]) << " -> " << detail::dot_quote("o:" + d.objects[a.target])
      << " [label=" << detail::dot_quote(a.label) << ", style=dashed, constraint=false];\n";
  }
  o << "  subgraph cluster_squares {\n    label=\"squares\";\n    node [shape=record];\n";
  auto esc = [](const std::string& s) {
    std::string r;
    for (char c : s) {
      if (c == '|' || c == '{' || c == '}' || c == '<' || c == '>') r += '\\';
      r += c;
    }
    return r;
  };
  for (std::size_t q = 0; q < d.squares.size(); ++q) {
    auto& s = d.squares[q];
    std::string label = "{" + esc(d.hcells[s.top].label) + "|{" + esc(d.vcells[s.left].label) + "|" +
                        std::to_string(q) + "|" + esc(d.vcells[s.right].label) + "}|" + esc(d.hcells[s.bottom].label) +
                        "}";
    o << "    " << detail::dot_quote("s:" + std::to_string(q)) << " [label=" << detail::dot_quote(label) << "];\n";
  }
  o << "  }\n}\n";
  return o.str();
}

// The legs of a decomposition into the colimit and the comparison to the target.
inline std::string export_dot(const DecompositionWitness& w, const std::string& name = "decomposition") {
  std::ostringstream o;
  auto sizes = [](const Adc& a) {
    std::string s;
    for (auto n : a.sizes()) s += (s.empty() ? "" : ",") + std::to_string(n);
    return "(" + s + ")";
  };
  o << "digraph " << detail::dot_quote(name) << " {\n";
  o << "  colimit [label=" << detail::dot_quote("colimit " + sizes(w.colimit)) << "];\n";
  o << "  target [label=" << detail::dot_quote("target " + sizes(w.target)) << "];\n";
  for (std::size_t k = 0; k < w.legs.size(); ++k) {
    std::string n = "piece" + std::to_string(k);
    o << "  " << n << " [label=" << detail::dot_quote("piece " + std::to_string(k) + " " + sizes(w.legs[k].source()))
      << "];\n  " << n << " -> colimit;\n";
  }
  o << "  colimit -> target [label=" << detail::dot_quote(w.ok ? "iso" : "not iso") << "];\n}\n";
  return o.str();
}

}  // namespace graycat
