#pragma once

#include <vector>

#include "nu.hpp"

namespace graycat {

// Table of iterated sign-split boundaries of a single basis element.
inline NuCell atom(const Adc& a, Elem b) {
  NuCell x;
  x.dim = b.degree;
  x.minus.resize(b.degree + 1);
  x.plus.resize(b.degree + 1);
  x.minus[b.degree] = x.plus[b.degree] = Chain::basis(b.index);
  for (int k = b.degree; k >= 1; --k) {
    x.minus[k - 1] = a.boundary_of(k, x.minus[k]).negative_part();
    x.plus[k - 1] = a.boundary_of(k, x.plus[k]).positive_part();
  }
  return x;
}

struct BasisReport {
  bool unital = true;
  bool atomic = true;
  bool loop_free = true;          // strong form: the precedence relation below
  bool steiner_loop_free = true;  // per-degree relations <_i
  bool all() const { return unital && atomic && loop_free; }
};

// a precedes b when a is in the negative boundary of b, or b is in the positive boundary of a.
inline std::vector<std::pair<Elem, Elem>> precedence_edges(const Adc& a) {
  std::vector<std::pair<Elem, Elem>> r;
  for (int d = 1; d <= a.dim(); ++d)
    for (std::size_t i = 0; i < a.size(d); ++i)
      for (auto [j, c] : a.boundary(d, i)) {
        if (c < 0) r.push_back({{d - 1, j}, {d, i}});
        else r.push_back({{d, i}, {d - 1, j}});
      }
  std::sort(r.begin(), r.end());
  return r;
}

namespace detail {
inline bool acyclic(std::size_t n, const std::vector<std::vector<std::size_t>>& out) {
  std::vector<int> state(n, 0);
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (state[s]) continue;
    stack.push_back({s, 0});
    state[s] = 1;
    while (!stack.empty()) {
      auto& [v, k] = stack.back();
      if (k < out[v].size()) {
        std::size_t w = out[v][k++];
        if (state[w] == 1) return false;
        if (state[w] == 0) {
          state[w] = 1;
          stack.push_back({w, 0});
        }
      } else {
        state[v] = 2;
        stack.pop_back();
      }
    }
  }
  return true;
}

inline bool shares_support(const Chain& x, const Chain& y) {
  for (auto [i, c] : x)
    if (y[i] != 0) return true;
  return false;
}
}  // namespace detail

inline BasisReport check_basis_conditions(const Adc& a) {
  require_valid(a, "check_basis_conditions");
  BasisReport r;
  auto elems = a.elements();
  std::map<Elem, std::size_t> pos;
  for (std::size_t k = 0; k < elems.size(); ++k) pos[elems[k]] = k;

  std::vector<NuCell> atoms;
  for (auto e : elems) {
    atoms.push_back(atom(a, e));
    const NuCell& x = atoms.back();
    if (a.augment(x.minus[0]) != 1 || a.augment(x.plus[0]) != 1) r.unital = false;
    if (!nu_table_violations(a, x).empty()) r.atomic = false;
  }

  std::vector<std::vector<std::size_t>> out(elems.size());
  for (auto [p, q] : precedence_edges(a)) out[pos[p]].push_back(pos[q]);
  r.loop_free = detail::acyclic(elems.size(), out);

  for (int i = 0; i < a.dim(); ++i) {
    std::vector<std::size_t> higher;
    for (std::size_t k = 0; k < elems.size(); ++k)
      if (elems[k].degree > i) higher.push_back(k);
    std::vector<std::vector<std::size_t>> rel(higher.size());
    for (std::size_t p = 0; p < higher.size(); ++p)
      for (std::size_t q = 0; q < higher.size(); ++q)
        if (detail::shares_support(atoms[higher[p]].plus[i], atoms[higher[q]].minus[i]))
          rel[p].push_back(q);
    if (!detail::acyclic(higher.size(), rel)) r.steiner_loop_free = false;
  }
  return r;
}

}  // namespace graycat
