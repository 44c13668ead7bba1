#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "chain_map.hpp"

namespace graycat {

namespace detail {

// Colour refinement on both complexes at once, so colours are comparable.
inline std::pair<std::map<Elem, int>, std::map<Elem, int>> joint_colours(const Adc& a, const Adc& b) {
  struct Side {
    const Adc* adc;
    std::map<Elem, int> colour;
    std::map<Elem, std::vector<std::pair<Elem, Coeff>>> cofaces;
  };
  Side sides[2] = {{&a, {}, {}}, {&b, {}, {}}};
  for (auto& s : sides) {
    for (auto e : s.adc->elements()) {
      s.colour[e] = 0;
      if (e.degree > 0)
        for (auto [j, c] : s.adc->boundary(e.degree, e.index)) s.cofaces[{e.degree - 1, j}].push_back({e, c});
    }
  }
  std::size_t classes = 0;
  for (int round = 0; round < 64; ++round) {
    std::map<std::vector<std::int64_t>, int> dict;
    std::map<Elem, std::vector<std::int64_t>> sig[2];
    for (int k = 0; k < 2; ++k) {
      Side& s = sides[k];
      for (auto e : s.adc->elements()) {
        std::vector<std::int64_t> v{e.degree, s.colour[e]};
        v.push_back(e.degree == 0 ? s.adc->augmentation(e.index) : 0);
        std::vector<std::pair<std::int64_t, std::int64_t>> down, up;
        if (e.degree > 0)
          for (auto [j, c] : s.adc->boundary(e.degree, e.index)) down.push_back({c, s.colour[{e.degree - 1, j}]});
        for (auto [f, c] : s.cofaces[e]) up.push_back({c, s.colour[f]});
        std::sort(down.begin(), down.end());
        std::sort(up.begin(), up.end());
        v.push_back(static_cast<std::int64_t>(down.size()));
        for (auto [c, col] : down) v.insert(v.end(), {c, col});
        v.push_back(-1);
        for (auto [c, col] : up) v.insert(v.end(), {c, col});
        sig[k][e] = std::move(v);
        dict.emplace(sig[k][e], 0);
      }
    }
    int next = 0;
    for (auto& [key, id] : dict) id = next++;
    for (int k = 0; k < 2; ++k)
      for (auto& [e, v] : sig[k]) sides[k].colour[e] = dict[v];
    if (dict.size() == classes) break;
    classes = dict.size();
  }
  return {sides[0].colour, sides[1].colour};
}

}  // namespace detail

// Searches for a bijection of bases (all coefficients +1) commuting with
// boundaries and augmentations. Endpoint designations are ignored.
inline std::optional<ChainMap> find_isomorphism(const Adc& a, const Adc& b, std::uint64_t budget = 20'000'000) {
  if (a.sizes() != b.sizes()) return std::nullopt;
  auto [ca, cb] = detail::joint_colours(a, b);
  {
    std::multiset<int> x, y;
    for (auto& [e, c] : ca) x.insert(c);
    for (auto& [e, c] : cb) y.insert(c);
    if (x != y) return std::nullopt;
  }

  // Order: points by breadth-first search over edges, each higher element
  // right after its boundary support.
  std::vector<Elem> order;
  std::set<Elem> placed;
  auto flush = [&]() {
    bool grew = true;
    while (grew) {
      grew = false;
      for (int d = 1; d <= a.dim(); ++d)
        for (std::size_t i = 0; i < a.size(d); ++i) {
          Elem e{d, i};
          if (placed.count(e)) continue;
          bool ready = true;
          for (auto [j, c] : a.boundary(d, i))
            if (!placed.count({d - 1, j})) ready = false;
          if (ready) {
            order.push_back(e);
            placed.insert(e);
            grew = true;
          }
        }
    }
  };
  std::vector<std::vector<std::size_t>> nbr(a.size(0));
  for (std::size_t i = 0; i < a.size(1); ++i) {
    std::vector<std::size_t> ends;
    for (auto [j, c] : a.boundary(1, i)) ends.push_back(j);
    for (auto p : ends)
      for (auto q : ends)
        if (p != q) nbr[p].push_back(q);
  }
  flush();
  std::vector<bool> seen(a.size(0), false);
  for (std::size_t s = 0; s < a.size(0); ++s) {
    if (seen[s]) continue;
    std::deque<std::size_t> q{s};
    seen[s] = true;
    while (!q.empty()) {
      auto p = q.front();
      q.pop_front();
      order.push_back({0, p});
      placed.insert({0, p});
      flush();
      for (auto n : nbr[p])
        if (!seen[n]) {
          seen[n] = true;
          q.push_back(n);
        }
    }
  }

  std::map<int, std::vector<Elem>> by_colour;
  for (auto& [e, c] : cb) by_colour[c].push_back(e);

  std::map<Elem, Elem> phi;
  std::set<Elem> used;
  std::uint64_t nodes = 0;
  auto rec = [&](auto& self, std::size_t k) -> bool {
    if (++nodes > budget) throw BudgetExceeded("find_isomorphism: node budget exceeded");
    if (k == order.size()) return true;
    Elem x = order[k];
    Chain want;
    if (x.degree > 0)
      for (auto [j, c] : a.boundary(x.degree, x.index)) want.add(phi[{x.degree - 1, j}].index, c);
    for (Elem y : by_colour[ca[x]]) {
      if (used.count(y)) continue;
      if (x.degree == 0 && a.augmentation(x.index) != b.augmentation(y.index)) continue;
      if (x.degree > 0 && b.boundary(y.degree, y.index) != want) continue;
      phi[x] = y;
      used.insert(y);
      if (self(self, k + 1)) return true;
      used.erase(y);
      phi.erase(x);
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  ChainMap f(a, b);
  for (auto [x, y] : phi) f.set(x, Chain::basis(y.index));
  return f;
}

inline bool isomorphic(const Adc& a, const Adc& b) { return find_isomorphism(a, b).has_value(); }

}  // namespace graycat
