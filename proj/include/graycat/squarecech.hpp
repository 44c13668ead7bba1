#pragma once

#include <array>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "adc_ops.hpp"
#include "doublecat.hpp"
#include "homsearch.hpp"
#include "strictcat.hpp"
#include "theta.hpp"

namespace graycat {

// a0 a 1-category, a1 a 2-category, map: raise(a0, 2) -> raise(a1, 2).
struct Filtration2 {
  StrictCat a0, a1;
  CatFunctor map;
};

inline ValidationReport validate_filtration(const Filtration2& f) {
  ValidationReport r;
  if (f.a0.dim > 1) r.push_back({"a0", "lower level must be a 1-category"});
  if (f.a1.dim > 2) r.push_back({"a1", "upper level must be a 2-category"});
  if (!r.empty()) return r;
  for (auto& v : validate_category(f.a0)) r.push_back({"a0 " + v.where, v.message});
  for (auto& v : validate_category(f.a1)) r.push_back({"a1 " + v.where, v.message});
  if (!r.empty()) return r;
  if (!f.map.source || !f.map.target || !(*f.map.source == raise_dim(f.a0, 2)) ||
      !(*f.map.target == raise_dim(f.a1, 2))) {
    r.push_back({"map", "functor must go from raise(a0, 2) to raise(a1, 2)"});
    return r;
  }
  return check_functor(f.map);
}

inline bool pair_condition(const Filtration2& f) {
  for (int k = 0; k <= 1; ++k) {
    std::set<std::size_t> img(f.map.map[k].begin(), f.map.map[k].end());
    if (img.size() != f.map.map[k].size()) return false;
  }
  return true;
}

// The filtration truncate(c, 1) -> c.
inline Filtration2 truncation_pair(const StrictCat& c) {
  if (c.dim > 2) throw InvalidInput("truncation_pair: expects a 2-category");
  StrictCat a1 = raise_dim(c, 2);
  StrictCat a0 = truncate(a1, 1);
  auto s = std::make_shared<const StrictCat>(raise_dim(a0, 2));
  auto t = std::make_shared<const StrictCat>(a1);
  CatFunctor f{s, t, {}};
  for (int k = 0; k <= 1; ++k) {
    f.map.emplace_back(a1.size(k));
    std::iota(f.map[k].begin(), f.map[k].end(), 0);
  }
  f.map.push_back(a1.identity[1]);
  return {a0, a1, f};
}

// Filtration mapping each cell of a0 to the cell of a1 with the same label.
inline Filtration2 filtration_by_labels(const StrictCat& a0, const StrictCat& a1) {
  auto s = std::make_shared<const StrictCat>(raise_dim(a0, 2));
  auto t = std::make_shared<const StrictCat>(raise_dim(a1, 2));
  CatFunctor f{s, t, std::vector<std::vector<std::size_t>>(3)};
  for (int k = 0; k <= 2; ++k)
    for (std::size_t x = 0; x < s->size(k); ++x) {
      auto y = t->find(k, s->label(k, x));
      if (!y && k > 0 && s->is_identity(k, x)) y = t->identity[k - 1][f(k - 1, s->source(k, x))];
      if (!y) throw InvalidInput("filtration_by_labels: no cell labelled '" + s->label(k, x) + "'");
      f.map[k].push_back(*y);
    }
  Filtration2 r{a0, a1, f};
  auto bad = validate_filtration(r);
  if (!bad.empty()) throw InvalidInput("filtration_by_labels: " + bad.front().where + ": " + bad.front().message);
  return r;
}

// The objects of c with identities only, included in c.
inline Filtration2 discrete_filtration(const StrictCat& c) {
  CatBuilder b(1);
  for (std::size_t x = 0; x < c.size(0); ++x) b.add(0, c.label(0, x));
  b.add_identities();
  return filtration_by_labels(b.build(), c);
}

// The double category of the Cech nerve's first two levels, with the a1 data behind each cell.
struct CechDouble {
  DoubleCat cat;
  std::vector<std::size_t> hcell_cell;  // a1 1-cell of each hcell
  std::vector<std::size_t> filler;      // a1 2-cell of each square
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> hcell_index;  // (x, y, u)
  std::map<std::array<std::size_t, 5>, std::size_t> square_index;  // (top, bottom, left, right, 2-cell)
};

// Objects and vertical cells from a0; horizontal cells x -> y are 1-cells F x -> F y of a1;
// a square (u, s, t, v) carries a 2-cell F s ; v => u ; F t of a1.
inline CechDouble cech_double(const Filtration2& filt) {
  auto bad = validate_filtration(filt);
  if (!bad.empty()) throw InvalidInput("cech_double: " + bad.front().where + ": " + bad.front().message);
  const StrictCat a0 = raise_dim(filt.a0, 1);
  const StrictCat& a1 = *filt.map.target;
  const CatFunctor& F = filt.map;
  CechDouble r;
  DoubleCat& d = r.cat;
  bool injective = pair_condition(filt);
  for (std::size_t x = 0; x < a0.size(0); ++x) d.objects.push_back(a0.label(0, x));
  for (std::size_t s = 0; s < a0.size(1); ++s) d.vcells.push_back({a0.label(1, s), a0.source(1, s), a0.target(1, s)});
  d.vunit = a0.identity[0];
  d.vcomp = a0.comp[1][0];
  for (std::size_t x = 0; x < a0.size(0); ++x)
    for (std::size_t y = 0; y < a0.size(0); ++y)
      for (std::size_t u = 0; u < a1.size(1); ++u) {
        if (a1.source(1, u) != F(0, x) || a1.target(1, u) != F(0, y)) continue;
        std::string l = injective ? a1.label(1, u) : "(" + d.objects[x] + "," + d.objects[y] + ":" + a1.label(1, u) + ")";
        r.hcell_index[{x, y, u}] = d.hcells.size();
        d.hcells.push_back({l, x, y});
        r.hcell_cell.push_back(u);
      }
  for (std::size_t x = 0; x < a0.size(0); ++x) d.hunit.push_back(r.hcell_index.at({x, x, a1.identity[0][F(0, x)]}));
  std::size_t nh = d.hcells.size();
  for (std::size_t h = 0; h < nh; ++h)
    for (std::size_t k = 0; k < nh; ++k)
      if (d.hcells[h].target == d.hcells[k].source)
        d.hcomp[{h, k}] = r.hcell_index.at(
            {d.hcells[h].source, d.hcells[k].target, a1.compose_or_throw(1, 0, r.hcell_cell[h], r.hcell_cell[k])});

  auto id2 = [&](std::size_t u) { return a1.identity[1][u]; };
  for (std::size_t top = 0; top < nh; ++top)
    for (std::size_t bottom = 0; bottom < nh; ++bottom)
      for (std::size_t s = 0; s < d.vcells.size(); ++s) {
        if (d.vcells[s].source != d.hcells[top].source || d.vcells[s].target != d.hcells[bottom].source) continue;
        for (std::size_t t = 0; t < d.vcells.size(); ++t) {
          if (d.vcells[t].source != d.hcells[top].target || d.vcells[t].target != d.hcells[bottom].target) continue;
          std::size_t from = a1.compose_or_throw(1, 0, F(1, s), r.hcell_cell[bottom]);
          std::size_t to = a1.compose_or_throw(1, 0, r.hcell_cell[top], F(1, t));
          for (std::size_t th = 0; th < a1.size(2); ++th) {
            if (a1.source(2, th) != from || a1.target(2, th) != to) continue;
            r.square_index[{top, bottom, s, t, th}] = d.squares.size();
            d.squares.push_back({"[" + d.hcells[top].label + "|" + d.vcells[s].label + "|" + d.vcells[t].label + "|" +
                                     d.hcells[bottom].label + "|" + a1.label(2, th) + "]",
                                 top, bottom, s, t});
            r.filler.push_back(th);
          }
        }
      }
  for (std::size_t h = 0; h < nh; ++h) {
    auto& c = d.hcells[h];
    d.sq_vunit.push_back(r.square_index.at({h, h, d.vunit[c.source], d.vunit[c.target], id2(r.hcell_cell[h])}));
  }
  for (std::size_t s = 0; s < d.vcells.size(); ++s) {
    auto& c = d.vcells[s];
    d.sq_hunit.push_back(r.square_index.at({d.hunit[c.source], d.hunit[c.target], s, s, id2(F(1, s))}));
  }
  std::size_t nq = d.squares.size();
  for (std::size_t a = 0; a < nq; ++a)
    for (std::size_t b = 0; b < nq; ++b) {
      auto &A = d.squares[a], &B = d.squares[b];
      if (A.bottom == B.top) {
        std::size_t upper = a1.compose_or_throw(2, 0, id2(F(1, A.left)), r.filler[b]);
        std::size_t lower = a1.compose_or_throw(2, 0, r.filler[a], id2(F(1, B.right)));
        std::size_t th = a1.compose_or_throw(2, 1, upper, lower);
        d.sq_vcomp[{a, b}] = r.square_index.at({A.top, B.bottom, *d.vcompose(A.left, B.left), *d.vcompose(A.right, B.right), th});
      }
      if (A.right == B.left) {
        std::size_t first = a1.compose_or_throw(2, 0, r.filler[a], id2(r.hcell_cell[B.bottom]));
        std::size_t second = a1.compose_or_throw(2, 0, id2(r.hcell_cell[A.top]), r.filler[b]);
        std::size_t th = a1.compose_or_throw(2, 1, first, second);
        d.sq_hcomp[{a, b}] =
            r.square_index.at({*d.hcompose(A.top, B.top), *d.hcompose(A.bottom, B.bottom), A.left, B.right, th});
      }
    }
  return r;
}

inline CechDouble sq_pair_indexed(const Filtration2& filt) {
  if (!pair_condition(filt)) throw InvalidInput("sq_pair: the filtration is not injective on objects and 1-cells");
  return cech_double(filt);
}

inline DoubleCat sq_pair(const Filtration2& filt) { return sq_pair_indexed(filt).cat; }

inline CechDouble sq2_indexed(const StrictCat& c) {
  require_valid_category(c, "sq2");
  return sq_pair_indexed(truncation_pair(c));
}

inline DoubleCat sq2(const StrictCat& c) { return sq2_indexed(c).cat; }

// ---- Cech levels ----

struct CechLevel {
  StrictCat cat;
  std::vector<std::vector<std::size_t>> objects;    // chains of hcells (objects of a0 at level 0)
  std::vector<std::vector<std::size_t>> morphisms;  // chains of squares (vcells at level 0)
};

namespace detail {
inline void chains(std::size_t m, std::size_t n, const std::function<bool(std::size_t, std::size_t)>& adjacent,
                   std::vector<std::size_t>& cur, std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == m) {
    out.push_back(cur);
    return;
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (!cur.empty() && !adjacent(cur.back(), x)) continue;
    cur.push_back(x);
    chains(m, n, adjacent, cur, out);
    cur.pop_back();
  }
}

inline std::string join_labels(const std::vector<std::size_t>& chain, const std::function<std::string(std::size_t)>& f) {
  std::string s;
  for (std::size_t i = 0; i < chain.size(); ++i) s += (i ? "," : "") + f(chain[i]);
  return s;
}
}  // namespace detail

// Level m: objects are m-chains of horizontal cells, morphisms m-chains of horizontally
// adjacent squares composed vertically.
inline CechLevel cech_level(const CechDouble& cd, std::size_t m) {
  const DoubleCat& d = cd.cat;
  CechLevel r;
  CatBuilder b(1);
  if (m == 0) {
    for (std::size_t x = 0; x < d.objects.size(); ++x) {
      b.add(0, d.objects[x]);
      r.objects.push_back({x});
    }
    for (std::size_t s = 0; s < d.vcells.size(); ++s) {
      b.add(1, d.vcells[s].label, d.vcells[s].source, d.vcells[s].target);
      r.morphisms.push_back({s});
    }
    for (std::size_t x = 0; x < d.objects.size(); ++x) b.set_identity(0, x, d.vunit[x]);
    for (auto [st, c] : d.vcomp) b.set_comp(1, 0, st.first, st.second, c);
    r.cat = b.build();
    return r;
  }
  std::vector<std::size_t> cur;
  detail::chains(
      m, d.hcells.size(), [&](std::size_t h, std::size_t k) { return d.hcells[h].target == d.hcells[k].source; }, cur,
      r.objects);
  detail::chains(
      m, d.squares.size(), [&](std::size_t p, std::size_t q) { return d.squares[p].right == d.squares[q].left; }, cur,
      r.morphisms);
  std::map<std::vector<std::size_t>, std::size_t> obj, mor;
  for (auto& o : r.objects) {
    obj[o] = b.add(0, detail::join_labels(o, [&](std::size_t h) { return d.hcells[h].label; }));
  }
  auto tops = [&](const std::vector<std::size_t>& q, bool bottom) {
    std::vector<std::size_t> h;
    for (auto x : q) h.push_back(bottom ? d.squares[x].bottom : d.squares[x].top);
    return h;
  };
  for (auto& q : r.morphisms)
    mor[q] = b.add(1, detail::join_labels(q, [&](std::size_t x) { return d.squares[x].label; }), obj.at(tops(q, false)),
                   obj.at(tops(q, true)));
  for (auto& o : r.objects) {
    std::vector<std::size_t> id;
    for (auto h : o) id.push_back(d.sq_vunit[h]);
    b.set_identity(0, obj.at(o), mor.at(id));
  }
  for (auto& p : r.morphisms)
    for (auto& q : r.morphisms) {
      if (tops(p, true) != tops(q, false)) continue;
      std::vector<std::size_t> c;
      for (std::size_t i = 0; i < m; ++i) c.push_back(*d.over(p[i], q[i]));
      b.set_comp(1, 0, mor.at(p), mor.at(q), mor.at(c));
    }
  r.cat = b.build();
  return r;
}

inline CechLevel cech_level(const Filtration2& filt, std::size_t m) { return cech_level(cech_double(filt), m); }

// Strict pullback of f: A -> C and g: B -> C, with the pair behind each cell.
struct Pullback {
  StrictCat cat;
  CatFunctor first, second;
  std::vector<std::map<std::pair<std::size_t, std::size_t>, std::size_t>> index;
};

inline Pullback strict_pullback(const CatFunctor& f, const CatFunctor& g) {
  if (!(*f.target == *g.target)) throw InvalidInput("strict_pullback: functors have different targets");
  const StrictCat &a = *f.source, &b = *g.source;
  if (a.dim != b.dim) throw InvalidInput("strict_pullback: sources have different dimensions");
  int n = a.dim;
  Pullback r;
  r.index.resize(n + 1);
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> cells(n + 1);
  CatBuilder bld(n);
  for (int k = 0; k <= n; ++k)
    for (std::size_t x = 0; x < a.size(k); ++x)
      for (std::size_t y = 0; y < b.size(k); ++y) {
        if (f(k, x) != g(k, y)) continue;
        std::size_t s = 0, t = 0;
        if (k > 0) {
          s = r.index[k - 1].at({a.source(k, x), b.source(k, y)});
          t = r.index[k - 1].at({a.target(k, x), b.target(k, y)});
        }
        r.index[k][{x, y}] = bld.add(k, "(" + a.label(k, x) + "," + b.label(k, y) + ")", s, t);
        cells[k].push_back({x, y});
      }
  for (int k = 0; k < n; ++k)
    for (std::size_t i = 0; i < cells[k].size(); ++i) {
      auto [x, y] = cells[k][i];
      bld.set_identity(k, i, r.index[k + 1].at({a.identity[k][x], b.identity[k][y]}));
    }
  for (int k = 1; k <= n; ++k)
    for (int j = 0; j < k; ++j)
      for (std::size_t p = 0; p < cells[k].size(); ++p)
        for (std::size_t q = 0; q < cells[k].size(); ++q) {
          auto [x1, y1] = cells[k][p];
          auto [x2, y2] = cells[k][q];
          auto cx = a.compose(k, j, x1, x2), cy = b.compose(k, j, y1, y2);
          if (cx && cy) bld.set_comp(k, j, p, q, r.index[k].at({*cx, *cy}));
        }
  auto cat = std::make_shared<const StrictCat>(bld.build());
  r.cat = *cat;
  r.first = {cat, f.source, std::vector<std::vector<std::size_t>>(n + 1)};
  r.second = {cat, g.source, std::vector<std::vector<std::size_t>>(n + 1)};
  for (int k = 0; k <= n; ++k)
    for (auto [x, y] : cells[k]) {
      r.first.map[k].push_back(x);
      r.second.map[k].push_back(y);
    }
  return r;
}

struct SegalReport {
  std::size_t level = 0;
  bool functor = false, isomorphism = false;
  std::string failure;
  bool ok() const { return functor && isomorphism; }
};

// The comparison from level m to the iterated pullback of level 1 over level 0.
inline SegalReport segal_check(const CechDouble& cd, std::size_t m) {
  SegalReport rep;
  rep.level = m;
  if (m < 2) {
    rep.functor = rep.isomorphism = true;
    return rep;
  }
  const DoubleCat& d = cd.cat;
  auto c0 = std::make_shared<const StrictCat>(cech_level(cd, 0).cat);
  auto c1 = std::make_shared<const StrictCat>(cech_level(cd, 1).cat);
  auto face = [&](bool target) {
    CatFunctor f{c1, c0, std::vector<std::vector<std::size_t>>(2)};
    for (auto& h : d.hcells) f.map[0].push_back(target ? h.target : h.source);
    for (auto& q : d.squares) f.map[1].push_back(target ? q.right : q.left);
    return f;
  };
  CatFunctor src = face(false), last = face(true);
  std::vector<Pullback> stages;
  for (std::size_t k = 2; k <= m; ++k) {
    CatFunctor prev_last = last;
    stages.push_back(strict_pullback(prev_last, src));
    auto& p = stages.back();
    auto pc = std::make_shared<const StrictCat>(p.cat);
    CatFunctor second = p.second;
    second.source = pc;
    last = compose_functors(second, face(true));
    for (auto* g : {&stages.back().first, &stages.back().second}) g->source = pc;
  }
  CechLevel lv = cech_level(cd, m);
  auto src_cat = std::make_shared<const StrictCat>(lv.cat);
  auto tgt_cat = std::make_shared<const StrictCat>(stages.back().cat);
  CatFunctor phi{src_cat, tgt_cat, std::vector<std::vector<std::size_t>>(2)};
  auto place = [&](int k, const std::vector<std::size_t>& chain) {
    std::size_t cur = chain[0];
    for (std::size_t i = 1; i < chain.size(); ++i) cur = stages[i - 1].index[k].at({cur, chain[i]});
    return cur;
  };
  try {
    for (auto& o : lv.objects) phi.map[0].push_back(place(0, o));
    for (auto& q : lv.morphisms) phi.map[1].push_back(place(1, q));
  } catch (const std::out_of_range&) {
    rep.failure = "a chain has no counterpart in the pullback";
    return rep;
  }
  auto bad = check_functor(phi);
  rep.functor = bad.empty();
  if (!rep.functor) rep.failure = bad.front().where + ": " + bad.front().message;
  rep.isomorphism = rep.functor && is_isomorphism(phi);
  if (rep.functor && !rep.isomorphism) rep.failure = "comparison is not bijective";
  return rep;
}

inline SegalReport segal_check(const Filtration2& filt, std::size_t m) { return segal_check(cech_double(filt), m); }

// ---- double functors ----

struct DoubleFunctor {
  std::vector<std::size_t> objects, vcells, hcells, squares;
  friend bool operator==(const DoubleFunctor&, const DoubleFunctor&) = default;
  friend auto operator<=>(const DoubleFunctor&, const DoubleFunctor&) = default;
};

// Sorts: objects, vcells, hcells, squares.
inline Structure as_structure(const DoubleCat& d) {
  Structure s;
  s.sizes = {d.objects.size(), d.vcells.size(), d.hcells.size(), d.squares.size()};
  auto unary = [&](int from, int to, auto get) {
    Structure::Unary u{from, to, {}};
    for (std::size_t x = 0; x < s.sizes[from]; ++x) u.table.push_back(get(x));
    s.unary.push_back(std::move(u));
  };
  unary(1, 0, [&](std::size_t x) { return d.vcells[x].source; });
  unary(1, 0, [&](std::size_t x) { return d.vcells[x].target; });
  unary(2, 0, [&](std::size_t x) { return d.hcells[x].source; });
  unary(2, 0, [&](std::size_t x) { return d.hcells[x].target; });
  unary(3, 2, [&](std::size_t x) { return d.squares[x].top; });
  unary(3, 2, [&](std::size_t x) { return d.squares[x].bottom; });
  unary(3, 1, [&](std::size_t x) { return d.squares[x].left; });
  unary(3, 1, [&](std::size_t x) { return d.squares[x].right; });
  unary(0, 1, [&](std::size_t x) { return d.vunit[x]; });
  unary(0, 2, [&](std::size_t x) { return d.hunit[x]; });
  unary(2, 3, [&](std::size_t x) { return d.sq_vunit[x]; });
  unary(1, 3, [&](std::size_t x) { return d.sq_hunit[x]; });
  s.binary.push_back({1, 1, 1, d.vcomp});
  s.binary.push_back({2, 2, 2, d.hcomp});
  s.binary.push_back({3, 3, 3, d.sq_vcomp});
  s.binary.push_back({3, 3, 3, d.sq_hcomp});
  return s;
}

inline std::vector<DoubleFunctor> double_functor_enumerate(const DoubleCat& d, const DoubleCat& e,
                                                             std::size_t budget = 20'000'000) {
  std::vector<DoubleFunctor> r;
  for (auto& h : enumerate_homomorphisms(as_structure(d), as_structure(e), budget)) r.push_back({h[0], h[1], h[2], h[3]});
  return r;
}

inline ValidationReport check_double_functor(const DoubleCat& d, const DoubleCat& e, const DoubleFunctor& f) {
  ValidationReport r;
  Structure s = as_structure(d), t = as_structure(e);
  Homomorphism h{f.objects, f.vcells, f.hcells, f.squares};
  for (std::size_t k = 0; k < 4; ++k)
    if (h[k].size() != s.sizes[k]) {
      r.push_back({"map", "wrong size"});
      return r;
    }
  for (std::size_t u = 0; u < s.unary.size(); ++u)
    for (std::size_t x = 0; x < s.unary[u].table.size(); ++x)
      if (h[s.unary[u].to][s.unary[u].table[x]] != t.unary[u].table[h[s.unary[u].from][x]])
        r.push_back({"unary " + std::to_string(u), "boundary or unit not preserved"});
  for (std::size_t b = 0; b < s.binary.size(); ++b)
    for (auto [xy, z] : s.binary[b].table) {
      auto& op = s.binary[b];
      auto it = t.binary[b].table.find({h[op.left][xy.first], h[op.right][xy.second]});
      if (it == t.binary[b].table.end() || it->second != h[op.result][z])
        r.push_back({"binary " + std::to_string(b), "composite not preserved"});
    }
  return r;
}

// The double functor sq2(f) for f: raise(c, 2) -> raise(d, 2).
inline DoubleFunctor sq2_functor(const CechDouble& cs, const CechDouble& ds, const CatFunctor& f) {
  DoubleFunctor r;
  const DoubleCat& c = cs.cat;
  for (std::size_t x = 0; x < c.objects.size(); ++x) r.objects.push_back(f(0, x));
  for (std::size_t s = 0; s < c.vcells.size(); ++s) r.vcells.push_back(f(1, s));
  for (std::size_t h = 0; h < c.hcells.size(); ++h)
    r.hcells.push_back(ds.hcell_index.at({f(0, c.hcells[h].source), f(0, c.hcells[h].target), f(1, cs.hcell_cell[h])}));
  for (std::size_t q = 0; q < c.squares.size(); ++q) {
    auto& s = c.squares[q];
    r.squares.push_back(ds.square_index.at({r.hcells[s.top], r.hcells[s.bottom], r.vcells[s.left], r.vcells[s.right],
                                            f(2, cs.filler[q])}));
  }
  return r;
}

struct FullyFaithfulReport {
  std::size_t functors = 0, double_functors = 0;
  bool injective = true;
  std::vector<std::string> failures;
  bool ok() const { return injective && failures.empty() && functors == double_functors; }
};

// Functors c -> d against double functors sq2(c) -> sq2(d).
inline FullyFaithfulReport verify_sq_fully_faithful(const StrictCat& c, const StrictCat& d, SearchOptions opt = {}) {
  FullyFaithfulReport r;
  CechDouble cs = sq2_indexed(c), ds = sq2_indexed(d);
  auto fs = enumerate_functors(raise_dim(c, 2), raise_dim(d, 2), opt);
  auto gs = double_functor_enumerate(cs.cat, ds.cat, opt.budget);
  r.functors = fs.size();
  r.double_functors = gs.size();
  std::set<DoubleFunctor> all(gs.begin(), gs.end()), hit;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    DoubleFunctor g = sq2_functor(cs, ds, fs[i]);
    auto bad = check_double_functor(cs.cat, ds.cat, g);
    if (!bad.empty()) r.failures.push_back("image of functor " + std::to_string(i) + " is not a double functor");
    if (!all.count(g)) r.failures.push_back("image of functor " + std::to_string(i) + " was not enumerated");
    if (!hit.insert(g).second) r.injective = false;
  }
  for (auto& g : gs)
    if (!hit.count(g)) r.failures.push_back("double functor with no preimage");
  return r;
}

struct ImageReport {
  bool accompanied = false, complete = false, horizontals_are_companions = false;
  std::vector<std::string> notes;
  bool ok() const { return accompanied && complete && horizontals_are_companions; }
};

inline ImageReport image_report(const DoubleCat& d) {
  ImageReport r;
  r.accompanied = is_accompanied(d);
  auto c = completeness_report(d);
  r.complete = c.ok();
  r.notes = c.notes;
  r.horizontals_are_companions = every_horizontal_is_companion(d);
  return r;
}

inline ImageReport verify_sq_image(const StrictCat& c) { return image_report(sq2(c)); }

// ---- cube levels and the nerve comparison ----

namespace detail {
inline Adc path_or_point_adc(int n) { return to_adc(n == 0 ? point_sum() : path(n)); }

// [1] -> [n] onto the vertices a < b.
inline ChainMap interval_into_path(int n, int a, int b) {
  Adc s = path_or_point_adc(1), t = path_or_point_adc(n);
  ChainMap f(s, t);
  f.set("p0", {{"p" + std::to_string(a), 1}});
  f.set("p1", {{"p" + std::to_string(b), 1}});
  std::vector<std::pair<std::string, Coeff>> edge;
  for (int k = a; k < b; ++k) edge.push_back({"[p]" + std::to_string(k), 1});
  f.set("[p]0", edge);
  return f;
}

inline ChainMap identity_of(const Adc& a) {
  return map_by_ids(a, a, [](const std::string& s) { return s; });
}

inline std::size_t cell_with_top(const NuCategory& q, int k, const Adc& a, const std::string& id) {
  Chain top = Chain::basis(a.at(id).index);
  for (std::size_t x = 0; x < q.cells[k].size(); ++x)
    if (!q.cells[k][x].degenerate() && q.cells[k][x].top() == top) return x;
  throw InvalidInput("no nu-cell with top " + id);
}
}  // namespace detail

inline std::size_t cube_level(const StrictCat& c, int k1, int k2, SearchOptions opt = {}) {
  if (k1 < 0 || k2 < 0 || k1 > 3 || k2 > 3) throw InvalidInput("cube_level: levels must be between 0 and 3");
  if (c.dim > 2) throw InvalidInput("cube_level: expects a 2-category");
  Adc t = tensor(detail::path_or_point_adc(k1), detail::path_or_point_adc(k2));
  return count_functors(from_nu(t, 2), raise_dim(c, 2), opt);
}

struct NerveReport {
  std::size_t squares = 0, vertical_pairs = 0, horizontal_pairs = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Reads sq2(c) off functors from Gray cylinders [m] (x) [n] into c: squares against
// [1] (x) [1], and both compositions against [1] (x) [2] and [2] (x) [1].
inline NerveReport sq2_nerve_check(const StrictCat& c, SearchOptions opt = {}) {
  NerveReport rep;
  CechDouble cd = sq2_indexed(c);
  const DoubleCat& d = cd.cat;
  StrictCat target = raise_dim(c, 2);
  Adc i1 = detail::path_or_point_adc(1);
  Adc unit = tensor(i1, i1);
  NuCategory q = from_nu_indexed(unit, 2);
  std::size_t e_top = detail::cell_with_top(q, 1, unit, tensor_id("[p]0", "p0"));
  std::size_t e_bottom = detail::cell_with_top(q, 1, unit, tensor_id("[p]0", "p1"));
  std::size_t e_left = detail::cell_with_top(q, 1, unit, tensor_id("p0", "[p]0"));
  std::size_t e_right = detail::cell_with_top(q, 1, unit, tensor_id("p1", "[p]0"));
  std::size_t face = detail::cell_with_top(q, 2, unit, tensor_id("[p]0", "[p]0"));

  // The square read off a functor f on big along the inclusion g: unit -> big.
  auto read = [&](const NuCategory& big, const CatFunctor& f, const ChainMap* g) -> std::optional<std::size_t> {
    auto image = [&](int k, std::size_t x) {
      return f(k, g ? big.find(k, nu_apply(*g, q.cells[k][x])) : x);
    };
    std::size_t u = image(1, e_top), v = image(1, e_bottom), s = image(1, e_left), t = image(1, e_right);
    auto top = cd.hcell_index.find({target.source(1, u), target.target(1, u), u});
    auto bottom = cd.hcell_index.find({target.source(1, v), target.target(1, v), v});
    if (top == cd.hcell_index.end() || bottom == cd.hcell_index.end()) return std::nullopt;
    auto it = cd.square_index.find({top->second, bottom->second, s, t, image(2, face)});
    if (it == cd.square_index.end()) return std::nullopt;
    return it->second;
  };

  auto h11 = enumerate_functors(q.cat, target, opt);
  rep.squares = h11.size();
  std::set<std::size_t> seen;
  for (auto& f : h11) {
    auto sqr = read(q, f, nullptr);
    if (!sqr) rep.failures.push_back("a functor on the unit cylinder is not a square");
    else if (!seen.insert(*sqr).second) rep.failures.push_back("two functors give the same square");
  }
  if (seen.size() != d.squares.size())
    rep.failures.push_back(std::to_string(seen.size()) + " squares from functors, " + std::to_string(d.squares.size()) +
                           " in the double category");

  Adc i2 = detail::path_or_point_adc(2);
  ChainMap id1 = detail::identity_of(i1);
  for (bool vertical : {true, false}) {
    Adc big_adc = vertical ? tensor(i1, i2) : tensor(i2, i1);
    NuCategory big = from_nu_indexed(big_adc, 2);
    auto inclusion = [&](int a, int b) {
      ChainMap e = detail::interval_into_path(2, a, b);
      return vertical ? tensor_map(id1, e, unit, big_adc) : tensor_map(e, id1, unit, big_adc);
    };
    ChainMap first = inclusion(0, 1), second = inclusion(1, 2), whole = inclusion(0, 2);
    auto fs = enumerate_functors(big.cat, target, opt);
    (vertical ? rep.vertical_pairs : rep.horizontal_pairs) = fs.size();
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (auto& f : fs) {
      auto a = read(big, f, &first), b = read(big, f, &second), w = read(big, f, &whole);
      if (!a || !b || !w) {
        rep.failures.push_back("a face of a cylinder functor is not a square");
        continue;
      }
      pairs.insert({*a, *b});
      auto comp = vertical ? d.over(*a, *b) : d.beside(*a, *b);
      if (!comp || *comp != *w)
        rep.failures.push_back(std::string(vertical ? "vertical" : "horizontal") + " composite of " +
                               d.squares[*a].label + " and " + d.squares[*b].label + " disagrees");
    }
    std::size_t expected = (vertical ? d.sq_vcomp : d.sq_hcomp).size();
    if (pairs.size() != fs.size() || pairs.size() != expected)
      rep.failures.push_back(std::string(vertical ? "vertical" : "horizontal") + " pairs: " +
                             std::to_string(fs.size()) + " functors, " + std::to_string(expected) + " composable pairs");
  }
  return rep;
}

}  // namespace graycat
