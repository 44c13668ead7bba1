#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "strictcat.hpp"

namespace graycat {

struct Arrow {
  std::string label;
  std::size_t source = 0, target = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

// top and bottom are horizontal cells, left and right vertical ones.
struct Square {
  std::string label;
  std::size_t top = 0, bottom = 0, left = 0, right = 0;
  friend bool operator==(const Square&, const Square&) = default;
};

struct Marking {
  std::set<std::size_t> vcells, squares;
  friend bool operator==(const Marking&, const Marking&) = default;
};

// Finite strict double category. Vertical composition of squares stacks alpha above beta
// (bottom of alpha = top of beta); horizontal composition puts alpha left of beta.
struct DoubleCat {
  std::vector<std::string> objects;
  std::vector<Arrow> vcells;
  std::vector<std::size_t> vunit;  // per object
  CompTable vcomp;
  std::vector<Arrow> hcells;
  std::vector<std::size_t> hunit;  // per object
  CompTable hcomp;
  std::vector<Square> squares;
  std::vector<std::size_t> sq_vunit;  // per hcell: identity square with unit sides
  std::vector<std::size_t> sq_hunit;  // per vcell: identity square with unit top and bottom
  CompTable sq_vcomp, sq_hcomp;
  std::optional<Marking> marking;

  static std::optional<std::size_t> lookup(const CompTable& t, std::size_t a, std::size_t b) {
    auto it = t.find({a, b});
    if (it == t.end()) return std::nullopt;
    return it->second;
  }
  std::optional<std::size_t> vcompose(std::size_t f, std::size_t g) const { return lookup(vcomp, f, g); }
  std::optional<std::size_t> hcompose(std::size_t u, std::size_t v) const { return lookup(hcomp, u, v); }
  std::optional<std::size_t> over(std::size_t a, std::size_t b) const { return lookup(sq_vcomp, a, b); }
  std::optional<std::size_t> beside(std::size_t a, std::size_t b) const { return lookup(sq_hcomp, a, b); }

  std::vector<std::size_t> find_squares(std::optional<std::size_t> top, std::optional<std::size_t> bottom,
                                        std::optional<std::size_t> left, std::optional<std::size_t> right) const {
    std::vector<std::size_t> r;
    for (std::size_t q = 0; q < squares.size(); ++q) {
      auto& s = squares[q];
      if ((!top || s.top == *top) && (!bottom || s.bottom == *bottom) && (!left || s.left == *left) &&
          (!right || s.right == *right))
        r.push_back(q);
    }
    return r;
  }

  friend bool operator==(const DoubleCat&, const DoubleCat&) = default;
};

inline ValidationReport validate_double(const DoubleCat& d) {
  ValidationReport r;
  auto fail = [&](std::string w, std::string m) { r.push_back({std::move(w), std::move(m)}); };
  std::size_t no = d.objects.size();
  if (d.vunit.size() != no || d.hunit.size() != no || d.sq_vunit.size() != d.hcells.size() ||
      d.sq_hunit.size() != d.vcells.size()) {
    fail("tables", "unit tables have wrong size");
    return r;
  }
  for (auto& a : d.vcells)
    if (a.source >= no || a.target >= no) fail(a.label, "vertical cell endpoint out of range");
  for (auto& a : d.hcells)
    if (a.source >= no || a.target >= no) fail(a.label, "horizontal cell endpoint out of range");
  for (auto& s : d.squares)
    if (s.top >= d.hcells.size() || s.bottom >= d.hcells.size() || s.left >= d.vcells.size() ||
        s.right >= d.vcells.size())
      fail(s.label, "square boundary out of range");
  if (!r.empty()) return r;
  for (auto& s : d.squares) {
    auto &t = d.hcells[s.top], &b = d.hcells[s.bottom], &l = d.vcells[s.left], &rt = d.vcells[s.right];
    if (l.source != t.source || rt.source != t.target || l.target != b.source || rt.target != b.target)
      fail(s.label, "square corners do not match");
  }
  for (std::size_t x = 0; x < no; ++x) {
    auto &v = d.vcells[d.vunit[x]], &h = d.hcells[d.hunit[x]];
    if (v.source != x || v.target != x || h.source != x || h.target != x) fail(d.objects[x], "unit has wrong endpoints");
    if (d.sq_vunit[d.hunit[x]] != d.sq_hunit[d.vunit[x]]) fail(d.objects[x], "the two unit squares of an object differ");
  }
  for (std::size_t u = 0; u < d.hcells.size(); ++u) {
    auto& s = d.squares[d.sq_vunit[u]];
    if (s.top != u || s.bottom != u || s.left != d.vunit[d.hcells[u].source] || s.right != d.vunit[d.hcells[u].target])
      fail(d.hcells[u].label, "vertical identity square has wrong boundary");
  }
  for (std::size_t f = 0; f < d.vcells.size(); ++f) {
    auto& s = d.squares[d.sq_hunit[f]];
    if (s.left != f || s.right != f || s.top != d.hunit[d.vcells[f].source] || s.bottom != d.hunit[d.vcells[f].target])
      fail(d.vcells[f].label, "horizontal identity square has wrong boundary");
  }
  if (!r.empty()) return r;

  // A category structure given by endpoints, units and a table.
  auto check_category = [&](const char* what, std::size_t n, auto src, auto tgt, auto unit_at_src, auto unit_at_tgt,
                            const CompTable& t) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        bool ok = tgt(a) == src(b);
        auto c = DoubleCat::lookup(t, a, b);
        if (ok != c.has_value()) {
          fail(std::string(what) + " " + std::to_string(a) + "," + std::to_string(b),
               ok ? "composite missing" : "composite defined on a non-composable pair");
          continue;
        }
        if (c && (src(*c) != src(a) || tgt(*c) != tgt(b)))
          fail(std::string(what) + " " + std::to_string(a) + "," + std::to_string(b), "composite has wrong boundary");
      }
    if (!r.empty()) return;
    for (std::size_t a = 0; a < n; ++a)
      if (*DoubleCat::lookup(t, unit_at_src(a), a) != a || *DoubleCat::lookup(t, a, unit_at_tgt(a)) != a)
        fail(std::string(what) + " " + std::to_string(a), "unit law fails");
    for (auto [ab, x] : t)
      for (std::size_t c = 0; c < n; ++c) {
        if (tgt(ab.second) != src(c)) continue;
        if (*DoubleCat::lookup(t, x, c) != *DoubleCat::lookup(t, ab.first, *DoubleCat::lookup(t, ab.second, c)))
          fail(std::string(what) + " " + std::to_string(ab.first), "associativity fails");
      }
  };
  check_category(
      "vertical", d.vcells.size(), [&](std::size_t f) { return d.vcells[f].source; },
      [&](std::size_t f) { return d.vcells[f].target; }, [&](std::size_t f) { return d.vunit[d.vcells[f].source]; },
      [&](std::size_t f) { return d.vunit[d.vcells[f].target]; }, d.vcomp);
  check_category(
      "horizontal", d.hcells.size(), [&](std::size_t u) { return d.hcells[u].source; },
      [&](std::size_t u) { return d.hcells[u].target; }, [&](std::size_t u) { return d.hunit[d.hcells[u].source]; },
      [&](std::size_t u) { return d.hunit[d.hcells[u].target]; }, d.hcomp);
  if (!r.empty()) return r;
  check_category(
      "square-vertical", d.squares.size(), [&](std::size_t q) { return d.squares[q].top; },
      [&](std::size_t q) { return d.squares[q].bottom; }, [&](std::size_t q) { return d.sq_vunit[d.squares[q].top]; },
      [&](std::size_t q) { return d.sq_vunit[d.squares[q].bottom]; }, d.sq_vcomp);
  check_category(
      "square-horizontal", d.squares.size(), [&](std::size_t q) { return d.squares[q].left; },
      [&](std::size_t q) { return d.squares[q].right; }, [&](std::size_t q) { return d.sq_hunit[d.squares[q].left]; },
      [&](std::size_t q) { return d.sq_hunit[d.squares[q].right]; }, d.sq_hcomp);
  if (!r.empty()) return r;
  for (auto [ab, c] : d.sq_vcomp) {
    auto &a = d.squares[ab.first], &b = d.squares[ab.second], &s = d.squares[c];
    if (s.left != *d.vcompose(a.left, b.left) || s.right != *d.vcompose(a.right, b.right))
      fail(s.label, "vertical composite has wrong sides");
  }
  for (auto [ab, c] : d.sq_hcomp) {
    auto &a = d.squares[ab.first], &b = d.squares[ab.second], &s = d.squares[c];
    if (s.top != *d.hcompose(a.top, b.top) || s.bottom != *d.hcompose(a.bottom, b.bottom))
      fail(s.label, "horizontal composite has wrong top or bottom");
  }
  for (auto [uv, w] : d.hcomp)
    if (*d.beside(d.sq_vunit[uv.first], d.sq_vunit[uv.second]) != d.sq_vunit[w])
      fail(d.hcells[w].label, "identity squares do not compose horizontally");
  for (auto [fg, h] : d.vcomp)
    if (*d.over(d.sq_hunit[fg.first], d.sq_hunit[fg.second]) != d.sq_hunit[h])
      fail(d.vcells[h].label, "identity squares do not compose vertically");
  // (a | b) over (c | e) = (a over c) | (b over e)
  for (auto [ab, top] : d.sq_hcomp)
    for (auto [ce, bottom] : d.sq_hcomp) {
      auto stacked = d.over(top, bottom);
      auto left = d.over(ab.first, ce.first), right = d.over(ab.second, ce.second);
      if (!stacked || !left || !right) continue;
      auto other = d.beside(*left, *right);
      if (!other || *other != *stacked)
        fail(d.squares[ab.first].label + "," + d.squares[ab.second].label + "," + d.squares[ce.first].label + "," +
                 d.squares[ce.second].label,
             "interchange fails");
    }
  if (d.marking) {
    auto& m = *d.marking;
    for (auto f : m.vcells)
      if (f >= d.vcells.size()) fail("marking", "marked vertical cell out of range");
    for (auto q : m.squares)
      if (q >= d.squares.size()) fail("marking", "marked square out of range");
    if (!r.empty()) return r;
    for (auto u : d.vunit)
      if (!m.vcells.count(u)) fail(d.vcells[u].label, "vertical unit is not marked");
    for (auto q : d.sq_vunit)
      if (!m.squares.count(q)) fail(d.squares[q].label, "unit square is not marked");
    for (auto [fg, h] : d.vcomp)
      if (m.vcells.count(fg.first) && m.vcells.count(fg.second) && !m.vcells.count(h))
        fail(d.vcells[h].label, "marked vertical cells are not closed under composition");
    for (auto* t : {&d.sq_vcomp, &d.sq_hcomp})
      for (auto [ab, c] : *t)
        if (m.squares.count(ab.first) && m.squares.count(ab.second) && !m.squares.count(c))
          fail(d.squares[c].label, "marked squares are not closed under composition");
  }
  return r;
}

// ---- companions ----

struct CompanionTriple {
  std::size_t vcell;
  std::size_t companion;  // horizontal cell
  std::size_t unit;       // psi: top unit, left unit, right f, bottom companion
  std::size_t counit;     // phi: top companion, left f, right unit, bottom unit
  friend bool operator==(const CompanionTriple&, const CompanionTriple&) = default;
};

inline bool is_companion_triple(const DoubleCat& d, const CompanionTriple& c) {
  auto& f = d.vcells[c.vcell];
  auto &psi = d.squares[c.unit], &phi = d.squares[c.counit];
  if (psi.top != d.hunit[f.source] || psi.left != d.vunit[f.source] || psi.right != c.vcell || psi.bottom != c.companion)
    return false;
  if (phi.top != c.companion || phi.left != c.vcell || phi.right != d.vunit[f.target] || phi.bottom != d.hunit[f.target])
    return false;
  auto side = d.beside(c.unit, c.counit), stack = d.over(c.unit, c.counit);
  return side && stack && *side == d.sq_vunit[c.companion] && *stack == d.sq_hunit[c.vcell];
}

inline std::vector<CompanionTriple> find_companions(const DoubleCat& d, std::size_t f) {
  std::vector<CompanionTriple> r;
  auto& a = d.vcells[f];
  for (std::size_t g = 0; g < d.hcells.size(); ++g) {
    if (d.hcells[g].source != a.source || d.hcells[g].target != a.target) continue;
    auto units = d.find_squares(d.hunit[a.source], g, d.vunit[a.source], f);
    auto counits = d.find_squares(g, d.hunit[a.target], f, d.vunit[a.target]);
    for (auto psi : units)
      for (auto phi : counits) {
        CompanionTriple c{f, g, psi, phi};
        if (is_companion_triple(d, c)) r.push_back(c);
      }
  }
  return r;
}

inline bool is_companionable(const DoubleCat& d, std::size_t f) { return !find_companions(d, f).empty(); }

inline bool is_accompanied(const DoubleCat& d) {
  for (std::size_t f = 0; f < d.vcells.size(); ++f)
    if (!is_companionable(d, f)) return false;
  return true;
}

inline std::size_t require(std::optional<std::size_t> x, const char* what) {
  if (!x) throw InvalidInput(std::string(what) + ": pasting is undefined");
  return *x;
}

// Companion data for f then g from companion data for each.
inline CompanionTriple companion_of_composite(const DoubleCat& d, const CompanionTriple& tf, const CompanionTriple& tg) {
  const char* what = "companion_of_composite";
  std::size_t fg = require(d.vcompose(tf.vcell, tg.vcell), what);
  std::size_t bar = require(d.hcompose(tf.companion, tg.companion), what);
  std::size_t unit = require(d.over(require(d.beside(tf.unit, d.sq_hunit[tf.vcell]), what),
                                    require(d.beside(d.sq_vunit[tf.companion], tg.unit), what)),
                             what);
  std::size_t counit = require(d.over(require(d.beside(tf.counit, d.sq_vunit[tg.companion]), what),
                                      require(d.beside(d.sq_hunit[tg.vcell], tg.counit), what)),
                               what);
  CompanionTriple c{fg, bar, unit, counit};
  if (!is_companion_triple(d, c)) throw InvalidInput("companion_of_composite: triangle equations fail");
  return c;
}

// ---- bicartesian squares and lifts ----

// The square with top u, left unit, right t: u beside the unit of t.
inline std::size_t cocartesian_lift(const DoubleCat& d, std::size_t u, const CompanionTriple& t) {
  if (d.hcells[u].target != d.vcells[t.vcell].source) throw InvalidInput("cocartesian_lift: boundary mismatch");
  return require(d.beside(d.sq_vunit[u], t.unit), "cocartesian_lift");
}

// The square with bottom v, left s, right unit: the counit of s beside v.
inline std::size_t cartesian_lift(const DoubleCat& d, std::size_t v, const CompanionTriple& s) {
  if (d.hcells[v].source != d.vcells[s.vcell].target) throw InvalidInput("cartesian_lift: boundary mismatch");
  return require(d.beside(s.counit, d.sq_vunit[v]), "cartesian_lift");
}

inline std::optional<std::size_t> cocartesian_lift(const DoubleCat& d, std::size_t u, std::size_t t) {
  auto ts = find_companions(d, t);
  if (ts.empty()) return std::nullopt;
  return cocartesian_lift(d, u, ts.front());
}

inline std::optional<std::size_t> cartesian_lift(const DoubleCat& d, std::size_t v, std::size_t s) {
  auto ss = find_companions(d, s);
  if (ss.empty()) return std::nullopt;
  return cartesian_lift(d, v, ss.front());
}

// A cocartesian lift stacked over a cartesian lift, for some choice of companion data.
inline bool is_bicartesian(const DoubleCat& d, std::size_t alpha) {
  auto& a = d.squares[alpha];
  auto ts = find_companions(d, a.right), ss = find_companions(d, a.left);
  for (auto& t : ts)
    for (auto& s : ss) {
      std::size_t up = cocartesian_lift(d, a.top, t);
      std::size_t down = cartesian_lift(d, a.bottom, s);
      auto c = d.over(up, down);
      if (c && *c == alpha) return true;
    }
  return false;
}

// The one-row reading: counit of s, vertical identity on some f, unit of t, side by side.
inline bool is_bicartesian_pasting(const DoubleCat& d, std::size_t alpha) {
  auto& a = d.squares[alpha];
  auto ts = find_companions(d, a.right), ss = find_companions(d, a.left);
  for (std::size_t f = 0; f < d.hcells.size(); ++f)
    for (auto& s : ss)
      for (auto& t : ts) {
        auto left = d.beside(s.counit, d.sq_vunit[f]);
        if (!left) continue;
        auto all = d.beside(*left, t.unit);
        if (all && *all == alpha) return true;
      }
  return false;
}

inline DoubleCat companion_marking(const DoubleCat& d) {
  DoubleCat r = d;
  Marking m;
  for (std::size_t f = 0; f < d.vcells.size(); ++f)
    if (is_companionable(d, f)) m.vcells.insert(f);
  for (std::size_t q = 0; q < d.squares.size(); ++q)
    if (is_bicartesian(d, q)) m.squares.insert(q);
  r.marking = m;
  return r;
}

inline DoubleCat full_marking(const DoubleCat& d) {
  DoubleCat r = d;
  Marking m;
  for (std::size_t f = 0; f < d.vcells.size(); ++f) m.vcells.insert(f);
  for (std::size_t q = 0; q < d.squares.size(); ++q) m.squares.insert(q);
  r.marking = m;
  return r;
}

// Only units marked.
inline DoubleCat trivial_marking(const DoubleCat& d) {
  DoubleCat r = d;
  Marking m;
  m.vcells.insert(d.vunit.begin(), d.vunit.end());
  m.squares.insert(d.sq_vunit.begin(), d.sq_vunit.end());
  r.marking = m;
  return r;
}

// Unique-lifting conditions for the span of left and right sides, with the vertical
// category fully marked:
//  (1) a unique marked square with given top, unit left side and given right side, and
//      a unique marked square with given bottom, given left side and unit right side;
//  (2) every square whose right side is t then r factors uniquely as a marked square with
//      unit left side and right side t over a square with right side r, and dually for left
//      sides r then s; the second factor is marked whenever the square is.
inline ValidationReport check_two_sided_fibration(const DoubleCat& d) {
  ValidationReport r;
  if (!d.marking) {
    r.push_back({"marking", "double category carries no marking"});
    return r;
  }
  const Marking& m = *d.marking;
  auto marked = [&](std::size_t q) { return m.squares.count(q) > 0; };
  for (std::size_t f = 0; f < d.vcells.size(); ++f)
    if (!m.vcells.count(f)) r.push_back({d.vcells[f].label, "(0) vertical cell is not marked"});
  for (std::size_t t = 0; t < d.vcells.size(); ++t)
    for (std::size_t u = 0; u < d.hcells.size(); ++u) {
      auto& tc = d.vcells[t];
      if (d.hcells[u].target == tc.source) {
        std::size_t n = 0;
        for (auto q : d.find_squares(u, std::nullopt, d.vunit[d.hcells[u].source], t)) n += marked(q);
        if (n != 1)
          r.push_back({d.hcells[u].label + "/" + tc.label, "(1) " + std::to_string(n) + " marked lifts with given top"});
      }
      if (d.hcells[u].source == tc.target) {
        std::size_t n = 0;
        for (auto q : d.find_squares(std::nullopt, u, t, d.vunit[d.hcells[u].target])) n += marked(q);
        if (n != 1)
          r.push_back({d.hcells[u].label + "/" + tc.label, "(1) " + std::to_string(n) + " marked lifts with given bottom"});
      }
    }
  for (std::size_t b = 0; b < d.squares.size(); ++b) {
    auto& beta = d.squares[b];
    // right side = t then rest
    for (auto [tr, right] : d.vcomp) {
      if (right != beta.right) continue;
      auto [t, rest] = tr;
      std::size_t n = 0;
      bool marked_ok = true;
      for (auto g : d.find_squares(beta.top, std::nullopt, d.vunit[d.hcells[beta.top].source], t)) {
        if (!marked(g)) continue;
        for (auto a : d.find_squares(d.squares[g].bottom, beta.bottom, beta.left, rest)) {
          auto c = d.over(g, a);
          if (c && *c == b) {
            ++n;
            if (marked(b) && !marked(a)) marked_ok = false;
          }
        }
      }
      if (n != 1 || !marked_ok)
        r.push_back({beta.label + "/" + d.vcells[t].label,
                     "(2) " + std::to_string(n) + " factorizations through a marked square on the right" +
                         (marked_ok ? "" : ", unmarked complement")});
    }
    // left side = rest then s
    for (auto [rs, left] : d.vcomp) {
      if (left != beta.left) continue;
      auto [rest, s] = rs;
      std::size_t n = 0;
      bool marked_ok = true;
      for (auto k : d.find_squares(std::nullopt, beta.bottom, s, d.vunit[d.hcells[beta.bottom].target])) {
        if (!marked(k)) continue;
        for (auto a : d.find_squares(beta.top, d.squares[k].top, rest, beta.right)) {
          auto c = d.over(a, k);
          if (c && *c == b) {
            ++n;
            if (marked(b) && !marked(a)) marked_ok = false;
          }
        }
      }
      if (n != 1 || !marked_ok)
        r.push_back({beta.label + "/" + d.vcells[s].label,
                     "(2) " + std::to_string(n) + " factorizations through a marked square on the left" +
                         (marked_ok ? "" : ", unmarked complement")});
    }
  }
  return r;
}

// Companion data read off the unique marked lifts of a marked double category.
inline std::optional<std::vector<CompanionTriple>> extract_companions(const DoubleCat& d) {
  if (!d.marking) return std::nullopt;
  std::vector<CompanionTriple> r;
  for (std::size_t f = 0; f < d.vcells.size(); ++f) {
    auto& a = d.vcells[f];
    std::optional<std::size_t> psi, phi;
    for (auto q : d.find_squares(d.hunit[a.source], std::nullopt, d.vunit[a.source], f))
      if (d.marking->squares.count(q)) psi = q;
    for (auto q : d.find_squares(std::nullopt, d.hunit[a.target], f, d.vunit[a.target]))
      if (d.marking->squares.count(q)) phi = q;
    if (!psi || !phi) return std::nullopt;
    CompanionTriple c{f, d.squares[*psi].bottom, *psi, *phi};
    if (!is_companion_triple(d, c)) return std::nullopt;
    r.push_back(c);
  }
  return r;
}

// Squares with unit left and right sides from u to v, and their invertibility.
inline std::vector<std::size_t> globular_squares(const DoubleCat& d, std::size_t u, std::size_t v) {
  return d.find_squares(u, v, d.vunit[d.hcells[u].source], d.vunit[d.hcells[u].target]);
}

// Any two companion data for f are related by mutually inverse globular squares,
// unique among those compatible with the units and counits.
inline ValidationReport companion_uniqueness_check(const DoubleCat& d, std::size_t f) {
  ValidationReport r;
  auto ts = find_companions(d, f);
  if (ts.empty()) {
    r.push_back({d.vcells[f].label, "vertical cell is not companionable"});
    return r;
  }
  for (auto& a : ts)
    for (auto& b : ts) {
      std::string where = d.vcells[f].label + ":" + d.hcells[a.companion].label + "," + d.hcells[b.companion].label;
      auto ab = d.beside(b.unit, a.counit);  // a.companion => b.companion
      auto ba = d.beside(a.unit, b.counit);
      if (!ab || !ba) {
        r.push_back({where, "mediating squares undefined"});
        continue;
      }
      auto l = d.over(*ab, *ba), rr = d.over(*ba, *ab);
      if (!l || !rr || *l != d.sq_vunit[a.companion] || *rr != d.sq_vunit[b.companion])
        r.push_back({where, "mediating squares are not mutually inverse"});
      auto u = d.over(a.unit, *ab), c = d.over(*ab, b.counit);
      if (!u || !c || *u != b.unit || *c != a.counit)
        r.push_back({where, "mediating square does not relate units and counits"});
      std::size_t compatible = 0;
      for (auto q : globular_squares(d, a.companion, b.companion)) {
        auto uq = d.over(a.unit, q), qc = d.over(q, b.counit);
        compatible += uq && qc && *uq == b.unit && *qc == a.counit;
      }
      if (compatible != 1) r.push_back({where, std::to_string(compatible) + " compatible mediating squares"});
    }
  return r;
}

inline bool is_vertically_invertible(const DoubleCat& d, std::size_t q) {
  auto& s = d.squares[q];
  for (std::size_t p = 0; p < d.squares.size(); ++p) {
    auto& t = d.squares[p];
    if (t.top != s.bottom || t.bottom != s.top) continue;
    auto a = d.over(q, p), b = d.over(p, q);
    if (a && b && *a == d.sq_vunit[s.top] && *b == d.sq_vunit[s.bottom]) return true;
  }
  return false;
}

inline bool is_vertically_invertible_cell(const DoubleCat& d, std::size_t f) {
  auto& a = d.vcells[f];
  for (std::size_t g = 0; g < d.vcells.size(); ++g) {
    if (d.vcells[g].source != a.target || d.vcells[g].target != a.source) continue;
    if (*d.vcompose(f, g) == d.vunit[a.source] && *d.vcompose(g, f) == d.vunit[a.target]) return true;
  }
  return false;
}

struct CompletenessReport {
  bool companions_injective = true;
  bool equivalences_trivial = true;
  std::vector<std::string> notes;
  bool ok() const { return companions_injective && equivalences_trivial; }
};

// (a) distinct vertical cells never share a companion; (b) every strictly inverse pair of
// horizontal cells is carried to a pair of horizontal units by vertically invertible squares
// with invertible sides.
inline CompletenessReport completeness_report(const DoubleCat& d) {
  CompletenessReport r;
  std::map<std::size_t, std::size_t> owner;
  for (std::size_t f = 0; f < d.vcells.size(); ++f) {
    std::set<std::size_t> bars;
    for (auto& t : find_companions(d, f)) bars.insert(t.companion);
    for (auto g : bars) {
      auto [it, fresh] = owner.emplace(g, f);
      if (!fresh) {
        r.companions_injective = false;
        r.notes.push_back(d.hcells[g].label + " is a companion of " + d.vcells[it->second].label + " and " +
                          d.vcells[f].label);
      }
    }
  }
  for (auto [uv, w] : d.hcomp) {
    auto [u, v] = uv;
    auto x = d.hcells[u].source, y = d.hcells[u].target;
    if (w != d.hunit[x] || d.hcells[v].target != x || *d.hcompose(v, u) != d.hunit[y]) continue;
    bool found = false;
    for (std::size_t z = 0; z < d.objects.size() && !found; ++z)
      for (std::size_t e = 0; e < d.vcells.size() && !found; ++e) {
        if (d.vcells[e].source != x || d.vcells[e].target != z || !is_vertically_invertible_cell(d, e)) continue;
        for (std::size_t e2 = 0; e2 < d.vcells.size() && !found; ++e2) {
          if (d.vcells[e2].source != y || d.vcells[e2].target != z || !is_vertically_invertible_cell(d, e2)) continue;
          bool au = false, av = false;
          for (auto q : d.find_squares(u, d.hunit[z], e, e2)) au |= is_vertically_invertible(d, q);
          for (auto q : d.find_squares(v, d.hunit[z], e2, e)) av |= is_vertically_invertible(d, q);
          found = au && av;
        }
      }
    if (!found) {
      r.equivalences_trivial = false;
      r.notes.push_back(d.hcells[u].label + "," + d.hcells[v].label + " is an inverse pair not equivalent to units");
    }
  }
  return r;
}

inline bool is_complete(const DoubleCat& d) { return completeness_report(d).ok(); }

inline bool every_horizontal_is_companion(const DoubleCat& d) {
  std::set<std::size_t> bars;
  for (std::size_t f = 0; f < d.vcells.size(); ++f)
    for (auto& t : find_companions(d, f)) bars.insert(t.companion);
  return bars.size() == d.hcells.size();
}

// ---- small named double categories ----

// One cell of each kind for every compatible boundary.
inline DoubleCat codiscrete_double(std::size_t n) {
  DoubleCat d;
  auto pair_index = [n](std::size_t a, std::size_t b) { return a * n + b; };
  for (std::size_t x = 0; x < n; ++x) d.objects.push_back(std::to_string(x));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::string l = std::to_string(a) + std::to_string(b);
      d.vcells.push_back({"v" + l, a, b});
      d.hcells.push_back({"h" + l, a, b});
    }
  for (std::size_t x = 0; x < n; ++x) {
    d.vunit.push_back(pair_index(x, x));
    d.hunit.push_back(pair_index(x, x));
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        d.vcomp[{pair_index(a, b), pair_index(b, c)}] = pair_index(a, c);
        d.hcomp[{pair_index(a, b), pair_index(b, c)}] = pair_index(a, c);
      }
  // square with corners top-left a, top-right b, bottom-left c, bottom-right e
  auto sq = [n](std::size_t a, std::size_t b, std::size_t c, std::size_t e) { return ((a * n + b) * n + c) * n + e; };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t e = 0; e < n; ++e)
          d.squares.push_back({"s" + std::to_string(a) + std::to_string(b) + std::to_string(c) + std::to_string(e),
                               pair_index(a, b), pair_index(c, e), pair_index(a, c), pair_index(b, e)});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      d.sq_vunit.push_back(sq(a, b, a, b));
      d.sq_hunit.push_back(sq(a, a, b, b));
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t e = 0; e < n; ++e)
          for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
              d.sq_vcomp[{sq(a, b, c, e), sq(c, e, x, y)}] = sq(a, b, x, y);
              d.sq_hcomp[{sq(a, b, c, e), sq(b, x, e, y)}] = sq(a, x, c, y);
            }
  return d;
}

// Vertical cells from a 1-category, only unit horizontal cells and identity squares.
inline DoubleCat vertical_double(const StrictCat& c0) {
  StrictCat c = raise_dim(c0, 1);
  if (c.dim != 1) throw InvalidInput("vertical_double: expects a 1-category");
  DoubleCat d;
  for (std::size_t x = 0; x < c.size(0); ++x) d.objects.push_back(c.label(0, x));
  for (std::size_t f = 0; f < c.size(1); ++f) d.vcells.push_back({c.label(1, f), c.source(1, f), c.target(1, f)});
  d.vunit = c.identity[0];
  d.vcomp = c.comp[1][0];
  for (std::size_t x = 0; x < c.size(0); ++x) {
    d.hcells.push_back({"1h(" + c.label(0, x) + ")", x, x});
    d.hunit.push_back(x);
    d.hcomp[{x, x}] = x;
  }
  for (std::size_t f = 0; f < c.size(1); ++f)
    d.squares.push_back({"I(" + c.label(1, f) + ")", c.source(1, f), c.target(1, f), f, f});
  for (std::size_t x = 0; x < c.size(0); ++x) d.sq_vunit.push_back(c.identity[0][x]);
  for (std::size_t f = 0; f < c.size(1); ++f) {
    d.sq_hunit.push_back(f);
    d.sq_hcomp[{f, f}] = f;
  }
  d.sq_vcomp = c.comp[1][0];
  return d;
}

}  // namespace graycat
