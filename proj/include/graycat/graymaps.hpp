#pragma once

#include <string>
#include <utility>
#include <vector>

#include "isomorphism.hpp"
#include "pushout.hpp"
#include "theta.hpp"

namespace graycat {

struct DecompositionWitness {
  Adc colimit;
  Adc target;
  ChainMap comparison;  // colimit -> target
  ChainMap inverse;
  std::vector<ChainMap> legs;
  bool ok = false;
  std::string failure;
};

enum class Side { left, right };

namespace detail {

inline std::string bracket(const std::string& s) { return "[" + s + "]"; }

inline void add_term(std::map<std::string, Coeff>& t, const std::string& id, Coeff c) { t[id] += c; }

inline Chain terms_to_chain(const Adc& a, int degree, const std::map<std::string, Coeff>& t) {
  Chain c;
  for (auto& [id, k] : t) {
    Elem e = a.at(id);
    if (e.degree != degree) throw InvalidInput("internal: term '" + id + "' has wrong degree");
    c.add(e.index, k);
  }
  return c;
}

// nabla on [T, 1] where T's basis element for (x, y) has id inner(x, y).
template <class Inner>
ChainMap nabla_via(const Adc& k, const Adc& l, const Adc& source, Side side, Inner inner) {
  Adc target = side == Side::left ? wedge_adc(suspend_adc(k), suspend_adc(l)) : wedge_adc(suspend_adc(l), suspend_adc(k));
  std::string kp = side == Side::left ? "l." : "r.";
  std::string lp = side == Side::left ? "r." : "l.";
  ChainMap f(source, target);
  f.set("{0}", {{"l.{0}", 1}});
  f.set("{1}", {{"r.{1}", 1}});
  for (auto x : k.elements())
    for (auto y : l.elements()) {
      std::string id = bracket(inner(k.id(x), l.id(y)));
      int deg = x.degree + y.degree + 1;
      std::map<std::string, Coeff> t;
      if (y.degree == 0) add_term(t, kp + bracket(k.id(x)), 1);
      if (x.degree == 0) add_term(t, lp + bracket(l.id(y)), 1);
      f.set(source.at(id), terms_to_chain(target, deg, t));
    }
  return f;
}

}  // namespace detail

// [K (x) L, 1] -> [K,1] v [L,1] (left) or [L,1] v [K,1] (right).
inline ChainMap nabla(const Adc& k, const Adc& l, Side side) {
  Adc source = suspend_adc(tensor(k, l));
  return detail::nabla_via(k, l, source, side, [](auto& x, auto& y) { return tensor_id(x, y); });
}

// f: [K (x) [1] (x) L, 1] -> [K,1] (x) [L,1].
inline ChainMap decomposition_cone(const Adc& k, const Adc& l) {
  Adc i = interval_adc();
  Adc source = suspend_adc(tensor(tensor(k, i), l));
  Adc target = tensor(suspend_adc(k), suspend_adc(l));
  ChainMap f(source, target);
  f.set("{0}", {{"{0}*{0}", 1}});
  f.set("{1}", {{"{1}*{1}", 1}});
  for (auto x : k.elements())
    for (auto t : i.elements())
      for (auto y : l.elements()) {
        std::string id = detail::bracket(tensor_id(tensor_id(k.id(x), i.id(t)), l.id(y)));
        std::string bx = detail::bracket(k.id(x)), by = detail::bracket(l.id(y));
        std::map<std::string, Coeff> terms;
        int deg = x.degree + t.degree + y.degree + 1;
        if (t.degree == 1) {
          detail::add_term(terms, tensor_id(bx, by), 1);
        } else {
          bool zero = i.id(t) == "v0";
          if (y.degree == 0) detail::add_term(terms, tensor_id(bx, zero ? "{1}" : "{0}"), 1);
          if (x.degree == 0) detail::add_term(terms, tensor_id(zero ? "{0}" : "{1}", by), 1);
        }
        f.set(source.at(id), detail::terms_to_chain(target, deg, terms));
      }
  return f;
}

namespace detail {

inline std::string path_point(int n, int k) { return n == 0 ? "p" : "p" + std::to_string(k); }
inline std::string path_edge(int k) { return "[p]" + std::to_string(k); }

inline void check_unital_points(const Adc& a, const char* what) {
  for (std::size_t i = 0; i < a.size(0); ++i)
    if (a.augmentation(i) != 1)
      throw InvalidInput(std::string(what) + ": degree-0 element '" + a.id(0, i) + "' has augmentation != 1");
}

}  // namespace detail

// p: [A,1] (x) [n] -> [A (x) [n], 1].
inline ChainMap p_map(const Adc& a, int n) {
  if (n < 0) throw InvalidInput("p_map: negative n");
  detail::check_unital_points(a, "p_map");
  Adc pn = to_adc(path(n));
  Adc source = tensor(suspend_adc(a), pn);
  Adc target = suspend_adc(tensor(a, pn));
  ChainMap f(source, target);
  using detail::bracket, detail::path_point, detail::path_edge;
  for (int k = 0; k <= n; ++k) {
    f.set(tensor_id("{0}", path_point(n, k)), {{"{0}", 1}});
    f.set(tensor_id("{1}", path_point(n, k)), {{"{1}", 1}});
  }
  for (auto x : a.elements()) {
    std::string bx = bracket(a.id(x));
    for (int k = 0; k <= n; ++k)
      f.set(tensor_id(bx, path_point(n, k)), {{bracket(tensor_id(a.id(x), path_point(n, n - k))), 1}});
    for (int i = 0; i < n; ++i)
      f.set(tensor_id(bx, path_edge(i)), {{bracket(tensor_id(a.id(x), path_edge(n - i - 1))), 1}});
  }
  return f;
}

// Section of p_map.
inline ChainMap s_map(const Adc& a, int n) {
  if (n < 0) throw InvalidInput("s_map: negative n");
  detail::check_unital_points(a, "s_map");
  Adc pn = to_adc(path(n));
  Adc source = suspend_adc(tensor(a, pn));
  Adc target = tensor(suspend_adc(a), pn);
  ChainMap f(source, target);
  using detail::bracket, detail::path_point, detail::path_edge;
  f.set("{0}", {{tensor_id("{0}", path_point(n, 0)), 1}});
  f.set("{1}", {{tensor_id("{1}", path_point(n, n)), 1}});
  for (auto x : a.elements()) {
    std::string bx = bracket(a.id(x));
    for (int i = 0; i < n; ++i)
      f.set(bracket(tensor_id(a.id(x), path_edge(i))), {{tensor_id(bx, path_edge(n - i - 1)), 1}});
    for (int k = 0; k <= n; ++k) {
      std::vector<std::pair<std::string, Coeff>> t{{tensor_id(bx, path_point(n, n - k)), 1}};
      if (x.degree == 0) {
        for (int l = n - k; l < n; ++l) t.push_back({tensor_id("{1}", path_edge(l)), 1});
        for (int l = 0; l < n - k; ++l) t.push_back({tensor_id("{0}", path_edge(l)), 1});
      }
      f.set(bracket(tensor_id(a.id(x), path_point(n, k))), t);
    }
  }
  return f;
}

// [C, m] with points {0}..{m} and block elements [x]k.
inline Adc blocks_adc(const Adc& c, int m) {
  if (m < 1) throw InvalidInput("blocks_adc: m must be positive");
  detail::check_unital_points(c, "blocks_adc");
  AdcBuilder b;
  auto pt = [](int j) { return "{" + std::to_string(j) + "}"; };
  for (int j = 0; j <= m; ++j) b.add(pt(j), 0);
  for (int k = 0; k < m; ++k) {
    auto name = [&](Elem e) { return "[" + c.id(e) + "]" + std::to_string(k); };
    for (auto e : c.elements()) b.add(name(e), e.degree + 1);
    for (auto e : c.elements()) {
      if (e.degree == 0) {
        b.boundary(name(e), {{pt(k + 1), 1}, {pt(k), -1}});
      } else {
        std::vector<std::pair<std::string, Coeff>> t;
        for (auto [j, v] : c.boundary(e.degree, e.index)) t.emplace_back(name({e.degree - 1, j}), v);
        b.boundary(name(e), std::move(t));
      }
    }
  }
  b.endpoints(pt(0), pt(m));
  return b.build();
}

// Block reindexing [n*m] -> [n] used for the k-th block.
inline int block_reindex(int n, int k, int l) {
  if (l <= n * k) return 0;
  if (l <= n * (k + 1)) return l - n * k;
  return n;
}

// p: [C, m] (x) [n m] -> [C (x) [n], m] and its section.
inline std::pair<ChainMap, ChainMap> p_s_nm(const Adc& c, int n, int m) {
  if (n < 0 || m < 1) throw InvalidInput("p_s_nm: need n >= 0 and m >= 1");
  Adc pnm = to_adc(path(n * m));
  Adc pn = to_adc(path(n));
  Adc source = tensor(blocks_adc(c, m), pnm);
  Adc target = blocks_adc(tensor(c, pn), m);
  using detail::path_point, detail::path_edge;
  auto pt = [](int j) { return "{" + std::to_string(j) + "}"; };
  auto blk = [](const std::string& x, int k) { return "[" + x + "]" + std::to_string(k); };

  ChainMap p(source, target);
  for (int j = 0; j <= m; ++j) {
    for (int l = 0; l <= n * m; ++l) p.set(tensor_id(pt(j), path_point(n * m, l)), {{pt(j), 1}});
  }
  for (int k = 0; k < m; ++k)
    for (auto x : c.elements()) {
      std::string bx = blk(c.id(x), k);
      for (int l = 0; l <= n * m; ++l) {
        int r = block_reindex(n, k, l);
        p.set(tensor_id(bx, path_point(n * m, l)), {{blk(tensor_id(c.id(x), path_point(n, n - r)), k), 1}});
      }
      for (int l = 0; l < n * m; ++l) {
        int r = block_reindex(n, k, l);
        if (block_reindex(n, k, l + 1) == r + 1)
          p.set(tensor_id(bx, path_edge(l)), {{blk(tensor_id(c.id(x), path_edge(n - r - 1)), k), 1}});
      }
    }

  ChainMap s(target, source);
  for (int j = 0; j <= m; ++j) s.set(pt(j), {{tensor_id(pt(j), path_point(n * m, n * j)), 1}});
  for (int k = 0; k < m; ++k)
    for (auto x : c.elements()) {
      std::string bx = blk(c.id(x), k);
      for (int i = 0; i < n; ++i)
        s.set(blk(tensor_id(c.id(x), path_edge(i)), k), {{tensor_id(bx, path_edge(n * k + n - i - 1)), 1}});
      for (int q = 0; q <= n; ++q) {
        std::vector<std::pair<std::string, Coeff>> t{{tensor_id(bx, path_point(n * m, n * k + n - q)), 1}};
        if (x.degree == 0) {
          for (int l = n - q; l < n; ++l) t.push_back({tensor_id(pt(k + 1), path_edge(n * k + l)), 1});
          for (int l = 0; l < n - q; ++l) t.push_back({tensor_id(pt(k), path_edge(n * k + l)), 1});
        }
        s.set(blk(tensor_id(c.id(x), path_point(n, q)), k), t);
      }
    }
  return {p, s};
}

struct SectionReport {
  bool p_chain_map = false;
  bool s_chain_map = false;
  bool section = false;
  bool idempotent = false;
  bool ok() const { return p_chain_map && s_chain_map && section && idempotent; }
};

inline SectionReport check_section(const ChainMap& p, const ChainMap& s) {
  SectionReport r;
  r.p_chain_map = check_chain_map(p).empty() && is_positive(p);
  r.s_chain_map = check_chain_map(s).empty() && is_positive(s);
  r.section = is_identity_on_basis(s.then(p));
  ChainMap e = p.then(s);
  r.idempotent = e.then(e) == e;
  return r;
}

namespace detail {

inline DecompositionWitness finish_witness(Adc colimit, Adc target, ChainMap comparison, std::vector<ChainMap> legs) {
  DecompositionWitness w{colimit, target, comparison, ChainMap(target, colimit), std::move(legs), false, ""};
  auto bad = check_chain_map(comparison);
  if (!bad.empty()) {
    w.failure = "comparison is not a chain map at " + bad.front().where;
    return w;
  }
  auto inv = invert_basis_map(comparison);
  if (!inv) {
    w.failure = "comparison is not a bijection of bases";
    return w;
  }
  w.inverse = *inv;
  if (!check_chain_map(w.inverse).empty()) {
    w.failure = "inverse is not a chain map";
    return w;
  }
  if (!is_identity_on_basis(comparison.then(w.inverse)) || !is_identity_on_basis(w.inverse.then(comparison))) {
    w.failure = "comparison and inverse do not compose to identities";
    return w;
  }
  for (auto& leg : w.legs)
    if (!check_chain_map(leg).empty()) {
      w.failure = "a leg of the diagram is not a chain map";
      return w;
    }
  if (!find_isomorphism(colimit, target)) {
    w.failure = "independent isomorphism search found no isomorphism";
    return w;
  }
  w.ok = true;
  return w;
}

// Inclusion of the sub-basis of `big` named by `rename` applied to the ids of `small`.
inline ChainMap inclusion_by_ids(const Adc& small, const Adc& big,
                                 const std::function<std::string(const std::string&)>& rename) {
  return map_by_ids(small, big, rename);
}

}  // namespace detail

// [C,1] (x) [D,1] against the colimit of
// [C,1] v [D,1] <- [C (x) {1} (x) D, 1] -> [C (x) [1] (x) D, 1] <- [C (x) {0} (x) D, 1] -> [D,1] v [C,1].
inline DecompositionWitness verify_susp_tensor_decomposition(const Adc& c, const Adc& d) {
  Adc i = interval_adc();
  Adc z = suspend_adc(tensor(tensor(c, i), d));
  Adc y1 = suspend_adc(tensor(tensor(c, point_adc("v1")), d));
  Adc y0 = suspend_adc(tensor(tensor(c, point_adc("v0")), d));
  auto same = [](const std::string& s) { return s; };
  ChainMap inc1 = detail::inclusion_by_ids(y1, z, same);
  ChainMap inc0 = detail::inclusion_by_ids(y0, z, same);
  auto inner = [](const std::string& t) {
    return [t](const std::string& x, const std::string& y) { return tensor_id(tensor_id(x, t), y); };
  };
  ChainMap nab1 = detail::nabla_via(c, d, y1, Side::left, inner("v1"));
  ChainMap nab0 = detail::nabla_via(c, d, y0, Side::right, inner("v0"));
  const Adc& x1 = nab1.target();
  const Adc& x2 = nab0.target();

  Adc target = tensor(suspend_adc(c), suspend_adc(d));
  ChainMap into_x1(x1, target), into_x2(x2, target);
  into_x1.set("l.{0}", {{"{0}*{0}", 1}});
  into_x1.set("l.{1}", {{"{1}*{0}", 1}});
  into_x1.set("r.{1}", {{"{1}*{1}", 1}});
  into_x2.set("l.{0}", {{"{0}*{0}", 1}});
  into_x2.set("l.{1}", {{"{0}*{1}", 1}});
  into_x2.set("r.{1}", {{"{1}*{1}", 1}});
  for (auto x : c.elements()) {
    std::string b = "[" + c.id(x) + "]";
    into_x1.set("l." + b, {{tensor_id(b, "{0}"), 1}});
    into_x2.set("r." + b, {{tensor_id(b, "{1}"), 1}});
  }
  for (auto y : d.elements()) {
    std::string b = "[" + d.id(y) + "]";
    into_x1.set("r." + b, {{tensor_id("{1}", b), 1}});
    into_x2.set("l." + b, {{tensor_id("{0}", b), 1}});
  }
  ChainMap cone = decomposition_cone(c, d);

  Pushout first = pushout_adc(inc1, nab1);  // from_b: z, from_c: x1
  ChainMap u1 = pushout_induced(first, inc1, nab1, cone, into_x1);
  ChainMap inc0p = inc0.then(first.from_b);
  Pushout second = pushout_adc(inc0p, nab0);  // from_b: first.object, from_c: x2
  ChainMap u2 = pushout_induced(second, inc0p, nab0, u1, into_x2);
  return detail::finish_witness(second.object, target, u2, {inc1, nab1, inc0, nab0, cone});
}

inline DecompositionWitness verify_susp_tensor_decomposition(const GlobularSum& c, const GlobularSum& d) {
  return verify_susp_tensor_decomposition(to_adc(c), to_adc(d));
}

namespace detail {

// Collapse of copies of C (or C-dual) sitting over each point {k} of [n].
inline DecompositionWitness collapse_colimit(const Adc& c, int n, bool on_left) {
  if (n < 1) throw InvalidInput("suspension colimit: n must be positive");
  check_unital_points(c, "suspension colimit");
  Adc cc = on_left ? c : dualize(c, all_degrees(std::max(c.dim(), 0)));
  Adc pn = to_adc(path(n));
  Adc big = on_left ? tensor(cc, pn) : tensor(pn, cc);
  auto pair_id = [&](const std::string& x, const std::string& p) { return on_left ? tensor_id(x, p) : tensor_id(p, x); };

  AdcBuilder ab;  // the copies of C over the points
  for (int k = 0; k <= n; ++k)
    for (auto x : cc.elements()) {
      std::string id = pair_id(cc.id(x), "p" + std::to_string(k));
      ab.add(id, x.degree, x.degree == 0 ? cc.augmentation(x.index) : 1);
    }
  for (int k = 0; k <= n; ++k)
    for (auto x : cc.elements()) {
      if (x.degree == 0) continue;
      std::vector<std::pair<std::string, Coeff>> t;
      Elem big_e = big.at(pair_id(cc.id(x), "p" + std::to_string(k)));
      for (auto [j, v] : big.boundary(big_e.degree, big_e.index)) t.emplace_back(big.id(x.degree - 1, j), v);
      ab.boundary(pair_id(cc.id(x), "p" + std::to_string(k)), std::move(t));
    }
  Adc copies = ab.build();
  AdcBuilder pb;
  for (int k = 0; k <= n; ++k) pb.add("{" + std::to_string(k) + "}", 0);
  Adc points = pb.build();

  ChainMap inc = map_by_ids(copies, big, [](const std::string& s) { return s; });
  ChainMap collapse(copies, points);
  for (int k = 0; k <= n; ++k)
    for (auto x : cc.elements())
      if (x.degree == 0)
        collapse.set(pair_id(cc.id(x), "p" + std::to_string(k)), {{"{" + std::to_string(k) + "}", 1}});

  Pushout po = pushout_adc(inc, collapse);
  Adc target = blocks_adc(c, n);
  ChainMap from_big(big, target), from_points(points, target);
  for (int k = 0; k <= n; ++k) from_points.set("{" + std::to_string(k) + "}", {{"{" + std::to_string(k) + "}", 1}});
  for (auto x : cc.elements())
    for (int k = 0; k <= n; ++k) {
      std::map<std::string, Coeff> t;
      if (x.degree == 0) add_term(t, "{" + std::to_string(k) + "}", 1);
      from_big.set(big.at(pair_id(cc.id(x), "p" + std::to_string(k))), terms_to_chain(target, x.degree, t));
      if (k < n)
        from_big.set(pair_id(cc.id(x), path_edge(k)), {{"[" + cc.id(x) + "]" + std::to_string(k), 1}});
    }
  ChainMap u = pushout_induced(po, inc, collapse, from_big, from_points);
  return finish_witness(po.object, target, u, {inc, collapse});
}

}  // namespace detail

// [C, n] against the colimit of  coprod {k} <- C (x) coprod {k} -> C (x) [n].
inline DecompositionWitness verify_susp_colimit(const Adc& c, int n) { return detail::collapse_colimit(c, n, true); }

// [C, n] against the colimit of  coprod {k} <- coprod {k} (x) C° -> [n] (x) C°.
inline DecompositionWitness verify_cosuspension(const Adc& c, int n) { return detail::collapse_colimit(c, n, false); }

struct DualityReport {
  bool op = false;
  bool co = false;
  bool full = false;
  std::vector<std::string> failures;
  bool ok() const { return op && co && full; }
};

// Swap b*c -> c*b (or the identity when swap is false), with sign +-1 per degree pair.
inline ChainMap tensor_swap_map(const Adc& from, const Adc& k, const Adc& l, const Adc& to, bool swap) {
  ChainMap f(from, to);
  for (auto x : k.elements())
    for (auto y : l.elements()) {
      Elem s = from.at(tensor_id(k.id(x), l.id(y)));
      Elem t = to.at(swap ? tensor_id(l.id(y), k.id(x)) : tensor_id(k.id(x), l.id(y)));
      f.set(s, Chain::basis(t.index));
    }
  return f;
}

inline DualityReport duality_tensor_check(const Adc& c, const Adc& d) {
  DualityReport r;
  int top = std::max(c.dim() + d.dim(), 1);
  auto check = [&](const DegreeSet& s, bool swap, const char* name) {
    Adc lhs = dualize(tensor(c, d), s);
    Adc cs = dualize(c, s), ds = dualize(d, s);
    Adc rhs = swap ? tensor(ds, cs) : tensor(cs, ds);
    ChainMap f = tensor_swap_map(lhs, c, d, rhs, swap);
    bool good = check_chain_map(f).empty() && invert_basis_map(f).has_value();
    if (!good) r.failures.push_back(name);
    return good;
  };
  r.op = check(odd_degrees(top), true, "op");
  r.co = check(even_degrees(top), true, "co");
  r.full = check(all_degrees(top), false, "full");
  return r;
}

inline DualityReport duality_tensor_check(const GlobularSum& c, const GlobularSum& d) {
  return duality_tensor_check(to_adc(c), to_adc(d));
}

}  // namespace graycat
