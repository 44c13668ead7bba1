#pragma once

#include <set>
#include <string>
#include <vector>

#include "chain_map.hpp"

namespace graycat {

inline Adc point_adc(const std::string& id = "p") {
  return AdcBuilder().add(id, 0).endpoints(id, id).build();
}

inline Adc interval_adc() {
  return AdcBuilder()
      .add("v0", 0)
      .add("v1", 0)
      .add("e", 1)
      .boundary("e", {{"v1", 1}, {"v0", -1}})
      .endpoints("v0", "v1")
      .build();
}

inline std::string tensor_id(const std::string& a, const std::string& b) {
  auto wrap = [](const std::string& s) {
    return s.find('*') == std::string::npos ? s : "(" + s + ")";
  };
  return wrap(a) + "*" + wrap(b);
}

inline Coeff koszul(int degree) { return degree % 2 == 0 ? 1 : -1; }

// Gray tensor: d(b*c) = db*c + (-1)^|b| b*dc, augmentation multiplies.
inline Adc tensor(const Adc& k, const Adc& l) {
  require_valid(k, "tensor");
  require_valid(l, "tensor");
  AdcBuilder b;
  for (auto x : k.elements())
    for (auto y : l.elements()) {
      Coeff aug = (x.degree == 0 && y.degree == 0) ? k.augmentation(x.index) * l.augmentation(y.index) : 1;
      b.add(tensor_id(k.id(x), l.id(y)), x.degree + y.degree, aug);
    }
  for (auto x : k.elements())
    for (auto y : l.elements()) {
      std::vector<std::pair<std::string, Coeff>> terms;
      if (x.degree > 0)
        for (auto [i, c] : k.boundary(x.degree, x.index))
          terms.emplace_back(tensor_id(k.id(x.degree - 1, i), l.id(y)), c);
      if (y.degree > 0)
        for (auto [j, c] : l.boundary(y.degree, y.index))
          terms.emplace_back(tensor_id(k.id(x), l.id(y.degree - 1, j)), koszul(x.degree) * c);
      if (!terms.empty()) b.boundary(tensor_id(k.id(x), l.id(y)), std::move(terms));
    }
  return b.build();
}

// Element of tensor(k, l) corresponding to the pair (x, y).
inline Elem tensor_elem(const Adc& t, const Adc& k, Elem x, const Adc& l, Elem y) {
  return t.at(tensor_id(k.id(x), l.id(y)));
}

// f (x) g on tensor products, expanded bilinearly.
inline ChainMap tensor_map(const ChainMap& f, const ChainMap& g, const Adc& src, const Adc& tgt) {
  ChainMap r(src, tgt);
  const Adc& k = f.source();
  const Adc& l = g.source();
  for (auto x : k.elements())
    for (auto y : l.elements()) {
      Chain img;
      for (auto [i, a] : f.image(x))
        for (auto [j, b] : g.image(y))
          img.add(tensor_elem(tgt, f.target(), {x.degree, i}, g.target(), {y.degree, j}).index, a * b);
      r.set(tensor_elem(src, k, x, l, y), img);
    }
  return r;
}
inline ChainMap tensor_map(const ChainMap& f, const ChainMap& g) {
  return tensor_map(f, g, tensor(f.source(), g.source()), tensor(f.target(), g.target()));
}

using DegreeSet = std::set<int>;

inline DegreeSet odd_degrees(int top) {
  DegreeSet s;
  for (int d = 1; d <= top; d += 2) s.insert(d);
  return s;
}
inline DegreeSet even_degrees(int top) {
  DegreeSet s;
  for (int d = 2; d <= top; d += 2) s.insert(d);
  return s;
}
inline DegreeSet all_degrees(int top) {
  DegreeSet s;
  for (int d = 1; d <= top; ++d) s.insert(d);
  return s;
}

// Reverses the cells of every degree in s: boundaries there change sign.
inline Adc dualize(const Adc& a, const DegreeSet& s) {
  for (int d : s)
    if (d < 1) throw InvalidInput("duality degrees must be positive");
  auto data = std::make_shared<Adc::Data>();
  Adc::Data copy;
  copy.ids.resize(a.dim() + 1);
  copy.boundary.resize(a.dim() + 1);
  for (int d = 0; d <= a.dim(); ++d) {
    for (std::size_t i = 0; i < a.size(d); ++i) {
      copy.ids[d].push_back(a.id(d, i));
      copy.lookup[a.id(d, i)] = {d, i};
      if (d > 0) copy.boundary[d].push_back(s.count(d) ? -a.boundary(d, i) : a.boundary(d, i));
      else copy.augmentation.push_back(a.augmentation(i));
    }
  }
  if (a.endpoints()) {
    auto [p, q] = *a.endpoints();
    copy.endpoints = s.count(1) ? std::make_pair(q, p) : std::make_pair(p, q);
  }
  *data = std::move(copy);
  return Adc(data);
}

// Suspension: two new points and a shifted copy of the complex.
inline Adc suspend_adc(const Adc& k) {
  require_valid(k, "suspend_adc");
  AdcBuilder b;
  b.add("{0}", 0).add("{1}", 0).endpoints("{0}", "{1}");
  auto name = [&](Elem e) { return "[" + k.id(e) + "]"; };
  for (auto e : k.elements()) {
    if (e.degree == 0 && k.augmentation(e.index) != 1)
      throw InvalidInput("suspend_adc: degree-0 element '" + k.id(e) + "' has augmentation != 1");
    b.add(name(e), e.degree + 1);
  }
  for (auto e : k.elements()) {
    if (e.degree == 0) {
      b.boundary(name(e), {{"{1}", 1}, {"{0}", -1}});
    } else {
      std::vector<std::pair<std::string, Coeff>> t;
      for (auto [j, c] : k.boundary(e.degree, e.index)) t.emplace_back(name({e.degree - 1, j}), c);
      b.boundary(name(e), std::move(t));
    }
  }
  return b.build();
}

// Glues the last endpoint of k to the first endpoint of l.
inline Adc wedge_adc(const Adc& k, const Adc& l) {
  if (!k.endpoints() || !l.endpoints()) throw InvalidInput("wedge_adc: missing endpoint designation");
  Elem glue_l{0, l.endpoints()->first};
  Elem glue_k{0, k.endpoints()->second};
  auto kname = [&](Elem e) { return "l." + k.id(e); };
  auto lname = [&](Elem e) { return e == glue_l ? kname(glue_k) : "r." + l.id(e); };
  AdcBuilder b;
  for (auto e : k.elements()) b.add(kname(e), e.degree, e.degree == 0 ? k.augmentation(e.index) : 1);
  for (auto e : l.elements())
    if (!(e == glue_l)) b.add(lname(e), e.degree, e.degree == 0 ? l.augmentation(e.index) : 1);
  for (auto e : k.elements()) {
    if (e.degree == 0) continue;
    std::vector<std::pair<std::string, Coeff>> t;
    for (auto [j, c] : k.boundary(e.degree, e.index)) t.emplace_back(kname({e.degree - 1, j}), c);
    b.boundary(kname(e), std::move(t));
  }
  for (auto e : l.elements()) {
    if (e.degree == 0) continue;
    std::vector<std::pair<std::string, Coeff>> t;
    for (auto [j, c] : l.boundary(e.degree, e.index)) t.emplace_back(lname({e.degree - 1, j}), c);
    b.boundary(lname(e), std::move(t));
  }
  b.endpoints(kname({0, k.endpoints()->first}), lname({0, l.endpoints()->second}));
  return b.build();
}

}  // namespace graycat
