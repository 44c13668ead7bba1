#pragma once

#include <set>
#include <string>

#include "chain_map.hpp"

namespace graycat {

struct Pushout {
  Adc object;
  ChainMap from_b;  // leg out of the codomain of f
  ChainMap from_c;  // leg out of the codomain of g
};

namespace detail {

inline bool injective_on_basis(const ChainMap& f) {
  std::set<Elem> seen;
  for (auto e : f.source().elements()) {
    const Chain& img = f.image(e);
    if (img.size() != 1 || img.begin()->second != 1) return false;
    if (!seen.insert({e.degree, img.begin()->first}).second) return false;
  }
  return true;
}

// f is an inclusion of basis elements; g is any chain map.
inline Pushout pushout_along_inclusion(const ChainMap& f, const ChainMap& g) {
  const Adc& b = f.target();
  const Adc& c = g.target();
  std::map<Elem, Elem> preimage;  // f(a) -> a
  for (auto e : f.source().elements()) preimage[{e.degree, f.image(e).begin()->first}] = e;

  AdcBuilder pb(c);
  std::map<Elem, std::string> bname;
  for (auto e : b.elements()) {
    if (preimage.count(e)) continue;
    std::string n = b.id(e);
    while (pb.contains(n)) n += "'";
    bname[e] = n;
    pb.add(n, e.degree, e.degree == 0 ? b.augmentation(e.index) : 1);
  }
  // Image of a B-chain in the pushout, as (id, coeff) terms.
  auto transport = [&](int d, const Chain& x) {
    std::map<std::string, Coeff> t;
    for (auto [j, k] : x) {
      Elem e{d, j};
      auto it = preimage.find(e);
      if (it == preimage.end()) {
        t[bname[e]] += k;
      } else {
        for (auto [i, v] : g.image(it->second)) t[c.id(d, i)] += k * v;
      }
    }
    std::vector<std::pair<std::string, Coeff>> r;
    for (auto [id, k] : t)
      if (k != 0) r.emplace_back(id, k);
    return r;
  };
  for (auto [e, n] : bname)
    if (e.degree > 0) pb.boundary(n, transport(e.degree - 1, b.boundary(e.degree, e.index)));
  Adc p = pb.build();

  ChainMap from_c(c, p);
  for (auto e : c.elements()) from_c.set(e, Chain::basis(p.at(c.id(e)).index));
  ChainMap from_b(b, p);
  for (auto e : b.elements()) {
    Chain x;
    for (auto& [id, k] : transport(e.degree, Chain::basis(e.index))) x.add(p.at(id).index, k);
    from_b.set(e, x);
  }
  return {p, from_b, from_c};
}

}  // namespace detail

// Pushout of B <-f- A -g-> C. One leg must send basis elements injectively
// to basis elements; the other may be any chain map.
inline Pushout pushout_adc(const ChainMap& f, const ChainMap& g) {
  if (!(f.source() == g.source())) throw InvalidInput("pushout_adc: legs have different sources");
  if (detail::injective_on_basis(f)) return detail::pushout_along_inclusion(f, g);
  if (detail::injective_on_basis(g)) {
    Pushout r = detail::pushout_along_inclusion(g, f);
    std::swap(r.from_b, r.from_c);
    return r;
  }
  throw InvalidInput("pushout_adc: neither leg is injective on basis");
}

// The map out of the pushout into the tip of a cocone (h on B, k on C).
inline ChainMap pushout_induced(const Pushout& p, const ChainMap& f, const ChainMap& g, const ChainMap& h,
                                const ChainMap& k) {
  if (!(f.then(h) == g.then(k))) throw InvalidInput("pushout_induced: not a cocone");
  ChainMap u(p.object, h.target());
  for (auto e : p.object.elements()) {
    // Every pushout basis element is the image of a basis element of B or C.
    bool set = false;
    for (auto x : p.from_c.source().elements())
      if (p.from_c.image(x) == Chain::basis(e.index) && x.degree == e.degree) {
        u.set(e, k.image(x));
        set = true;
        break;
      }
    if (set) continue;
    for (auto x : p.from_b.source().elements())
      if (p.from_b.image(x) == Chain::basis(e.index) && x.degree == e.degree) {
        u.set(e, h.image(x));
        set = true;
        break;
      }
    if (!set) throw InvalidInput("pushout_induced: basis element not reached by the legs");
  }
  return u;
}

}  // namespace graycat
