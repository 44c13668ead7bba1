#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "adc.hpp"

namespace graycat {

// Degree-preserving linear map, given by the image of every basis element.
class ChainMap {
 public:
  ChainMap() = default;
  ChainMap(Adc source, Adc target) : source_(std::move(source)), target_(std::move(target)) {
    action_.resize(source_.dim() + 1);
    for (int d = 0; d <= source_.dim(); ++d) action_[d].resize(source_.size(d));
  }

  const Adc& source() const { return source_; }
  const Adc& target() const { return target_; }

  const Chain& image(int d, std::size_t i) const { return action_[d][i]; }
  const Chain& image(Elem e) const { return image(e.degree, e.index); }
  void set(int d, std::size_t i, Chain c) { action_[d][i] = std::move(c); }
  void set(Elem e, Chain c) { set(e.degree, e.index, std::move(c)); }
  // Convenience for construction by ids.
  void set(const std::string& src, const std::vector<std::pair<std::string, Coeff>>& terms) {
    Elem e = source_.at(src);
    Chain c;
    for (auto& [id, k] : terms) {
      Elem t = target_.at(id);
      if (t.degree != e.degree) throw InvalidInput("chain map image of '" + src + "' has wrong degree");
      c.add(t.index, k);
    }
    set(e, std::move(c));
  }

  Chain apply(int d, const Chain& x) const {
    Chain r;
    for (auto [i, c] : x) r.add(image(d, i), c);
    return r;
  }

  // The composite g after this map.
  ChainMap then(const ChainMap& g) const {
    ChainMap r(source_, g.target_);
    for (auto e : source_.elements()) r.set(e, g.apply(e.degree, image(e)));
    return r;
  }

  friend bool operator==(const ChainMap& a, const ChainMap& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.action_ == b.action_;
  }

 private:
  Adc source_, target_;
  std::vector<std::vector<Chain>> action_;
};

inline ChainMap identity_map(const Adc& a) {
  ChainMap f(a, a);
  for (auto e : a.elements()) f.set(e, Chain::basis(e.index));
  return f;
}

// Commutation with boundaries and preservation of augmentation.
inline ValidationReport check_chain_map(const ChainMap& f) {
  ValidationReport r;
  const Adc& s = f.source();
  const Adc& t = f.target();
  for (auto e : s.elements()) {
    const Chain& img = f.image(e);
    for (auto [j, c] : img)
      if (e.degree > t.dim() || j >= t.size(e.degree)) {
        r.push_back({s.id(e), "image outside target"});
        return r;
      }
    if (e.degree == 0) {
      if (t.augment(img) != s.augmentation(e.index))
        r.push_back({s.id(e), "augmentation not preserved"});
    } else {
      Chain lhs = t.boundary_of(e.degree, img);
      Chain rhs = f.apply(e.degree - 1, s.boundary(e.degree, e.index));
      if (lhs != rhs) r.push_back({s.id(e), "does not commute with the boundary"});
    }
  }
  return r;
}

inline bool is_positive(const ChainMap& f) {
  for (auto e : f.source().elements())
    if (!f.image(e).nonnegative()) return false;
  return true;
}

inline bool is_identity_on_basis(const ChainMap& f) {
  if (!(f.source() == f.target())) return false;
  for (auto e : f.source().elements())
    if (f.image(e) != Chain::basis(e.index)) return false;
  return true;
}

// Basis-to-basis map given by a bijection of ids.
inline ChainMap map_by_ids(const Adc& s, const Adc& t,
                           const std::function<std::string(const std::string&)>& rename) {
  ChainMap f(s, t);
  for (auto e : s.elements()) {
    Elem img = t.at(rename(s.id(e)));
    if (img.degree != e.degree) throw InvalidInput("renaming changes degree of '" + s.id(e) + "'");
    f.set(e, Chain::basis(img.index));
  }
  return f;
}

// Inverse of an invertible basis-to-basis map with signs +-1.
inline std::optional<ChainMap> invert_basis_map(const ChainMap& f) {
  ChainMap g(f.target(), f.source());
  std::vector<std::vector<bool>> hit(f.target().dim() + 1);
  for (int d = 0; d <= f.target().dim(); ++d) hit[d].assign(f.target().size(d), false);
  if (f.source().sizes() != f.target().sizes()) return std::nullopt;
  for (auto e : f.source().elements()) {
    const Chain& img = f.image(e);
    if (img.size() != 1) return std::nullopt;
    auto [j, c] = *img.begin();
    if ((c != 1 && c != -1) || hit[e.degree][j]) return std::nullopt;
    hit[e.degree][j] = true;
    g.set(e.degree, j, Chain::basis(e.index, c));
  }
  return g;
}

}  // namespace graycat
