#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chain.hpp"

namespace graycat {

// Augmented directed complex with a distinguished basis. Basis elements are
// stored by degree in canonical order (lexicographic id within a degree).
// The value is immutable; copies share the underlying data.
class Adc {
 public:
  struct Data {
    std::vector<std::vector<std::string>> ids;
    std::vector<std::vector<Chain>> boundary;  // boundary[d][i] lives in degree d-1
    std::vector<Coeff> augmentation;           // one entry per degree-0 element
    std::optional<std::pair<std::size_t, std::size_t>> endpoints;
    std::map<std::string, Elem> lookup;
  };

  Adc() : d_(std::make_shared<Data>()) {}
  explicit Adc(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  int dim() const { return static_cast<int>(d_->ids.size()) - 1; }
  std::size_t size(int d) const {
    return d < 0 || d > dim() ? 0 : d_->ids[d].size();
  }
  std::size_t total_size() const {
    std::size_t n = 0;
    for (auto& v : d_->ids) n += v.size();
    return n;
  }
  std::vector<std::size_t> sizes() const {
    std::vector<std::size_t> r;
    for (auto& v : d_->ids) r.push_back(v.size());
    return r;
  }

  const std::string& id(int d, std::size_t i) const { return d_->ids[d][i]; }
  const std::string& id(Elem e) const { return id(e.degree, e.index); }
  const Chain& boundary(int d, std::size_t i) const { return d_->boundary[d][i]; }
  Chain boundary_plus(int d, std::size_t i) const { return boundary(d, i).positive_part(); }
  Chain boundary_minus(int d, std::size_t i) const { return boundary(d, i).negative_part(); }
  Coeff augmentation(std::size_t i) const { return d_->augmentation[i]; }

  // Boundary of a chain of degree d (d >= 1).
  Chain boundary_of(int d, const Chain& x) const {
    Chain r;
    for (auto [i, c] : x) r.add(boundary(d, i), c);
    return r;
  }
  Coeff augment(const Chain& x) const {
    Coeff s = 0;
    for (auto [i, c] : x) s += c * augmentation(i);
    return s;
  }

  std::optional<Elem> find(const std::string& id) const {
    auto it = d_->lookup.find(id);
    if (it == d_->lookup.end()) return std::nullopt;
    return it->second;
  }
  Elem at(const std::string& id) const {
    auto e = find(id);
    if (!e) throw InvalidInput("unknown basis element '" + id + "'");
    return *e;
  }

  const std::optional<std::pair<std::size_t, std::size_t>>& endpoints() const {
    return d_->endpoints;
  }
  Adc with_endpoints(std::size_t first, std::size_t last) const {
    auto d = std::make_shared<Data>(*d_);
    d->endpoints = std::make_pair(first, last);
    return Adc(d);
  }

  std::vector<Elem> elements() const {
    std::vector<Elem> r;
    for (int d = 0; d <= dim(); ++d)
      for (std::size_t i = 0; i < size(d); ++i) r.push_back({d, i});
    return r;
  }

  friend bool operator==(const Adc& a, const Adc& b) {
    return a.d_->ids == b.d_->ids && a.d_->boundary == b.d_->boundary &&
           a.d_->augmentation == b.d_->augmentation && a.d_->endpoints == b.d_->endpoints;
  }

 private:
  std::shared_ptr<const Data> d_;
};

class AdcBuilder {
 public:
  AdcBuilder() = default;
  explicit AdcBuilder(const Adc& a) {
    for (auto e : a.elements()) {
      add(a.id(e), e.degree, e.degree == 0 ? a.augmentation(e.index) : 1);
      if (e.degree > 0) {
        std::vector<std::pair<std::string, Coeff>> t;
        for (auto [j, c] : a.boundary(e.degree, e.index)) t.emplace_back(a.id(e.degree - 1, j), c);
        boundary(a.id(e), std::move(t));
      }
    }
    if (a.endpoints()) endpoints(a.id(0, a.endpoints()->first), a.id(0, a.endpoints()->second));
  }

  AdcBuilder& add(std::string id, int degree, Coeff aug = 1) {
    if (degree < 0) throw InvalidInput("negative degree for '" + id + "'");
    if (!elems_.emplace(id, Entry{degree, aug, {}}).second)
      throw InvalidInput("duplicate basis element '" + id + "'");
    return *this;
  }
  AdcBuilder& boundary(const std::string& id, std::vector<std::pair<std::string, Coeff>> terms) {
    auto it = elems_.find(id);
    if (it == elems_.end()) throw InvalidInput("unknown basis element '" + id + "'");
    it->second.boundary = std::move(terms);
    return *this;
  }
  AdcBuilder& augmentation(const std::string& id, Coeff c) {
    auto it = elems_.find(id);
    if (it == elems_.end()) throw InvalidInput("unknown basis element '" + id + "'");
    it->second.aug = c;
    return *this;
  }
  AdcBuilder& endpoints(std::string first, std::string last) {
    endpoints_ = std::make_pair(std::move(first), std::move(last));
    return *this;
  }
  bool contains(const std::string& id) const { return elems_.count(id) > 0; }

  Adc build() const {
    auto d = std::make_shared<Adc::Data>();
    int top = -1;
    for (auto& [id, e] : elems_) top = std::max(top, e.degree);
    d->ids.resize(top + 1);
    for (auto& [id, e] : elems_) d->ids[e.degree].push_back(id);  // map order is lexicographic
    for (int k = 0; k <= top; ++k)
      for (std::size_t i = 0; i < d->ids[k].size(); ++i) d->lookup[d->ids[k][i]] = {k, i};
    d->boundary.resize(top + 1);
    for (int k = 0; k <= top; ++k) {
      d->boundary[k].resize(k == 0 ? 0 : d->ids[k].size());
      if (k == 0) {
        for (auto& id : d->ids[0]) d->augmentation.push_back(elems_.at(id).aug);
      }
    }
    for (auto& [id, e] : elems_) {
      if (e.degree == 0) {
        if (!e.boundary.empty()) throw InvalidInput("degree-0 element '" + id + "' has a boundary");
        continue;
      }
      Chain c;
      for (auto& [ref, k] : e.boundary) {
        auto it = d->lookup.find(ref);
        if (it == d->lookup.end())
          throw InvalidInput("boundary of '" + id + "' references unknown '" + ref + "'");
        if (it->second.degree != e.degree - 1)
          throw InvalidInput("boundary of '" + id + "' references '" + ref + "' of wrong degree");
        c.add(it->second.index, k);
      }
      d->boundary[e.degree][d->lookup[id].index] = std::move(c);
    }
    if (endpoints_) {
      auto lookup0 = [&](const std::string& s) {
        auto it = d->lookup.find(s);
        if (it == d->lookup.end() || it->second.degree != 0)
          throw InvalidInput("endpoint '" + s + "' is not a degree-0 element");
        return it->second.index;
      };
      d->endpoints = std::make_pair(lookup0(endpoints_->first), lookup0(endpoints_->second));
    }
    return Adc(d);
  }

 private:
  struct Entry {
    int degree;
    Coeff aug;
    std::vector<std::pair<std::string, Coeff>> boundary;
  };
  std::map<std::string, Entry> elems_;
  std::optional<std::pair<std::string, std::string>> endpoints_;
};

struct Violation {
  std::string where;
  std::string message;
  friend bool operator==(const Violation&, const Violation&) = default;
};
using ValidationReport = std::vector<Violation>;

inline ValidationReport validate(const Adc& a) {
  ValidationReport r;
  for (int d = 1; d <= a.dim(); ++d) {
    for (std::size_t i = 0; i < a.size(d); ++i) {
      const Chain& b = a.boundary(d, i);
      if (d == 1) {
        if (a.augment(b) != 0) r.push_back({a.id(d, i), "augmentation of boundary is nonzero"});
      } else if (!a.boundary_of(d - 1, b).empty()) {
        r.push_back({a.id(d, i), "boundary of boundary is nonzero"});
      }
    }
  }
  return r;
}

inline void require_valid(const Adc& a, const char* what) {
  auto r = validate(a);
  if (!r.empty())
    throw InvalidInput(std::string(what) + ": invalid complex at '" + r.front().where + "': " +
                       r.front().message);
}

// Readable rendering of a chain using basis ids.
inline std::string chain_string(const Adc& a, int degree, const Chain& c) {
  if (c.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto [i, k] : c) {
    if (k < 0) s += first ? "-" : " - ";
    else if (!first) s += " + ";
    Coeff m = k < 0 ? -k : k;
    if (m != 1) s += std::to_string(m) + " ";
    s += a.id(degree, i);
    first = false;
  }
  return s;
}

}  // namespace graycat
