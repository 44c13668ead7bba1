#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nu.hpp"

namespace graycat {

inline constexpr int max_category_dim = 3;

struct CellInfo {
  std::string label;
  std::size_t source = 0;  // a cell one dimension down; unused for objects
  std::size_t target = 0;
  friend bool operator==(const CellInfo&, const CellInfo&) = default;
};

using CompTable = std::map<std::pair<std::size_t, std::size_t>, std::size_t>;

// Finite strict n-category with explicit boundary, identity and composition tables.
// Composition is diagrammatic: a #i b is defined when the i-target of a is the i-source of b.
struct StrictCat {
  int dim = 0;
  std::vector<std::vector<CellInfo>> cells;         // cells[k]
  std::vector<std::vector<std::size_t>> identity;   // identity[k][x] is a (k+1)-cell, k < dim
  std::vector<std::vector<CompTable>> comp;         // comp[k][i] for k-cells, i < k

  std::size_t size(int k) const { return k >= 0 && k <= dim ? cells[k].size() : 0; }
  std::size_t source(int k, std::size_t x) const { return cells[k][x].source; }
  std::size_t target(int k, std::size_t x) const { return cells[k][x].target; }
  const std::string& label(int k, std::size_t x) const { return cells[k][x].label; }

  // The j-dimensional source or target of a k-cell.
  std::size_t boundary(int k, std::size_t x, int j, bool positive) const {
    while (k > j) {
      x = positive ? target(k, x) : source(k, x);
      --k;
    }
    return x;
  }

  // The identity of a j-cell, lifted to dimension k.
  std::size_t lift(int j, std::size_t x, int k) const {
    while (j < k) x = identity[j++][x];
    return x;
  }

  bool is_identity(int k, std::size_t x) const { return k > 0 && identity[k - 1][source(k, x)] == x; }

  bool composable(int k, int i, std::size_t a, std::size_t b) const {
    return i < k && boundary(k, a, i, true) == boundary(k, b, i, false);
  }

  std::optional<std::size_t> compose(int k, int i, std::size_t a, std::size_t b) const {
    auto& t = comp[k][i];
    auto it = t.find({a, b});
    if (it == t.end()) return std::nullopt;
    return it->second;
  }

  std::size_t compose_or_throw(int k, int i, std::size_t a, std::size_t b) const {
    auto r = compose(k, i, a, b);
    if (!r) throw InvalidInput("composite of " + label(k, a) + " and " + label(k, b) + " is not defined");
    return *r;
  }

  std::optional<std::size_t> find(int k, const std::string& l) const {
    for (std::size_t x = 0; x < size(k); ++x)
      if (cells[k][x].label == l) return x;
    return std::nullopt;
  }

  std::size_t at(int k, const std::string& l) const {
    auto r = find(k, l);
    if (!r) throw InvalidInput("no " + std::to_string(k) + "-cell labelled '" + l + "'");
    return *r;
  }

  std::vector<std::size_t> nonidentity_counts() const {
    std::vector<std::size_t> r(dim + 1, 0);
    for (int k = 0; k <= dim; ++k)
      for (std::size_t x = 0; x < size(k); ++x) r[k] += !is_identity(k, x);
    return r;
  }

  friend bool operator==(const StrictCat&, const StrictCat&) = default;
};

// Incremental construction; unit laws are filled in by build().
class CatBuilder {
 public:
  explicit CatBuilder(int dim) {
    if (dim < 0 || dim > max_category_dim) throw InvalidInput("category dimension must be between 0 and 3");
    c_.dim = dim;
    c_.cells.resize(dim + 1);
    c_.identity.resize(dim);
    c_.comp.resize(dim + 1);
    for (int k = 0; k <= dim; ++k) c_.comp[k].resize(k);
  }

  std::size_t add(int k, std::string label, std::size_t source = 0, std::size_t target = 0) {
    c_.cells[k].push_back({std::move(label), source, target});
    if (k < c_.dim) c_.identity[k].push_back(npos);
    return c_.cells[k].size() - 1;
  }
  std::size_t add(int k, std::string label, const std::string& source, const std::string& target) {
    return add(k, std::move(label), c_.at(k - 1, source), c_.at(k - 1, target));
  }

  // Adds a cell of every dimension above each existing cell to serve as its identity.
  void add_identities(const std::string& prefix = "1") {
    for (int k = 0; k < c_.dim; ++k)
      for (std::size_t x = 0; x < c_.cells[k].size(); ++x)
        if (c_.identity[k][x] == npos) c_.identity[k][x] = add(k + 1, prefix + "(" + c_.cells[k][x].label + ")", x, x);
  }

  void set_identity(int k, std::size_t x, std::size_t id) { c_.identity[k][x] = id; }

  void set_comp(int k, int i, std::size_t a, std::size_t b, std::size_t r) { put(k, i, a, b, r); }
  void set_comp(int k, int i, const std::string& a, const std::string& b, const std::string& r) {
    put(k, i, c_.at(k, a), c_.at(k, b), c_.at(k, r));
  }

  const StrictCat& peek() const { return c_; }

  StrictCat build() {
    for (int k = 0; k < c_.dim; ++k)
      for (auto id : c_.identity[k])
        if (id == npos) throw InvalidInput("cell without identity");
    // Unit laws, and identities of composites.
    for (int k = 1; k <= c_.dim; ++k)
      for (int i = 0; i < k; ++i)
        for (std::size_t a = 0; a < c_.cells[k].size(); ++a) {
          put(k, i, c_.lift(i, c_.boundary(k, a, i, false), k), a, a);
          put(k, i, a, c_.lift(i, c_.boundary(k, a, i, true), k), a);
        }
    for (int k = 1; k < c_.dim; ++k)
      for (int i = 0; i < k; ++i)
        for (auto [ab, r] : CompTable(c_.comp[k][i]))
          put(k + 1, i, c_.identity[k][ab.first], c_.identity[k][ab.second], c_.identity[k][r]);
    return c_;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  void put(int k, int i, std::size_t a, std::size_t b, std::size_t r) {
    auto [it, fresh] = c_.comp[k][i].emplace(std::make_pair(a, b), r);
    if (!fresh && it->second != r)
      throw InvalidInput("conflicting composites of " + c_.label(k, a) + " and " + c_.label(k, b));
  }
  StrictCat c_;
};

inline ValidationReport validate_category(const StrictCat& c) {
  ValidationReport r;
  auto fail = [&](std::string where, std::string what) { r.push_back({std::move(where), std::move(what)}); };
  if (c.dim < 0 || c.dim > max_category_dim) {
    fail("dim", "dimension out of range");
    return r;
  }
  if ((int)c.cells.size() != c.dim + 1 || (int)c.identity.size() != c.dim || (int)c.comp.size() != c.dim + 1) {
    fail("tables", "table shapes do not match the dimension");
    return r;
  }
  for (int k = 0; k <= c.dim; ++k)
    if ((int)c.comp[k].size() != k) {
      fail("tables", "composition tables do not match the dimension");
      return r;
    }
  for (int k = 1; k <= c.dim; ++k)
    for (std::size_t x = 0; x < c.size(k); ++x) {
      auto& cell = c.cells[k][x];
      if (cell.source >= c.size(k - 1) || cell.target >= c.size(k - 1)) {
        fail(cell.label, "boundary out of range");
        return r;
      }
      if (k >= 2 && (c.source(k - 1, cell.source) != c.source(k - 1, cell.target) ||
                     c.target(k - 1, cell.source) != c.target(k - 1, cell.target)))
        fail(cell.label, "boundary is not globular");
    }
  for (int k = 0; k < c.dim; ++k) {
    if (c.identity[k].size() != c.size(k)) {
      fail("identities", "identity table has wrong size");
      return r;
    }
    for (std::size_t x = 0; x < c.size(k); ++x) {
      std::size_t id = c.identity[k][x];
      if (id >= c.size(k + 1) || c.source(k + 1, id) != x || c.target(k + 1, id) != x)
        fail(c.label(k, x), "identity has wrong boundary");
    }
  }
  if (!r.empty()) return r;

  for (int k = 1; k <= c.dim; ++k)
    for (int i = 0; i < k; ++i) {
      for (auto [ab, z] : c.comp[k][i]) {
        auto [a, b] = ab;
        std::string where = c.label(k, a) + " #" + std::to_string(i) + " " + c.label(k, b);
        if (a >= c.size(k) || b >= c.size(k) || z >= c.size(k)) {
          fail(where, "composite out of range");
          continue;
        }
        if (!c.composable(k, i, a, b)) {
          fail(where, "composite defined on a non-composable pair");
          continue;
        }
        if (i == k - 1) {
          if (c.source(k, z) != c.source(k, a) || c.target(k, z) != c.target(k, b))
            fail(where, "composite has wrong boundary");
        } else {
          auto s = c.compose(k - 1, i, c.source(k, a), c.source(k, b));
          auto t = c.compose(k - 1, i, c.target(k, a), c.target(k, b));
          if (!s || !t || *s != c.source(k, z) || *t != c.target(k, z)) fail(where, "composite has wrong boundary");
        }
      }
      for (std::size_t a = 0; a < c.size(k); ++a)
        for (std::size_t b = 0; b < c.size(k); ++b)
          if (c.composable(k, i, a, b) && !c.compose(k, i, a, b))
            fail(c.label(k, a) + " #" + std::to_string(i) + " " + c.label(k, b), "composite missing");
    }
  if (!r.empty()) return r;

  for (int k = 1; k <= c.dim; ++k)
    for (int i = 0; i < k; ++i)
      for (std::size_t a = 0; a < c.size(k); ++a) {
        std::size_t lu = c.lift(i, c.boundary(k, a, i, false), k), ru = c.lift(i, c.boundary(k, a, i, true), k);
        if (*c.compose(k, i, lu, a) != a || *c.compose(k, i, a, ru) != a)
          fail(c.label(k, a), "unit law fails along " + std::to_string(i));
      }
  for (int k = 1; k < c.dim; ++k)
    for (int i = 0; i < k; ++i)
      for (auto [ab, z] : c.comp[k][i])
        if (*c.compose(k + 1, i, c.identity[k][ab.first], c.identity[k][ab.second]) != c.identity[k][z])
          fail(c.label(k, z), "identity of a composite is not the composite of identities");
  for (int k = 1; k <= c.dim; ++k)
    for (int i = 0; i < k; ++i)
      for (auto [ab, x] : c.comp[k][i])
        for (std::size_t d = 0; d < c.size(k); ++d) {
          if (!c.composable(k, i, ab.second, d)) continue;
          std::size_t left = *c.compose(k, i, x, d);
          std::size_t right = *c.compose(k, i, ab.first, *c.compose(k, i, ab.second, d));
          if (left != right)
            fail(c.label(k, ab.first) + "," + c.label(k, ab.second) + "," + c.label(k, d),
                 "associativity fails along " + std::to_string(i));
        }
  // (a #i b) #j (c #i d) = (a #j c) #i (b #j d) for i < j.
  for (int k = 2; k <= c.dim; ++k)
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        for (auto [ab, x] : c.comp[k][i])
          for (auto [cd, y] : c.comp[k][i]) {
            auto [a, b] = ab;
            auto [cc, d] = cd;
            if (!c.composable(k, j, x, y) || !c.composable(k, j, a, cc) || !c.composable(k, j, b, d)) continue;
            std::size_t l = *c.compose(k, j, x, y);
            auto ac = *c.compose(k, j, a, cc), bd = *c.compose(k, j, b, d);
            auto rr = c.compose(k, i, ac, bd);
            if (!rr || *rr != l)
              fail(c.label(k, a) + "," + c.label(k, b) + "," + c.label(k, cc) + "," + c.label(k, d),
                   "interchange fails for " + std::to_string(i) + "<" + std::to_string(j));
          }
  return r;
}

inline void require_valid_category(const StrictCat& c, const char* what) {
  auto r = validate_category(c);
  if (!r.empty())
    throw InvalidInput(std::string(what) + ": invalid category at '" + r.front().where + "': " + r.front().message);
}

// The same category viewed one or more dimensions higher, with only identity cells on top.
inline StrictCat raise_dim(const StrictCat& c, int d) {
  if (d > max_category_dim) throw InvalidInput("category dimension must be at most 3");
  StrictCat r = c;
  while (r.dim < d) {
    int k = r.dim;
    std::vector<CellInfo> top;
    std::vector<std::size_t> ids;
    for (std::size_t x = 0; x < r.size(k); ++x) {
      top.push_back({"1(" + r.label(k, x) + ")", x, x});
      ids.push_back(x);
    }
    r.cells.push_back(top);
    r.identity.push_back(ids);
    std::vector<CompTable> tables(k + 1);
    for (int i = 0; i < k; ++i) tables[i] = r.comp[k][i];
    for (std::size_t x = 0; x < r.size(k); ++x) tables[k][{x, x}] = x;
    r.comp.push_back(tables);
    r.dim = k + 1;
  }
  return r;
}

inline StrictCat truncate(const StrictCat& c, int k) {
  if (k < 0 || k > c.dim) throw InvalidInput("truncate: level out of range");
  StrictCat r;
  r.dim = k;
  r.cells.assign(c.cells.begin(), c.cells.begin() + k + 1);
  r.identity.assign(c.identity.begin(), c.identity.begin() + k);
  r.comp.assign(c.comp.begin(), c.comp.begin() + k + 1);
  return r;
}

namespace detail {
struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};
}  // namespace detail

// k-cells identified when joined by a zig-zag of (k+1)-cells; higher cells dropped.
inline StrictCat itruncate(const StrictCat& c, int k) {
  if (k < 0 || k > c.dim) throw InvalidInput("itruncate: level out of range");
  if (k == c.dim) return c;
  detail::UnionFind uf(c.size(k));
  for (std::size_t x = 0; x < c.size(k + 1); ++x) uf.unite(c.source(k + 1, x), c.target(k + 1, x));
  std::vector<std::size_t> cls(c.size(k)), rep;
  std::map<std::size_t, std::size_t> index;
  for (std::size_t x = 0; x < c.size(k); ++x) {
    auto root = uf.find(x);
    auto [it, fresh] = index.emplace(root, rep.size());
    if (fresh) rep.push_back(x);
    cls[x] = it->second;
  }
  StrictCat r = truncate(c, k);
  r.cells[k].clear();
  for (auto x : rep) r.cells[k].push_back(c.cells[k][x]);
  if (k > 0)
    for (auto& id : r.identity[k - 1]) id = cls[id];
  for (int i = 0; i < k; ++i) {
    CompTable t;
    for (auto [ab, z] : c.comp[k][i]) {
      auto [it, fresh] = t.emplace(std::make_pair(cls[ab.first], cls[ab.second]), cls[z]);
      if (!fresh && it->second != cls[z]) throw InvalidInput("itruncate: composition does not descend");
    }
    r.comp[k][i] = t;
  }
  return r;
}

struct HomCat {
  StrictCat cat;
  std::vector<std::vector<std::size_t>> embed;  // embed[j][x] is the (j+1)-cell of the ambient category
};

// hom(a, b): its j-cells are the (j+1)-cells from a to b.
inline HomCat hom_with_embedding(const StrictCat& c, std::size_t a, std::size_t b) {
  HomCat h;
  if (c.dim == 0) {
    h.cat.dim = 0;
    h.cat.cells.resize(1);
    h.cat.comp.resize(1);
    h.embed.resize(1);
    if (a == b) h.cat.cells[0].push_back({"*", 0, 0});
    return h;
  }
  int n = c.dim - 1;
  h.cat.dim = n;
  h.cat.cells.resize(n + 1);
  h.cat.identity.resize(n);
  h.cat.comp.resize(n + 1);
  h.embed.resize(n + 1);
  std::vector<std::map<std::size_t, std::size_t>> local(n + 1);
  for (int j = 0; j <= n; ++j)
    for (std::size_t x = 0; x < c.size(j + 1); ++x)
      if (c.boundary(j + 1, x, 0, false) == a && c.boundary(j + 1, x, 0, true) == b) {
        local[j][x] = h.embed[j].size();
        h.embed[j].push_back(x);
        std::size_t s = j ? local[j - 1].at(c.source(j + 1, x)) : 0;
        std::size_t t = j ? local[j - 1].at(c.target(j + 1, x)) : 0;
        h.cat.cells[j].push_back({c.label(j + 1, x), s, t});
      }
  for (int j = 0; j < n; ++j)
    for (auto x : h.embed[j]) h.cat.identity[j].push_back(local[j + 1].at(c.identity[j + 1][x]));
  for (int j = 0; j <= n; ++j) {
    h.cat.comp[j].resize(j);
    for (int i = 0; i < j; ++i)
      for (auto [xy, z] : c.comp[j + 1][i + 1]) {
        auto ix = local[j].find(xy.first), iy = local[j].find(xy.second);
        if (ix == local[j].end() || iy == local[j].end()) continue;
        h.cat.comp[j][i][{ix->second, iy->second}] = local[j].at(z);
      }
  }
  return h;
}

inline StrictCat hom_cat(const StrictCat& c, std::size_t a, std::size_t b) { return hom_with_embedding(c, a, b).cat; }

inline std::string nu_cell_label(const Adc& a, const NuCell& x) {
  if (x.dim == 0) return chain_string(a, 0, x.top());
  if (x.degenerate()) return "1(" + nu_cell_label(a, nu_boundary(x, x.dim - 1, false)) + ")";
  return chain_string(a, x.dim, x.top());
}

struct NuCategory {
  StrictCat cat;
  std::vector<std::vector<NuCell>> cells;
  std::vector<std::map<NuCell, std::size_t>> index;
  std::size_t find(int k, const NuCell& x) const {
    auto it = index[k].find(x);
    if (it == index[k].end()) throw InvalidInput("nu-cell not among the enumerated cells");
    return it->second;
  }
};

// The strict category of nu-cells up to max_dim, with composites computed on tables.
inline NuCategory from_nu_indexed(const Adc& a, int max_dim, NuOptions opt = {}) {
  if (max_dim < 0 || max_dim > max_category_dim) throw InvalidInput("from_nu: dimension must be between 0 and 3");
  auto cells = nu_cells_by_dim(a, max_dim, opt);
  std::vector<std::map<NuCell, std::size_t>> index(max_dim + 1);
  for (int k = 0; k <= max_dim; ++k)
    for (std::size_t x = 0; x < cells[k].size(); ++x) index[k][cells[k][x]] = x;
  auto lookup = [&](int k, const NuCell& x) {
    auto it = index[k].find(x);
    if (it == index[k].end()) throw InvalidInput("from_nu: composite escapes the enumerated cells; raise the cap");
    return it->second;
  };
  CatBuilder b(max_dim);
  std::set<std::string> used;
  for (int k = 0; k <= max_dim; ++k)
    for (auto& x : cells[k]) {
      std::string l = nu_cell_label(a, x);
      for (int n = 2; used.count(l); ++n) l = nu_cell_label(a, x) + "#" + std::to_string(n);
      used.insert(l);
      std::size_t s = k ? lookup(k - 1, nu_boundary(x, k - 1, false)) : 0;
      std::size_t t = k ? lookup(k - 1, nu_boundary(x, k - 1, true)) : 0;
      b.add(k, l, s, t);
    }
  for (int k = 0; k < max_dim; ++k)
    for (std::size_t x = 0; x < cells[k].size(); ++x) b.set_identity(k, x, lookup(k + 1, nu_lift(cells[k][x], k + 1)));
  for (int k = 1; k <= max_dim; ++k)
    for (int i = 0; i < k; ++i)
      for (std::size_t x = 0; x < cells[k].size(); ++x)
        for (std::size_t y = 0; y < cells[k].size(); ++y)
          if (nu_composable(cells[k][x], cells[k][y], i))
            b.set_comp(k, i, x, y, lookup(k, nu_compose(cells[k][x], cells[k][y], i)));
  return {b.build(), std::move(cells), std::move(index)};
}

inline StrictCat from_nu(const Adc& a, int max_dim, NuOptions opt = {}) { return from_nu_indexed(a, max_dim, opt).cat; }

// ---- small named categories ----

inline StrictCat discrete_cat(std::size_t n, int dim = 0) {
  CatBuilder b(dim);
  for (std::size_t x = 0; x < n; ++x) b.add(0, std::to_string(x));
  for (int k = 0; k < dim; ++k) b.add_identities();
  return b.build();
}

inline StrictCat terminal_cat(int dim = 0) { return discrete_cat(1, dim); }

// The poset {0 < 1 < ... < n}.
inline StrictCat poset_cat(int n) {
  if (n < 0) throw InvalidInput("poset_cat: negative length");
  CatBuilder b(1);
  for (int x = 0; x <= n; ++x) b.add(0, std::to_string(x));
  std::map<std::pair<int, int>, std::size_t> arrow;
  for (int x = 0; x <= n; ++x)
    for (int y = x; y <= n; ++y) {
      std::string l = x == y ? "1(" + std::to_string(x) + ")" : std::to_string(x) + "<" + std::to_string(y);
      arrow[{x, y}] = b.add(1, l, x, y);
    }
  for (int x = 0; x <= n; ++x) b.set_identity(0, x, arrow[{x, x}]);
  for (int x = 0; x <= n; ++x)
    for (int y = x; y <= n; ++y)
      for (int z = y; z <= n; ++z) b.set_comp(1, 0, arrow[{x, y}], arrow[{y, z}], arrow[{x, z}]);
  return b.build();
}

// Objects 0, 1 with mutually inverse u: 0 -> 1 and v: 1 -> 0.
inline StrictCat walking_iso() {
  CatBuilder b(1);
  b.add(0, "0");
  b.add(0, "1");
  b.add_identities();
  b.add(1, "u", "0", "1");
  b.add(1, "v", "1", "0");
  b.set_comp(1, 0, "u", "v", "1(0)");
  b.set_comp(1, 0, "v", "u", "1(1)");
  return b.build();
}

inline StrictCat parallel_pair() {
  CatBuilder b(1);
  b.add(0, "0");
  b.add(0, "1");
  b.add_identities();
  b.add(1, "f", "0", "1");
  b.add(1, "g", "0", "1");
  return b.build();
}

// Two objects, arrows f, h: a -> b and mutually inverse 2-cells between them.
inline StrictCat walking_2iso() {
  CatBuilder b(2);
  b.add(0, "a");
  b.add(0, "b");
  b.add_identities();
  b.add(1, "f", "a", "b");
  b.add(1, "h", "a", "b");
  b.add_identities();
  b.add(2, "t", "f", "h");
  b.add(2, "t'", "h", "f");
  b.set_comp(2, 1, "t", "t'", "1(f)");
  b.set_comp(2, 1, "t'", "t", "1(h)");
  return b.build();
}

// ---- functors ----

struct CatFunctor {
  std::shared_ptr<const StrictCat> source, target;
  std::vector<std::vector<std::size_t>> map;  // map[k][x]
  std::size_t operator()(int k, std::size_t x) const { return map[k][x]; }
  friend bool operator==(const CatFunctor& a, const CatFunctor& b) {
    return *a.source == *b.source && *a.target == *b.target && a.map == b.map;
  }
};

inline ValidationReport check_functor(const CatFunctor& f) {
  ValidationReport r;
  const StrictCat &s = *f.source, &t = *f.target;
  if (s.dim != t.dim) {
    r.push_back({"dim", "source and target dimensions differ"});
    return r;
  }
  for (int k = 0; k <= s.dim; ++k) {
    if (f.map[k].size() != s.size(k)) {
      r.push_back({"map", "cell map has wrong size"});
      return r;
    }
    for (auto y : f.map[k])
      if (y >= t.size(k)) {
        r.push_back({"map", "cell map out of range"});
        return r;
      }
  }
  for (int k = 1; k <= s.dim; ++k)
    for (std::size_t x = 0; x < s.size(k); ++x)
      if (t.source(k, f(k, x)) != f(k - 1, s.source(k, x)) || t.target(k, f(k, x)) != f(k - 1, s.target(k, x)))
        r.push_back({s.label(k, x), "boundary not preserved"});
  for (int k = 0; k < s.dim; ++k)
    for (std::size_t x = 0; x < s.size(k); ++x)
      if (f(k + 1, s.identity[k][x]) != t.identity[k][f(k, x)]) r.push_back({s.label(k, x), "identity not preserved"});
  if (!r.empty()) return r;
  for (int k = 1; k <= s.dim; ++k)
    for (int i = 0; i < k; ++i)
      for (auto [ab, z] : s.comp[k][i]) {
        auto img = t.compose(k, i, f(k, ab.first), f(k, ab.second));
        if (!img || *img != f(k, z)) r.push_back({s.label(k, z), "composite not preserved"});
      }
  return r;
}

inline CatFunctor identity_functor(const StrictCat& c) {
  auto p = std::make_shared<const StrictCat>(c);
  CatFunctor f{p, p, {}};
  for (int k = 0; k <= c.dim; ++k) {
    f.map.emplace_back(c.size(k));
    std::iota(f.map[k].begin(), f.map[k].end(), 0);
  }
  return f;
}

// g after f.
inline CatFunctor compose_functors(const CatFunctor& f, const CatFunctor& g) {
  if (!(*f.target == *g.source)) throw InvalidInput("compose_functors: functors are not composable");
  CatFunctor h{f.source, g.target, f.map};
  for (int k = 0; k <= f.source->dim; ++k)
    for (auto& y : h.map[k]) y = g(k, y);
  return h;
}

struct SearchOptions {
  std::size_t budget = 20'000'000;
  std::size_t limit = static_cast<std::size_t>(-1);  // stop after this many results
};

namespace detail {

struct CompEntry {
  int i;
  std::size_t a, b, c;
};

class FunctorSearch {
 public:
  FunctorSearch(const StrictCat& s, const StrictCat& t, SearchOptions opt) : s_(s), t_(t), opt_(opt) {
    int n = s.dim;
    val_.resize(n + 1);
    involve_.resize(n + 1);
    for (int k = 0; k <= n; ++k) {
      val_[k].assign(s.size(k), none);
      involve_[k].resize(s.size(k));
      for (int i = 0; i < k; ++i)
        for (auto [ab, z] : s.comp[k][i]) {
          std::size_t e = entries(k).size();
          entries(k).push_back({i, ab.first, ab.second, z});
          involve_[k][ab.first].push_back(e);
          if (ab.second != ab.first) involve_[k][ab.second].push_back(e);
          if (z != ab.first && z != ab.second) involve_[k][z].push_back(e);
        }
    }
    // Target k-cells grouped by boundary.
    by_boundary_.resize(n + 1);
    for (int k = 1; k <= n; ++k)
      for (std::size_t y = 0; y < t.size(k); ++y) by_boundary_[k][{t.source(k, y), t.target(k, y)}].push_back(y);
    // Generators before decomposable cells, lower dimensions first.
    for (int k = 0; k <= n; ++k) {
      std::vector<bool> decomposable(s.size(k), false);
      for (int i = 0; i < k; ++i)
        for (auto [ab, z] : s.comp[k][i])
          if (!s.is_identity(k, ab.first) && !s.is_identity(k, ab.second) && z != ab.first && z != ab.second)
            decomposable[z] = true;
      for (int pass = 0; pass < 2; ++pass)
        for (std::size_t x = 0; x < s.size(k); ++x)
          if (!s.is_identity(k, x) && decomposable[x] == (pass == 1)) order_.push_back({k, x});
    }
  }

  std::vector<std::vector<std::vector<std::size_t>>> run() {
    descend(0);
    return results_;
  }

 private:
  static constexpr std::size_t none = static_cast<std::size_t>(-1);

  std::vector<CompEntry>& entries(int k) {
    if ((int)entries_.size() <= k) entries_.resize(k + 1);
    return entries_[k];
  }

  // Assigns and propagates; false on conflict. Undo by trail length.
  bool assign(int k, std::size_t x, std::size_t y) {
    std::vector<std::pair<int, std::size_t>> work{{k, x}};
    if (val_[k][x] != none) return val_[k][x] == y;
    set(k, x, y);
    while (!work.empty()) {
      auto [d, c] = work.back();
      work.pop_back();
      std::size_t img = val_[d][c];
      if (d > 0) {
        auto s = val_[d - 1][s_.source(d, c)], t = val_[d - 1][s_.target(d, c)];
        if ((s != none && s != t_.source(d, img)) || (t != none && t != t_.target(d, img))) return false;
        if (!force(d - 1, s_.source(d, c), t_.source(d, img), work)) return false;
        if (!force(d - 1, s_.target(d, c), t_.target(d, img), work)) return false;
      }
      if (d < s_.dim && !force(d + 1, s_.identity[d][c], t_.identity[d][img], work)) return false;
      for (auto e : involve_[d][c]) {
        auto& en = entries_[d][e];
        auto va = val_[d][en.a], vb = val_[d][en.b];
        if (va == none || vb == none) continue;
        auto r = t_.compose(d, en.i, va, vb);
        if (!r || !force(d, en.c, *r, work)) return false;
      }
    }
    return true;
  }

  bool force(int k, std::size_t x, std::size_t y, std::vector<std::pair<int, std::size_t>>& work) {
    if (val_[k][x] != none) return val_[k][x] == y;
    set(k, x, y);
    work.push_back({k, x});
    return true;
  }

  void set(int k, std::size_t x, std::size_t y) {
    val_[k][x] = y;
    trail_.push_back({k, x});
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      auto [k, x] = trail_.back();
      val_[k][x] = none;
      trail_.pop_back();
    }
  }

  void descend(std::size_t pos) {
    if (results_.size() >= opt_.limit) return;
    if (++nodes_ > opt_.budget) throw BudgetExceeded("functor search exceeded its budget");
    while (pos < order_.size() && val_[order_[pos].first][order_[pos].second] != none) ++pos;
    if (pos == order_.size()) {
      results_.push_back(val_);
      return;
    }
    auto [k, x] = order_[pos];
    std::vector<std::size_t> all;
    const std::vector<std::size_t>* cand = &all;
    if (k == 0) {
      all.resize(t_.size(0));
      std::iota(all.begin(), all.end(), 0);
    } else {
      auto s = val_[k - 1][s_.source(k, x)], t = val_[k - 1][s_.target(k, x)];
      auto it = by_boundary_[k].find({s, t});
      if (it == by_boundary_[k].end()) return;
      cand = &it->second;
    }
    for (auto y : *cand) {
      std::size_t mark = trail_.size();
      if (assign(k, x, y)) descend(pos + 1);
      undo(mark);
      if (results_.size() >= opt_.limit) return;
    }
  }

  const StrictCat &s_, &t_;
  SearchOptions opt_;
  std::vector<std::vector<std::size_t>> val_;
  std::vector<std::vector<CompEntry>> entries_;
  std::vector<std::vector<std::vector<std::size_t>>> involve_;
  std::vector<std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>>> by_boundary_;
  std::vector<std::pair<int, std::size_t>> order_;
  std::vector<std::pair<int, std::size_t>> trail_;
  std::vector<std::vector<std::vector<std::size_t>>> results_;
  std::size_t nodes_ = 0;
};

}  // namespace detail

// All functors, with both categories viewed in their common dimension.
inline std::vector<CatFunctor> enumerate_functors(const StrictCat& c, const StrictCat& d, SearchOptions opt = {}) {
  int n = std::max(c.dim, d.dim);
  auto s = std::make_shared<const StrictCat>(raise_dim(c, n));
  auto t = std::make_shared<const StrictCat>(raise_dim(d, n));
  std::vector<CatFunctor> r;
  for (auto& m : detail::FunctorSearch(*s, *t, opt).run()) r.push_back({s, t, m});
  return r;
}

inline std::size_t count_functors(const StrictCat& c, const StrictCat& d, SearchOptions opt = {}) {
  return enumerate_functors(c, d, opt).size();
}

// ---- n-surjective / n-fully-faithful ----

// The functor hom(a, b) -> hom(f a, f b).
inline CatFunctor local_functor(const CatFunctor& f, std::size_t a, std::size_t b) {
  HomCat hs = hom_with_embedding(*f.source, a, b);
  HomCat ht = hom_with_embedding(*f.target, f(0, a), f(0, b));
  CatFunctor l{std::make_shared<const StrictCat>(hs.cat), std::make_shared<const StrictCat>(ht.cat), {}};
  l.map.resize(hs.cat.dim + 1);
  if (f.source->dim == 0) {
    if (!hs.cat.cells[0].empty()) l.map[0].push_back(0);
    return l;
  }
  for (int j = 0; j <= hs.cat.dim; ++j) {
    std::map<std::size_t, std::size_t> back;
    for (std::size_t y = 0; y < ht.embed[j].size(); ++y) back[ht.embed[j][y]] = y;
    for (auto x : hs.embed[j]) l.map[j].push_back(back.at(f(j + 1, x)));
  }
  return l;
}

// u is invertible as a k-cell under composition along k-1.
inline bool is_invertible(const StrictCat& c, int k, std::size_t u) {
  if (k == 0 || k > c.dim) return true;
  std::size_t src = c.source(k, u), tgt = c.target(k, u);
  for (std::size_t v = 0; v < c.size(k); ++v) {
    if (c.source(k, v) != tgt || c.target(k, v) != src) continue;
    auto uv = c.compose(k, k - 1, u, v), vu = c.compose(k, k - 1, v, u);
    if (uv && vu && *uv == c.identity[k - 1][src] && *vu == c.identity[k - 1][tgt]) return true;
  }
  return false;
}

inline bool strictly_isomorphic_objects(const StrictCat& c, std::size_t x, std::size_t y) {
  if (x == y) return true;
  if (c.dim == 0) return false;
  for (std::size_t u = 0; u < c.size(1); ++u)
    if (c.source(1, u) == x && c.target(1, u) == y && is_invertible(c, 1, u)) return true;
  return false;
}

// Every object of the target is strictly isomorphic to an image object.
inline bool is_surjective_on_objects(const CatFunctor& f) {
  const StrictCat& t = *f.target;
  for (std::size_t y = 0; y < t.size(0); ++y) {
    bool hit = false;
    for (std::size_t x = 0; x < f.source->size(0) && !hit; ++x) hit = strictly_isomorphic_objects(t, f(0, x), y);
    if (!hit) return false;
  }
  return true;
}

inline bool is_equivalence(const CatFunctor& f) {
  if (f.source->dim == 0) {
    // a map of sets
    std::set<std::size_t> img(f.map[0].begin(), f.map[0].end());
    return img.size() == f.source->size(0) && img.size() == f.target->size(0);
  }
  if (!is_surjective_on_objects(f)) return false;
  for (std::size_t a = 0; a < f.source->size(0); ++a)
    for (std::size_t b = 0; b < f.source->size(0); ++b)
      if (!is_equivalence(local_functor(f, a, b))) return false;
  return true;
}

inline bool is_n_fully_faithful(const CatFunctor& f, int n) {
  if (n < 0) throw InvalidInput("is_n_fully_faithful: negative level");
  if (n == 0) return is_equivalence(f);
  for (std::size_t a = 0; a < f.source->size(0); ++a)
    for (std::size_t b = 0; b < f.source->size(0); ++b)
      if (!is_n_fully_faithful(local_functor(f, a, b), n - 1)) return false;
  return true;
}

inline bool is_n_surjective(const CatFunctor& f, int n) {
  if (n < 0) throw InvalidInput("is_n_surjective: negative level");
  if (!is_surjective_on_objects(f)) return false;
  if (n == 0) return true;
  for (std::size_t a = 0; a < f.source->size(0); ++a)
    for (std::size_t b = 0; b < f.source->size(0); ++b)
      if (!is_n_surjective(local_functor(f, a, b), n - 1)) return false;
  return true;
}

inline bool is_isomorphism(const CatFunctor& f) {
  for (int k = 0; k <= f.source->dim; ++k) {
    std::set<std::size_t> img(f.map[k].begin(), f.map[k].end());
    if (img.size() != f.source->size(k) || img.size() != f.target->size(k)) return false;
  }
  return true;
}

struct Factorization {
  CatFunctor surjection;      // n-surjective
  CatFunctor fully_faithful;  // (n+1)-fully faithful
};

// C -> M -> D where M agrees with C up to level n and with D above it.
inline CatFunctor raise_functor(const CatFunctor& f, int d);

// Both categories are first raised to dimension n + 1 so the second factor can see level n + 1.
inline Factorization factorize(const CatFunctor& f0, int n) {
  if (n < 0) throw InvalidInput("factorize: negative level");
  int top = std::max(f0.source->dim, n + 1);
  if (top > max_category_dim) throw InvalidInput("factorize: level too high for dimension 3");
  CatFunctor f = raise_functor(f0, top);
  const StrictCat &c = *f.source, &d = *f.target;
  CatBuilder b(top);
  // Levels up to n copy C.
  for (int k = 0; k <= n; ++k)
    for (std::size_t x = 0; x < c.size(k); ++x) b.add(k, c.label(k, x), c.source(k, x), c.target(k, x));
  // Above n: (a, b', e) with a, b' parallel n-cells of C and e a cell of D over f a, f b'.
  struct High {
    std::size_t a, b, e;
  };
  std::vector<std::vector<High>> high(top + 1);
  std::vector<std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t>> index(top + 1);
  for (int k = n + 1; k <= top; ++k)
    for (std::size_t a = 0; a < c.size(n); ++a)
      for (std::size_t bb = 0; bb < c.size(n); ++bb) {
        if (n > 0 && (c.source(n, a) != c.source(n, bb) || c.target(n, a) != c.target(n, bb))) continue;
        for (std::size_t e = 0; e < d.size(k); ++e) {
          if (d.boundary(k, e, n, false) != f(n, a) || d.boundary(k, e, n, true) != f(n, bb)) continue;
          std::size_t s, t;
          if (k == n + 1) {
            s = a;
            t = bb;
          } else {
            s = index[k - 1].at({a, bb, d.source(k, e)});
            t = index[k - 1].at({a, bb, d.target(k, e)});
          }
          std::string label = d.label(k, e);
          if (c.size(n) > 1) label += "@" + c.label(n, a) + "," + c.label(n, bb);
          index[k][{a, bb, e}] = b.add(k, label, s, t);
          high[k].push_back({a, bb, e});
        }
      }
  for (int k = 0; k < n; ++k)
    for (std::size_t x = 0; x < c.size(k); ++x) b.set_identity(k, x, c.identity[k][x]);
  for (std::size_t x = 0; x < c.size(n); ++x) b.set_identity(n, x, index[n + 1].at({x, x, d.identity[n][f(n, x)]}));
  for (int k = n + 1; k < top; ++k)
    for (std::size_t z = 0; z < high[k].size(); ++z) {
      auto h = high[k][z];
      b.set_identity(k, z, index[k + 1].at({h.a, h.b, d.identity[k][h.e]}));
    }
  for (int k = 1; k <= n; ++k)
    for (int i = 0; i < k; ++i)
      for (auto [xy, z] : c.comp[k][i]) b.set_comp(k, i, xy.first, xy.second, z);
  for (int k = n + 1; k <= top; ++k)
    for (int i = 0; i < k; ++i)
      for (std::size_t x = 0; x < high[k].size(); ++x)
        for (std::size_t y = 0; y < high[k].size(); ++y) {
          auto hx = high[k][x], hy = high[k][y];
          auto e = d.compose(k, i, hx.e, hy.e);
          if (!e) continue;
          std::size_t a, bb;
          if (i < n) {
            auto ca = c.compose(n, i, hx.a, hy.a), cb = c.compose(n, i, hx.b, hy.b);
            if (!ca || !cb) continue;
            a = *ca;
            bb = *cb;
          } else if (i == n) {
            if (hx.b != hy.a) continue;
            a = hx.a;
            bb = hy.b;
          } else {
            if (hx.a != hy.a || hx.b != hy.b) continue;
            a = hx.a;
            bb = hx.b;
          }
          b.set_comp(k, i, x, y, index[k].at({a, bb, *e}));
        }
  auto m = std::make_shared<const StrictCat>(b.build());
  CatFunctor first{f.source, m, {}}, second{m, f.target, {}};
  first.map.resize(top + 1);
  second.map.resize(top + 1);
  for (int k = 0; k <= n; ++k) {
    first.map[k].resize(c.size(k));
    std::iota(first.map[k].begin(), first.map[k].end(), 0);
    second.map[k] = f.map[k];
  }
  for (int k = n + 1; k <= top; ++k) {
    for (std::size_t x = 0; x < c.size(k); ++x)
      first.map[k].push_back(index[k].at({c.boundary(k, x, n, false), c.boundary(k, x, n, true), f(k, x)}));
    for (auto h : high[k]) second.map[k].push_back(h.e);
  }
  return {first, second};
}

inline CatFunctor raise_functor(const CatFunctor& f, int d) {
  CatFunctor r{std::make_shared<const StrictCat>(raise_dim(*f.source, d)),
               std::make_shared<const StrictCat>(raise_dim(*f.target, d)), f.map};
  while ((int)r.map.size() <= d) r.map.push_back(r.map.back());
  return r;
}

// Direct check on parallel pairs: for every k <= n, every k-cell of D between images of
// parallel (k-1)-cells x, y of C is joined to the image of some k-cell x -> y by an
// invertible (k+1)-cell.
inline bool surjectivity_by_lifting(const CatFunctor& f, int n) {
  if (n < 0 || n > max_category_dim) throw InvalidInput("surjectivity_by_lifting: level must be between 0 and 3");
  CatFunctor g = raise_functor(f, std::max(n, f.source->dim));
  const StrictCat &c = *g.source, &d = *g.target;
  auto joined = [&](int k, std::size_t u, std::size_t v) {
    if (u == v) return true;
    if (k + 1 > d.dim) return false;
    for (std::size_t w = 0; w < d.size(k + 1); ++w)
      if (d.source(k + 1, w) == u && d.target(k + 1, w) == v && is_invertible(d, k + 1, w)) return true;
    return false;
  };
  for (std::size_t y = 0; y < d.size(0); ++y) {
    bool ok = false;
    for (std::size_t x = 0; x < c.size(0) && !ok; ++x) ok = joined(0, g(0, x), y);
    if (!ok) return false;
  }
  for (int k = 1; k <= n; ++k)
    for (std::size_t x = 0; x < c.size(k - 1); ++x)
      for (std::size_t y = 0; y < c.size(k - 1); ++y) {
        if (k >= 2 && (c.source(k - 1, x) != c.source(k - 1, y) || c.target(k - 1, x) != c.target(k - 1, y)))
          continue;
        for (std::size_t e = 0; e < d.size(k); ++e) {
          if (d.source(k, e) != g(k - 1, x) || d.target(k, e) != g(k - 1, y)) continue;
          bool ok = false;
          for (std::size_t z = 0; z < c.size(k) && !ok; ++z)
            if (c.source(k, z) == x && c.target(k, z) == y) ok = joined(k, g(k, z), e);
          if (!ok) return false;
        }
      }
  return true;
}

}  // namespace graycat
