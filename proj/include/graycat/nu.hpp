#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "chain_map.hpp"

namespace graycat {

// A cell of nu(K): for each degree i <= dim a pair of non-negative chains,
// with equal entries at the top. Entries above dim are read as zero.
struct NuCell {
  int dim = 0;
  std::vector<Chain> minus, plus;

  const Chain& get(int i, bool positive) const {
    static const Chain zero;
    if (i > dim) return zero;
    return positive ? plus[i] : minus[i];
  }
  const Chain& top() const { return plus[dim]; }
  bool degenerate() const { return dim > 0 && top().empty(); }

  friend bool operator==(const NuCell&, const NuCell&) = default;
  friend auto operator<=>(const NuCell&, const NuCell&) = default;
};

inline ValidationReport nu_table_violations(const Adc& a, const NuCell& x) {
  ValidationReport r;
  auto where = [&](int i) { return "table entry " + std::to_string(i); };
  if (static_cast<int>(x.minus.size()) != x.dim + 1 || static_cast<int>(x.plus.size()) != x.dim + 1) {
    r.push_back({"table", "wrong number of entries"});
    return r;
  }
  if (x.minus[x.dim] != x.plus[x.dim]) r.push_back({where(x.dim), "top entries differ"});
  for (int i = 0; i <= x.dim; ++i) {
    if (!x.minus[i].nonnegative() || !x.plus[i].nonnegative())
      r.push_back({where(i), "negative coefficient"});
    if (i == 0) {
      if (a.augment(x.minus[0]) != 1 || a.augment(x.plus[0]) != 1)
        r.push_back({where(0), "augmentation is not 1"});
    } else {
      Chain diff = x.plus[i - 1] - x.minus[i - 1];
      if (a.boundary_of(i, x.minus[i]) != diff || a.boundary_of(i, x.plus[i]) != diff)
        r.push_back({where(i), "boundary does not match the lower entries"});
    }
  }
  return r;
}

// k-dimensional source (positive = false) or target of a cell, k < dim.
inline NuCell nu_boundary(const NuCell& x, int k, bool positive) {
  NuCell r;
  r.dim = k;
  r.minus.assign(x.minus.begin(), x.minus.begin() + k + 1);
  r.plus.assign(x.plus.begin(), x.plus.begin() + k + 1);
  r.minus[k] = r.plus[k] = positive ? x.plus[k] : x.minus[k];
  return r;
}

// The same cell viewed as an identity in dimension d >= dim.
inline NuCell nu_lift(const NuCell& x, int d) {
  NuCell r = x;
  r.dim = d;
  r.minus.resize(d + 1);
  r.plus.resize(d + 1);
  return r;
}

inline bool nu_composable(const NuCell& x, const NuCell& y, int i) {
  if (i < 0 || i > std::min(x.dim, y.dim)) return false;
  for (int j = 0; j < i; ++j)
    if (x.get(j, false) != y.get(j, false) || x.get(j, true) != y.get(j, true)) return false;
  return x.get(i, true) == y.get(i, false);
}

// x followed by y along their common i-dimensional boundary.
inline NuCell nu_compose(const NuCell& x, const NuCell& y, int i) {
  if (!nu_composable(x, y, i)) throw InvalidInput("nu_compose: cells are not composable");
  NuCell z;
  z.dim = std::max(x.dim, y.dim);
  z.minus.resize(z.dim + 1);
  z.plus.resize(z.dim + 1);
  for (int j = 0; j < i; ++j) {
    z.minus[j] = x.get(j, false);
    z.plus[j] = x.get(j, true);
  }
  z.minus[i] = x.get(i, false);
  z.plus[i] = y.get(i, true);
  for (int j = i + 1; j <= z.dim; ++j) {
    z.minus[j] = x.get(j, false) + y.get(j, false);
    z.plus[j] = x.get(j, true) + y.get(j, true);
  }
  return z;
}

inline NuCell nu_apply(const ChainMap& f, const NuCell& x) {
  NuCell r;
  r.dim = x.dim;
  for (int i = 0; i <= x.dim; ++i) {
    r.minus.push_back(f.apply(i, x.minus[i]));
    r.plus.push_back(f.apply(i, x.plus[i]));
  }
  return r;
}

struct NuOptions {
  Coeff cap = 1;
  std::uint64_t budget = 50'000'000;
};

namespace detail {

// Non-negative chains x of degree d + 1 with base + dx non-negative and
// all coefficients bounded by the cap.
class NuExtender {
 public:
  NuExtender(const Adc& a, int d, Coeff cap, std::uint64_t& nodes, std::uint64_t budget)
      : a_(a), d_(d), cap_(cap), nodes_(nodes), budget_(budget) {
    std::size_t n = a.size(d + 1);
    std::size_t m = a.size(d);
    up_.assign(n + 1, std::vector<Coeff>(m, 0));
    down_.assign(n + 1, std::vector<Coeff>(m, 0));
    for (std::size_t k = n; k-- > 0;) {
      up_[k] = up_[k + 1];
      down_[k] = down_[k + 1];
      for (auto [j, c] : a.boundary(d + 1, k)) {
        if (c > 0) up_[k][j] += c * cap;
        else down_[k][j] += -c * cap;
      }
    }
  }

  template <class F>
  void run(const Chain& base, F&& emit) {
    std::vector<Coeff> b(a_.size(d_), 0);
    for (auto [j, c] : base) b[j] = c;
    Chain x;
    step(0, b, x, emit);
  }

 private:
  template <class F>
  void step(std::size_t k, std::vector<Coeff>& b, Chain& x, F& emit) {
    if (++nodes_ > budget_) throw BudgetExceeded("nu_cells: node budget exceeded");
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] + up_[k][j] < 0 || b[j] - down_[k][j] > cap_) return;
    if (k == a_.size(d_ + 1)) {
      Chain y;
      for (std::size_t j = 0; j < b.size(); ++j) y.add(j, b[j]);
      emit(x, y);
      return;
    }
    const Chain& bd = a_.boundary(d_ + 1, k);
    for (Coeff c = 0; c <= cap_; ++c) {
      if (c > 0) {
        for (auto [j, v] : bd) b[j] += v;
        x.add(k, 1);
      }
      step(k + 1, b, x, emit);
    }
    for (auto [j, v] : bd) b[j] -= v * cap_;
    x.add(k, -cap_);
  }

  const Adc& a_;
  int d_;
  Coeff cap_;
  std::uint64_t& nodes_;
  std::uint64_t budget_;
  std::vector<std::vector<Coeff>> up_, down_;
};

inline void chains_with_unit_augmentation(const Adc& a, Coeff cap, std::vector<Chain>& out) {
  std::size_t n = a.size(0);
  std::vector<Coeff> c(n, 0);
  auto rec = [&](auto& self, std::size_t k, Coeff aug) -> void {
    if (k == n) {
      if (aug != 1) return;
      Chain x;
      for (std::size_t j = 0; j < n; ++j) x.add(j, c[j]);
      out.push_back(x);
      return;
    }
    for (c[k] = 0; c[k] <= cap; ++c[k]) self(self, k + 1, aug + c[k] * a.augmentation(k));
    c[k] = 0;
  };
  rec(rec, 0, 0);
}

}  // namespace detail

// All cells of dimension <= max_dim whose coefficients are bounded by the cap,
// grouped by dimension, each group in canonical order.
inline std::vector<std::vector<NuCell>> nu_cells_by_dim(const Adc& a, int max_dim, NuOptions opt = {}) {
  if (opt.cap < 1) throw InvalidInput("nu_cells: coefficient cap must be at least 1");
  if (max_dim < 0) throw InvalidInput("nu_cells: negative dimension");
  std::uint64_t nodes = 0;
  std::vector<std::vector<NuCell>> cells(max_dim + 1);
  std::vector<Chain> points;
  detail::chains_with_unit_augmentation(a, opt.cap, points);
  for (auto& p : points) cells[0].push_back(NuCell{0, {p}, {p}});
  for (int d = 0; d < max_dim; ++d) {
    detail::NuExtender ext(a, d, opt.cap, nodes, opt.budget);
    for (const NuCell& s : cells[d]) {
      ext.run(s.top(), [&](const Chain& x, const Chain& tgt) {
        NuCell y;
        y.dim = d + 1;
        y.minus = s.minus;
        y.plus = s.plus;
        y.plus[d] = tgt;
        y.minus.push_back(x);
        y.plus.push_back(x);
        cells[d + 1].push_back(std::move(y));
      });
    }
    std::sort(cells[d + 1].begin(), cells[d + 1].end());
  }
  std::sort(cells[0].begin(), cells[0].end());
  return cells;
}

inline std::vector<NuCell> nu_cells(const Adc& a, int max_dim, NuOptions opt = {}) {
  std::vector<NuCell> r;
  for (auto& v : nu_cells_by_dim(a, max_dim, opt)) r.insert(r.end(), v.begin(), v.end());
  return r;
}

inline std::vector<std::size_t> nondegenerate_counts(const std::vector<std::vector<NuCell>>& cells) {
  std::vector<std::size_t> r;
  for (auto& v : cells)
    r.push_back(static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](const NuCell& x) {
      return !x.degenerate();
    })));
  return r;
}

}  // namespace graycat
