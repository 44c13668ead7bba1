#pragma once

#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "chain.hpp"

namespace graycat {

// A finite many-sorted structure: total unary operations and partial binary ones.
struct Structure {
  struct Unary {
    int from, to;
    std::vector<std::size_t> table;
  };
  struct Binary {
    int left, right, result;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> table;
  };
  std::vector<std::size_t> sizes;  // per sort
  std::vector<Unary> unary;
  std::vector<Binary> binary;
};

using Homomorphism = std::vector<std::vector<std::size_t>>;  // per sort

// All sort-wise maps commuting with every operation; defined composites must map to
// defined composites. Sorts are searched in order, with forced values propagated.
class HomSearch {
 public:
  HomSearch(const Structure& s, const Structure& t, std::size_t budget) : s_(s), t_(t), budget_(budget) {
    if (s.sizes.size() != t.sizes.size() || s.unary.size() != t.unary.size() || s.binary.size() != t.binary.size())
      throw InvalidInput("homomorphism search: signatures differ");
    std::size_t sorts = s.sizes.size();
    val_.resize(sorts);
    unary_from_.resize(sorts);
    binary_at_.resize(sorts);
    for (std::size_t k = 0; k < sorts; ++k) {
      val_[k].assign(s.sizes[k], none);
      unary_from_[k].resize(s.sizes[k]);
      binary_at_[k].resize(s.sizes[k]);
    }
    for (std::size_t u = 0; u < s.unary.size(); ++u) {
      auto& op = s.unary[u];
      for (std::size_t x = 0; x < op.table.size(); ++x) unary_from_[op.from][x].push_back(u);
    }
    for (std::size_t b = 0; b < s.binary.size(); ++b) {
      auto& op = s.binary[b];
      for (auto& [xy, z] : op.table) {
        std::size_t e = entries_.size();
        entries_.push_back({b, xy.first, xy.second, z});
        binary_at_[op.left][xy.first].push_back(e);
        binary_at_[op.right][xy.second].push_back(e);
        binary_at_[op.result][z].push_back(e);
      }
    }
  }

  std::vector<Homomorphism> run() {
    descend(0, 0);
    return results_;
  }

 private:
  static constexpr std::size_t none = static_cast<std::size_t>(-1);
  struct Entry {
    std::size_t op, a, b, c;
  };

  bool force(int k, std::size_t x, std::size_t y, std::vector<std::pair<int, std::size_t>>& work) {
    if (val_[k][x] != none) return val_[k][x] == y;
    val_[k][x] = y;
    trail_.push_back({k, x});
    work.push_back({k, x});
    return true;
  }

  bool assign(int k, std::size_t x, std::size_t y) {
    std::vector<std::pair<int, std::size_t>> work;
    if (!force(k, x, y, work)) return false;
    while (!work.empty()) {
      auto [sk, sx] = work.back();
      work.pop_back();
      std::size_t img = val_[sk][sx];
      for (auto u : unary_from_[sk][sx]) {
        auto& op = s_.unary[u];
        if (!force(op.to, op.table[sx], t_.unary[u].table[img], work)) return false;
      }
      for (auto e : binary_at_[sk][sx]) {
        auto& en = entries_[e];
        auto& op = s_.binary[en.op];
        auto va = val_[op.left][en.a], vb = val_[op.right][en.b];
        if (va == none || vb == none) continue;
        auto& tt = t_.binary[en.op].table;
        auto it = tt.find({va, vb});
        if (it == tt.end() || !force(op.result, en.c, it->second, work)) return false;
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      auto [k, x] = trail_.back();
      val_[k][x] = none;
      trail_.pop_back();
    }
  }

  void descend(std::size_t sort, std::size_t x) {
    if (++nodes_ > budget_) throw BudgetExceeded("homomorphism search exceeded its budget");
    while (sort < val_.size() && (x >= val_[sort].size() || val_[sort][x] != none)) {
      if (x >= val_[sort].size()) {
        ++sort;
        x = 0;
      } else {
        ++x;
      }
    }
    if (sort == val_.size()) {
      results_.push_back(val_);
      return;
    }
    for (std::size_t y = 0; y < t_.sizes[sort]; ++y) {
      bool fits = true;
      for (auto u : unary_from_[sort][x]) {
        auto& op = s_.unary[u];
        auto known = val_[op.to][op.table[x]];
        if (known != none && known != t_.unary[u].table[y]) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      std::size_t mark = trail_.size();
      if (assign(sort, x, y)) descend(sort, x + 1);
      undo(mark);
    }
  }

  const Structure &s_, &t_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  Homomorphism val_;
  std::vector<std::vector<std::vector<std::size_t>>> unary_from_, binary_at_;
  std::vector<Entry> entries_;
  std::vector<std::pair<int, std::size_t>> trail_;
  std::vector<Homomorphism> results_;
};

inline std::vector<Homomorphism> enumerate_homomorphisms(const Structure& s, const Structure& t,
                                                         std::size_t budget = 20'000'000) {
  return HomSearch(s, t, budget).run();
}

}  // namespace graycat
