#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace graycat {

using Coeff = std::int64_t;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidInput : Error {
  using Error::Error;
};
struct BudgetExceeded : Error {
  using Error::Error;
};

// Finitely supported integer combination of basis elements of one degree.
// Zero coefficients are never stored.
class Chain {
 public:
  using Terms = std::map<std::size_t, Coeff>;

  Chain() = default;
  static Chain basis(std::size_t i, Coeff c = 1) {
    Chain r;
    r.add(i, c);
    return r;
  }

  void add(std::size_t i, Coeff c) {
    if (c == 0) return;
    auto it = terms_.find(i);
    if (it == terms_.end()) {
      terms_.emplace(i, c);
    } else if ((it->second += c) == 0) {
      terms_.erase(it);
    }
  }
  void add(const Chain& other, Coeff scale = 1) {
    for (auto [i, c] : other.terms_) add(i, c * scale);
  }

  Coeff operator[](std::size_t i) const {
    auto it = terms_.find(i);
    return it == terms_.end() ? 0 : it->second;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  const Terms& terms() const { return terms_; }

  Chain positive_part() const {
    Chain r;
    for (auto [i, c] : terms_)
      if (c > 0) r.terms_.emplace(i, c);
    return r;
  }
  Chain negative_part() const {
    Chain r;
    for (auto [i, c] : terms_)
      if (c < 0) r.terms_.emplace(i, -c);
    return r;
  }
  bool nonnegative() const {
    for (auto [i, c] : terms_)
      if (c < 0) return false;
    return true;
  }
  Coeff max_coeff() const {
    Coeff m = 0;
    for (auto [i, c] : terms_) m = std::max(m, c < 0 ? -c : c);
    return m;
  }
  Coeff total() const {
    Coeff s = 0;
    for (auto [i, c] : terms_) s += c;
    return s;
  }

  Chain& operator+=(const Chain& o) {
    add(o, 1);
    return *this;
  }
  Chain& operator-=(const Chain& o) {
    add(o, -1);
    return *this;
  }
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
  friend Chain operator-(Chain a) {
    for (auto& [i, c] : a.terms_) c = -c;
    return a;
  }
  friend Chain operator*(Coeff k, Chain a) {
    if (k == 0) return {};
    for (auto& [i, c] : a.terms_) c *= k;
    return a;
  }

  friend bool operator==(const Chain&, const Chain&) = default;
  friend auto operator<=>(const Chain&, const Chain&) = default;

 private:
  Terms terms_;
};

// Position of a basis element: degree and index within that degree.
struct Elem {
  int degree = 0;
  std::size_t index = 0;
  friend bool operator==(const Elem&, const Elem&) = default;
  friend auto operator<=>(const Elem&, const Elem&) = default;
};

}  // namespace graycat
