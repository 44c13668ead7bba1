#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "adc_ops.hpp"

namespace graycat {

// [a, n] with n = children.size(); no children is the point.
struct GlobularSum {
  std::vector<GlobularSum> children;

  bool is_point() const { return children.empty(); }
  std::size_t width() const { return children.size(); }
  friend bool operator==(const GlobularSum&, const GlobularSum&) = default;
  friend bool operator<(const GlobularSum& a, const GlobularSum& b) {
    return std::lexicographical_compare(a.children.begin(), a.children.end(), b.children.begin(),
                                        b.children.end());
  }
};

inline GlobularSum point_sum() { return {}; }
inline GlobularSum node(std::vector<GlobularSum> children) { return {std::move(children)}; }
inline GlobularSum suspend(const GlobularSum& a) { return node({a}); }

inline GlobularSum globe(int n) {
  GlobularSum g;
  for (int k = 0; k < n; ++k) g = suspend(g);
  return g;
}

// [n]: the path with n edges.
inline GlobularSum path(int n) { return node(std::vector<GlobularSum>(n)); }

inline int dimension(const GlobularSum& a) {
  int d = -1;
  for (auto& c : a.children) d = std::max(d, dimension(c));
  return d + 1;
}

inline GlobularSum wedge(const GlobularSum& a, const GlobularSum& b) {
  if (a.is_point()) return b;
  if (b.is_point()) return a;
  GlobularSum r = a;
  r.children.insert(r.children.end(), b.children.begin(), b.children.end());
  return r;
}

inline std::string to_string(const GlobularSum& a) {
  if (a.is_point()) return "[0]";
  bool flat = std::all_of(a.children.begin(), a.children.end(), [](auto& c) { return c.is_point(); });
  std::string n = std::to_string(a.width());
  if (flat) return "[" + n + "]";
  if (a.width() == 1) return "[" + to_string(a.children[0]) + ",1]";
  std::string s = "[{";
  for (std::size_t k = 0; k < a.width(); ++k) s += (k ? "," : "") + to_string(a.children[k]);
  return s + "}," + n + "]";
}

inline GlobularSum truncate_sum(const GlobularSum& a, int k) {
  if (k < 0) throw InvalidInput("truncate_sum: negative dimension");
  if (k == 0 || a.is_point()) return point_sum();
  GlobularSum r;
  for (auto& c : a.children) r.children.push_back(truncate_sum(c, k - 1));
  return r;
}

namespace detail {
inline GlobularSum dual_sum_at(const GlobularSum& a, const DegreeSet& s, int depth) {
  GlobularSum r;
  for (auto& c : a.children) r.children.push_back(dual_sum_at(c, s, depth + 1));
  if (s.count(depth + 1)) std::reverse(r.children.begin(), r.children.end());
  return r;
}
}  // namespace detail

inline GlobularSum dual_sum(const GlobularSum& a, const DegreeSet& s) { return detail::dual_sum_at(a, s, 0); }

struct SpineGluing {
  std::size_t left, right;  // target boundary of left glued to source boundary of right
  int degree;
  friend bool operator==(const SpineGluing&, const SpineGluing&) = default;
};

struct SpinePresentation {
  std::vector<int> globes;  // dimensions
  std::vector<SpineGluing> gluings;
  friend bool operator==(const SpinePresentation&, const SpinePresentation&) = default;
};

inline SpinePresentation spine(const GlobularSum& a) {
  if (a.is_point()) return {{0}, {}};
  SpinePresentation r;
  for (std::size_t k = 0; k < a.width(); ++k) {
    SpinePresentation sub = spine(a.children[k]);
    std::size_t offset = r.globes.size();
    if (k > 0) r.gluings.push_back({offset - 1, offset, 0});
    for (int d : sub.globes) r.globes.push_back(d + 1);
    for (auto g : sub.gluings) r.gluings.push_back({g.left + offset, g.right + offset, g.degree + 1});
  }
  return r;
}

inline std::string to_string(const SpinePresentation& s) {
  std::string r;
  for (std::size_t k = 0; k < s.globes.size(); ++k)
    r += (k ? " " : "") + std::string("D") + std::to_string(s.globes[k]);
  for (auto g : s.gluings)
    r += "; " + std::to_string(g.left) + ">" + std::to_string(g.right) + "@" + std::to_string(g.degree);
  return r;
}

// Points p0..pn; block k holds [x]k for every element x of the k-th child.
inline Adc to_adc(const GlobularSum& a) {
  if (a.is_point()) return point_adc("p");
  AdcBuilder b;
  std::size_t n = a.width();
  auto pt = [](std::size_t k) { return "p" + std::to_string(k); };
  for (std::size_t k = 0; k <= n; ++k) b.add(pt(k), 0);
  for (std::size_t k = 0; k < n; ++k) {
    Adc c = to_adc(a.children[k]);
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
  b.endpoints(pt(0), pt(n));
  return b.build();
}

}  // namespace graycat
