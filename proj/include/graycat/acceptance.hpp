#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "adc_ops.hpp"
#include "basis.hpp"
#include "corpus.hpp"
#include "doublecat.hpp"
#include "graymaps.hpp"
#include "nu.hpp"
#include "squarecech.hpp"
#include "strictcat.hpp"
#include "theta.hpp"

namespace graycat {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;
};

struct AcceptanceConfig {
  std::uint64_t seed = 20240601;
  std::size_t random_functors = 50;
  SearchOptions search{};
};

// Every table of non-negative chains with coefficients at most cap, checked against the
// cell conditions entry by entry; counts non-degenerate cells by dimension.
inline std::vector<std::size_t> brute_force_nu_counts(const Adc& a, int max_dim, Coeff cap) {
  auto all_chains = [&](int d) {
    std::vector<Chain> r{Chain{}};
    for (std::size_t i = 0; i < a.size(d); ++i) {
      std::vector<Chain> next;
      for (auto& c : r)
        for (Coeff k = 0; k <= cap; ++k) {
          Chain x = c;
          x.add(i, k);
          next.push_back(x);
        }
      r = next;
    }
    return r;
  };
  std::vector<std::size_t> counts(max_dim + 1, 0);
  for (int d = 0; d <= max_dim; ++d) {
    std::vector<std::vector<Chain>> options;
    for (int i = 0; i < d; ++i) {
      options.push_back(all_chains(i));
      options.push_back(all_chains(i));
    }
    options.push_back(all_chains(d));
    std::vector<std::size_t> idx(options.size(), 0);
    while (true) {
      std::vector<Chain> m(d + 1), p(d + 1);
      for (int i = 0; i < d; ++i) {
        m[i] = options[2 * i][idx[2 * i]];
        p[i] = options[2 * i + 1][idx[2 * i + 1]];
      }
      m[d] = p[d] = options.back()[idx.back()];
      bool ok = true;
      for (int i = 0; i <= d && ok; ++i) {
        if (i == 0) {
          ok = a.augment(m[0]) == 1 && a.augment(p[0]) == 1;
        } else {
          Chain diff = p[i - 1] - m[i - 1];
          ok = a.boundary_of(i, m[i]) == diff && a.boundary_of(i, p[i]) == diff;
        }
      }
      if (ok && (d == 0 || !m[d].empty())) ++counts[d];
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == options[k].size()) idx[k++] = 0;
      if (k == idx.size()) break;
    }
  }
  return counts;
}

// Filtrations exercised by the Segal check.
inline std::vector<std::pair<std::string, Filtration2>> corpus_filtrations() {
  std::vector<std::pair<std::string, Filtration2>> r;
  for (auto& [n, c] : corpus_2categories()) r.push_back({n, truncation_pair(c)});
  r.push_back({"discrete in interval", discrete_filtration(poset_cat(1))});
  r.push_back({"discrete in walking2cell", discrete_filtration(*named_category("walking2cell"))});
  r.push_back({"discrete in simplex2", discrete_filtration(*named_category("simplex2"))});
  r.push_back({"poset2 in itself", filtration_by_labels(poset_cat(2), poset_cat(2))});
  StrictCat a0 = parallel_pair(), a1 = poset_cat(1);
  for (auto& f : enumerate_functors(raise_dim(a0, 2), raise_dim(a1, 2)))
    if (f(0, 0) == 0 && f(0, 1) == 1) {
      r.push_back({"parallel pair collapsed", {a0, a1, f}});
      break;
    }
  return r;
}

namespace detail {

struct Failures {
  std::vector<std::string> items;
  void add(std::string s) { items.push_back(std::move(s)); }
  bool empty() const { return items.empty(); }
  std::string summary(const std::string& ok) const {
    if (items.empty()) return ok;
    return std::to_string(items.size()) + " failures; first: " + items.front();
  }
};

inline std::string pair_name(const GlobularSum& a, const GlobularSum& b) { return to_string(a) + " (x) " + to_string(b); }

inline std::string criterion_tensor(const AcceptanceConfig&) {
  Failures f;
  std::size_t checked = 0;
  for (auto& a : corpus_sums())
    for (auto& b : corpus_sums()) {
      if (dimension(a) + dimension(b) > 4) continue;
      Adc t = tensor(to_adc(a), to_adc(b));
      ++checked;
      if (!validate(t).empty()) f.add(pair_name(a, b) + ": boundary conditions fail");
      if (!check_basis_conditions(t).all()) f.add(pair_name(a, b) + ": basis conditions fail");
    }
  if (!f.empty()) throw std::runtime_error(f.summary(""));
  return std::to_string(checked) + " tensor products valid";
}

inline std::string criterion_nu(const AcceptanceConfig&) {
  Adc i = interval_adc();
  Adc t = tensor(i, i);
  NuOptions opt;
  opt.cap = 1;
  auto counts = nondegenerate_counts(nu_cells_by_dim(t, 2, opt));
  auto brute = brute_force_nu_counts(t, 2, 1);
  std::vector<std::size_t> expected{4, 6, 1};
  auto show = [](const std::vector<std::size_t>& v) {
    std::string s;
    for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return "(" + s + ")";
  };
  if (counts != expected || brute != expected)
    throw std::runtime_error("enumerator " + show(counts) + ", brute force " + show(brute));
  return "counts " + show(counts) + " match brute force";
}

inline std::string criterion_sections(const AcceptanceConfig&) {
  Failures f;
  for (auto& a : {point_sum(), path(1), globe(2)}) {
    Adc x = to_adc(a);
    for (int n = 1; n <= 3; ++n)
      if (!check_section(p_map(x, n), s_map(x, n)).ok()) f.add(to_string(a) + " n=" + std::to_string(n));
    for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}}) {
      auto [p, s] = p_s_nm(x, n, m);
      if (!check_section(p, s).ok()) f.add(to_string(a) + " n=" + std::to_string(n) + " m=" + std::to_string(m));
    }
  }
  if (!f.empty()) throw std::runtime_error(f.summary(""));
  return "15 sections verified";
}

inline std::string criterion_decompositions(const AcceptanceConfig&) {
  Failures f;
  std::size_t pairs = 0, colimits = 0;
  for (auto& a : corpus_sums())
    for (auto& b : corpus_sums()) {
      if (dimension(a) + dimension(b) + 2 > 4) continue;
      ++pairs;
      auto w = verify_susp_tensor_decomposition(a, b);
      if (!w.ok) f.add(pair_name(a, b) + ": " + w.failure);
    }
  for (auto& a : corpus_sums())
    for (int n = 1; n <= 3; ++n) {
      if (dimension(a) + 1 > 4) continue;
      colimits += 2;
      auto w = verify_susp_colimit(to_adc(a), n);
      if (!w.ok) f.add("suspension colimit " + to_string(a) + ": " + w.failure);
      auto v = verify_cosuspension(to_adc(a), n);
      if (!v.ok) f.add("cosuspension " + to_string(a) + ": " + v.failure);
    }
  if (!f.empty()) throw std::runtime_error(f.summary(""));
  return std::to_string(pairs) + " decompositions, " + std::to_string(colimits) + " colimits";
}

inline std::string criterion_dualities(const AcceptanceConfig&) {
  Failures f;
  std::size_t pairs = 0;
  for (auto& a : corpus_sums())
    for (auto& b : corpus_sums()) {
      if (dimension(a) + dimension(b) > 4) continue;
      ++pairs;
      if (!duality_tensor_check(a, b).ok()) f.add(pair_name(a, b));
    }
  for (auto& a : corpus_sums()) {
    Adc x = to_adc(a);
    for (auto s : {odd_degrees(4), even_degrees(4), all_degrees(4)})
      if (!(dualize(dualize(x, s), s) == x)) f.add("dualize not involutive on " + to_string(a));
  }
  if (!f.empty()) throw std::runtime_error(f.summary(""));
  return std::to_string(pairs) + " pairs, three dualities each";
}

inline std::string criterion_companions(const AcceptanceConfig&) {
  Failures f;
  std::size_t composites = 0;
  for (auto& [n, c] : corpus_2categories()) {
    DoubleCat d = sq2(c);
    if (!is_accompanied(d)) f.add(n + ": not accompanied");
    for (auto [fg, h] : d.vcomp) {
      auto tf = find_companions(d, fg.first), tg = find_companions(d, fg.second), th = find_companions(d, h);
      if (tf.empty() || tg.empty() || th.empty()) continue;
      ++composites;
      CompanionTriple t = companion_of_composite(d, tf.front(), tg.front());
      if (std::find(th.begin(), th.end(), t) == th.end()) f.add(n + ": composite companion of " + d.vcells[h].label);
    }
    for (std::size_t v = 0; v < d.vcells.size(); ++v)
      if (!companion_uniqueness_check(d, v).empty()) f.add(n + ": uniqueness fails at " + d.vcells[v].label);
  }
  if (!f.empty()) throw std::runtime_error(f.summary(""));
  return std::to_string(composites) + " composites agree with search";
}

inline std::string criterion_fibrations(const AcceptanceConfig&) {
  Failures f;
  std::size_t lifts = 0;
  for (auto& [n, c] : corpus_2categories()) {
    DoubleCat m = companion_marking(sq2(c));
    auto bad = check_two_sided_fibration(m);
    if (!bad.empty()) f.add(n + ": " + bad.front().where + " " + bad.front().message);
    auto ts = extract_companions(m);
    if (!ts) f.add(n + ": companions not recovered from the marking");
    for (std::size_t u = 0; u < m.hcells.size(); ++u)
      for (std::size_t t = 0; t < m.vcells.size(); ++t) {
        for (bool co : {true, false}) {
          bool fits = co ? m.hcells[u].target == m.vcells[t].source : m.hcells[u].source == m.vcells[t].target;
          if (!fits) continue;
          auto q = co ? cocartesian_lift(m, u, t) : cartesian_lift(m, u, t);
          if (!q) {
            f.add(n + ": missing lift");
            continue;
          }
          ++lifts;
          auto& s = m.squares[*q];
          if (!is_bicartesian(m, *q)) f.add(n + ": lift is not bicartesian");
          for (auto p : m.find_squares(s.top, s.bottom, s.left, s.right))
            if (p != *q && is_bicartesian(m, p)) f.add(n + ": second bicartesian square on a lift boundary");
        }
      }
  }
  for (std::size_t k = 1; k <= 3; ++k) {
    DoubleCat d = full_marking(codiscrete_double(k));
    if (check_two_sided_fibration(d).empty() && !extract_companions(d)) f.add("codiscrete: extraction fails");
  }
  if (!f.empty()) throw std::runtime_error(f.summary(""));
  return std::to_string(lifts) + " lifts unique";
}

inline std::string criterion_square_functor(const AcceptanceConfig& cfg) {
  Failures f;
  for (auto& [n, c] : corpus_2categories())
    if (!verify_sq_image(c).ok()) f.add(n + ": outside the expected image");
  std::size_t pairs = 0, functors = 0;
  for (auto& [a, c] : tiny_2categories())
    for (auto& [b, d] : tiny_2categories()) {
      auto r = verify_sq_fully_faithful(c, d, cfg.search);
      ++pairs;
      functors += r.functors;
      if (!r.ok())
        f.add(a + " -> " + b + ": " + std::to_string(r.functors) + " functors, " + std::to_string(r.double_functors) +
              " double functors");
    }
  std::size_t cube = cube_level(poset_cat(1), 1, 1, cfg.search);
  if (cube != 6) f.add("cube_level([1],1,1) = " + std::to_string(cube));
  if (!f.empty()) throw std::runtime_error(f.summary(""));
  return std::to_string(pairs) + " bijections over " + std::to_string(functors) + " functors; cube level 6";
}

inline std::string criterion_surjectivity(const AcceptanceConfig& cfg) {
  Failures f;
  auto corpus = functor_corpus();
  std::mt19937_64 rng(cfg.seed);
  std::size_t sampled = 0, attempts = 0;
  while (sampled < cfg.random_functors && attempts < 100 * cfg.random_functors + 100) {
    ++attempts;
    auto& [a, c] = corpus[rng() % corpus.size()];
    auto& [b, d] = corpus[rng() % corpus.size()];
    SearchOptions opt = cfg.search;
    opt.limit = 500;
    auto fs = enumerate_functors(c, d, opt);
    if (fs.empty()) continue;
    const CatFunctor& fn = fs[rng() % fs.size()];
    ++sampled;
    std::string name = a + " -> " + b;
    for (int n = 0; n <= 2; ++n) {
      if (is_n_surjective(fn, n) != surjectivity_by_lifting(fn, n)) f.add(name + " n=" + std::to_string(n));
      Factorization fz = factorize(fn, n);
      int top = std::max(n + 1, fn.source->dim);
      if (!check_functor(fz.surjection).empty() || !check_functor(fz.fully_faithful).empty())
        f.add(name + ": factors are not functors");
      if (!is_n_surjective(fz.surjection, n)) f.add(name + ": first factor not " + std::to_string(n) + "-surjective");
      if (!is_n_fully_faithful(fz.fully_faithful, n + 1))
        f.add(name + ": second factor not " + std::to_string(n + 1) + "-fully faithful");
      if (!(compose_functors(fz.surjection, fz.fully_faithful) == raise_functor(fn, top)))
        f.add(name + ": composite differs from the input");
    }
  }
  if (sampled < cfg.random_functors) f.add("only " + std::to_string(sampled) + " functors sampled");
  if (!f.empty()) throw std::runtime_error(f.summary(""));
  return std::to_string(sampled) + " functors, n = 0..2, seed " + std::to_string(cfg.seed);
}

inline std::string criterion_segal(const AcceptanceConfig& cfg) {
  Failures f;
  std::size_t checks = 0;
  for (auto& [n, filt] : corpus_filtrations())
    for (std::size_t m = 0; m <= 3; ++m) {
      ++checks;
      auto r = segal_check(filt, m);
      if (!r.ok()) f.add(n + " m=" + std::to_string(m) + ": " + r.failure);
    }
  for (auto& [n, c] : corpus_2categories()) {
    if (!(sq2(c) == sq_pair(truncation_pair(c)))) f.add(n + ": sq2 differs from the truncation pair");
    if (!(sq2(c) == sq_pair(filtration_by_labels(truncate(raise_dim(c, 2), 1), c))))
      f.add(n + ": sq2 differs from the labelled truncation pair");
    auto nerve = sq2_nerve_check(c, cfg.search);
    if (!nerve.ok()) f.add(n + ": " + nerve.failures.front());
  }
  if (!f.empty()) throw std::runtime_error(f.summary(""));
  return std::to_string(checks) + " Segal maps bijective; sq2 agrees with truncation pair and cylinders";
}

}  // namespace detail

struct CriterionSpec {
  int id;
  std::string name;
  double budget_seconds;
  std::function<std::string(const AcceptanceConfig&)> run;
};

inline std::vector<CriterionSpec> acceptance_criteria() {
  return {
      {1, "ADC validity and tensor", 10, detail::criterion_tensor},
      {2, "nu counts", 1, detail::criterion_nu},
      {3, "section identities", 5, detail::criterion_sections},
      {4, "decompositions", 30, detail::criterion_decompositions},
      {5, "dualities", 5, detail::criterion_dualities},
      {6, "companion calculus", 20, detail::criterion_companions},
      {7, "fibration lifting", 30, detail::criterion_fibrations},
      {8, "square functor image and fidelity", 60, detail::criterion_square_functor},
      {9, "surjectivity calculus", 30, detail::criterion_surjectivity},
      {10, "Cech Segal levels", 10, detail::criterion_segal},
  };
}

inline CriterionResult run_criterion(const CriterionSpec& c, const AcceptanceConfig& cfg) {
  CriterionResult r{c.id, c.name, false, "", 0, c.budget_seconds};
  auto start = std::chrono::steady_clock::now();
  try {
    r.detail = c.run(cfg);
    r.passed = true;
  } catch (const std::exception& e) {
    r.detail = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

inline std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& cfg = {}) {
  std::vector<CriterionResult> r;
  for (auto& c : acceptance_criteria()) r.push_back(run_criterion(c, cfg));
  return r;
}

inline std::string format_result(const CriterionResult& r, bool timing = true) {
  std::string t;
  if (timing) {
    char buf[32];
    std::snprintf(buf, sizeof buf, " (%.2fs)", r.seconds);
    t = buf;
  }
  return std::string(r.passed ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.name + t + ": " + r.detail;
}

}  // namespace graycat
