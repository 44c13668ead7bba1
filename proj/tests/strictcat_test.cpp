#include <gtest/gtest.h>

#include <random>

#include "graycat/strictcat.hpp"
#include "support.hpp"

using namespace graycat;

namespace {

StrictCat square_cat() { return from_nu(tensor(interval_adc(), interval_adc()), 2); }
StrictCat walking_2cell() { return from_nu(to_adc(globe(2)), 2); }

// [1] -> [2] onto the objects 0 and 2; arrows of [1] are ordered 1(0), 0<1, 1(1).
CatFunctor endpoint_inclusion() {
  StrictCat two = poset_cat(1);
  StrictCat three = poset_cat(2);
  CatFunctor f{std::make_shared<const StrictCat>(two), std::make_shared<const StrictCat>(three), {}};
  f.map = {{0, 2}, {three.at(1, "1(0)"), three.at(1, "0<2"), three.at(1, "1(2)")}};
  return f;
}

}  // namespace

TEST(StrictCat, NamedCategoriesAreValid) {
  for (auto& c : {poset_cat(0), poset_cat(2), poset_cat(3), walking_iso(), parallel_pair(), walking_2iso(),
                  terminal_cat(2), discrete_cat(3, 1), square_cat(), walking_2cell()})
    EXPECT_TRUE(validate_category(c).empty());
}

TEST(StrictCat, FromNuShapes) {
  StrictCat w = walking_2cell();
  EXPECT_EQ(w.nonidentity_counts(), (std::vector<std::size_t>{2, 2, 1}));
  StrictCat s = square_cat();
  EXPECT_EQ(s.nonidentity_counts(), (std::vector<std::size_t>{4, 6, 1}));
  StrictCat p = from_nu(to_adc(path(2)), 1);
  EXPECT_EQ(p.nonidentity_counts(), poset_cat(2).nonidentity_counts());
  EXPECT_EQ(count_functors(p, poset_cat(2)), count_functors(poset_cat(2), poset_cat(2)));
  EXPECT_TRUE(validate_category(from_nu(to_adc(globe(3)), 3)).empty());
  EXPECT_TRUE(validate_category(from_nu(tensor(interval_adc(), to_adc(globe(2))), 3)).empty());
}

TEST(StrictCat, BrokenInterchangeIsReported) {
  StrictCat s = raise_dim(walking_2iso(), 2);
  EXPECT_TRUE(validate_category(s).empty());
  // Redirect one composite so associativity or interchange must fail.
  StrictCat bad = s;
  std::size_t t = bad.at(2, "t"), tp = bad.at(2, "t'");
  bad.comp[2][1][{t, tp}] = bad.at(2, "1(h)");
  auto r = validate_category(bad);
  EXPECT_FALSE(r.empty());
}

TEST(StrictCat, BrokenUnitIsReported) {
  StrictCat p = poset_cat(1);
  p.comp[1][0][{p.at(1, "1(0)"), p.at(1, "0<1")}] = p.at(1, "1(0)");
  EXPECT_FALSE(validate_category(p).empty());
}

TEST(StrictCat, HomCategories) {
  StrictCat w = walking_2cell();
  StrictCat h = hom_cat(w, 0, 1);
  EXPECT_EQ(h.dim, 1);
  EXPECT_EQ(h.nonidentity_counts(), (std::vector<std::size_t>{2, 1}));
  EXPECT_EQ(count_functors(h, poset_cat(1)), 3u);
  EXPECT_TRUE(validate_category(h).empty());

  StrictCat s = square_cat();
  std::size_t bottom = s.at(0, "v0*v0"), top = s.at(0, "v1*v1");
  StrictCat corner = hom_cat(s, bottom, top);
  EXPECT_EQ(corner.size(0), 2u);
  EXPECT_EQ(corner.nonidentity_counts(), (std::vector<std::size_t>{2, 1}));

  StrictCat p = poset_cat(2);
  StrictCat loop = hom_cat(p, 1, 1);
  EXPECT_EQ(loop.size(0), 1u);
  EXPECT_EQ(hom_cat(p, 2, 1).size(0), 0u);
}

TEST(StrictCat, Truncations) {
  StrictCat w = walking_2cell();
  StrictCat t = truncate(w, 1);
  EXPECT_EQ(t.nonidentity_counts(), parallel_pair().nonidentity_counts());
  EXPECT_EQ(count_functors(t, poset_cat(1)), count_functors(parallel_pair(), poset_cat(1)));
  StrictCat i = itruncate(w, 1);
  EXPECT_TRUE(validate_category(i).empty());
  EXPECT_EQ(i.nonidentity_counts(), poset_cat(1).nonidentity_counts());
  EXPECT_EQ(itruncate(poset_cat(3), 1), poset_cat(3));
  StrictCat s = itruncate(square_cat(), 1);
  EXPECT_TRUE(validate_category(s).empty());
  EXPECT_EQ(s.size(1), square_cat().size(1) - 1);
}

TEST(StrictCat, FunctorCounts) {
  EXPECT_EQ(count_functors(poset_cat(1), poset_cat(1)), 3u);
  EXPECT_EQ(count_functors(poset_cat(2), poset_cat(1)), 4u);
  EXPECT_EQ(count_functors(square_cat(), raise_dim(poset_cat(1), 2)), 6u);
  EXPECT_EQ(count_functors(walking_2cell(), walking_2cell()), 5u);
  EXPECT_EQ(count_functors(walking_iso(), poset_cat(1)), 2u);
  EXPECT_EQ(count_functors(poset_cat(1), walking_iso()), 4u);
  EXPECT_EQ(count_functors(parallel_pair(), parallel_pair()), 6u);
  for (auto& c : {poset_cat(2), walking_2cell(), square_cat(), walking_2iso()})
    EXPECT_EQ(count_functors(c, terminal_cat()), 1u);
}

TEST(StrictCat, EnumeratedFunctorsAreFunctors) {
  std::vector<StrictCat> cs{poset_cat(1), poset_cat(2), walking_2cell(), square_cat(), walking_iso(), walking_2iso()};
  for (auto& a : cs)
    for (auto& b : cs) {
      auto fs = enumerate_functors(a, b);
      std::set<std::vector<std::vector<std::size_t>>> seen;
      for (auto& f : fs) {
        EXPECT_TRUE(check_functor(f).empty());
        EXPECT_TRUE(seen.insert(f.map).second);
      }
    }
}

// Brute-force count over all cell maps for tiny categories.
TEST(StrictCat, FunctorCountsMatchExhaustiveSearch) {
  std::vector<StrictCat> cs{poset_cat(1), parallel_pair(), walking_iso(), walking_2cell(), poset_cat(2)};
  for (auto& a0 : cs)
    for (auto& b0 : cs) {
      int n = std::max(a0.dim, b0.dim);
      StrictCat a = raise_dim(a0, n), b = raise_dim(b0, n);
      std::size_t total = 1;
      for (int k = 0; k <= n; ++k)
        for (std::size_t x = 0; x < a.size(k); ++x) total *= b.size(k);
      if (total > 2'000'000) continue;
      auto sa = std::make_shared<const StrictCat>(a), sb = std::make_shared<const StrictCat>(b);
      std::size_t count = 0;
      std::vector<std::size_t> digits;
      std::vector<std::pair<int, std::size_t>> slots;
      for (int k = 0; k <= n; ++k)
        for (std::size_t x = 0; x < a.size(k); ++x) slots.push_back({k, x});
      digits.assign(slots.size(), 0);
      while (true) {
        CatFunctor f{sa, sb, {}};
        f.map.resize(n + 1);
        for (int k = 0; k <= n; ++k) f.map[k].resize(a.size(k));
        for (std::size_t s = 0; s < slots.size(); ++s) f.map[slots[s].first][slots[s].second] = digits[s];
        count += check_functor(f).empty();
        std::size_t s = 0;
        while (s < slots.size() && ++digits[s] == b.size(slots[s].first)) digits[s++] = 0;
        if (s == slots.size()) break;
      }
      EXPECT_EQ(count, count_functors(a0, b0));
    }
}

TEST(StrictCat, FunctorBudget) {
  EXPECT_THROW(enumerate_functors(square_cat(), square_cat(), {.budget = 3}), BudgetExceeded);
}

TEST(StrictCat, IdentityIsEverything) {
  for (auto& c : {poset_cat(2), walking_2cell(), square_cat(), walking_iso(), walking_2iso()}) {
    CatFunctor id = identity_functor(c);
    for (int n = 0; n <= 3; ++n) {
      EXPECT_TRUE(is_n_surjective(id, n));
      EXPECT_TRUE(is_n_fully_faithful(id, n));
    }
    EXPECT_TRUE(is_equivalence(id));
  }
}

TEST(StrictCat, ParallelPairCollapse) {
  auto fs = enumerate_functors(parallel_pair(), poset_cat(1));
  const CatFunctor* collapse = nullptr;
  for (auto& f : fs)
    if (f(0, 0) == 0 && f(0, 1) == 1) collapse = &f;
  ASSERT_NE(collapse, nullptr);
  EXPECT_TRUE(is_n_surjective(*collapse, 0));
  EXPECT_TRUE(is_n_surjective(*collapse, 1));
  EXPECT_FALSE(is_n_surjective(*collapse, 2));
  EXPECT_FALSE(is_n_fully_faithful(*collapse, 1));
  EXPECT_FALSE(is_n_fully_faithful(*collapse, 2));
  EXPECT_TRUE(is_n_fully_faithful(*collapse, 3));
}

TEST(StrictCat, NonFullInclusion) {
  // [1] -> [2] picking 0 and 2: full and faithful, but not essentially surjective.
  CatFunctor f = endpoint_inclusion();
  ASSERT_TRUE(check_functor(f).empty());
  EXPECT_TRUE(is_n_fully_faithful(f, 1));
  EXPECT_FALSE(is_n_fully_faithful(f, 0));
  EXPECT_FALSE(is_n_surjective(f, 0));
  // The discrete pair into [1] misses the arrow.
  StrictCat disc = discrete_cat(2, 1);
  auto gs = enumerate_functors(disc, poset_cat(1));
  for (auto& g : gs)
    if (g(0, 0) == 0 && g(0, 1) == 1) {
      EXPECT_TRUE(is_n_surjective(g, 0));
      EXPECT_FALSE(is_n_fully_faithful(g, 1));
      EXPECT_FALSE(is_n_surjective(g, 1));
    }
}

TEST(StrictCat, WalkingIsoIsContractible) {
  auto fs = enumerate_functors(terminal_cat(1), walking_iso());
  ASSERT_EQ(fs.size(), 2u);
  for (auto& f : fs) {
    EXPECT_TRUE(is_equivalence(f));
    EXPECT_TRUE(is_n_surjective(f, 0));
    EXPECT_TRUE(is_n_fully_faithful(f, 0));
  }
}

TEST(StrictCat, SurjectivityMatchesLifting) {
  std::vector<StrictCat> cs{poset_cat(1), poset_cat(2), parallel_pair(), walking_iso(), walking_2cell(),
                            walking_2iso(), terminal_cat(), discrete_cat(2)};
  for (auto& a : cs)
    for (auto& b : cs)
      for (auto& f : enumerate_functors(a, b))
        for (int n = 0; n <= 2; ++n) EXPECT_EQ(is_n_surjective(f, n), surjectivity_by_lifting(f, n));
}

TEST(StrictCat, SurjectiveAndFullyFaithfulIsEquivalence) {
  std::vector<StrictCat> cs{poset_cat(1), parallel_pair(), walking_iso(), walking_2cell(), walking_2iso(),
                            terminal_cat()};
  for (auto& a : cs)
    for (auto& b : cs)
      for (auto& f : enumerate_functors(a, b))
        for (int n = 0; n <= 2; ++n)
          if (is_n_surjective(f, n) && is_n_fully_faithful(f, n + 1)) EXPECT_TRUE(is_equivalence(f));
}

TEST(StrictCat, ZeroSurjectiveIsSurjectiveOnObjectsUpToIso) {
  std::vector<StrictCat> cs{poset_cat(1), walking_iso(), terminal_cat(), discrete_cat(2), walking_2iso()};
  for (auto& a : cs)
    for (auto& b : cs)
      for (auto& f : enumerate_functors(a, b)) {
        bool direct = true;
        for (std::size_t y = 0; y < f.target->size(0); ++y) {
          bool hit = false;
          for (std::size_t x = 0; x < f.source->size(0); ++x) hit |= strictly_isomorphic_objects(*f.target, f(0, x), y);
          direct &= hit;
        }
        EXPECT_EQ(is_n_surjective(f, 0), direct);
      }
}

TEST(StrictCat, Factorization) {
  std::vector<StrictCat> cs{poset_cat(1), poset_cat(2), parallel_pair(), walking_2cell(), walking_iso(), square_cat()};
  std::mt19937 rng(7);
  for (auto& a : cs)
    for (auto& b : cs) {
      auto fs = enumerate_functors(a, b, {.limit = 40});
      if (fs.empty()) continue;
      const CatFunctor& f = fs[rng() % fs.size()];
      for (int n = 0; n <= 2; ++n) {
        Factorization fz = factorize(f, n);
        EXPECT_TRUE(validate_category(*fz.surjection.target).empty());
        EXPECT_TRUE(check_functor(fz.surjection).empty());
        EXPECT_TRUE(check_functor(fz.fully_faithful).empty());
        EXPECT_TRUE(is_n_surjective(fz.surjection, n));
        EXPECT_TRUE(is_n_fully_faithful(fz.fully_faithful, n + 1));
        EXPECT_TRUE(compose_functors(fz.surjection, fz.fully_faithful) == raise_functor(f, n + 1 > f.source->dim ? n + 1 : f.source->dim));
        Factorization again = factorize(fz.fully_faithful, n);
        EXPECT_TRUE(is_isomorphism(again.surjection));
      }
    }
}

TEST(StrictCat, FactorizingSurjectionGivesIsomorphism) {
  CatFunctor id = identity_functor(walking_2cell());
  for (int n = 0; n <= 2; ++n) EXPECT_TRUE(is_isomorphism(factorize(id, n).fully_faithful));
}
