#include <gtest/gtest.h>

#include "graycat/corpus.hpp"
#include "graycat/squarecech.hpp"

using namespace graycat;

namespace {

Adc path_adc(int n) { return to_adc(n == 0 ? point_sum() : path(n)); }

// parallel pair -> [1], both arrows onto 0<1.
Filtration2 collapse_filtration() {
  StrictCat a0 = parallel_pair(), a1 = poset_cat(1);
  for (auto& f : enumerate_functors(raise_dim(a0, 2), raise_dim(a1, 2)))
    if (f(0, 0) == 0 && f(0, 1) == 1) return {a0, a1, f};
  throw std::logic_error("no collapse");
}

std::vector<std::pair<std::string, Filtration2>> corpus_filtrations() {
  std::vector<std::pair<std::string, Filtration2>> r;
  for (auto& [n, c] : corpus_2categories()) r.push_back({n, truncation_pair(c)});
  r.push_back({"discrete in interval", filtration_by_labels(discrete_cat(2, 1), poset_cat(1))});
  r.push_back({"discrete in walking2cell", discrete_filtration(*named_category("walking2cell"))});
  r.push_back({"poset2 in itself", filtration_by_labels(poset_cat(2), poset_cat(2))});
  r.push_back({"collapse", collapse_filtration()});
  return r;
}

}  // namespace

TEST(SquareCech, SquaresMatchGrayCylinderFunctors) {
  for (auto& [n, c] : corpus_2categories()) {
    NerveReport r = sq2_nerve_check(c);
    EXPECT_TRUE(r.ok()) << n << ": " << (r.ok() ? "" : r.failures.front());
    EXPECT_EQ(r.squares, sq2(c).squares.size());
  }
}

TEST(SquareCech, Sq2OfInterval) {
  DoubleCat d = sq2(poset_cat(1));
  EXPECT_EQ(d.squares.size(), 6u);
  EXPECT_EQ(cube_level(poset_cat(1), 1, 1), 6u);
  EXPECT_EQ(d.objects.size(), 2u);
  EXPECT_EQ(d.vcells.size(), 3u);
  EXPECT_EQ(d.hcells.size(), 3u);
}

TEST(SquareCech, Sq2OfTerminal) {
  DoubleCat d = sq2(terminal_cat());
  EXPECT_EQ(d.objects.size(), 1u);
  EXPECT_EQ(d.vcells.size(), 1u);
  EXPECT_EQ(d.hcells.size(), 1u);
  EXPECT_EQ(d.squares.size(), 1u);
}

TEST(SquareCech, Sq2OfWalking2Cell) {
  StrictCat c = *named_category("walking2cell");
  CechDouble cd = sq2_indexed(c);
  StrictCat c2 = raise_dim(c, 2);
  std::map<std::array<std::size_t, 4>, std::size_t> nontrivial;
  for (std::size_t q = 0; q < cd.cat.squares.size(); ++q) {
    auto& s = cd.cat.squares[q];
    if (!c2.is_identity(2, cd.filler[q])) ++nontrivial[{s.top, s.bottom, s.left, s.right}];
  }
  EXPECT_FALSE(nontrivial.empty());
  for (auto& [b, k] : nontrivial) EXPECT_EQ(k, 1u);
  EXPECT_EQ(cd.cat.squares.size(), 14u);
}

TEST(SquareCech, Sq2IsTheTruncationPair) {
  for (auto& [n, c] : corpus_2categories()) {
    EXPECT_EQ(sq2(c), sq_pair(truncation_pair(c))) << n;
    EXPECT_EQ(sq2(c), sq_pair(filtration_by_labels(truncate(raise_dim(c, 2), 1), c))) << n;
  }
}

TEST(SquareCech, DiscreteBottomGivesGlobularSquares) {
  StrictCat c = *named_category("walking2cell");
  DoubleCat d = sq_pair(discrete_filtration(c));
  EXPECT_EQ(d.vcells.size(), 2u);
  StrictCat c2 = raise_dim(c, 2);
  for (auto& s : d.squares) {
    EXPECT_EQ(s.left, d.vunit[d.hcells[s.top].source]);
    EXPECT_EQ(s.right, d.vunit[d.hcells[s.top].target]);
  }
  // Squares are 2-cells of c, including identities of identities.
  EXPECT_EQ(d.squares.size(), c2.size(2));
  EXPECT_TRUE(validate_double(d).empty());
}

TEST(SquareCech, OneCategoryGivesCommutativeSquares) {
  StrictCat p = poset_cat(2);
  CechDouble cd = sq_pair_indexed(filtration_by_labels(p, p));
  StrictCat p2 = raise_dim(p, 2);
  for (auto th : cd.filler) EXPECT_TRUE(p2.is_identity(2, th));
  EXPECT_EQ(cd.cat.squares.size(), cube_level(p, 1, 1));
}

TEST(SquareCech, PairConditionIsEnforced) {
  Filtration2 f = collapse_filtration();
  EXPECT_FALSE(pair_condition(f));
  EXPECT_THROW(sq_pair(f), InvalidInput);
  EXPECT_NO_THROW(cech_double(f));
}

TEST(SquareCech, LevelZeroIsTheBottom) {
  for (auto& [n, f] : corpus_filtrations()) EXPECT_EQ(cech_level(f, 0).cat, raise_dim(f.a0, 1)) << n;
}

TEST(SquareCech, LevelOneOverDiscreteBottom) {
  StrictCat c = *named_category("walking2cell");
  CechLevel l = cech_level(discrete_filtration(c), 1);
  // objects are the 1-cells of c
  EXPECT_EQ(l.cat.size(0), c.size(1));
}

TEST(SquareCech, SegalLevels) {
  for (auto& [n, f] : corpus_filtrations())
    for (std::size_t m = 0; m <= 3; ++m) {
      SegalReport r = segal_check(f, m);
      EXPECT_TRUE(r.ok()) << n << " m=" << m << ": " << r.failure;
    }
}

TEST(SquareCech, LevelsCountCylinderFunctors) {
  for (auto& [n, c] : corpus_2categories()) {
    CechDouble cd = sq2_indexed(c);
    for (int m = 1; m <= 3; ++m) {
      CechLevel l = cech_level(cd, m);
      EXPECT_EQ(l.cat.size(0), count_functors(from_nu(path_adc(m), 2), raise_dim(c, 2))) << n << " m=" << m;
      EXPECT_EQ(l.cat.size(1), count_functors(from_nu(tensor(path_adc(m), path_adc(1)), 2), raise_dim(c, 2)))
          << n << " m=" << m;
      EXPECT_EQ(l.cat.size(1), cube_level(c, m, 1));
    }
  }
}

TEST(SquareCech, DoubleFunctorsToTerminal) {
  DoubleCat t = sq2(terminal_cat());
  for (auto& [n, c] : corpus_2categories()) EXPECT_EQ(double_functor_enumerate(sq2(c), t).size(), 1u) << n;
}

TEST(SquareCech, IdentityDoubleFunctorIsFound) {
  for (auto& [n, c] : tiny_2categories()) {
    DoubleCat d = sq2(c);
    DoubleFunctor id;
    id.objects.resize(d.objects.size());
    id.vcells.resize(d.vcells.size());
    id.hcells.resize(d.hcells.size());
    id.squares.resize(d.squares.size());
    for (auto* v : {&id.objects, &id.vcells, &id.hcells, &id.squares}) std::iota(v->begin(), v->end(), 0);
    auto all = double_functor_enumerate(d, d);
    EXPECT_NE(std::find(all.begin(), all.end(), id), all.end()) << n;
    for (auto& f : all) EXPECT_TRUE(check_double_functor(d, d, f).empty());
  }
}

TEST(SquareCech, DoubleFunctorsOfInterval) {
  DoubleCat d = sq2(poset_cat(1));
  EXPECT_EQ(double_functor_enumerate(d, d).size(), 3u);
  EXPECT_EQ(count_functors(poset_cat(1), poset_cat(1)), 3u);
}

TEST(SquareCech, DoubleFunctorBudget) {
  DoubleCat d = sq2(poset_cat(2));
  EXPECT_THROW(double_functor_enumerate(d, d, 5), BudgetExceeded);
}

TEST(SquareCech, FullyFaithful) {
  FullyFaithfulReport r = verify_sq_fully_faithful(poset_cat(1), poset_cat(1));
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.functors, 3u);
  r = verify_sq_fully_faithful(poset_cat(1), terminal_cat());
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.functors, 1u);
  StrictCat w = *named_category("walking2cell");
  r = verify_sq_fully_faithful(w, w);
  EXPECT_TRUE(r.ok());
  for (auto& [a, c] : tiny_2categories())
    for (auto& [b, d] : tiny_2categories()) {
      FullyFaithfulReport x = verify_sq_fully_faithful(c, d);
      EXPECT_TRUE(x.ok()) << a << " -> " << b << ": " << x.functors << " vs " << x.double_functors;
    }
}

TEST(SquareCech, InvertibleTwoCellsBreakStrictFidelity) {
  // Vertical and horizontal parts of a double functor may pick different isomorphic arrows.
  FullyFaithfulReport r = verify_sq_fully_faithful(walking_2iso(), walking_2iso());
  EXPECT_GT(r.double_functors, r.functors);
  EXPECT_FALSE(r.ok());
}

TEST(SquareCech, Image) {
  for (auto& [n, c] : corpus_2categories()) EXPECT_TRUE(verify_sq_image(c).ok()) << n;
  ImageReport r = image_report(sq_pair(filtration_by_labels(discrete_cat(2, 1), poset_cat(1))));
  EXPECT_TRUE(r.accompanied);
  EXPECT_FALSE(r.horizontals_are_companions);
  EXPECT_FALSE(r.ok());
}

TEST(SquareCech, CubeLevels) {
  EXPECT_EQ(cube_level(poset_cat(1), 1, 1), 6u);
  for (auto& [n, c] : corpus_2categories()) {
    EXPECT_EQ(cube_level(c, 0, 0), c.size(0)) << n;
    EXPECT_EQ(cube_level(c, 0, 1), raise_dim(c, 1).size(1)) << n;
    EXPECT_EQ(cube_level(c, 1, 1), sq2(c).squares.size()) << n;
  }
  for (int k1 = 0; k1 <= 2; ++k1)
    for (int k2 = 0; k2 <= 2; ++k2) EXPECT_EQ(cube_level(terminal_cat(), k1, k2), 1u);
}

TEST(SquareCech, StrictPullback) {
  StrictCat p = poset_cat(1);
  auto fs = enumerate_functors(p, p);
  CatFunctor id = identity_functor(p);
  for (auto& f : fs) {
    Pullback pb = strict_pullback(f, id);
    EXPECT_TRUE(validate_category(pb.cat).empty());
    EXPECT_TRUE(check_functor(pb.first).empty());
    EXPECT_TRUE(check_functor(pb.second).empty());
    // pulling back along the identity changes nothing
    EXPECT_TRUE(is_isomorphism(pb.first));
  }
}
