#include <gtest/gtest.h>

#include "graycat/basis.hpp"
#include "graycat/isomorphism.hpp"
#include "support.hpp"

using namespace graycat;
using testing_support::small_sums;

TEST(Theta, Globes) {
  EXPECT_TRUE(globe(0).is_point());
  EXPECT_EQ(globe(1), path(1));
  EXPECT_EQ(globe(2), suspend(suspend(point_sum())));
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(dimension(globe(n)), n);
}

TEST(Theta, Wedge) {
  EXPECT_EQ(wedge(path(1), path(1)), path(2));
  for (auto& a : small_sums()) {
    EXPECT_EQ(wedge(a, point_sum()), a);
    EXPECT_EQ(wedge(point_sum(), a), a);
    for (auto& b : small_sums()) {
      if (a.is_point() || b.is_point()) continue;
      EXPECT_EQ(dimension(wedge(a, b)), std::max(dimension(a), dimension(b)));
      for (auto& c : small_sums()) EXPECT_EQ(wedge(wedge(a, b), c), wedge(a, wedge(b, c)));
    }
  }
}

TEST(Theta, Notation) {
  EXPECT_EQ(to_string(point_sum()), "[0]");
  EXPECT_EQ(to_string(path(3)), "[3]");
  EXPECT_EQ(to_string(globe(2)), "[[1],1]");
  EXPECT_EQ(to_string(node({globe(2), globe(1)})), "[{[[1],1],[1]},2]");
}

TEST(Theta, Spine) {
  SpinePresentation p = spine(path(3));
  EXPECT_EQ(p.globes, (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(p.gluings, (std::vector<SpineGluing>{{0, 1, 0}, {1, 2, 0}}));
  for (int n = 0; n <= 4; ++n) {
    SpinePresentation g = spine(globe(n));
    EXPECT_EQ(g.globes, std::vector<int>{n});
    EXPECT_TRUE(g.gluings.empty());
  }
  SpinePresentation q = spine(node({globe(1), globe(1)}));
  EXPECT_EQ(q.globes, (std::vector<int>{2, 2}));
  EXPECT_EQ(q.gluings, (std::vector<SpineGluing>{{0, 1, 0}}));
  SpinePresentation r = spine(node({path(2), point_sum()}));
  EXPECT_EQ(r.globes, (std::vector<int>{2, 2, 1}));
  EXPECT_EQ(r.gluings, (std::vector<SpineGluing>{{0, 1, 1}, {1, 2, 0}}));
  for (auto& a : small_sums())
    for (auto g : spine(a).gluings) {
      EXPECT_LT(g.degree, spine(a).globes[g.left]);
      EXPECT_LT(g.degree, spine(a).globes[g.right]);
    }
}

TEST(Theta, ToAdc) {
  EXPECT_TRUE(isomorphic(to_adc(path(1)), interval_adc()));
  EXPECT_EQ(to_adc(globe(2)).sizes(), (std::vector<std::size_t>{2, 2, 1}));
  EXPECT_EQ(to_adc(path(2)).sizes(), (std::vector<std::size_t>{3, 2}));
  for (auto& a : small_sums()) {
    EXPECT_TRUE(check_basis_conditions(to_adc(a)).all()) << to_string(a);
    EXPECT_TRUE(validate(to_adc(a)).empty());
  }
}

TEST(Theta, ToAdcCommutesWithWedgeAndSuspension) {
  for (auto& a : small_sums()) {
    EXPECT_TRUE(isomorphic(to_adc(suspend(a)), suspend_adc(to_adc(a)))) << to_string(a);
    for (auto& b : small_sums()) {
      if (a.is_point() || b.is_point()) continue;
      EXPECT_TRUE(isomorphic(to_adc(wedge(a, b)), wedge_adc(to_adc(a), to_adc(b))));
    }
  }
}

TEST(Theta, Truncate) {
  EXPECT_EQ(truncate_sum(globe(2), 1), globe(1));
  EXPECT_EQ(truncate_sum(path(2), 1), path(2));
  EXPECT_EQ(truncate_sum(node({globe(2), globe(1)}), 1), path(2));
  for (auto& a : small_sums()) EXPECT_LE(dimension(truncate_sum(a, 1)), 1);
}

TEST(Theta, Duality) {
  GlobularSum a = node({globe(1), point_sum()});
  EXPECT_EQ(dual_sum(a, {1}), node({point_sum(), globe(1)}));
  for (int n = 0; n < 4; ++n) EXPECT_EQ(dual_sum(globe(n), {1, 2, 3}), globe(n));
  std::vector<DegreeSet> sets{{1}, {2}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}};
  for (auto& s : small_sums())
    for (auto& set : sets)
      EXPECT_TRUE(isomorphic(dualize(to_adc(s), set), to_adc(dual_sum(s, set)))) << to_string(s);
}
