#include <gtest/gtest.h>

#include "graycat/corpus.hpp"
#include "graycat/doublecat.hpp"
#include "graycat/squarecech.hpp"

using namespace graycat;

namespace {

bool filler_is_identity(const CechDouble& cd, const StrictCat& c, std::size_t q) {
  return raise_dim(c, 2).is_identity(2, cd.filler[q]);
}

std::size_t vcell(const DoubleCat& d, const std::string& label) {
  for (std::size_t f = 0; f < d.vcells.size(); ++f)
    if (d.vcells[f].label == label) return f;
  throw std::out_of_range(label);
}

}  // namespace

TEST(DoubleCat, CommutativeSquaresInAPosetAreValid) {
  StrictCat p = poset_cat(2);
  DoubleCat d = sq_pair(filtration_by_labels(p, p));
  EXPECT_TRUE(validate_double(d).empty());
  EXPECT_EQ(d.squares.size(), 20u);
}

TEST(DoubleCat, Sq2IsValid) {
  for (auto& [n, c] : corpus_2categories()) {
    auto bad = validate_double(sq2(c));
    EXPECT_TRUE(bad.empty()) << n << ": " << (bad.empty() ? "" : bad.front().where + " " + bad.front().message);
  }
  EXPECT_TRUE(validate_double(codiscrete_double(3)).empty());
  EXPECT_TRUE(validate_double(vertical_double(poset_cat(2))).empty());
}

TEST(DoubleCat, BrokenCompositionIsReported) {
  DoubleCat d = sq2(*named_category("walking2cell"));
  auto it = std::find_if(d.sq_hcomp.begin(), d.sq_hcomp.end(), [&](auto& e) { return e.second != 0; });
  ASSERT_NE(it, d.sq_hcomp.end());
  it->second = 0;
  EXPECT_FALSE(validate_double(d).empty());
}

TEST(DoubleCat, BrokenInterchangeIsReported) {
  // Two squares with the same boundary make the codiscrete table ambiguous.
  DoubleCat d = codiscrete_double(1);
  d.squares.push_back({"extra", 0, 0, 0, 0});
  std::size_t e = 1, u = 0;
  d.sq_vcomp = {{{u, u}, u}, {{u, e}, e}, {{e, u}, e}, {{e, e}, e}};
  d.sq_hcomp = {{{u, u}, u}, {{u, e}, e}, {{e, u}, e}, {{e, e}, u}};
  auto bad = validate_double(d);
  ASSERT_FALSE(bad.empty());
  bool interchange = false;
  for (auto& v : bad) interchange |= v.message == "interchange fails";
  EXPECT_TRUE(interchange);
}

TEST(DoubleCat, IdentityHasTrivialCompanion) {
  for (auto& [n, c] : corpus_2categories()) {
    DoubleCat d = sq2(c);
    for (std::size_t x = 0; x < d.objects.size(); ++x) {
      auto ts = find_companions(d, d.vunit[x]);
      std::size_t id = d.sq_vunit[d.hunit[x]];
      EXPECT_NE(std::find(ts.begin(), ts.end(), CompanionTriple{d.vunit[x], d.hunit[x], id, id}), ts.end()) << n;
    }
  }
}

TEST(DoubleCat, CompanionsInSq2) {
  for (auto& [n, c] : corpus_2categories()) {
    CechDouble cd = sq2_indexed(c);
    const DoubleCat& d = cd.cat;
    for (std::size_t f = 0; f < d.vcells.size(); ++f) {
      auto ts = find_companions(d, f);
      ASSERT_EQ(ts.size(), 1u) << n << " " << d.vcells[f].label;
      EXPECT_EQ(d.hcells[ts[0].companion].label, d.vcells[f].label);
      EXPECT_TRUE(filler_is_identity(cd, c, ts[0].unit));
      EXPECT_TRUE(filler_is_identity(cd, c, ts[0].counit));
    }
    EXPECT_TRUE(is_accompanied(d)) << n;
  }
}

TEST(DoubleCat, VerticalOnlyIsNotAccompanied) {
  DoubleCat d = vertical_double(poset_cat(1));
  EXPECT_TRUE(find_companions(d, vcell(d, "0<1")).empty());
  EXPECT_FALSE(is_companionable(d, vcell(d, "0<1")));
  EXPECT_TRUE(is_companionable(d, vcell(d, "1(0)")));
  EXPECT_FALSE(is_accompanied(d));
}

TEST(DoubleCat, CompanionOfComposite) {
  for (auto& [n, c] : corpus_2categories()) {
    DoubleCat d = sq2(c);
    for (auto [fg, h] : d.vcomp) {
      auto tf = find_companions(d, fg.first), tg = find_companions(d, fg.second), th = find_companions(d, h);
      CompanionTriple t = companion_of_composite(d, tf.at(0), tg.at(0));
      EXPECT_TRUE(is_companion_triple(d, t));
      EXPECT_EQ(t, th.at(0)) << n << " " << d.vcells[h].label;
    }
  }
}

TEST(DoubleCat, CompositeWithIdentity) {
  DoubleCat d = sq2(*named_category("simplex2"));
  for (std::size_t f = 0; f < d.vcells.size(); ++f) {
    auto tf = find_companions(d, f).at(0);
    auto tid = find_companions(d, d.vunit[d.vcells[f].target]).at(0);
    EXPECT_EQ(companion_of_composite(d, tf, tid), tf);
  }
}

TEST(DoubleCat, CompanionOfCompositeIsAssociative) {
  DoubleCat d = sq2(poset_cat(3));
  for (auto [fg, fg_c] : d.vcomp)
    for (std::size_t h = 0; h < d.vcells.size(); ++h) {
      if (d.vcells[fg.second].target != d.vcells[h].source) continue;
      auto t = [&](std::size_t x) { return find_companions(d, x).at(0); };
      CompanionTriple left = companion_of_composite(d, companion_of_composite(d, t(fg.first), t(fg.second)), t(h));
      CompanionTriple right = companion_of_composite(d, t(fg.first), companion_of_composite(d, t(fg.second), t(h)));
      EXPECT_TRUE(is_companion_triple(d, left));
      EXPECT_TRUE(is_companion_triple(d, right));
      EXPECT_EQ(left.companion, right.companion);
    }
}

TEST(DoubleCat, BicartesianSquaresInSq2) {
  for (auto& [n, c] : corpus_2categories()) {
    CechDouble cd = sq2_indexed(c);
    const DoubleCat& d = cd.cat;
    for (std::size_t f = 0; f < d.vcells.size(); ++f) EXPECT_TRUE(is_bicartesian(d, d.sq_hunit[f]));
    for (std::size_t q = 0; q < d.squares.size(); ++q) {
      // No corpus 2-category has invertible 2-cells, so the bicartesian squares are those
      // filled by identities.
      EXPECT_EQ(is_bicartesian(d, q), filler_is_identity(cd, c, q)) << n << " " << d.squares[q].label;
      if (is_bicartesian_pasting(d, q)) EXPECT_TRUE(is_bicartesian(d, q));
    }
  }
}

TEST(DoubleCat, OneRowPastingMissesHorizontalIdentities) {
  DoubleCat d = sq2(poset_cat(1));
  std::size_t f = vcell(d, "0<1");
  EXPECT_TRUE(is_bicartesian(d, d.sq_hunit[f]));
  EXPECT_FALSE(is_bicartesian_pasting(d, d.sq_hunit[f]));
}

TEST(DoubleCat, NoCompanionMeansNotBicartesian) {
  DoubleCat d = vertical_double(poset_cat(1));
  EXPECT_FALSE(is_bicartesian(d, d.sq_hunit[vcell(d, "0<1")]));
}

TEST(DoubleCat, CompanionMarking) {
  for (auto& [n, c] : corpus_2categories()) {
    DoubleCat m = companion_marking(sq2(c));
    EXPECT_EQ(m.marking->vcells.size(), m.vcells.size()) << n;
    EXPECT_TRUE(validate_double(m).empty()) << n;
  }
  DoubleCat v = companion_marking(vertical_double(poset_cat(2)));
  EXPECT_EQ(v.marking->vcells, std::set<std::size_t>(v.vunit.begin(), v.vunit.end()));
  EXPECT_TRUE(validate_double(v).empty());
}

TEST(DoubleCat, LiftsAreBicartesianAndUnique) {
  for (auto& [n, c] : corpus_2categories()) {
    CechDouble cd = sq2_indexed(c);
    const DoubleCat& d = cd.cat;
    for (std::size_t u = 0; u < d.hcells.size(); ++u)
      for (std::size_t t = 0; t < d.vcells.size(); ++t) {
        if (d.hcells[u].target == d.vcells[t].source) {
          std::size_t q = *cocartesian_lift(d, u, t);
          EXPECT_TRUE(is_bicartesian(d, q));
          EXPECT_TRUE(filler_is_identity(cd, c, q));
          auto& s = d.squares[q];
          for (auto p : d.find_squares(s.top, s.bottom, s.left, s.right))
            if (is_bicartesian(d, p)) EXPECT_EQ(p, q);
        }
        if (d.hcells[u].source == d.vcells[t].target) {
          std::size_t q = *cartesian_lift(d, u, t);
          EXPECT_TRUE(is_bicartesian(d, q));
          auto& s = d.squares[q];
          for (auto p : d.find_squares(s.top, s.bottom, s.left, s.right))
            if (is_bicartesian(d, p)) EXPECT_EQ(p, q);
        }
      }
    for (std::size_t u = 0; u < d.hcells.size(); ++u) {
      std::size_t id = d.vunit[d.hcells[u].target];
      EXPECT_EQ(*cocartesian_lift(d, u, id), d.sq_vunit[u]);
    }
  }
}

TEST(DoubleCat, BicartesianAreCompositesOfLifts) {
  for (auto& [n, c] : corpus_2categories()) {
    DoubleCat d = sq2(c);
    std::set<std::size_t> composites, bicartesian;
    for (std::size_t u = 0; u < d.hcells.size(); ++u)
      for (std::size_t t = 0; t < d.vcells.size(); ++t) {
        if (d.hcells[u].target != d.vcells[t].source) continue;
        std::size_t up = *cocartesian_lift(d, u, t);
        for (std::size_t v = 0; v < d.hcells.size(); ++v)
          for (std::size_t s = 0; s < d.vcells.size(); ++s) {
            if (d.hcells[v].source != d.vcells[s].target) continue;
            auto w = d.over(up, *cartesian_lift(d, v, s));
            if (w) composites.insert(*w);
          }
      }
    for (std::size_t q = 0; q < d.squares.size(); ++q)
      if (is_bicartesian(d, q)) bicartesian.insert(q);
    EXPECT_EQ(composites, bicartesian) << n;
  }
}

TEST(DoubleCat, FibrationOfCompanionMarking) {
  for (auto& [n, c] : corpus_2categories()) {
    DoubleCat m = companion_marking(sq2(c));
    auto bad = check_two_sided_fibration(m);
    EXPECT_TRUE(bad.empty()) << n << ": " << (bad.empty() ? "" : bad.front().where + " " + bad.front().message);
    auto ts = extract_companions(m);
    ASSERT_TRUE(ts.has_value()) << n;
    for (auto& t : *ts) EXPECT_TRUE(is_companion_triple(m, t));
    DoubleCat plain = m;
    plain.marking.reset();
    EXPECT_TRUE(is_accompanied(plain));
  }
}

TEST(DoubleCat, TrivialMarkingFailsLifting) {
  DoubleCat d = trivial_marking(sq2(poset_cat(1)));
  d.marking->vcells.insert(vcell(d, "0<1"));
  auto bad = check_two_sided_fibration(d);
  ASSERT_FALSE(bad.empty());
  EXPECT_EQ(bad.front().message.substr(0, 3), "(1)");
  EXPECT_FALSE(extract_companions(d).has_value());
}

TEST(DoubleCat, CodiscreteIsAFibration) {
  for (std::size_t n = 1; n <= 3; ++n) {
    DoubleCat d = full_marking(codiscrete_double(n));
    EXPECT_TRUE(check_two_sided_fibration(d).empty());
    EXPECT_TRUE(extract_companions(d).has_value());
  }
}

TEST(DoubleCat, UnmarkedVerticalCellIsAPreconditionFailure) {
  DoubleCat d = companion_marking(vertical_double(poset_cat(1)));
  auto bad = check_two_sided_fibration(d);
  ASSERT_FALSE(bad.empty());
  EXPECT_EQ(bad.front().message.substr(0, 3), "(0)");
  EXPECT_FALSE(check_two_sided_fibration(sq2(poset_cat(1))).empty());
}

TEST(DoubleCat, CompanionUniqueness) {
  for (auto& [n, c] : corpus_2categories()) {
    DoubleCat d = sq2(c);
    for (std::size_t f = 0; f < d.vcells.size(); ++f) EXPECT_TRUE(companion_uniqueness_check(d, f).empty()) << n;
  }
}

TEST(DoubleCat, IsomorphicCompanions) {
  // f and h are related by an invertible 2-cell, so each is a companion of both.
  DoubleCat d = sq2(walking_2iso());
  std::size_t f = vcell(d, "f");
  auto ts = find_companions(d, f);
  std::set<std::size_t> bars;
  for (auto& t : ts) bars.insert(t.companion);
  EXPECT_EQ(bars.size(), 2u);
  EXPECT_TRUE(companion_uniqueness_check(d, f).empty());
  EXPECT_TRUE(companion_uniqueness_check(d, vcell(d, "h")).empty());
}

TEST(DoubleCat, Completeness) {
  for (auto& [n, c] : corpus_2categories()) {
    DoubleCat d = sq2(c);
    EXPECT_TRUE(is_complete(d)) << n;
    EXPECT_TRUE(every_horizontal_is_companion(d)) << n;
  }
  // Identities only below, one extra arrow above.
  DoubleCat p = sq_pair(filtration_by_labels(discrete_cat(2, 1), poset_cat(1)));
  EXPECT_TRUE(is_accompanied(p));
  EXPECT_TRUE(is_complete(p));
  EXPECT_FALSE(every_horizontal_is_companion(p));
}

TEST(DoubleCat, SharedCompanionBreaksCompleteness) {
  CompletenessReport r = completeness_report(sq2(walking_2iso()));
  EXPECT_FALSE(r.companions_injective);
  EXPECT_FALSE(r.ok());
}

TEST(DoubleCat, InvertiblePairsNeedInvertibleSquares) {
  EXPECT_TRUE(is_complete(sq2(walking_iso())));
  // Vertically the pair is absent, so nothing carries it to units.
  StrictCat iso = walking_iso();
  DoubleCat p = sq_pair(filtration_by_labels(discrete_cat(2, 1), iso));
  CompletenessReport r = completeness_report(p);
  EXPECT_TRUE(r.companions_injective);
  EXPECT_FALSE(r.equivalences_trivial);
}
