#include <gtest/gtest.h>

#include "graycat/corpus.hpp"
#include "graycat/homsearch.hpp"
#include "graycat/strictcat.hpp"

using namespace graycat;

namespace {

// One sort per dimension; boundaries, identities and composites as operations.
Structure category_structure(const StrictCat& c) {
  Structure s;
  for (int k = 0; k <= c.dim; ++k) s.sizes.push_back(c.size(k));
  for (int k = 1; k <= c.dim; ++k) {
    Structure::Unary src{k, k - 1, {}}, tgt{k, k - 1, {}};
    for (std::size_t x = 0; x < c.size(k); ++x) {
      src.table.push_back(c.source(k, x));
      tgt.table.push_back(c.target(k, x));
    }
    s.unary.push_back(src);
    s.unary.push_back(tgt);
  }
  for (int k = 0; k < c.dim; ++k) s.unary.push_back({k, k + 1, c.identity[k]});
  for (int k = 1; k <= c.dim; ++k)
    for (int i = 0; i < k; ++i) s.binary.push_back({k, k, k, c.comp[k][i]});
  return s;
}

}  // namespace

TEST(HomSearch, AgreesWithFunctorSearch) {
  auto corpus = functor_corpus();
  for (auto& [a, c] : corpus)
    for (auto& [b, d] : corpus) {
      int n = std::max(c.dim, d.dim);
      StrictCat s = raise_dim(c, n), t = raise_dim(d, n);
      auto homs = enumerate_homomorphisms(category_structure(s), category_structure(t));
      auto fs = enumerate_functors(s, t);
      ASSERT_EQ(homs.size(), fs.size()) << a << " -> " << b;
      std::set<Homomorphism> lhs(homs.begin(), homs.end()), rhs;
      for (auto& f : fs) rhs.insert(f.map);
      EXPECT_EQ(lhs, rhs) << a << " -> " << b;
    }
}

TEST(HomSearch, PartialOperationsMustLandInDefinedComposites) {
  // Arrows a: 0 -> 1, b: 1 -> 2, c: 0 -> 2 with a then b = c.
  Structure s{{3, 3}, {{1, 0, {0, 1, 0}}, {1, 0, {1, 2, 2}}}, {{1, 1, 1, {{{0, 1}, 2}}}}};
  Structure t = s;
  EXPECT_EQ(enumerate_homomorphisms(s, t).size(), 1u);
  t.binary[0].table.clear();
  EXPECT_TRUE(enumerate_homomorphisms(s, t).empty());
}

TEST(HomSearch, Budget) {
  Structure s{{6}, {}, {}}, t{{6}, {}, {}};
  EXPECT_THROW(enumerate_homomorphisms(s, t, 100), BudgetExceeded);
  EXPECT_EQ(enumerate_homomorphisms(s, t).size(), 46656u);
}

TEST(HomSearch, SignatureMismatchIsRejected) {
  Structure s{{1}, {}, {}}, t{{1, 1}, {}, {}};
  EXPECT_THROW(enumerate_homomorphisms(s, t), InvalidInput);
}
