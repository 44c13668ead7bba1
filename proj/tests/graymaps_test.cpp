#include <gtest/gtest.h>

#include "graycat/graymaps.hpp"
#include "support.hpp"

using namespace graycat;
using testing_support::small_sums;

namespace {

std::vector<GlobularSum> low_sums() { return {point_sum(), path(1), path(2), globe(2)}; }

}  // namespace

TEST(GrayMaps, SectionOfP) {
  for (auto& a : {point_sum(), path(1), globe(2), node({globe(1), point_sum()})})
    for (int n = 0; n <= 3; ++n) {
      Adc x = to_adc(a);
      SectionReport r = check_section(p_map(x, n), s_map(x, n));
      EXPECT_TRUE(r.ok()) << to_string(a) << " n=" << n << " p:" << r.p_chain_map << " s:" << r.s_chain_map
                          << " sec:" << r.section;
    }
}

TEST(GrayMaps, PIsNotInvertible) {
  Adc x = to_adc(path(1));
  ChainMap p = p_map(x, 1);
  EXPECT_GT(p.source().total_size(), p.target().total_size());
  EXPECT_FALSE(is_identity_on_basis(p.then(s_map(x, 1))));
}

TEST(GrayMaps, BlocksMatchTheta) {
  for (auto& a : small_sums())
    for (int m = 1; m <= 3; ++m) {
      GlobularSum b = node(std::vector<GlobularSum>(m, a));
      EXPECT_TRUE(isomorphic(blocks_adc(to_adc(a), m), to_adc(b))) << to_string(a) << " m=" << m;
    }
}

TEST(GrayMaps, BlockReindex) {
  EXPECT_EQ(block_reindex(2, 0, 0), 0);
  EXPECT_EQ(block_reindex(2, 0, 1), 1);
  EXPECT_EQ(block_reindex(2, 0, 3), 2);
  EXPECT_EQ(block_reindex(2, 1, 2), 0);
  EXPECT_EQ(block_reindex(2, 1, 3), 1);
  EXPECT_EQ(block_reindex(2, 1, 4), 2);
}

TEST(GrayMaps, SectionOfBlockP) {
  for (auto& a : {point_sum(), path(1), globe(2)})
    for (auto [n, m] : std::vector<std::pair<int, int>>{{0, 1}, {1, 1}, {1, 2}, {2, 2}, {1, 3}, {2, 3}}) {
      auto [p, s] = p_s_nm(to_adc(a), n, m);
      SectionReport r = check_section(p, s);
      EXPECT_TRUE(r.ok()) << to_string(a) << " n=" << n << " m=" << m << " p:" << r.p_chain_map
                          << " s:" << r.s_chain_map << " sec:" << r.section;
    }
}

TEST(GrayMaps, BlockPAtOneBlockIsP) {
  for (auto& a : {point_sum(), path(1), globe(2)})
    for (int n = 0; n <= 2; ++n) {
      Adc x = to_adc(a);
      auto [p, s] = p_s_nm(x, n, 1);
      EXPECT_EQ(p.source().sizes(), p_map(x, n).source().sizes());
      EXPECT_EQ(s.source().sizes(), s_map(x, n).source().sizes());
    }
}

TEST(GrayMaps, NablaIsChainMap) {
  for (auto& a : low_sums())
    for (auto& b : low_sums())
      for (Side side : {Side::left, Side::right}) {
        ChainMap f = nabla(to_adc(a), to_adc(b), side);
        EXPECT_TRUE(check_chain_map(f).empty()) << to_string(a) << " " << to_string(b);
        EXPECT_TRUE(is_positive(f));
      }
}

TEST(GrayMaps, ConeIsChainMap) {
  for (auto& a : low_sums())
    for (auto& b : low_sums()) {
      ChainMap f = decomposition_cone(to_adc(a), to_adc(b));
      auto bad = check_chain_map(f);
      EXPECT_TRUE(bad.empty()) << to_string(a) << " " << to_string(b) << " " << (bad.empty() ? "" : bad.front().message);
    }
}

TEST(GrayMaps, SuspTensorDecomposition) {
  for (auto& a : small_sums())
    for (auto& b : small_sums()) {
      if (dimension(a) + dimension(b) + 2 > 4) continue;
      DecompositionWitness w = verify_susp_tensor_decomposition(a, b);
      EXPECT_TRUE(w.ok) << to_string(a) << " " << to_string(b) << ": " << w.failure;
    }
}

TEST(GrayMaps, DecompositionOfPointPair) {
  // [0] and [0]: the square is glued from two triangles along a diagonal.
  DecompositionWitness w = verify_susp_tensor_decomposition(point_sum(), point_sum());
  ASSERT_TRUE(w.ok) << w.failure;
  EXPECT_EQ(w.colimit.sizes(), (std::vector<std::size_t>{4, 4, 1}));
}

TEST(GrayMaps, SuspensionColimits) {
  for (auto& a : small_sums())
    for (int n = 1; n <= 3; ++n) {
      if (dimension(a) + 1 > 4) continue;
      DecompositionWitness w = verify_susp_colimit(to_adc(a), n);
      EXPECT_TRUE(w.ok) << to_string(a) << " n=" << n << ": " << w.failure;
      DecompositionWitness v = verify_cosuspension(to_adc(a), n);
      EXPECT_TRUE(v.ok) << to_string(a) << " n=" << n << ": " << v.failure;
    }
}

TEST(GrayMaps, Dualities) {
  for (auto& a : small_sums())
    for (auto& b : small_sums()) {
      if (dimension(a) + dimension(b) > 4) continue;
      DualityReport r = duality_tensor_check(a, b);
      EXPECT_TRUE(r.ok()) << to_string(a) << " " << to_string(b);
    }
}

TEST(GrayMaps, DualityNeedsSwap) {
  // The op dual of a tensor is not the tensor of op duals in the same order.
  Adc i = interval_adc();
  Adc g = to_adc(globe(2));
  Adc lhs = dualize(tensor(i, g), odd_degrees(3));
  Adc same = tensor(dualize(i, odd_degrees(3)), dualize(g, odd_degrees(3)));
  ChainMap f = tensor_swap_map(lhs, i, g, same, false);
  EXPECT_FALSE(check_chain_map(f).empty());
}

TEST(GrayMaps, DualizeInvolutive) {
  for (auto& a : small_sums())
    for (auto s : {odd_degrees(4), even_degrees(4), all_degrees(4)}) {
      Adc x = to_adc(a);
      EXPECT_TRUE(dualize(dualize(x, s), s) == x) << to_string(a);
    }
}
