#pragma once

#include <string>
#include <vector>

#include "graycat/acceptance.hpp"
#include "graycat/adc_ops.hpp"
#include "graycat/nu.hpp"
#include "graycat/theta.hpp"

namespace testing_support {

using namespace graycat;

inline std::vector<GlobularSum> small_sums() {
  return {point_sum(), path(1), path(2), path(3), globe(2), globe(3),
          node({globe(1), point_sum()}), node({globe(1), globe(1)}), suspend(path(2))};
}

using graycat::brute_force_nu_counts;

inline Chain chain_of(const Adc& a, const std::vector<std::pair<std::string, Coeff>>& terms) {
  Chain c;
  for (auto& [id, k] : terms) c.add(a.at(id).index, k);
  return c;
}

}  // namespace testing_support
