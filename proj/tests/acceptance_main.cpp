#include <cstdio>

#include "graycat/acceptance.hpp"

int main() {
  int failed = 0;
  for (auto& c : graycat::acceptance_criteria()) {
    auto r = graycat::run_criterion(c, {});
    std::printf("%s\n", graycat::format_result(r).c_str());
    std::fflush(stdout);
    if (!r.passed) ++failed;
  }
  std::printf("%d of 10 criteria passed\n", 10 - failed);
  return failed == 0 ? 0 : 1;
}
