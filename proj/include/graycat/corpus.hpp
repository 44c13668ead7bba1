#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adc_ops.hpp"
#include "strictcat.hpp"
#include "theta.hpp"

namespace graycat {

// The oriental on three objects: one 2-cell from 02 to the path 01, 12.
inline Adc simplex2_adc() {
  return AdcBuilder()
      .add("0", 0)
      .add("1", 0)
      .add("2", 0)
      .add("01", 1)
      .add("12", 1)
      .add("02", 1)
      .add("012", 2)
      .boundary("01", {{"1", 1}, {"0", -1}})
      .boundary("12", {{"2", 1}, {"1", -1}})
      .boundary("02", {{"2", 1}, {"0", -1}})
      .boundary("012", {{"01", 1}, {"12", 1}, {"02", -1}})
      .endpoints("0", "2")
      .build();
}

inline const std::vector<std::string>& named_adc_names() {
  static const std::vector<std::string> names{"point",  "interval", "globe0",      "globe1",    "globe2",
                                              "globe3", "simplex2", "walking2cell", "gridsquare"};
  return names;
}

inline std::optional<Adc> named_adc(const std::string& name) {
  if (name == "point" || name == "globe0") return to_adc(point_sum());
  if (name == "interval") return interval_adc();
  if (name == "globe1") return to_adc(globe(1));
  if (name == "globe2" || name == "walking2cell") return to_adc(globe(2));
  if (name == "globe3") return to_adc(globe(3));
  if (name == "simplex2") return simplex2_adc();
  if (name == "gridsquare") return tensor(interval_adc(), interval_adc());
  return std::nullopt;
}

inline std::optional<GlobularSum> named_sum(const std::string& name) {
  if (name == "point" || name == "globe0") return point_sum();
  if (name == "interval" || name == "globe1") return path(1);
  if (name == "globe2" || name == "walking2cell") return globe(2);
  if (name == "globe3") return globe(3);
  return std::nullopt;
}

inline const std::vector<std::string>& named_category_names() {
  static const std::vector<std::string> names{"terminal",   "interval",    "poset2",       "poset3",
                                              "simplex2",   "walking2cell", "gridsquare",  "globe3",
                                              "walkingiso", "parallelpair", "walking2iso"};
  return names;
}

inline std::optional<StrictCat> named_category(const std::string& name) {
  if (name == "terminal" || name == "point" || name == "globe0") return terminal_cat();
  if (name == "interval" || name == "globe1") return poset_cat(1);
  if (name == "poset2") return poset_cat(2);
  if (name == "poset3") return poset_cat(3);
  if (name == "simplex2") return from_nu(simplex2_adc(), 2);
  if (name == "walking2cell" || name == "globe2") return from_nu(to_adc(globe(2)), 2);
  if (name == "gridsquare") return from_nu(tensor(interval_adc(), interval_adc()), 2);
  if (name == "globe3") return from_nu(to_adc(globe(3)), 3);
  if (name == "walkingiso") return walking_iso();
  if (name == "parallelpair") return parallel_pair();
  if (name == "walking2iso") return walking_2iso();
  return std::nullopt;
}

// Globular sums used by the property checks.
inline std::vector<GlobularSum> corpus_sums() {
  return {point_sum(), path(1), path(2), path(3), globe(2), globe(3),
          node({globe(1), point_sum()}), node({globe(1), globe(1)}), suspend(path(2))};
}

// Finite strict 2-categories without non-trivial invertible 2-cells.
inline std::vector<std::pair<std::string, StrictCat>> corpus_2categories() {
  std::vector<std::pair<std::string, StrictCat>> r;
  for (auto n : {"terminal", "interval", "poset2", "simplex2", "walking2cell", "gridsquare", "parallelpair",
                 "walkingiso"})
    r.push_back({n, *named_category(n)});
  return r;
}

// Small enough for exhaustive double-functor enumeration between any two of them.
inline std::vector<std::pair<std::string, StrictCat>> tiny_2categories() {
  std::vector<std::pair<std::string, StrictCat>> r;
  for (auto n : {"terminal", "interval", "poset2", "simplex2", "walking2cell", "parallelpair"})
    r.push_back({n, *named_category(n)});
  return r;
}

// All categories usable as sources and targets of random functors.
inline std::vector<std::pair<std::string, StrictCat>> functor_corpus() {
  std::vector<std::pair<std::string, StrictCat>> r;
  for (auto n : {"terminal", "interval", "poset2", "simplex2", "walking2cell", "parallelpair", "walkingiso",
                 "walking2iso", "gridsquare"})
    r.push_back({n, *named_category(n)});
  return r;
}

}  // namespace graycat
