#include <gtest/gtest.h>

#include "graycat/corpus.hpp"
#include "graycat/dot.hpp"
#include "graycat/io.hpp"
#include "graycat/squarecech.hpp"
#include "support.hpp"

using namespace graycat;

TEST(Io, AdcRoundTrip) {
  for (auto& s : testing_support::small_sums()) {
    Adc a = to_adc(s);
    EXPECT_EQ(adc_from_json(adc_to_json(a)), a) << to_string(s);
    Adc t = tensor(a, interval_adc());
    EXPECT_EQ(adc_from_json(parse_json_text(adc_to_json(t).dump(), "t")), t);
  }
  EXPECT_EQ(adc_from_json(adc_to_json(simplex2_adc())), simplex2_adc());
}

TEST(Io, AdcRejectsBadBoundary) {
  Json j = adc_to_json(to_adc(globe(2)));
  for (auto& e : j["basis"])
    if (e["degree"] == 2) {
      Json& d = j["differential"][e["id"].get<std::string>()];
      d = Json::array({d[0]});
    }
  EXPECT_THROW(adc_from_json(j), InvalidInput);
}

TEST(Io, SumNotation) {
  for (auto& s : testing_support::small_sums()) {
    EXPECT_EQ(parse_sum(to_string(s)), s) << to_string(s);
    EXPECT_EQ(sum_from_json(sum_to_json(s)), s);
  }
  EXPECT_EQ(parse_sum("[3]"), path(3));
  EXPECT_EQ(parse_sum("D2"), globe(2));
  EXPECT_THROW(parse_sum("[1"), InvalidInput);
  EXPECT_THROW(parse_sum("[x]"), InvalidInput);
}

TEST(Io, CategoryRoundTrip) {
  for (auto& n : named_category_names()) {
    StrictCat c = *named_category(n);
    Json j = category_to_json(c);
    StrictCat back = category_from_json(j);
    EXPECT_EQ(category_to_json(back), j) << n;
    EXPECT_EQ(back.dim, c.dim) << n;
    for (int k = 0; k <= c.dim; ++k) EXPECT_EQ(back.size(k), c.size(k)) << n;
  }
}

TEST(Io, FunctorRoundTrip) {
  StrictCat c = poset_cat(1), d = poset_cat(2);
  for (auto& f : enumerate_functors(c, d)) {
    CatFunctor g = functor_from_json(functor_to_json(f));
    EXPECT_EQ(functor_to_json(g), functor_to_json(f));
    EXPECT_TRUE(check_functor(g).empty());
  }
}

TEST(Io, DoubleRoundTrip) {
  for (auto& [n, c] : corpus_2categories()) {
    DoubleCat d = companion_marking(sq2(c));
    EXPECT_EQ(double_from_json(double_to_json(d)), d) << n;
  }
}

TEST(Io, MalformedJsonReportsPosition) {
  try {
    parse_json_text("{\"kind\": ", "input");
    FAIL();
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("malformed JSON at byte"), std::string::npos);
  }
}

TEST(Dot, AdcGraph) {
  std::string s = export_dot(interval_adc(), "i");
  EXPECT_EQ(std::count(s.begin(), s.end(), '\n'), 2 + 3 + static_cast<long>(precedence_edges(interval_adc()).size()) + 1);
  Adc t = tensor(interval_adc(), interval_adc());
  std::string u = export_dot(t);
  std::size_t nodes = 0;
  for (std::size_t p = u.find("[label="); p != std::string::npos; p = u.find("[label=", p + 1)) ++nodes;
  EXPECT_EQ(nodes, 9u);
  EXPECT_EQ(export_dot(t), u);
}

TEST(Dot, DoubleGraph) {
  DoubleCat d = sq2(poset_cat(1));
  std::string s = export_dot(d);
  EXPECT_NE(s.find("style=dashed"), std::string::npos);
  EXPECT_NE(s.find("\"s:5\""), std::string::npos);
  EXPECT_EQ(s.find("\"s:6\""), std::string::npos);
}

TEST(Dot, Witness) {
  auto w = verify_susp_tensor_decomposition(path(1), path(1));
  std::string s = export_dot(w);
  EXPECT_NE(s.find("colimit -> target"), std::string::npos);
  EXPECT_NE(s.find(w.ok ? "\"iso\"" : "\"not iso\""), std::string::npos);
}
