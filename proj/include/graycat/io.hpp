#pragma once

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "adc.hpp"
#include "doublecat.hpp"
#include "strictcat.hpp"
#include "theta.hpp"

namespace graycat {

using Json = nlohmann::ordered_json;

// ---- Adc ----

inline Json adc_to_json(const Adc& a) {
  Json basis = Json::array(), diff = Json::object(), aug = Json::object();
  for (auto e : a.elements()) {
    basis.push_back({{"id", a.id(e)}, {"degree", e.degree}});
    if (e.degree == 0) {
      aug[a.id(e)] = a.augmentation(e.index);
    } else {
      Json b = Json::array();
      for (auto [j, c] : a.boundary(e.degree, e.index)) b.push_back({{"id", a.id(e.degree - 1, j)}, {"coeff", c}});
      diff[a.id(e)] = b;
    }
  }
  Json r{{"kind", "adc"}, {"basis", basis}, {"differential", diff}, {"augmentation", aug}};
  if (a.endpoints()) r["endpoints"] = {a.id(0, a.endpoints()->first), a.id(0, a.endpoints()->second)};
  return r;
}

// Degree-0 elements missing from "augmentation" get 1; missing differentials are zero.
inline Adc adc_from_json(const Json& j) {
  AdcBuilder b;
  Json diff = j.value("differential", Json::object()), aug = j.value("augmentation", Json::object());
  std::vector<std::pair<std::string, int>> elems;
  for (auto& x : j.at("basis")) {
    std::string id = x.at("id").get<std::string>();
    int degree = x.at("degree").get<int>();
    if (degree < 0) throw InvalidInput("negative degree for '" + id + "'");
    b.add(id, degree, degree == 0 ? aug.value(id, Coeff{1}) : 1);
    elems.emplace_back(id, degree);
  }
  for (auto& [id, terms] : diff.items())
    if (!b.contains(id)) throw InvalidInput("differential of unknown basis element '" + id + "'");
  for (auto& [id, degree] : elems) {
    if (degree == 0 || !diff.contains(id)) continue;
    std::vector<std::pair<std::string, Coeff>> t;
    for (auto& term : diff[id]) t.emplace_back(term.at("id").get<std::string>(), term.at("coeff").get<Coeff>());
    b.boundary(id, t);
  }
  if (j.contains("endpoints")) b.endpoints(j["endpoints"].at(0).get<std::string>(), j["endpoints"].at(1).get<std::string>());
  Adc a = b.build();
  require_valid(a, "adc");
  return a;
}

// ---- globular sums: nested arrays, or the bracket notation [n], [A,1], [{A,B},2] ----

inline Json sum_tree(const GlobularSum& a) {
  Json r = Json::array();
  for (auto& c : a.children) r.push_back(sum_tree(c));
  return r;
}

inline GlobularSum sum_from_tree(const Json& j) {
  if (!j.is_array()) throw InvalidInput("globular sum tree must be an array");
  GlobularSum r;
  for (auto& c : j) r.children.push_back(sum_from_tree(c));
  return r;
}

inline Json sum_to_json(const GlobularSum& a) {
  return {{"kind", "globular_sum"}, {"notation", to_string(a)}, {"tree", sum_tree(a)}};
}

namespace detail {
class SumParser {
 public:
  explicit SumParser(std::string s) : s_(std::move(s)) {}
  GlobularSum parse() {
    GlobularSum r = sum();
    skip();
    if (pos_ != s_.size()) fail("trailing characters");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& m) {
    throw InvalidInput("globular sum '" + s_ + "' at position " + std::to_string(pos_) + ": " + m);
  }
  void skip() {
    while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  std::size_t number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::stoul(s_.substr(start, pos_ - start));
  }
  GlobularSum sum() {
    skip();
    if (eat('D')) return globe(static_cast<int>(number()));
    expect('[');
    skip();
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t n = number();
      expect(']');
      return path(static_cast<int>(n));
    }
    std::vector<GlobularSum> kids;
    if (eat('{')) {
      kids.push_back(sum());
      while (eat(',')) kids.push_back(sum());
      expect('}');
    } else {
      kids.push_back(sum());
    }
    expect(',');
    std::size_t n = number();
    expect(']');
    if (kids.size() == 1 && n > 1) kids.assign(n, kids[0]);
    if (kids.size() != n) fail("block count does not match");
    return node(kids);
  }
  std::string s_;
  std::size_t pos_ = 0;
};
}  // namespace detail

inline GlobularSum parse_sum(const std::string& s) { return detail::SumParser(s).parse(); }

inline GlobularSum sum_from_json(const Json& j) {
  if (j.is_string()) return parse_sum(j.get<std::string>());
  if (j.is_array()) return sum_from_tree(j);
  if (j.contains("tree")) return sum_from_tree(j["tree"]);
  return parse_sum(j.at("notation").get<std::string>());
}

// ---- strict categories; references are labels ----

namespace detail {
inline void require_unique_labels(const std::vector<std::string>& labels, const std::string& what) {
  std::set<std::string> seen;
  for (auto& l : labels)
    if (!seen.insert(l).second) throw InvalidInput(what + ": duplicate label '" + l + "'");
}

inline std::size_t ref(const Json& j, const std::map<std::string, std::size_t>& by_label, std::size_t size,
                       const std::string& what) {
  if (j.is_number_unsigned() || j.is_number_integer()) {
    auto i = j.get<long long>();
    if (i < 0 || static_cast<std::size_t>(i) >= size) throw InvalidInput(what + ": index out of range");
    return static_cast<std::size_t>(i);
  }
  auto it = by_label.find(j.get<std::string>());
  if (it == by_label.end()) throw InvalidInput(what + ": unknown label '" + j.get<std::string>() + "'");
  return it->second;
}

inline std::map<std::string, std::size_t> label_index(const std::vector<std::string>& labels) {
  std::map<std::string, std::size_t> r;
  for (std::size_t i = 0; i < labels.size(); ++i) r.emplace(labels[i], i);
  return r;
}
}  // namespace detail

inline Json category_to_json(const StrictCat& c) {
  Json cells = Json::array();
  for (int k = 0; k <= c.dim; ++k) {
    std::vector<std::string> labels;
    Json level = Json::array();
    for (std::size_t x = 0; x < c.size(k); ++x) {
      labels.push_back(c.label(k, x));
      if (k == 0)
        level.push_back({{"label", c.label(0, x)}});
      else
        level.push_back({{"label", c.label(k, x)}, {"source", c.label(k - 1, c.source(k, x))},
                         {"target", c.label(k - 1, c.target(k, x))}});
    }
    detail::require_unique_labels(labels, "category");
    cells.push_back(level);
  }
  Json ids = Json::array();
  for (int k = 0; k < c.dim; ++k) {
    Json level = Json::array();
    for (auto y : c.identity[k]) level.push_back(c.label(k + 1, y));
    ids.push_back(level);
  }
  Json comps = Json::array();
  for (int k = 1; k <= c.dim; ++k)
    for (int i = 0; i < k; ++i)
      for (auto [ab, z] : c.comp[k][i]) {
        if (ab.second == c.lift(i, c.boundary(k, ab.first, i, true), k)) continue;
        if (ab.first == c.lift(i, c.boundary(k, ab.second, i, false), k)) continue;
        comps.push_back(Json::array({k, i, c.label(k, ab.first), c.label(k, ab.second), c.label(k, z)}));
      }
  return {{"kind", "category"}, {"dim", c.dim}, {"cells", cells}, {"identities", ids}, {"compositions", comps}};
}

// Compositions with an identity factor may be omitted; they are filled in and checked.
inline StrictCat category_from_json(const Json& j) {
  int dim = j.at("dim").get<int>();
  CatBuilder b(dim);
  auto& cells = j.at("cells");
  if (cells.size() != static_cast<std::size_t>(dim + 1)) throw InvalidInput("category: need one cell list per dimension");
  std::vector<std::map<std::string, std::size_t>> index(dim + 1);
  for (int k = 0; k <= dim; ++k)
    for (auto& x : cells[k]) {
      std::string l = x.at("label").get<std::string>();
      std::size_t s = 0, t = 0;
      if (k > 0) {
        s = detail::ref(x.at("source"), index[k - 1], b.peek().size(k - 1), "category");
        t = detail::ref(x.at("target"), index[k - 1], b.peek().size(k - 1), "category");
      }
      if (!index[k].emplace(l, b.add(k, l, s, t)).second) throw InvalidInput("category: duplicate label '" + l + "'");
    }
  auto& ids = j.at("identities");
  for (int k = 0; k < dim; ++k) {
    if (ids.size() <= static_cast<std::size_t>(k) || ids[k].size() != b.peek().size(k))
      throw InvalidInput("category: need an identity for every cell below the top dimension");
    for (std::size_t x = 0; x < ids[k].size(); ++x)
      b.set_identity(k, x, detail::ref(ids[k][x], index[k + 1], b.peek().size(k + 1), "category"));
  }
  for (auto& e : j.value("compositions", Json::array())) {
    int k = e.at(0).get<int>(), i = e.at(1).get<int>();
    if (k < 1 || k > dim || i < 0 || i >= k) throw InvalidInput("category: bad composition dimensions");
    auto r = [&](int n) { return detail::ref(e.at(n), index[k], b.peek().size(k), "category"); };
    b.set_comp(k, i, r(2), r(3), r(4));
  }
  StrictCat c = b.build();
  require_valid_category(c, "category");
  return c;
}

inline Json functor_to_json(const CatFunctor& f) {
  Json map = Json::array();
  for (int k = 0; k <= f.source->dim; ++k) {
    Json level = Json::object();
    for (std::size_t x = 0; x < f.source->size(k); ++x) level[f.source->label(k, x)] = f.target->label(k, f(k, x));
    map.push_back(level);
  }
  return {{"kind", "functor"},
          {"source", category_to_json(*f.source)},
          {"target", category_to_json(*f.target)},
          {"map", map}};
}

inline CatFunctor functor_from_json(const Json& j) {
  auto s = std::make_shared<const StrictCat>(category_from_json(j.at("source")));
  auto t = std::make_shared<const StrictCat>(category_from_json(j.at("target")));
  int n = std::max(s->dim, t->dim);
  s = std::make_shared<const StrictCat>(raise_dim(*s, n));
  t = std::make_shared<const StrictCat>(raise_dim(*t, n));
  CatFunctor f{s, t, std::vector<std::vector<std::size_t>>(n + 1)};
  auto& map = j.at("map");
  for (int k = 0; k <= n; ++k) {
    auto index = detail::label_index([&] {
      std::vector<std::string> l;
      for (std::size_t y = 0; y < t->size(k); ++y) l.push_back(t->label(k, y));
      return l;
    }());
    for (std::size_t x = 0; x < s->size(k); ++x) {
      if (static_cast<std::size_t>(k) < map.size() && map[k].contains(s->label(k, x))) {
        f.map[k].push_back(detail::ref(map[k][s->label(k, x)], index, t->size(k), "functor"));
      } else if (k > 0 && s->is_identity(k, x)) {
        f.map[k].push_back(t->identity[k - 1][f(k - 1, s->source(k, x))]);
      } else {
        throw InvalidInput("functor: no image for '" + s->label(k, x) + "'");
      }
    }
  }
  auto bad = check_functor(f);
  if (!bad.empty()) throw InvalidInput("functor: " + bad.front().where + ": " + bad.front().message);
  return f;
}

// ---- double categories ----

inline Json double_to_json(const DoubleCat& d) {
  std::vector<std::string> vl, hl, ql;
  for (auto& a : d.vcells) vl.push_back(a.label);
  for (auto& a : d.hcells) hl.push_back(a.label);
  for (auto& s : d.squares) ql.push_back(s.label);
  detail::require_unique_labels(d.objects, "double category objects");
  detail::require_unique_labels(vl, "double category vertical cells");
  detail::require_unique_labels(hl, "double category horizontal cells");
  detail::require_unique_labels(ql, "double category squares");
  auto arrows = [&](const std::vector<Arrow>& as) {
    Json r = Json::array();
    for (auto& a : as) r.push_back({{"label", a.label}, {"source", d.objects[a.source]}, {"target", d.objects[a.target]}});
    return r;
  };
  auto table = [](const CompTable& t, const std::vector<std::string>& l) {
    Json r = Json::array();
    for (auto [ab, c] : t) r.push_back(Json::array({l[ab.first], l[ab.second], l[c]}));
    return r;
  };
  auto names = [](const std::vector<std::size_t>& xs, const std::vector<std::string>& l) {
    Json r = Json::array();
    for (auto x : xs) r.push_back(l[x]);
    return r;
  };
  Json squares = Json::array();
  for (auto& s : d.squares)
    squares.push_back({{"label", s.label}, {"top", hl[s.top]}, {"bottom", hl[s.bottom]}, {"left", vl[s.left]},
                       {"right", vl[s.right]}});
  Json r{{"kind", "double_category"},
         {"objects", d.objects},
         {"vcells", arrows(d.vcells)},
         {"vunit", names(d.vunit, vl)},
         {"vcomp", table(d.vcomp, vl)},
         {"hcells", arrows(d.hcells)},
         {"hunit", names(d.hunit, hl)},
         {"hcomp", table(d.hcomp, hl)},
         {"squares", squares},
         {"sq_vunit", names(d.sq_vunit, ql)},
         {"sq_hunit", names(d.sq_hunit, ql)},
         {"sq_vcomp", table(d.sq_vcomp, ql)},
         {"sq_hcomp", table(d.sq_hcomp, ql)}};
  if (d.marking) {
    r["marking"] = {{"vcells", names({d.marking->vcells.begin(), d.marking->vcells.end()}, vl)},
                    {"squares", names({d.marking->squares.begin(), d.marking->squares.end()}, ql)}};
  }
  return r;
}

inline DoubleCat double_from_json(const Json& j) {
  DoubleCat d;
  for (auto& o : j.at("objects")) d.objects.push_back(o.get<std::string>());
  auto oi = detail::label_index(d.objects);
  auto arrows = [&](const Json& as, std::vector<Arrow>& out) {
    for (auto& a : as)
      out.push_back({a.at("label").get<std::string>(), detail::ref(a.at("source"), oi, d.objects.size(), "double"),
                     detail::ref(a.at("target"), oi, d.objects.size(), "double")});
    std::vector<std::string> l;
    for (auto& a : out) l.push_back(a.label);
    return detail::label_index(l);
  };
  auto vi = arrows(j.at("vcells"), d.vcells);
  auto hi = arrows(j.at("hcells"), d.hcells);
  std::map<std::string, std::size_t> qi;
  for (auto& s : j.at("squares")) {
    d.squares.push_back({s.at("label").get<std::string>(), detail::ref(s.at("top"), hi, d.hcells.size(), "double"),
                         detail::ref(s.at("bottom"), hi, d.hcells.size(), "double"),
                         detail::ref(s.at("left"), vi, d.vcells.size(), "double"),
                         detail::ref(s.at("right"), vi, d.vcells.size(), "double")});
    qi.emplace(d.squares.back().label, d.squares.size() - 1);
  }
  auto list = [&](const Json& xs, const std::map<std::string, std::size_t>& idx, std::size_t n) {
    std::vector<std::size_t> r;
    for (auto& x : xs) r.push_back(detail::ref(x, idx, n, "double"));
    return r;
  };
  auto table = [&](const Json& t, const std::map<std::string, std::size_t>& idx, std::size_t n) {
    CompTable r;
    for (auto& e : t) r[{detail::ref(e.at(0), idx, n, "double"), detail::ref(e.at(1), idx, n, "double")}] =
        detail::ref(e.at(2), idx, n, "double");
    return r;
  };
  d.vunit = list(j.at("vunit"), vi, d.vcells.size());
  d.vcomp = table(j.at("vcomp"), vi, d.vcells.size());
  d.hunit = list(j.at("hunit"), hi, d.hcells.size());
  d.hcomp = table(j.at("hcomp"), hi, d.hcells.size());
  d.sq_vunit = list(j.at("sq_vunit"), qi, d.squares.size());
  d.sq_hunit = list(j.at("sq_hunit"), qi, d.squares.size());
  d.sq_vcomp = table(j.at("sq_vcomp"), qi, d.squares.size());
  d.sq_hcomp = table(j.at("sq_hcomp"), qi, d.squares.size());
  if (j.contains("marking")) {
    Marking m;
    for (auto x : list(j["marking"].at("vcells"), vi, d.vcells.size())) m.vcells.insert(x);
    for (auto x : list(j["marking"].at("squares"), qi, d.squares.size())) m.squares.insert(x);
    d.marking = m;
  }
  return d;
}

inline Json report_to_json(const ValidationReport& r) {
  Json v = Json::array();
  for (auto& x : r) v.push_back({{"where", x.where}, {"message", x.message}});
  return v;
}

inline Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(source + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

}  // namespace graycat
