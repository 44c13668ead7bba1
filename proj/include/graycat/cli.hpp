#pragma once

#include <CLI11.hpp>

#include <cctype>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "acceptance.hpp"
#include "corpus.hpp"
#include "dot.hpp"
#include "io.hpp"

namespace graycat {

struct RunConfig {
  std::size_t budget = 20'000'000;
  Coeff cap = 1;
  std::string format;  // empty: the command's default
  std::uint64_t seed = 20240601;
};

// Thrown by a command whose check did not pass; its output has already been written.
struct VerificationFailed : Error {
  VerificationFailed() : Error("verification failed") {}
};

namespace cli {

inline bool looks_like_notation(const std::string& s) {
  return !s.empty() && (s[0] == '[' || (s[0] == 'D' && s.size() > 1 && std::isdigit(static_cast<unsigned char>(s[1]))));
}

inline std::string kind_of(const Json& j) {
  if (j.is_array() || j.is_string()) return "globular_sum";
  if (!j.is_object()) throw InvalidInput("expected a JSON object");
  if (j.contains("kind")) {
    std::string k = j["kind"].get<std::string>();
    return k == "double_category" ? "double" : k;
  }
  if (j.contains("basis")) return "adc";
  if (j.contains("cells")) return "category";
  if (j.contains("map")) return "functor";
  if (j.contains("squares")) return "double";
  if (j.contains("notation") || j.contains("tree")) return "globular_sum";
  throw InvalidInput("cannot tell what kind of value this JSON describes");
}

inline DoubleCat checked_double(const Json& j) {
  DoubleCat d = double_from_json(j);
  auto bad = validate_double(d);
  if (!bad.empty()) throw InvalidInput("double category: " + bad.front().where + ": " + bad.front().message);
  return d;
}

inline GlobularSum load_sum(const std::string& arg) {
  if (auto s = named_sum(arg)) return *s;
  if (looks_like_notation(arg)) return parse_sum(arg);
  Json j = read_json_file(arg);
  if (kind_of(j) != "globular_sum") throw InvalidInput(arg + ": not a globular sum");
  return sum_from_json(j);
}

inline Adc load_adc(const std::string& arg) {
  if (auto a = named_adc(arg)) return *a;
  if (looks_like_notation(arg)) return to_adc(parse_sum(arg));
  Json j = read_json_file(arg);
  std::string k = kind_of(j);
  if (k == "adc") return adc_from_json(j);
  if (k == "globular_sum") return to_adc(sum_from_json(j));
  throw InvalidInput(arg + ": expected an augmented directed complex, found " + k);
}

inline StrictCat load_category(const std::string& arg) {
  if (auto c = named_category(arg)) return *c;
  Json j = read_json_file(arg);
  if (kind_of(j) != "category") throw InvalidInput(arg + ": not a category");
  return category_from_json(j);
}

inline CatFunctor load_functor(const std::string& arg) {
  Json j = read_json_file(arg);
  if (kind_of(j) != "functor") throw InvalidInput(arg + ": not a functor");
  return functor_from_json(j);
}

// A double category file, or a 2-category standing for its double category of squares.
inline DoubleCat load_double(const std::string& arg) {
  if (auto c = named_category(arg)) return sq2(*c);
  Json j = read_json_file(arg);
  std::string k = kind_of(j);
  if (k == "double") return checked_double(j);
  if (k == "category") return sq2(category_from_json(j));
  throw InvalidInput(arg + ": expected a double category or a category, found " + k);
}

// One argument: the truncation pair of a 2-category. Two: a 1-category inside a 2-category,
// matched by labels.
inline Filtration2 load_filtration(const std::vector<std::string>& args) {
  if (args.size() == 1) return truncation_pair(load_category(args[0]));
  if (args.size() == 2) return filtration_by_labels(load_category(args[0]), load_category(args[1]));
  throw InvalidInput("expected one category or a pair of categories");
}

inline std::string sizes_string(const std::vector<std::size_t>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return "(" + s + ")";
}

inline std::string adc_text(const Adc& a) {
  std::ostringstream o;
  o << "sizes " << sizes_string(a.sizes()) << "\n";
  for (auto e : a.elements()) {
    o << a.id(e) << " (" << e.degree << ")";
    if (e.degree == 0)
      o << " aug " << a.augmentation(e.index);
    else
      o << " d = " << chain_string(a, e.degree - 1, a.boundary(e.degree, e.index));
    o << "\n";
  }
  return o.str();
}

inline std::string category_text(const StrictCat& c) {
  std::ostringstream o;
  o << "dim " << c.dim << ", cells";
  for (int k = 0; k <= c.dim; ++k) o << " " << c.size(k);
  o << "\n";
  for (int k = 1; k <= c.dim; ++k)
    for (std::size_t x = 0; x < c.size(k); ++x)
      if (!c.is_identity(k, x))
        o << c.label(k, x) << ": " << c.label(k - 1, c.source(k, x)) << " -> " << c.label(k - 1, c.target(k, x)) << "\n";
  return o.str();
}

inline std::string double_text(const DoubleCat& d) {
  std::ostringstream o;
  o << d.objects.size() << " objects, " << d.vcells.size() << " vertical cells, " << d.hcells.size()
    << " horizontal cells, " << d.squares.size() << " squares\n";
  for (auto& s : d.squares)
    o << s.label << ": top " << d.hcells[s.top].label << ", bottom " << d.hcells[s.bottom].label << ", left "
      << d.vcells[s.left].label << ", right " << d.vcells[s.right].label << "\n";
  return o.str();
}

inline std::string functor_text(const CatFunctor& f) {
  std::ostringstream o;
  for (int k = 0; k <= f.source->dim; ++k)
    for (std::size_t x = 0; x < f.source->size(k); ++x)
      if (k == 0 || !f.source->is_identity(k, x)) o << f.source->label(k, x) << " |-> " << f.target->label(k, f(k, x)) << "\n";
  return o.str();
}

inline std::string ok_text(bool ok) { return ok ? "OK" : "FAILED"; }

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(int argc, const char* const* argv) {
    CLI::App app{"Strict higher categories, Gray tensors and double categories of squares", "graycat"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--budget", cfg_.budget, "search node budget")->envname("GRAYCAT_BUDGET")->check(CLI::PositiveNumber);
    app.add_option("--cap", cfg_.cap, "coefficient cap for cell enumeration")->envname("GRAYCAT_CAP")->check(CLI::PositiveNumber);
    app.add_option("--format", cfg_.format, "json, text or dot")
        ->envname("GRAYCAT_FORMAT")
        ->check(CLI::IsMember({"json", "text", "dot"}));
    app.add_option("--seed", cfg_.seed, "seed for randomized corpus sampling")->envname("GRAYCAT_SEED");
    define(app);
    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      int code = app.exit(e, out_, err_);
      return code == 0 ? 0 : 2;
    }
    try {
      action_();
      return 0;
    } catch (const VerificationFailed&) {
      return 1;
    } catch (const BudgetExceeded& e) {
      err_ << "error: " << e.what() << " (raise --budget)\n";
      return 2;
    } catch (const InvalidInput& e) {
      err_ << "error: " << e.what() << "\n";
      return 2;
    } catch (const nlohmann::json::exception& e) {
      err_ << "error: unexpected JSON structure: " << e.what() << "\n";
      return 2;
    }
  }

 private:
  std::ostream& out_;
  std::ostream& err_;
  RunConfig cfg_;
  std::function<void()> action_;

  SearchOptions search() const { return {cfg_.budget, static_cast<std::size_t>(-1)}; }
  std::string format(const std::string& fallback) const { return cfg_.format.empty() ? fallback : cfg_.format; }
  void no_dot(const std::string& fmt) const {
    if (fmt == "dot") throw InvalidInput("this command has no DOT rendering");
  }
  void print_json(const Json& j) { out_ << j.dump(2) << "\n"; }
  void verdict(bool ok) {
    if (!ok) throw VerificationFailed();
  }

  void emit_adc(const Adc& a) {
    std::string f = format("json");
    if (f == "json") print_json(adc_to_json(a));
    else if (f == "dot") out_ << export_dot(a);
    else out_ << adc_text(a);
  }
  void emit_category(const StrictCat& c) {
    std::string f = format("json");
    no_dot(f);
    if (f == "json") print_json(category_to_json(c));
    else out_ << category_text(c);
  }
  void emit_double(const DoubleCat& d) {
    std::string f = format("json");
    if (f == "json") print_json(double_to_json(d));
    else if (f == "dot") out_ << export_dot(d);
    else out_ << double_text(d);
  }
  // Reports are text lines by default; JSON on request.
  void emit_report(const Json& j, const std::string& text) {
    std::string f = format("text");
    no_dot(f);
    if (f == "json") print_json(j);
    else out_ << text;
  }

  void define(CLI::App& app) {
    auto strs = std::make_shared<std::vector<std::string>>();
    auto str = std::make_shared<std::string>();
    auto n = std::make_shared<int>(1);
    auto m = std::make_shared<int>(0);
    auto flag = std::make_shared<bool>(false);

    auto* c = app.add_subcommand("validate", "check an ADC, globular sum, category, functor or double category file");
    c->add_option("input", *str, "JSON file or named corpus object")->required();
    c->callback([=, this] { action_ = [=, this] { validate_cmd(*str); }; });

    c = app.add_subcommand("tensor", "Gray tensor product of ADCs");
    inputs(c, *strs, 2, 4, "two or more ADCs or globular sums");
    c->callback([=, this] {
      action_ = [=, this] {
        Adc t = load_adc((*strs)[0]);
        for (std::size_t i = 1; i < strs->size(); ++i) t = tensor(t, load_adc((*strs)[i]));
        emit_adc(t);
      };
    });

    auto max_dim = std::make_shared<int>(2);
    c = app.add_subcommand("nu", "count the cells of the associated strict category");
    c->add_option("input", *str)->required();
    c->add_option("--max-dim", *max_dim, "highest cell dimension")->check(CLI::NonNegativeNumber);
    c->add_flag("--cells", *flag, "list the cells");
    c->callback([=, this] { action_ = [=, this] { nu_cmd(*str, *max_dim, *flag); }; });

    c = app.add_subcommand("basis-check", "unital, atomic and loop-free basis conditions");
    c->add_option("input", *str)->required();
    c->callback([=, this] { action_ = [=, this] { basis_cmd(*str); }; });

    c = app.add_subcommand("p-s-verify", "check that s is a section of p");
    c->add_option("--A,input", *str, "globular sum or ADC")->required();
    c->add_option("--n", *n)->required()->check(CLI::PositiveNumber);
    c->add_option("--m", *m, "the second index; omitted means the one-step maps")->check(CLI::PositiveNumber);
    c->callback([=, this] { action_ = [=, this] { ps_cmd(*str, *n, *m); }; });

    auto mode = std::make_shared<std::string>("tensor");
    c = app.add_subcommand("decompose", "suspension decompositions as colimits");
    inputs(c, *strs, 1, 2, "two globular sums (tensor mode) or one (colimit modes)");
    c->add_option("--mode", *mode)->check(CLI::IsMember({"tensor", "suspension", "cosuspension"}));
    c->add_option("--n", *n, "index for the colimit modes")->check(CLI::PositiveNumber);
    c->callback([=, this] { action_ = [=, this] { decompose_cmd(*strs, *mode, *n); }; });

    auto which = std::make_shared<std::string>("op");
    c = app.add_subcommand("dualize", "reverse cells in odd (op), even (co) or all degrees");
    c->add_option("input", *str)->required();
    c->add_option("--degrees", *which)->check(CLI::IsMember({"op", "co", "all"}));
    c->callback([=, this] { action_ = [=, this] { dualize_cmd(*str, *which); }; });

    c = app.add_subcommand("spine", "spine presentation of a globular sum");
    c->add_option("input", *str)->required();
    c->callback([=, this] { action_ = [=, this] { spine_cmd(*str); }; });

    c = app.add_subcommand("functors", "enumerate strict functors between two categories");
    inputs(c, *strs, 2, 2, "");
    c->add_flag("--list", *flag, "print every functor");
    c->callback([=, this] { action_ = [=, this] { functors_cmd(*strs, *flag); }; });

    c = app.add_subcommand("ffsurj", "n-surjectivity and n-full faithfulness of functors");
    inputs(c, *strs, 1, 2, "a functor file, or two categories for every functor between them");
    c->add_option("--n", *n)->check(CLI::NonNegativeNumber);
    c->callback([=, this] { action_ = [=, this] { ffsurj_cmd(*strs, *n); }; });

    c = app.add_subcommand("factorize", "factor a functor as n-surjective then (n+1)-fully faithful");
    c->add_option("input", *str, "functor file")->required();
    c->add_option("--n", *n)->check(CLI::NonNegativeNumber);
    c->callback([=, this] { action_ = [=, this] { factorize_cmd(*str, *n); }; });

    c = app.add_subcommand("companions", "companion triples of every vertical cell");
    c->add_option("input", *str, "double category file or 2-category")->required();
    c->callback([=, this] { action_ = [=, this] { companions_cmd(*str); }; });

    c = app.add_subcommand("bicartesian", "bicartesian squares");
    c->add_option("input", *str)->required();
    c->callback([=, this] { action_ = [=, this] { bicartesian_cmd(*str); }; });

    auto marking = std::make_shared<std::string>("auto");
    c = app.add_subcommand("fibration-check", "lifting conditions of a marked double category");
    c->add_option("input", *str)->required();
    c->add_option("--marking", *marking, "auto uses the file's marking, else companions")
        ->check(CLI::IsMember({"auto", "companion", "full", "trivial"}));
    c->callback([=, this] { action_ = [=, this] { fibration_cmd(*str, *marking); }; });

    c = app.add_subcommand("sq2", "double category of squares of a 2-category");
    c->add_option("input", *str)->required();
    c->callback([=, this] { action_ = [=, this] { emit_double(sq2(load_category(*str))); }; });

    c = app.add_subcommand("sqpair", "double category of squares of a filtration");
    inputs(c, *strs, 1, 2, "a 2-category, or a 1-category followed by a 2-category");
    c->callback([=, this] { action_ = [=, this] { emit_double(sq_pair(load_filtration(*strs))); }; });

    c = app.add_subcommand("cech", "a level of the Cech nerve of a filtration");
    inputs(c, *strs, 1, 2, "");
    c->add_option("--level", *n)->required()->check(CLI::NonNegativeNumber);
    c->add_flag("--segal", *flag, "check the Segal map at this level instead");
    c->callback([=, this] { action_ = [=, this] { cech_cmd(*strs, *n, *flag); }; });

    auto k2 = std::make_shared<int>(1);
    c = app.add_subcommand("cube", "count functors out of the tensor of two intervals");
    c->add_option("input", *str)->required();
    c->add_option("--k1", *n)->check(CLI::NonNegativeNumber);
    c->add_option("--k2", *k2)->check(CLI::NonNegativeNumber);
    c->callback([=, this] { action_ = [=, this] { cube_cmd(*str, *n, *k2); }; });

    c = app.add_subcommand("verify-image", "accompanied and complete checks on a double category of squares");
    c->add_option("input", *str, "2-category, or a double category file")->required();
    c->callback([=, this] { action_ = [=, this] { image_cmd(*str); }; });

    c = app.add_subcommand("verify-ff", "functors against double functors of squares");
    inputs(c, *strs, 2, 2, "");
    c->callback([=, this] { action_ = [=, this] { ff_cmd(*strs); }; });

    c = app.add_subcommand("acceptance", "run the acceptance suite");
    c->callback([=, this] { action_ = [=, this] { acceptance_cmd(); }; });
  }

  // Separate string positionals, so bracket notation such as [1] is not split as a list.
  static void inputs(CLI::App* c, std::vector<std::string>& out, int lo, int hi, const std::string& desc) {
    auto slots = std::make_shared<std::vector<std::string>>(hi);
    for (int i = 0; i < hi; ++i) {
      auto* o = c->add_option("input" + std::to_string(i + 1), (*slots)[i], i == 0 ? desc : "");
      if (i < lo) o->required();
    }
    c->parse_complete_callback([slots, &out] {
      out.clear();
      for (auto& x : *slots)
        if (!x.empty()) out.push_back(x);
    });
  }

  void validate_cmd(const std::string& arg) {
    Json j;
    std::string kind;
    if (named_category(arg)) {
      j = category_to_json(*named_category(arg));
    } else if (named_adc(arg)) {
      j = adc_to_json(*named_adc(arg));
    } else if (looks_like_notation(arg)) {
      j = sum_to_json(parse_sum(arg));
    } else {
      j = read_json_file(arg);
    }
    kind = kind_of(j);
    Json issues = Json::array();
    std::string text;
    try {
      if (kind == "adc") {
        Adc a = adc_from_json(j);
        issues = report_to_json(validate(a));
        text = "sizes " + sizes_string(a.sizes()) + "\n";
      } else if (kind == "globular_sum") {
        GlobularSum s = sum_from_json(j);
        text = to_string(s) + "\n";
      } else if (kind == "category") {
        StrictCat c = category_from_json(j);
        text = category_text(c);
      } else if (kind == "functor") {
        CatFunctor f = functor_from_json(j);
        text = functor_text(f);
      } else if (kind == "double") {
        DoubleCat d = double_from_json(j);
        issues = report_to_json(validate_double(d));
        text = double_text(d);
      } else {
        throw InvalidInput("unknown kind '" + kind + "'");
      }
    } catch (const InvalidInput& e) {
      if (kind != "adc" && kind != "globular_sum" && kind != "category" && kind != "functor" && kind != "double") throw;
      issues.push_back({{"where", kind}, {"message", e.what()}});
    }
    bool ok = issues.empty();
    std::string t = kind + ": " + ok_text(ok) + "\n";
    if (ok) t += text;
    for (auto& i : issues) t += i["where"].get<std::string>() + ": " + i["message"].get<std::string>() + "\n";
    emit_report({{"kind", kind}, {"valid", ok}, {"violations", issues}}, t);
    verdict(ok);
  }

  void nu_cmd(const std::string& arg, int max_dim, bool list) {
    Adc a = load_adc(arg);
    NuOptions opt{cfg_.cap, cfg_.budget};
    auto cells = nu_cells_by_dim(a, max_dim, opt);
    auto counts = nondegenerate_counts(cells);
    Json jc = Json::array();
    std::ostringstream t;
    t << "nondegenerate cells " << sizes_string(counts) << "\n";
    if (list) {
      for (int d = 0; d <= max_dim; ++d)
        for (auto& z : cells[d]) {
          Json rows = Json::array();
          t << "dim " << d << ":";
          for (int i = 0; i <= d; ++i) {
            std::string lo = chain_string(a, i, z.get(i, false)), hi = chain_string(a, i, z.get(i, true));
            rows.push_back({{"minus", lo}, {"plus", hi}});
            t << " [" << lo << " | " << hi << "]";
          }
          t << "\n";
          jc.push_back({{"dim", d}, {"tables", rows}});
        }
    }
    Json j{{"kind", "nu_counts"}, {"cap", cfg_.cap}, {"counts", counts}};
    if (list) j["cells"] = jc;
    emit_report(j, t.str());
  }

  void basis_cmd(const std::string& arg) {
    Adc a = load_adc(arg);
    BasisReport r = check_basis_conditions(a);
    std::string t = "unital: " + ok_text(r.unital) + "\natomic: " + ok_text(r.atomic) +
                    "\nloop-free: " + ok_text(r.loop_free) + "\nloop-free (per degree): " + ok_text(r.steiner_loop_free) + "\n";
    emit_report({{"kind", "basis_report"},
                 {"unital", r.unital},
                 {"atomic", r.atomic},
                 {"loop_free", r.loop_free},
                 {"steiner_loop_free", r.steiner_loop_free},
                 {"ok", r.all()}},
                t);
    verdict(r.all());
  }

  void ps_cmd(const std::string& arg, int n, int m) {
    Adc a = load_adc(arg);
    SectionReport r;
    if (m == 0) {
      r = check_section(p_map(a, n), s_map(a, n));
    } else {
      auto [p, s] = p_s_nm(a, n, m);
      r = check_section(p, s);
    }
    std::string t = "p chain map: " + ok_text(r.p_chain_map) + "\ns chain map: " + ok_text(r.s_chain_map) +
                    "\nsection: " + ok_text(r.section) + "\nidempotent: " + ok_text(r.idempotent) + "\n";
    emit_report({{"kind", "section_report"},
                 {"n", n},
                 {"m", m == 0 ? Json(nullptr) : Json(m)},
                 {"p_chain_map", r.p_chain_map},
                 {"s_chain_map", r.s_chain_map},
                 {"section", r.section},
                 {"idempotent", r.idempotent}},
                t);
    verdict(r.ok());
  }

  void decompose_cmd(const std::vector<std::string>& args, const std::string& mode, int n) {
    DecompositionWitness w;
    if (mode == "tensor") {
      if (args.size() != 2) throw InvalidInput("tensor mode needs two inputs");
      w = verify_susp_tensor_decomposition(load_adc(args[0]), load_adc(args[1]));
    } else {
      if (args.size() != 1) throw InvalidInput(mode + " mode needs one input");
      Adc a = load_adc(args[0]);
      w = mode == "suspension" ? verify_susp_colimit(a, n) : verify_cosuspension(a, n);
    }
    std::string f = format("text");
    if (f == "dot") {
      out_ << export_dot(w);
    } else if (f == "json") {
      print_json({{"kind", "decomposition"},
                  {"mode", mode},
                  {"ok", w.ok},
                  {"failure", w.failure},
                  {"pieces", w.legs.size()},
                  {"colimit", adc_to_json(w.colimit)},
                  {"target", adc_to_json(w.target)}});
    } else {
      out_ << "pieces: " << w.legs.size() << "\ncolimit " << sizes_string(w.colimit.sizes()) << "\ntarget "
           << sizes_string(w.target.sizes()) << "\ndecomposition: " << ok_text(w.ok) << "\n";
      if (!w.ok) out_ << w.failure << "\n";
    }
    verdict(w.ok);
  }

  void dualize_cmd(const std::string& arg, const std::string& which) {
    Adc a = load_adc(arg);
    int top = std::max(a.dim(), 0);
    emit_adc(dualize(a, which == "op" ? odd_degrees(top) : which == "co" ? even_degrees(top) : all_degrees(top)));
  }

  void spine_cmd(const std::string& arg) {
    GlobularSum s = load_sum(arg);
    SpinePresentation sp = spine(s);
    emit_report({{"kind", "spine"}, {"sum", sum_to_json(s)}, {"spine", to_string(sp)}},
                to_string(s) + "\nspine: " + to_string(sp) + "\n");
  }

  void functors_cmd(const std::vector<std::string>& args, bool list) {
    StrictCat c = load_category(args[0]), d = load_category(args[1]);
    auto fs = enumerate_functors(c, d, search());
    std::string f = format(list ? "json" : "text");
    no_dot(f);
    if (f == "json") {
      Json j{{"kind", "functor_count"}, {"count", fs.size()}};
      if (list) {
        Json all = Json::array();
        for (auto& x : fs) all.push_back(functor_to_json(x)["map"]);
        j["functors"] = all;
      }
      print_json(j);
    } else {
      out_ << "functors: " << fs.size() << "\n";
      if (list)
        for (std::size_t i = 0; i < fs.size(); ++i) out_ << "# " << i << "\n" << functor_text(fs[i]);
    }
  }

  Json ffsurj_json(const CatFunctor& f, int n, std::string& text, bool& consistent) {
    bool s = is_n_surjective(f, n), l = surjectivity_by_lifting(f, n), ff = is_n_fully_faithful(f, n);
    consistent = consistent && s == l;
    text += std::to_string(n) + "-surjective: " + (s ? "yes" : "no") + ", by lifting: " + (l ? "yes" : "no") + ", " +
            std::to_string(n) + "-fully faithful: " + (ff ? "yes" : "no") + "\n";
    return {{"n_surjective", s}, {"by_lifting", l}, {"n_fully_faithful", ff}};
  }

  void ffsurj_cmd(const std::vector<std::string>& args, int n) {
    std::vector<CatFunctor> fs;
    if (args.size() == 1) fs.push_back(load_functor(args[0]));
    else fs = enumerate_functors(load_category(args[0]), load_category(args[1]), search());
    bool consistent = true;
    Json all = Json::array();
    std::string text;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (fs.size() > 1) text += "# " + std::to_string(i) + ": ";
      all.push_back(ffsurj_json(fs[i], n, text, consistent));
    }
    emit_report({{"kind", "ffsurj"}, {"n", n}, {"functors", all}, {"consistent", consistent}}, text);
    if (!consistent) err_ << "surjectivity disagrees with the lifting criterion\n";
    verdict(consistent);
  }

  void factorize_cmd(const std::string& arg, int n) {
    CatFunctor f = load_functor(arg);
    Factorization fz = factorize(f, n);
    int top = std::max(n + 1, f.source->dim);
    bool s = is_n_surjective(fz.surjection, n), ff = is_n_fully_faithful(fz.fully_faithful, n + 1);
    bool comp = compose_functors(fz.surjection, fz.fully_faithful) == raise_functor(f, top);
    bool ok = s && ff && comp;
    std::string f_ = format("json");
    no_dot(f_);
    if (f_ == "json") {
      print_json({{"kind", "factorization"},
                  {"n", n},
                  {"middle", category_to_json(*fz.surjection.target)},
                  {"surjection", functor_to_json(fz.surjection)["map"]},
                  {"fully_faithful", functor_to_json(fz.fully_faithful)["map"]},
                  {"checks", {{"n_surjective", s}, {"n_plus_one_fully_faithful", ff}, {"composite", comp}}}});
    } else {
      out_ << "middle category:\n" << category_text(*fz.surjection.target) << "first factor:\n"
           << functor_text(fz.surjection) << "second factor:\n" << functor_text(fz.fully_faithful)
           << "first factor " << n << "-surjective: " << ok_text(s) << "\nsecond factor " << n + 1
           << "-fully faithful: " << ok_text(ff) << "\ncomposite: " << ok_text(comp) << "\n";
    }
    verdict(ok);
  }

  void companions_cmd(const std::string& arg) {
    DoubleCat d = load_double(arg);
    Json all = Json::array();
    std::string text;
    bool accompanied = true;
    for (std::size_t v = 0; v < d.vcells.size(); ++v) {
      auto ts = find_companions(d, v);
      if (ts.empty()) accompanied = false;
      Json list = Json::array();
      text += d.vcells[v].label + ":";
      for (auto& t : ts) {
        list.push_back({{"companion", d.hcells[t.companion].label},
                        {"unit", d.squares[t.unit].label},
                        {"counit", d.squares[t.counit].label}});
        text += " " + d.hcells[t.companion].label + " (unit " + d.squares[t.unit].label + ", counit " +
                d.squares[t.counit].label + ")";
      }
      if (ts.empty()) text += " none";
      text += "\n";
      all.push_back({{"vcell", d.vcells[v].label}, {"triples", list}});
    }
    text += std::string("accompanied: ") + (accompanied ? "yes" : "no") + "\n";
    emit_report({{"kind", "companions"}, {"accompanied", accompanied}, {"vcells", all}}, text);
  }

  void bicartesian_cmd(const std::string& arg) {
    DoubleCat d = load_double(arg);
    Json all = Json::array();
    std::string text;
    for (std::size_t q = 0; q < d.squares.size(); ++q) {
      if (!is_bicartesian(d, q)) continue;
      bool row = is_bicartesian_pasting(d, q);
      all.push_back({{"square", d.squares[q].label}, {"single_row", row}});
      text += d.squares[q].label + (row ? "" : " (needs two rows)") + "\n";
    }
    text += std::to_string(all.size()) + " of " + std::to_string(d.squares.size()) + " squares bicartesian\n";
    emit_report({{"kind", "bicartesian"}, {"squares", all}}, text);
  }

  void fibration_cmd(const std::string& arg, const std::string& marking) {
    DoubleCat d = load_double(arg);
    if (marking == "companion" || (marking == "auto" && !d.marking)) d = companion_marking(d);
    else if (marking == "full") d = full_marking(d);
    else if (marking == "trivial") d = trivial_marking(d);
    auto bad = check_two_sided_fibration(d);
    bool ok = bad.empty();
    Json extracted = nullptr;
    std::string text = std::string("two-sided fibration: ") + ok_text(ok) + "\n";
    for (auto& v : bad) text += v.where + ": " + v.message + "\n";
    if (ok) {
      auto ts = extract_companions(d);
      extracted = Json::array();
      if (ts)
        for (auto& t : *ts) extracted.push_back({{"vcell", d.vcells[t.vcell].label}, {"companion", d.hcells[t.companion].label}});
      text += std::string("companions from marking: ") + (ts ? "recovered" : "not recovered") + "\n";
      ok = ts.has_value();
    }
    emit_report({{"kind", "fibration_report"}, {"ok", ok}, {"violations", report_to_json(bad)}, {"companions", extracted}},
                text);
    verdict(ok);
  }

  void cech_cmd(const std::vector<std::string>& args, int level, bool segal) {
    Filtration2 f = load_filtration(args);
    if (segal) {
      SegalReport r = segal_check(f, level);
      emit_report({{"kind", "segal_report"}, {"level", level}, {"functor", r.functor}, {"isomorphism", r.isomorphism},
                   {"failure", r.failure}},
                  "Segal map at level " + std::to_string(level) + ": " + ok_text(r.ok()) +
                      (r.failure.empty() ? "" : "\n" + r.failure) + "\n");
      verdict(r.ok());
      return;
    }
    emit_category(cech_level(f, level).cat);
  }

  void cube_cmd(const std::string& arg, int k1, int k2) {
    std::size_t count = cube_level(load_category(arg), k1, k2, search());
    emit_report({{"kind", "cube_level"}, {"k1", k1}, {"k2", k2}, {"count", count}}, std::to_string(count) + "\n");
  }

  void image_cmd(const std::string& arg) {
    ImageReport r = image_report(load_double(arg));
    std::string t = std::string("accompanied: ") + ok_text(r.accompanied) + "\ncomplete: " + ok_text(r.complete) +
                    "\nhorizontal cells are companions: " + ok_text(r.horizontals_are_companions) + "\n";
    for (auto& s : r.notes) t += s + "\n";
    emit_report({{"kind", "image_report"},
                 {"accompanied", r.accompanied},
                 {"complete", r.complete},
                 {"horizontals_are_companions", r.horizontals_are_companions},
                 {"notes", r.notes}},
                t);
    verdict(r.ok());
  }

  void ff_cmd(const std::vector<std::string>& args) {
    FullyFaithfulReport r = verify_sq_fully_faithful(load_category(args[0]), load_category(args[1]), search());
    std::string t = "functors: " + std::to_string(r.functors) + "\ndouble functors: " + std::to_string(r.double_functors) +
                    "\nbijection: " + ok_text(r.ok()) + "\n";
    for (auto& s : r.failures) t += s + "\n";
    emit_report({{"kind", "ff_report"},
                 {"functors", r.functors},
                 {"double_functors", r.double_functors},
                 {"injective", r.injective},
                 {"failures", r.failures},
                 {"ok", r.ok()}},
                t);
    verdict(r.ok());
  }

  // Timings go to standard error so standard output depends only on the inputs.
  void acceptance_cmd() {
    AcceptanceConfig cfg;
    cfg.seed = cfg_.seed;
    cfg.search = search();
    Json rows = Json::array();
    std::string text;
    bool ok = true;
    for (auto& c : acceptance_criteria()) {
      CriterionResult r = run_criterion(c, cfg);
      ok = ok && r.passed;
      rows.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
      text += format_result(r, false) + "\n";
      char buf[64];
      std::snprintf(buf, sizeof buf, "[%d] %.3fs (budget %.0fs)\n", r.id, r.seconds, r.budget_seconds);
      err_ << buf;
    }
    emit_report({{"kind", "acceptance"}, {"seed", cfg_.seed}, {"criteria", rows}, {"passed", ok}}, text);
    verdict(ok);
  }
};

}  // namespace cli

inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  return cli::Runner(out, err).run(argc, argv);
}

}  // namespace graycat
