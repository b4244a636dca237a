// Command-line front end: scenarios, property suites and direct access to the operators.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dgal/dist.hpp"
#include "dgal/errors.hpp"
#include "dgal/expr.hpp"
#include "dgal/galois.hpp"
#include "dgal/scenarios.hpp"
#include "json.hpp"

using namespace dgal;
using json = nlohmann::ordered_json;

namespace {

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Usage("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Usage(path + ": " + e.what());
  }
}

JetContext context_of(const json& j, int q) {
  return {j.value("n", 1), j.value("m", 1), j.value("q", q), j.value("p", 0)};
}

// Components are keyed "k" or "k_dirs", e.g. "2_12" for the 12-derivative of component 2.
JetSection section_of(const json& j) {
  std::string over = j.value("over", "source");
  if (over != "source" && over != "target") throw Usage("over must be source or target");
  JetSection s(j.at("dim").get<int>(), j.at("order").get<int>(), over == "source" ? Base::Source : Base::Target);
  for (const auto& [key, value] : j.at("components").items()) {
    auto us = key.find('_');
    int k = std::stoi(key.substr(0, us));
    std::vector<int> dirs;
    if (us != std::string::npos)
      for (char c : key.substr(us + 1)) dirs.push_back(c - '0');
    s.set(k, dirs, parse_expr(value.get<std::string>()));
  }
  return s;
}

json section_json(const JetSection& s) {
  json comps = json::object();
  for (const auto& [key, v] : s.components()) {
    if (v.is_zero()) continue;
    std::string dirs = key.second.to_string();
    comps[std::to_string(key.first) + (dirs.empty() ? "" : "_" + dirs)] = v.to_string();
  }
  return {{"dim", s.dim()}, {"order", s.order()}, {"over", s.over() == Base::Source ? "source" : "target"},
          {"components", comps}};
}

VectorField field_of(const json& j) {
  std::map<Var, RatFunc> m;
  for (const auto& [v, c] : j.items()) m[Var::parse(v)] = parse_expr(c.get<std::string>());
  return VectorField(m);
}

std::vector<VectorField> fields_of(const json& j) {
  std::vector<VectorField> out;
  for (const auto& f : j) out.push_back(field_of(f));
  return out;
}

json fields_json(const std::vector<VectorField>& fs) {
  json out = json::array();
  for (const auto& f : fs) out.push_back(f.to_string());
  return out;
}

std::vector<Var> vars_of(const json& j) {
  std::vector<Var> out;
  for (const auto& v : j) out.push_back(Var::parse(v.get<std::string>()));
  return out;
}

UPoly poly_over(const std::string& text, const FieldPtr& f, const std::string& gen) {
  RatFunc e = parse_expr(text);
  if (!e.den().is_constant()) throw Usage("expected a polynomial: " + text);
  std::vector<Var> gens;
  if (f) gens.push_back(Var::parse(gen));
  return to_upoly(e.num(), Var::parse("y"), f, gens) * NFElem(f, Rat(1) / e.den().constant_value());
}

// Output: JSON objects go to stdout as-is; text renders key: value lines.
void emit(const json& j, bool as_json) {
  if (as_json) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  for (const auto& [k, v] : j.items()) {
    if (v.is_array()) {
      std::cout << k << ":\n";
      for (const auto& e : v) std::cout << "  " << (e.is_string() ? e.get<std::string>() : e.dump()) << "\n";
    } else {
      std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

int emit_report(const Report& r, bool as_json) {
  if (as_json)
    std::cout << r.to_json().dump(2) << "\n";
  else
    std::cout << r.to_text();
  return r.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact differential Galois toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  std::uint64_t seed = 42;
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", seed, "random seed for property suites");

  int status = 0;
  auto as_json = [&] { return format == "json"; };

  // scenario list | run
  auto* scenario = app.add_subcommand("scenario", "paper scenarios");
  scenario->require_subcommand(1);
  auto* list = scenario->add_subcommand("list", "list scenario ids");
  list->callback([&] {
    json out = json::array();
    for (const auto& s : list_scenarios()) {
      if (as_json())
        out.push_back({{"id", s.id}, {"anchor", s.anchor}, {"summary", s.summary}});
      else
        std::cout << s.id << "  " << s.anchor << "  " << s.summary << "\n";
    }
    if (as_json()) std::cout << out.dump(2) << "\n";
  });
  auto* run = scenario->add_subcommand("run", "run one scenario, or all");
  std::string id;
  bool run_json = false;
  run->add_option("id", id, "scenario id, or 'all'")->required();
  run->add_flag("--json", run_json, "JSON report");
  run->callback([&] {
    bool j = run_json || as_json();
    if (id != "all") {
      status = emit_report(run_scenario(id), j);
      return;
    }
    json all = json::array();
    for (const auto& s : list_scenarios()) {
      Report r = run_scenario(s.id);
      status = std::max(status, r.passed() ? 0 : 1);
      if (j)
        all.push_back(r.to_json());
      else
        std::cout << r.to_text();
    }
    if (j) std::cout << all.dump(2) << "\n";
  });

  // props
  auto* props = app.add_subcommand("props", "randomized identity suites");
  int trials = 100;
  props->add_option("--seed", seed, "random seed");
  props->add_option("--trials", trials, "trials per suite")->check(CLI::PositiveNumber);
  props->callback([&] { status = emit_report(run_property_suites(seed, trials), as_json()); });

  // eval
  auto* eval = app.add_subcommand("eval", "canonical form and total derivatives");
  std::string expr;
  int dx = 0, n = 1, m = 1, q = 8;
  eval->add_option("--expr", expr, "rational expression in jet variables")->required();
  eval->add_option("--dx", dx, "apply d_i for this direction");
  eval->add_option("--n", n, "independent variables");
  eval->add_option("--m", m, "dependent variables");
  eval->callback([&] {
    RatFunc f = parse_expr(expr);
    json out{{"expr", f.to_string()}};
    if (dx > 0) out["d_x"] = total_derivative(f, dx, {n, m, q, 0}).to_string();
    emit(out, as_json());
  });

  // prolong
  auto* prolong = app.add_subcommand("prolong", "prolong a vector field or jet section");
  std::string file, kind = "vertical";
  int order = 1;
  prolong->add_option("--file", file, "JSON input")->required();
  prolong->add_option("--order", order, "jet order");
  prolong->add_option("--kind", kind, "vertical|horizontal|sharp|flat")
      ->check(CLI::IsMember({"vertical", "horizontal", "sharp", "flat"}));
  prolong->callback([&] {
    json in = read_json(file);
    JetContext ctx = context_of(in, order);
    VectorField out;
    if (kind == "vertical") {
      out = prolong_vertical(field_of(in.at("field")), order, ctx);
    } else if (kind == "horizontal") {
      std::vector<RatFunc> xi;
      for (int i = 1; i <= ctx.n; ++i) xi.push_back(field_of(in.at("field")).coefficient(Var::source(i)));
      out = flat(JetSection::holonomic(xi, order, Base::Source), ctx);
    } else {
      JetSection s = section_of(in.at("section"));
      out = kind == "sharp" ? sharp(s, ctx) : flat(s, ctx);
    }
    emit({{"field", out.to_string()}}, as_json());
  });

  // bracket
  auto* bracket = app.add_subcommand("bracket", "algebroid bracket of two sections");
  std::string fa, fb;
  bracket->add_option("--a", fa, "first section file")->required();
  bracket->add_option("--b", fb, "second section file")->required();
  bracket->add_option("--order", order, "truncate both sections to this order");
  bracket->callback([&] {
    JetSection a = section_of(read_json(fa)), b = section_of(read_json(fb));
    if (bracket->count("--order")) {
      a = a.truncated(order);
      b = b.truncated(order);
    }
    emit(section_json(algebroid_bracket(a, b)), as_json());
  });

  // spencer
  auto* spen = app.add_subcommand("spencer", "Spencer operator of a section");
  spen->add_option("--file", file, "section file")->required();
  spen->callback([&] {
    JetSection s = section_of(read_json(file));
    SpencerImage d = spencer(s);
    json comps = json::object();
    for (int k = 1; k <= s.dim(); ++k)
      for (const auto& mu : MultiIndex::up_to(s.dim(), s.order() - 1))
        for (int i = 1; i <= s.dim(); ++i) {
          const RatFunc& v = d.at(k, mu, i);
          if (!v.is_zero()) comps[std::to_string(k) + (mu.order() ? "_" + mu.to_string() : "") + ";" + std::to_string(i)] = v.to_string();
        }
    emit({{"zero", d.is_zero()}, {"components", comps}}, as_json());
  });

  // dist
  auto* dist = app.add_subcommand("dist", "distributions on jet space");
  dist->require_subcommand(1);
  std::string dfile;
  auto dist_cmd = [&](const char* name, const char* help, auto body) {
    auto* c = dist->add_subcommand(name, help);
    c->add_option("--file", dfile, "JSON with fields, against, expr, relations, ansatz")->required();
    c->callback([&, body] {
      json in = read_json(dfile);
      body(in, Distribution{fields_of(in.at("fields")), in.value("label", "")});
    });
  };
  dist_cmd("rank", "generic rank and freeness certificate", [&](const json& in, const Distribution& d) {
    FreenessReport r = freeness_probe(d, in.value("count", static_cast<int>(d.generators.size())));
    emit({{"rank", r.rank},
          {"required", r.required},
          {"free", r.free},
          {"certificate", r.certificate ? r.certificate->to_string() : "none"}},
         as_json());
  });
  dist_cmd("involutive", "Frobenius involutivity", [&](const json&, const Distribution& d) {
    InvolutivityResult r = is_involutive_frobenius(d);
    json out{{"involutive", r.involutive}};
    if (r.witness) out["witness"] = "[" + std::to_string(r.left) + ", " + std::to_string(r.right) + "] = " + r.witness->to_string();
    emit(out, as_json());
    status = r.involutive ? 0 : 1;
  });
  dist_cmd("commute", "pairwise brackets with another distribution", [&](const json& in, const Distribution& d) {
    auto br = commutes(d, {fields_of(in.at("against")), ""});
    emit({{"commute", all_zero(br)}, {"brackets", fields_json(br)}}, as_json());
    status = all_zero(br) ? 0 : 1;
  });
  dist_cmd("commutant", "degree-bounded commutant search", [&](const json& in, const Distribution& d) {
    const json& a = in.at("ansatz");
    Ansatz ans{vars_of(a.at("support")), vars_of(a.at("coefficients")), a.value("degree", 1)};
    emit({{"basis", fields_json(commutant_search(d, ans))}}, as_json());
  });
  dist_cmd("invariant", "test an invariant", [&](const json& in, const Distribution& d) {
    InvarianceResult r = is_invariant(d, parse_expr(in.at("expr").get<std::string>()));
    json res = json::array();
    for (const auto& v : r.residuals) res.push_back(v.to_string());
    emit({{"invariant", r.invariant}, {"residuals", res}}, as_json());
    status = r.invariant ? 0 : 1;
  });
  dist_cmd("tensor-const", "constant of the bar-extended distribution", [&](const json& in, const Distribution& d) {
    Distribution ext{{}, d.label};
    for (const auto& g : d.generators) ext.generators.push_back(in.value("extend", true) ? bar_extend(g) : g);
    Relations rel;
    if (in.contains("relations"))
      for (const auto& [v, e] : in.at("relations").items()) rel.emplace_back(Var::parse(v), parse_expr(e.get<std::string>()));
    TensorConstantResult r = is_tensor_constant(parse_expr(in.at("expr").get<std::string>()), ext, rel);
    json res = json::array();
    for (const auto& v : r.residuals) res.push_back(v.to_string());
    emit({{"constant", r.constant}, {"residuals", res}}, as_json());
    status = r.constant ? 0 : 1;
  });

  // galois
  auto* galois = app.add_subcommand("galois", "number fields and rational group actions");
  galois->require_subcommand(1);
  std::string poly, over, gen = "t";
  std::vector<std::string> maps;

  auto* factor = galois->add_subcommand("factor", "factor a polynomial in y");
  factor->add_option("--poly", poly, "polynomial in y")->required();
  factor->add_option("--over", over, "minimal polynomial (in y) of an extension generator");
  factor->add_option("--gen", gen, "name of that generator in --poly");
  factor->callback([&] {
    FieldPtr f = over.empty() ? nullptr : NumberField::make(poly_over(over, nullptr, gen), gen);
    Factorization fz = f ? factor_ext(poly_over(poly, f, gen)) : factor_q(poly_over(poly, nullptr, gen));
    json facs = json::array();
    for (const auto& fac : fz.factors)
      facs.push_back(fac.poly.to_string() + (fac.multiplicity > 1 ? " ^" + std::to_string(fac.multiplicity) : ""));
    emit({{"unit", fz.unit.to_string()}, {"factors", facs}}, as_json());
  });

  auto* split = galois->add_subcommand("split", "split L (x)_Q L for L = Q[y]/(P)");
  split->add_option("--minpoly", poly, "irreducible P in y")->required();
  split->callback([&] {
    FieldPtr l = NumberField::make(poly_over(poly, nullptr, gen), "eta");
    SplitResult s = split_tensor(l);
    json facs = json::array(), roots = json::array();
    for (const auto& p : s.factors) facs.push_back(p.to_string());
    for (const auto& r : s.roots) roots.push_back(r.to_string());
    emit({{"factors", facs}, {"roots", roots}, {"galois", is_galois(l)}}, as_json());
  });

  auto* group = galois->add_subcommand("group", "closure table of rational maps in y");
  group->add_option("--map", maps, "rational map, repeatable")->required();
  group->callback([&] {
    std::vector<RatMap> els;
    for (const auto& t : maps) els.push_back(to_ratmap(parse_expr(t), Var::parse("y")));
    GroupTable g = verify_group(els);
    emit({{"order", g.order}, {"identity", g.identity}, {"cayley", g.cayley}, {"inverse", g.inverse}}, as_json());
  });

  auto* disc = galois->add_subcommand("disc", "discriminant of a monic cubic");
  disc->add_option("--poly", poly, "monic cubic in y")->required();
  disc->callback([&] {
    UPoly p = poly_over(poly, nullptr, gen);
    if (p.degree() != 3 || p.lead() != NFElem(1)) throw Usage("expected a monic cubic");
    Rat w1 = -p.coeff(2).rational(), w2 = p.coeff(1).rational(), w3 = -p.coeff(0).rational();
    emit({{"discriminant", cubic_discriminant(w1, w2, w3).get_str()}}, as_json());
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Usage& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownScenario& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: bad input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return status;
}
