// One pass/fail line per acceptance criterion; exit status 1 if any fails.
#include <algorithm>
#include <functional>
#include <iostream>

#include "dgal/dist.hpp"
#include "dgal/expr.hpp"
#include "dgal/galois.hpp"
#include "dgal/random.hpp"
#include "dgal/scenarios.hpp"

using namespace dgal;

namespace {

RatFunc rf(const char* s) { return parse_expr(s); }

VectorField field(std::initializer_list<std::pair<const char*, const char*>> entries) {
  std::map<Var, RatFunc> m;
  for (const auto& [v, c] : entries) m[Var::parse(v)] = parse_expr(c);
  return VectorField(m);
}

UPoly q(std::initializer_list<long> c) {
  std::vector<Rat> v;
  for (long x : c) v.emplace_back(x);
  return UPoly::from_rationals(v);
}

RatMap map(const char* text, const FieldPtr& f = nullptr, const std::vector<Var>& gens = {}) {
  return to_ratmap(parse_expr(text), Var::parse("y"), f, gens);
}

JetSection line(std::initializer_list<const char*> values, Base over = Base::Source) {
  JetSection s(1, static_cast<int>(values.size()) - 1, over);
  int r = 0;
  for (const char* v : values) s.set(1, std::vector<int>(r++, 1), parse_expr(v));
  return s;
}

Distribution extended(const Distribution& d) {
  Distribution out{{}, d.label};
  for (const auto& g : d.generators) out.generators.push_back(bar_extend(g));
  return out;
}

// Every assertion of the given scenario whose name starts with one of `prefixes` passed.
bool scenario_has(const std::string& id, std::initializer_list<const char*> prefixes) {
  Report r = run_scenario(id);
  for (const char* p : prefixes) {
    auto it = std::find_if(r.assertions.begin(), r.assertions.end(),
                           [&](const Assertion& a) { return a.name.rfind(p, 0) == 0; });
    if (it == r.assertions.end() || !it->passed) return false;
  }
  return true;
}

bool props_pass(std::uint64_t seed, int trials, std::initializer_list<const char*> prefixes) {
  Report r = run_property_suites(seed, trials);
  for (const char* p : prefixes) {
    bool any = false;
    for (const auto& a : r.assertions)
      if (a.name.rfind(p, 0) == 0) {
        any = true;
        if (!a.passed) return false;
      }
    if (!any) return false;
  }
  return true;
}

bool c1() {
  if (cubic_discriminant(0, -3, -1) != 81 || cubic_discriminant(0, 1, -1) != -31) return false;
  Rng rng(2024);
  for (int t = 0; t < 50; ++t) {
    Rat w1 = rng.small_rat(9), w2 = rng.small_rat(9), w3 = rng.small_rat(9);
    UPoly p = general_cubic(w1, w2, w3);
    if (cubic_discriminant(w1, w2, w3) != -resultant(p, p.derivative()).rational()) return false;
  }
  return true;
}

bool c2() {
  FieldPtr l = NumberField::make(q({1, -3, 0, 1}), "eta");
  NFElem eta = NFElem::generator(l), sigma = eta * eta - 2;
  SplitResult s = split_tensor(l);
  bool linear = s.factors.size() == 3 && std::all_of(s.factors.begin(), s.factors.end(),
                                                      [](const UPoly& f) { return f.degree() == 1; });
  bool has_sigma = std::find(s.roots.begin(), s.roots.end(), sigma) != s.roots.end();
  bool order3 = apply_isomorphism(apply_isomorphism(sigma, sigma), sigma) == eta;
  FieldPtr c = NumberField::make(q({-2, 0, 0, 1}), "eta");
  SplitResult sc = split_tensor(c);
  bool cube = sc.factors.size() == 2 && sc.factors[0].degree() == 1 && sc.factors[1].degree() == 2;
  return linear && has_sigma && order3 && is_galois(l) && cube && !is_galois(c);
}

bool c3() {
  CrtDecomposition d = crt_decomposition(q({-1, 0, 0, 1}));
  const NFElem third(Rat(1, 3));
  UPoly e1 = q({1, 1, 1}) * third, e2 = q({2, 1}) * q({-1, 1}) * -third;
  bool bezout = d.idempotents.size() == 2 && d.idempotents[0] == e1 && d.idempotents[1] == e2 && e1 + e2 == q({1});
  Factorization f = factor_q(q({-1, 0, 0, 0, 0, 0, 0, 0, 1}));
  std::vector<UPoly> want{q({-1, 1}), q({1, 1}), q({1, 0, 1}), q({1, 0, 0, 0, 1})};
  bool oct = f.factors.size() == 4;
  for (const auto& w : want)
    oct = oct && std::any_of(f.factors.begin(), f.factors.end(),
                             [&](const Factor& x) { return x.poly == w && x.multiplicity == 1; });
  return bezout && oct;
}

bool c4() {
  std::vector<RatMap> a3{map("y"), map("1 - 1/y"), map("1/(1 - y)")};
  InvariantCheck c = generating_invariant_check(a3, map("(y^3 - 3*y + 1)/(y^2 - y)"));
  std::vector<RatMap> prod_a3{map("-y*(1 - 1/y)/(1 - y)"), map("y*(1 - 1/y) + y/(1 - y) + (1 - 1/y)/(1 - y)"),
                              map("-(y + 1 - 1/y + 1/(1 - y))"), map("1")};
  bool ok = c.invariant && c.principal && c.product == prod_a3;

  InvariantCheck inv = generating_invariant_check({map("y"), map("1/y")}, map("y + 1/y"));
  ok = ok && inv.invariant && inv.principal &&
       inv.product == std::vector<RatMap>{map("1"), map("-y - 1/y"), map("1")};

  FieldPtr k = NumberField::make(q({1, 0, 1}), "i");
  std::vector<Var> gens{Var::symbol("i")};
  std::vector<RatMap> g{map("y", k, gens), map("-y", k, gens), map("i/y", k, gens), map("-i/y", k, gens)};
  InvariantCheck cq = generating_invariant_check(g, map("(y^4 - 1)/y^2", k, gens));
  std::vector<RatMap> prod_q{map("-1", k, gens), map("0", k, gens), map("1/y^2 - y^2", k, gens), map("0", k, gens),
                             map("1", k, gens)};
  return ok && cq.invariant && cq.principal && cq.product == prod_q;
}

bool c5() {
  return props_pass(42, 100, {"jacobi (n=1, m=1, q=1", "jacobi (n=1, m=1, q=2", "jacobi (n=1, m=2, q=1",
                              "jacobi (n=2, m=1, q=1", "jacobi (n=2, m=2, q=1", "lift independence"});
}

bool c6() {
  return props_pass(7, 50, {"sharp is a bracket morphism", "flat is a bracket morphism", "sharp and flat commute"});
}

bool c7() {
  SpencerImage d = spencer(line({"0", "-1", "0"}));
  if (d.at(1, MultiIndex({0}), 1) != RatFunc(1) || !d.at(1, MultiIndex({1}), 1).is_zero()) return false;
  Rng rng(77);
  for (int t = 0; t < 20; ++t) {
    RatFunc xi(random_poly(rng, {Var::source(1)}, 4, 3, 5));
    if (!spencer(JetSection::holonomic({xi}, 2, Base::Source)).is_zero()) return false;
  }
  return true;
}

bool c8() {
  const JetContext line_ctx{1, 1, 1, 0}, plane{1, 2, 1, 0};
  if (!commutation_residual(rf("y^2*y_x^3 - 4*y*y_x + y_x^2/y"), line({"0", "-1", "0"}), 1, line_ctx).is_zero())
    return false;
  RatFunc phi = rf("y2*y1_x");
  for (const char* f : {"1", "y1", "y1^2", "y1^3"}) {
    RatFunc fy = rf(f);
    JetSection h = JetSection::holonomic({fy, -rf("y2") * partial_derivative(fy, Var::parse("y1"))}, 2, Base::Target);
    if (!commutation_residual(phi, h, 1, plane).is_zero()) return false;
  }
  return true;
}

bool c9() {
  Distribution theta{{field({{"y1", "1"}}), field({{"y2", "y2"}, {"y1_x", "-y1_x"}, {"y2_x", "y2_x"}}),
                      field({{"y2_x", "y1_x"}})},
                     ""};
  Distribution delta{{field({{"y1_x", "y1_x"}, {"y2_x", "y2_x"}}), field({{"y2_x", "y2"}})}, ""};
  FreenessReport f = freeness_probe(delta, 2);
  bool first = all_zero(commutes(theta, delta)) && f.certificate && *f.certificate == rf("y2*y1_x");
  Distribution d2{{field({{"y1_x", "y1_x"}, {"y2_x", "y2_x"}, {"y1_xx", "2*y1_xx"}, {"y2_xx", "2*y2_xx"}}),
                   field({{"y2_x", "y2"}, {"y2_xx", "2*y2_x"}}), field({{"y2_xx", "y2"}}),
                   field({{"y1_xx", "y1_x"}, {"y2_xx", "y2_x"}})},
                  ""};
  RatFunc phi = rf("y2*y1_x"), dphi = total_derivative(phi, 1, {1, 2, 2, 0});
  StabilityTable t = stability_check(d2, {phi, dphi});
  auto value = [&](int fld, int gen) {
    for (const auto& e : t.entries)
      if (e.field == fld && e.generator == gen && e.coefficients) return e.value;
    return rf("nan_marker");
  };
  return first && value(0, 0) == phi && value(1, 0).is_zero() && value(0, 1) == dphi * RatFunc(2) &&
         value(1, 1) == phi && value(2, 1).is_zero() && value(3, 1) == phi && t.stable();
}

bool c10() {
  auto cert = [](const RatMatrix& m) {
    FreenessReport f = freeness_probe(m, 2);
    return f.certificate ? *f.certificate : RatFunc();
  };
  auto same = [](const RatFunc& a, const RatFunc& b) { return a == b || a == -b; };
  RatFunc w = rf("y1*y2_x - y2*y1_x"), sigma = rf("y1_x*y2_xx - y2_x*y1_xx");
  bool ok = same(cert({{rf("y1"), rf("y2")}, {rf("y1_x"), rf("y2_x")}}), w) &&
            same(cert({{rf("y1_x"), rf("y2_x")}, {rf("y1_xx"), rf("y2_xx")}}), sigma) &&
            cert({{rf("y1_x"), rf("y2_x")}, {rf("y2_x"), rf("-y1_x")}}) == rf("y1_x^2 + y2_x^2");
  return ok && scenario_has("ex4_17_fundamental_sets",
                            {"Phi, d_x Phi, Psi are functionally independent", "Phi and d_x Phi alone",
                             "order-3 symbol vanishes iff Phi != 0"});
}

bool c11() {
  Distribution bb{{field({{"a1", "a1"}, {"ba1", "ba1"}}), field({{"a2", "a1"}, {"ba2", "ba1"}})}, ""};
  bool affine = is_tensor_constant(rf("ba1/a1"), bb).constant && is_tensor_constant(rf("ba2 - ba1*a2/a1"), bb).constant;
  Distribution four{{field({{"y1", "y1"}, {"y2", "y2"}}), field({{"y1", "y1_x"}, {"y2", "y2_x"}}),
                     field({{"y1_x", "y1"}, {"y2_x", "y2"}}), field({{"y1_x", "y1_x"}, {"y2_x", "y2_x"}})},
                    ""};
  bool gl2 = is_tensor_constant(rf("(y2_x*by1 - y2*by1_x)/(y1*y2_x - y2*y1_x)"), extended(four)).constant;
  Distribution d1 = extended({{field({{"y1_x", "y1_x"}, {"y2_x", "y2_x"}}), field({{"y2_x", "y2"}})}, ""});
  Relations rel{{Var::parse("by2"), rf("y2*y1_x/by1_x")}};
  bool ex51 = true;
  for (const char* e : {"by1_x/y1_x", "y1_x/by1_x", "by2_x/y1_x - y2_x/by1_x"})
    ex51 = ex51 && is_tensor_constant(rf(e), d1, rel).constant;
  return affine && gl2 && ex51;
}

bool c12() {
  const JetContext ctx{1, 1, 2, 0};
  RatFunc phi = rf("y_x/y"), dphi = total_derivative(phi, 1, ctx);
  VectorField d1 = field({{"y_x", "y_x"}}), d2 = field({{"y_x", "y_x"}, {"y_xx", "2*y_xx"}});
  if (d1.apply(phi) != phi || d2.apply(dphi) != dphi * RatFunc(2)) return false;
  std::vector<VectorField> theta;
  for (int k = 0; k <= 2; ++k) {
    JetSection s(1, 2, Base::Target);
    s.set(1, std::vector<int>(k, 1), RatFunc(1));
    theta.push_back(sharp(s, ctx));
  }
  Ansatz a{{Var::parse("y_x"), Var::parse("y_xx")}, {Var::parse("y"), Var::parse("y_x"), Var::parse("y_xx")}, 1};
  return same_q_span(commutant_search({theta, ""}, a), {d2, field({{"y_xx", "y_x"}})});
}

bool c13() {
  const JetContext ctx{1, 1, 3, 0};
  std::vector<VectorField> sharp_want{field({{"y", "1"}}), field({{"y_x", "y_x"}, {"y_xx", "y_xx"}, {"y_xxx", "y_xxx"}}),
                                      field({{"y_xx", "y_x^2"}, {"y_xxx", "3*y_x*y_xx"}}), field({{"y_xxx", "y_x^3"}})};
  std::vector<VectorField> flat_want{field({{"y_x", "y_x"}, {"y_xx", "2*y_xx"}, {"y_xxx", "3*y_xxx"}}),
                                     field({{"y_xx", "y_x"}, {"y_xxx", "3*y_xx"}}), field({{"y_xxx", "y_x"}})};
  for (int k = 0; k <= 3; ++k) {
    JetSection s(1, 3, Base::Target);
    s.set(1, std::vector<int>(k, 1), RatFunc(1));
    if (sharp(s, ctx) != sharp_want[k]) return false;
  }
  for (int k = 1; k <= 3; ++k) {
    JetSection s(1, 3, Base::Source);
    s.set(1, std::vector<int>(k, 1), RatFunc(-1));
    if (flat(s, ctx) != flat_want[k - 1]) return false;
  }
  return true;
}

bool c14() {
  ProlongationStep p = prolong_linear_system({rf("x2*y1_1 + y2"), rf("y1_2")}, {2, 2, 2, 0});
  if (p.projected.size() != 1 || p.projected[0] != rf("y1_1 + y2_2")) return false;
  JetSection xi(2, 1, Base::Source), eta(2, 1, Base::Source);
  xi.set(2, std::vector<int>{}, rf("-x2"));
  xi.set(1, {1}, RatFunc(1));
  eta.set(1, std::vector<int>{}, RatFunc(1));
  eta.set(2, {1}, RatFunc(1));
  eta.set(2, {2}, RatFunc(1));
  JetSection b = algebroid_bracket(xi, eta);
  return (rf("x2") * b.at(1, {1}) + b.at(2)).is_zero() && b.at(1, {2}).is_zero();
}

bool c15() {
  HopfResult h = hopf_comorphisms({rf("by/y")}, GroupLaw{{rf("ba1*a1")}, {Rat(1)}});
  return h.coassociative && h.counit && h.antipode_law;
}

bool c16() {
  RatFunc om = rf("y1_x^2 + y2_x^2"), ga = rf("y1_x*y1_xx + y2_x*y2_xx"), up = rf("y1_xx^2 + y2_xx^2");
  RatFunc si = rf("y1_x*y2_xx - y2_x*y1_xx");
  std::vector<VectorField> d{field({{"y1_x", "y1_x"}, {"y2_x", "y2_x"}}), field({{"y1_x", "y1_xx"}, {"y2_x", "y2_xx"}}),
                             field({{"y1_xx", "y1_x"}, {"y2_xx", "y2_x"}}),
                             field({{"y1_xx", "y1_xx"}, {"y2_xx", "y2_xx"}})};
  std::vector<RatFunc> got;
  for (const auto& f : d) got.push_back(f.apply(si));
  return (si * si + ga * ga - om * up).is_zero() && got == std::vector<RatFunc>{si, RatFunc(), RatFunc(), si} &&
         ga == total_derivative(om, 1, {1, 2, 2, 0}) / RatFunc(2);
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<bool()>>> criteria{
      {"cubic discriminant and resultant", c1},
      {"Galois splitting of the tensor square", c2},
      {"CRT/Bezout and a^8 - 1", c3},
      {"generating invariants and linear-factor products", c4},
      {"Jacobi identity and lift independence", c5},
      {"sharp/flat morphisms and commutation", c6},
      {"Spencer operator", c7},
      {"d_x commutes with sharp and flat images", c8},
      {"Pfaffian orders 1 and 2 and stability table", c9},
      {"Wronskian certificates and fundamental sets", c10},
      {"tensor constants", c11},
      {"multiplicative-group chain and commutant", c12},
      {"order-3 sharp and flat tables", c13},
      {"linear system prolongation and bracket", c14},
      {"Hopf axioms for ybar/y", c15},
      {"isometry invariants", c16},
  };
  int failed = 0, k = 0;
  for (const auto& [name, check] : criteria) {
    bool ok = false;
    try {
      ok = check();
    } catch (const std::exception& e) {
      std::cout << "  exception: " << e.what() << "\n";
    }
    failed += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << "  " << ++k << ". " << name << "\n";
  }
  return failed ? 1 : 0;
}
