#include "doctest.h"

#include "dgal/expr.hpp"
#include "dgal/fieldops.hpp"

using namespace dgal;

namespace {

VectorField field(std::initializer_list<std::pair<const char*, const char*>> entries) {
  std::map<Var, RatFunc> m;
  for (const auto& [v, c] : entries) m[Var::parse(v)] = parse_expr(c);
  return VectorField(m);
}

JetSection line_section(std::initializer_list<const char*> values, Base over = Base::Source) {
  JetSection s(1, static_cast<int>(values.size()) - 1, over);
  int r = 0;
  for (const char* v : values) s.set(1, std::vector<int>(r++, 1), parse_expr(v));
  return s;
}

// Sections of the two-dimensional example with a non-integrable first-order system.
JetSection pfaffian_xi() {
  JetSection s(2, 1, Base::Source);
  s.set(2, std::vector<int>{}, "-x2"_rf);
  s.set(1, {1}, "1"_rf);
  return s;
}

JetSection pfaffian_eta() {
  JetSection s(2, 1, Base::Source);
  s.set(1, std::vector<int>{}, "1"_rf);
  s.set(2, {1}, "1"_rf);
  s.set(2, {2}, "1"_rf);
  return s;
}

JetSection lift_randomly(Rng& rng, const JetSection& s) {
  JetSection r = random_section(rng, s.dim(), s.order() + 1, s.over());
  for (const auto& [key, v] : s.components()) r.set(key.first, key.second, v);
  return r;
}

RatFunc random_phi(Rng& rng, const JetContext& ctx, int q) {
  std::vector<Var> vars;
  for (int i = 1; i <= ctx.n; ++i) vars.push_back(Var::source(i));
  for (const auto& mu : MultiIndex::up_to(ctx.n, q))
    for (int k = 1; k <= ctx.m; ++k) vars.push_back(Var::jet(k, mu.dirs()));
  return RatFunc(random_poly(rng, vars, 3, 4, 5));
}

const std::vector<JetContext> kShapes = {{1, 1, 1, 0}, {1, 1, 2, 0}, {1, 2, 1, 0}, {2, 1, 1, 0}, {2, 2, 1, 0}, {2, 2, 2, 0}};

}  // namespace

TEST_CASE("vector field bracket") {
  VectorField t1 = field({{"y", "1"}});
  VectorField t2 = field({{"y", "y"}, {"y_x", "y_x"}});
  CHECK(bracket_vf(t1, t2) == t1);
  VectorField theta2 = field({{"y2", "y2"}, {"y1_1", "-y1_1"}, {"y2_1", "y2_1"}});
  VectorField delta2 = field({{"y2_1", "y2"}});
  CHECK(bracket_vf(theta2, delta2).is_zero());
  CHECK(bracket_vf(t2, t2).is_zero());
  CHECK(t2.apply("y_x/y"_rf).is_zero());
}

TEST_CASE("vertical prolongation") {
  JetContext ctx{1, 1, 2, 0};
  CHECK(prolong_vertical(field({{"y", "y"}}), 2, ctx) == field({{"y", "y"}, {"y_x", "y_x"}, {"y_xx", "y_xx"}}));
  JetContext plane{1, 2, 3, 0};
  CHECK(prolong_vertical(field({{"y1", "1"}}), 3, plane) == field({{"y1", "1"}}));
  CHECK(prolong_vertical(VectorField(), 2, ctx).is_zero());
}

TEST_CASE("sharp and flat") {
  JetContext line3{1, 1, 3, 0};
  CHECK(sharp(line_section({"0", "0", "1", "0"}, Base::Target), line3) ==
        field({{"y_xx", "y_x^2"}, {"y_xxx", "3*y_x*y_xx"}}));
  JetContext pf{1, 2, 1, 0};
  JetSection e(2, 1, Base::Target);
  e.set(2, {1}, "1"_rf);
  CHECK(sharp(e, pf) == field({{"y2_1", "y1_1"}}));
  CHECK(sharp(JetSection(2, 1, Base::Target), pf).is_zero());

  JetContext line2{1, 1, 2, 0};
  CHECK(flat(line_section({"s", "sx", "sxx"}), line2) ==
        field({{"x", "s"}, {"y_x", "-y_x*sx"}, {"y_xx", "-(y_x*sxx + 2*y_xx*sx)"}}));
  CHECK(flat(line_section({"0", "1", "0", "0"}), line3) ==
        field({{"y_x", "-y_x"}, {"y_xx", "-2*y_xx"}, {"y_xxx", "-3*y_xxx"}}));
  CHECK(flat(line_section({"0", "0", "1", "0"}), line3) == field({{"y_xx", "-y_x"}, {"y_xxx", "-3*y_xx"}}));
  CHECK(flat(line_section({"0", "0", "0"}), line2).is_zero());

  // Holonomic sharp equals the vertical prolongation.
  JetContext plane{2, 2, 2, 0};
  std::vector<RatFunc> eta = {"y1*y2 + 3"_rf, "y2^2 - y1"_rf};
  CHECK(sharp(JetSection::holonomic(eta, 2, Base::Target), plane) ==
        prolong_vertical(VectorField({{Var::jet(1), eta[0]}, {Var::jet(2), eta[1]}}), 2, plane));
}

TEST_CASE("spencer operator") {
  SpencerImage d = spencer(line_section({"0", "-1", "0"}));
  CHECK(d.at(1, MultiIndex({0}), 1) == "1"_rf);
  CHECK(d.at(1, MultiIndex({1}), 1).is_zero());
  CHECK(spencer(line_section({"x^2", "2*x", "2"})).is_zero());
  SpencerImage e = spencer(line_section({"x", "0", "0"}));
  CHECK(e.at(1, MultiIndex({0}), 1) == "1"_rf);
  CHECK(e.at(1, MultiIndex({1}), 1).is_zero());

  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    int dim = rng.uniform(1, 2), q = rng.uniform(0, 2);
    std::vector<Var> base = {Var::source(1), Var::source(2)};
    base.resize(dim);
    std::vector<RatFunc> xi;
    for (int k = 0; k < dim; ++k) xi.push_back(RatFunc(random_poly(rng, base, 3, 4, 6)));
    CHECK(spencer(JetSection::holonomic(xi, q + 1, Base::Source)).is_zero());
  }
}

TEST_CASE("brackets on the two-dimensional example") {
  JetSection xi = pfaffian_xi(), eta = pfaffian_eta();
  JetSection alg = algebraic_bracket(xi.zero_lift(), eta.zero_lift());
  CHECK(alg.at(1) == "-1"_rf);
  CHECK(alg.at(2) == "-x2"_rf);

  JetSection br = algebroid_bracket(xi, eta);
  for (const auto& [key, v] : br.components()) {
    if (key.first == 2 && key.second == MultiIndex({1, 0}))
      CHECK(v == "1"_rf);
    else
      CHECK(v.is_zero());
  }
  // Lands in the linear system defining the algebroid.
  CHECK((RatFunc(Var::source(2)) * br.at(1, {1}) + br.at(2)).is_zero());
  CHECK(br.at(1, {2}).is_zero());

  // Formal Lie derivative with the zero lift: bracket plus i(eta) d(xi).
  JetSection xl = xi.zero_lift();
  CHECK(formal_lie_derivative(xl, eta) == br + interior_spencer(eta, xl));
  CHECK(formal_lie_derivative(xl, eta) == algebraic_bracket(xl, eta.zero_lift()) + interior_spencer(xi, eta.zero_lift()));

  CHECK(algebraic_bracket(xl, xl) == JetSection(2, 1, Base::Source));
}

TEST_CASE("holonomic sections bracket like vector fields") {
  std::vector<RatFunc> a = {"x1*x2"_rf, "x1^2 + 1"_rf}, b = {"x2"_rf, "3*x1 - x2^2"_rf};
  std::vector<RatFunc> c(2);
  for (int i = 0; i < 2; ++i)
    for (int r = 0; r < 2; ++r)
      c[i] += a[r] * partial_derivative(b[i], Var::source(r + 1)) - b[r] * partial_derivative(a[i], Var::source(r + 1));
  for (int q = 0; q <= 2; ++q) {
    JetSection ja = JetSection::holonomic(a, q, Base::Source), jb = JetSection::holonomic(b, q, Base::Source);
    CHECK(algebroid_bracket(ja, jb) == JetSection::holonomic(c, q, Base::Source));
    CHECK(algebraic_bracket(JetSection::holonomic(a, q + 1, Base::Source), JetSection::holonomic(b, q + 1, Base::Source)) ==
          JetSection::holonomic(c, q, Base::Source));
  }
}

TEST_CASE("Jacobi identity and lift independence") {
  Rng rng(42);
  for (const auto& s : kShapes)
    for (Base over : {Base::Source, Base::Target}) {
      const int dim = over == Base::Source ? s.n : s.m;
      for (int t = 0; t < 5; ++t) {
        JetSection a = random_section(rng, dim, s.q, over), b = random_section(rng, dim, s.q, over),
                   c = random_section(rng, dim, s.q, over);
        JetSection cyc = algebroid_bracket(a, algebroid_bracket(b, c)) + algebroid_bracket(b, algebroid_bracket(c, a)) +
                         algebroid_bracket(c, algebroid_bracket(a, b));
        CHECK(cyc == JetSection(dim, s.q, over));
        CHECK(algebroid_bracket(a, b) == algebroid_bracket(a, b, lift_randomly(rng, a), lift_randomly(rng, b)));
      }
    }
}

TEST_CASE("sharp and flat are bracket morphisms and commute") {
  Rng rng(7);
  for (const auto& s : kShapes)
    for (int t = 0; t < 3; ++t) {
      JetSection e1 = random_section(rng, s.m, s.q, Base::Target), e2 = random_section(rng, s.m, s.q, Base::Target);
      CHECK(bracket_vf(sharp(e1, s), sharp(e2, s)) == sharp(algebroid_bracket(e1, e2), s));
      JetSection x1 = random_section(rng, s.n, s.q, Base::Source), x2 = random_section(rng, s.n, s.q, Base::Source);
      CHECK(bracket_vf(flat(x1, s), flat(x2, s)) == flat(algebroid_bracket(x1, x2), s));
      CHECK(bracket_vf(flat(x1, s), sharp(e1, s)).is_zero());
    }
}

TEST_CASE("commutation of total derivatives with flat and sharp images") {
  JetContext line{1, 1, 2, 0};
  RatFunc phi = "y^2*y_x^3 - 4*y*y_x + y_x^2/y"_rf;
  CHECK(commutation_residual(phi, line_section({"0", "-1", "0"}), 1, line).is_zero());

  Rng rng(11);
  for (const auto& s : kShapes) {
    if (s.q > 1) continue;
    for (int t = 0; t < 3; ++t) {
      RatFunc f = random_phi(rng, s, s.q);
      for (int i = 1; i <= s.n; ++i) {
        CHECK(commutation_residual(f, random_section(rng, s.n, s.q + 1, Base::Source), i, s).is_zero());
        CHECK(commutation_residual(f, random_section(rng, s.m, s.q + 1, Base::Target), i, s).is_zero());
      }
    }
  }
}

TEST_CASE("Spencer operator of a bracket") {
  // The two-term expansion holds only up to i(L(eta_1)zeta)d(xi) - i(L(xi_1)zeta)d(eta),
  // with L(xi_1)zeta the formal Lie derivative of j_1(zeta).
  Rng rng(13);
  for (const auto& s : kShapes) {
    if (s.q > 1) continue;
    for (int t = 0; t < 4; ++t) {
      JetSection xi = random_section(rng, s.n, s.q + 1, Base::Source), eta = random_section(rng, s.n, s.q + 1, Base::Source);
      JetSection zeta = random_section(rng, s.n, 0, Base::Source, t % 2);
      std::vector<RatFunc> zc;
      for (int i = 1; i <= s.n; ++i) zc.push_back(zeta.at(i));
      JetSection z1 = JetSection::holonomic(zc, 1, Base::Source);
      JetSection lhs = interior_spencer(zeta, algebroid_bracket(xi, eta));
      JetSection rhs = algebroid_bracket(interior_spencer(zeta, xi), eta.truncated(s.q)) +
                       algebroid_bracket(xi.truncated(s.q), interior_spencer(zeta, eta));
      JetSection correction = interior_spencer(formal_lie_derivative(eta.truncated(1), zeta), xi) -
                              interior_spencer(formal_lie_derivative(xi.truncated(1), zeta), eta);
      CHECK(lhs == rhs + correction);
      CHECK(formal_lie_derivative(xi.truncated(1), zeta) == algebraic_bracket(xi.truncated(1), z1));
    }
  }
}
