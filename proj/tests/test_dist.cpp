#include "doctest.h"

#include "dgal/dist.hpp"
#include "dgal/expr.hpp"

using namespace dgal;

namespace {

VectorField field(std::initializer_list<std::pair<const char*, const char*>> entries) {
  std::map<Var, RatFunc> m;
  for (const auto& [v, c] : entries) m[Var::parse(v)] = parse_expr(c);
  return VectorField(m);
}

std::vector<Var> vars(std::initializer_list<const char*> names) {
  std::vector<Var> out;
  for (const char* n : names) out.push_back(Var::parse(n));
  return out;
}

// Pfaffian example, first order.
Distribution theta1() {
  return {{field({{"y1", "1"}}),
           field({{"y2", "y2"}, {"y1_x", "-y1_x"}, {"y2_x", "y2_x"}}),
           field({{"y2_x", "y1_x"}})},
          "Theta"};
}

Distribution delta1() {
  return {{field({{"y1_x", "y1_x"}, {"y2_x", "y2_x"}}), field({{"y2_x", "y2"}})}, "Delta"};
}

Distribution theta2() {
  return {{field({{"y1", "1"}}),
           field({{"y2", "y2"}, {"y1_x", "-y1_x"}, {"y2_x", "y2_x"}, {"y1_xx", "-y1_xx"}, {"y2_xx", "y2_xx"}}),
           field({{"y2_x", "y2*y1_x"}, {"y1_xx", "-y1_x^2"}, {"y2_xx", "y2*y1_xx + 2*y1_x*y2_x"}}),
           field({{"y2_xx", "y1_x^2"}})},
          "Theta"};
}

Distribution delta2() {
  return {{field({{"y1_x", "y1_x"}, {"y2_x", "y2_x"}, {"y1_xx", "2*y1_xx"}, {"y2_xx", "2*y2_xx"}}),
           field({{"y2_x", "y2"}, {"y2_xx", "2*y2_x"}}),
           field({{"y2_xx", "y2"}}),
           field({{"y1_xx", "y1_x"}, {"y2_xx", "y2_x"}})},
          "Delta"};
}

// GL(2) acting on two copies of a line, prolonged to the given order.
Distribution gl2(int q) {
  const char* suffix[] = {"", "_x", "_xx"};
  Distribution d{{}, "Theta"};
  for (int k = 1; k <= 2; ++k)
    for (int l = 1; l <= 2; ++l) {
      std::map<Var, RatFunc> m;
      for (int r = 0; r <= q; ++r)
        m[Var::parse("y" + std::to_string(k) + suffix[r])] = parse_expr("y" + std::to_string(l) + suffix[r]);
      d.generators.emplace_back(m);
    }
  return d;
}

// A rational point on the zero set of `cert`, solved through a variable it is linear in.
std::optional<std::map<Var, Rat>> zero_of(Rng& rng, const MPoly& cert, const std::vector<Var>& all) {
  for (const Var& v : cert.variables()) {
    if (cert.degree_in(v) != 1) continue;
    auto cs = cert.coefficients_in(v);
    std::map<Var, Rat> pt;
    for (const Var& w : all)
      if (w != v) pt[w] = rng.small_rat(7);
    Rat a = cs[1].evaluate(pt);
    if (a == 0) continue;
    pt[v] = -cs[0].evaluate(pt) / a;
    return pt;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("reciprocal distributions commute") {
  CHECK(all_zero(commutes(theta1(), delta1())));
  CHECK(commutes(theta1(), delta1()).size() == 6);
  CHECK(all_zero(commutes(theta2(), delta2())));

  Distribution affine_left{{field({{"a1", "a1"}, {"a2", "a2"}}), field({{"a2", "1"}})}, "Theta"};
  Distribution affine_right{{field({{"a1", "a1"}}), field({{"a2", "a1"}})}, "Delta"};
  CHECK(all_zero(commutes(affine_left, affine_right)));

  Distribution line{{field({{"y", "1"}}), field({{"y", "y"}, {"y_x", "y_x"}})}, "Theta"};
  auto br = commutes(line, line);
  CHECK(br[1] == line.generators[0]);
  CHECK_FALSE(all_zero(br));
}

TEST_CASE("involutivity") {
  CHECK(is_involutive_frobenius(theta1()).involutive);
  CHECK(is_involutive_frobenius(delta1()).involutive);
  CHECK(is_involutive_frobenius(theta2()).involutive);
  CHECK(is_involutive_frobenius(delta2()).involutive);
  CHECK(is_involutive_frobenius({{field({{"y1_x", "y2*y1"}})}, ""}).involutive);

  // The bracket ∂/∂y2_x is y1*∂/∂y2_x divided by y1, so this pair spans an involutive distribution.
  CHECK(is_involutive_frobenius({{field({{"y1", "1"}}), field({{"y2_x", "y1"}})}, ""}).involutive);

  auto r = is_involutive_frobenius({{field({{"y1", "1"}}), field({{"y2", "y1"}, {"y2_x", "1"}})}, ""});
  CHECK_FALSE(r.involutive);
  REQUIRE(r.witness);
  CHECK(*r.witness == field({{"y2", "1"}}));
  CHECK(r.left == 0);
  CHECK(r.right == 1);
}

TEST_CASE("generic span membership") {
  std::vector<VectorField> gens = delta1().generators;
  CHECK(in_generic_span(field({{"y2_x", "1"}}), gens));
  CHECK(in_generic_span(field({{"y1_x", "y1_x*y2"}, {"y2_x", "y2_x*y2 + y2^2"}}), gens));
  CHECK_FALSE(in_generic_span(field({{"y1", "1"}}), gens));
  CHECK(coefficient_matrix(gens).vars == vars({"y1_x", "y2_x"}));
}

TEST_CASE("commutant search") {
  SUBCASE("pfaffian first order") {
    Ansatz a{vars({"y1_x", "y2_x"}), vars({"y2", "y1_x", "y2_x"}), 1};
    auto basis = commutant_search(theta1(), a);
    CHECK(same_q_span(basis, delta1().generators));
    CHECK(basis.size() == 2);
    CHECK(all_zero(commutes(theta1(), {basis, ""})));
  }
  SUBCASE("multiplicative group, second order") {
    Distribution euler{{field({{"y", "y"}, {"y_x", "y_x"}, {"y_xx", "y_xx"}})}, "Theta"};
    Ansatz a{vars({"y_x", "y_xx"}), vars({"y_x", "y_xx"}), 1};
    auto basis = commutant_search(euler, a);
    std::vector<VectorField> expected = {field({{"y_x", "y_x"}, {"y_xx", "2*y_xx"}}), field({{"y_xx", "y_x"}})};
    std::vector<VectorField> joined = basis;
    joined.insert(joined.end(), expected.begin(), expected.end());
    CHECK(same_q_span(basis, joined));
    CHECK(basis.size() == 4);

    // Adding the full second-order target prolongations cuts it down to the two fields.
    Distribution full{{field({{"y", "1"}}),
                       field({{"y", "y"}, {"y_x", "y_x"}, {"y_xx", "y_xx"}}),
                       field({{"y", "y^2"}, {"y_x", "2*y*y_x"}, {"y_xx", "2*y*y_xx + 2*y_x^2"}})},
                      ""};
    Ansatz b{vars({"y_x", "y_xx"}), vars({"y", "y_x", "y_xx"}), 1};
    auto cut = commutant_search(full, b);
    CHECK(same_q_span(cut, {field({{"y_x", "y_x"}, {"y_xx", "2*y_xx"}}), field({{"y_xx", "y_x"}})}));
  }
  SUBCASE("translation") {
    Distribution t{{field({{"y", "1"}})}, ""};
    auto basis = commutant_search(t, {vars({"y_x"}), vars({"y", "y_x"}), 0});
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == field({{"y_x", "1"}}));
  }
  SUBCASE("default ansatz excludes order zero") {
    Ansatz a = default_ansatz({1, 2, 1, 0}, 1);
    CHECK(a.support == vars({"y1_x", "y2_x"}));
    CHECK(a.coefficient_vars == vars({"y1", "y2", "y1_x", "y2_x"}));
    auto basis = commutant_search(theta1(), a);
    CHECK_FALSE(basis.empty());
    std::vector<VectorField> joined = basis;
    for (const auto& d : delta1().generators) joined.push_back(d);
    CHECK(same_q_span(basis, joined));
  }
}

TEST_CASE("differential invariants") {
  JetContext ctx{1, 2, 2, 0};
  RatFunc phi = "y2*y1_x"_rf;
  CHECK(is_invariant(theta1(), phi).invariant);
  auto no = is_invariant(theta1(), "y1"_rf);
  CHECK_FALSE(no.invariant);
  CHECK(no.residuals[0] == RatFunc(1));

  auto d = derived_invariant(phi, 1, ctx, theta2());
  CHECK(d.value == "y2*y1_xx + y1_x*y2_x"_rf);
  CHECK(d.invariant);
  CHECK(is_invariant(delta2(), phi).invariant == false);

  // GL(2) at order two: quotients of determinants.
  RatFunc w = "y1*y2_x - y2*y1_x"_rf;
  RatFunc phi1 = "y1*y2_xx - y2*y1_xx"_rf / w;
  RatFunc phi2 = "y1_x*y2_xx - y2_x*y1_xx"_rf / w;
  CHECK(is_invariant(gl2(2), phi1).invariant);
  CHECK(is_invariant(gl2(2), phi2).invariant);

  // Special linear group at order one.
  Distribution sl2{{gl2(1).generators[1], gl2(1).generators[2], gl2(1).generators[0] - gl2(1).generators[3]}, ""};
  CHECK(is_invariant(sl2, w).invariant);
  auto dw = derived_invariant(w, 1, ctx, {{gl2(2).generators[1], gl2(2).generators[2], gl2(2).generators[0] - gl2(2).generators[3]}, ""});
  CHECK(dw.value == "y1*y2_xx - y2*y1_xx"_rf);
  CHECK(dw.invariant);

  CHECK(derived_invariant(RatFunc(3), 1, ctx, theta2()).value.is_zero());
}

TEST_CASE("stability tables") {
  SUBCASE("affine line") {
    Distribution delta{{field({{"y", "y_x"}}), field({{"y_x", "y_x"}})}, ""};
    auto t = stability_check(delta, {"y_x/y"_rf});
    CHECK(t.entries[0].value == -("y_x/y"_rf).pow(2));
    CHECK_FALSE(t.entries[0].coefficients);
    REQUIRE(t.entries[1].coefficients);
    CHECK(*t.entries[1].coefficients == QVector{0, 1});
    CHECK_FALSE(t.stable());
    auto t2 = stability_check(delta, {"y_x/y"_rf}, 2);
    REQUIRE(t2.entries[0].coefficients);
    CHECK(*t2.entries[0].coefficients == QVector{0, 0, -1});
  }
  SUBCASE("pfaffian") {
    RatFunc phi = "y2*y1_x"_rf;
    auto bad = stability_check(delta1(), {phi, "y2_x"_rf});
    CHECK(bad.basis == std::vector<std::string>{"1", "g1", "g2"});
    // δ2 on the second generator gives y2.
    CHECK(bad.entries[3].value == "y2"_rf);
    CHECK_FALSE(bad.entries[3].coefficients);
    auto good = stability_check(delta1(), {phi, "y2_x/y2"_rf});
    CHECK(good.stable());
    CHECK(*good.entries[1].coefficients == QVector{0, 0, 1});
    CHECK(*good.entries[3].coefficients == QVector{1, 0, 0});
  }
  SUBCASE("second order") {
    RatFunc phi = "y2*y1_x"_rf;
    RatFunc dphi = "y2*y1_xx + y1_x*y2_x"_rf;
    auto t = stability_check(delta2(), {phi, dphi});
    CHECK(t.stable());
    std::vector<QVector> expected = {{0, 1, 0}, {0, 0, 2}, {0, 0, 0}, {0, 1, 0},
                                     {0, 0, 0}, {0, 0, 0}, {0, 0, 0}, {0, 1, 0}};
    for (std::size_t e = 0; e < expected.size(); ++e) CHECK(*t.entries[e].coefficients == expected[e]);
  }
}

TEST_CASE("rational combinations") {
  auto c = rational_combination("3*x1 - y1/2"_rf, {"x1"_rf, "y1"_rf, "x1 + y1"_rf});
  REQUIRE(c);
  CHECK(Rat(3) == (*c)[0] + (*c)[2]);
  CHECK(Rat(-1, 2) == (*c)[1] + (*c)[2]);
  CHECK_FALSE(rational_combination("x1^2"_rf, {"x1"_rf}));
  CHECK(rational_combination("1/(y1 + 1)"_rf, {"y1/(y1 + 1)"_rf, "1"_rf}) == QVector{-1, 1});
}

TEST_CASE("freeness certificates") {
  SUBCASE("wronskian") {
    auto r = freeness_probe(gl2(1), 4);
    CHECK(r.rank == 4);
    CHECK(r.free);
    REQUIRE(r.certificate);
    RatFunc w = "y1*y2_x - y2*y1_x"_rf;
    CHECK((*r.certificate == w || *r.certificate == -w));
  }
  SUBCASE("euclidean symbols") {
    RatMatrix full = {{"y1_x"_rf, "y2_x"_rf}, {"y1_xx"_rf, "y2_xx"_rf}};
    auto r = freeness_probe(full, 2);
    CHECK(r.free);
    RatFunc sigma = "y1_x*y2_xx - y2_x*y1_xx"_rf;
    CHECK((*r.certificate == sigma || *r.certificate == -sigma));
    RatMatrix connected = {{"y1_x"_rf, "y2_x"_rf}, {"y2_x"_rf, "-y1_x"_rf}};
    auto c = freeness_probe(connected, 2);
    CHECK(*c.certificate == "y1_x^2 + y2_x^2"_rf);
  }
  SUBCASE("rank shortfall") {
    auto r = freeness_probe(delta1(), 3);
    CHECK(r.rank == 2);
    CHECK_FALSE(r.free);
    CHECK(*r.certificate == "y2*y1_x"_rf);
  }
  SUBCASE("vanishing certificate drops the rank") {
    Rng rng(2024);
    // Wronskians of orders (0,1) and (0,2) are coprime: no hypersurface of rank drop.
    CHECK(freeness_probe(gl2(2), 4).certificate->is_constant());
    for (const auto& d : {gl2(1), delta1(), delta2(), theta1()}) {
      auto cm = coefficient_matrix(d.generators);
      auto r = freeness_probe(d, static_cast<int>(d.generators.size()));
      REQUIRE(r.certificate);
      CHECK_FALSE(r.certificate->is_zero());
      std::vector<Var> all;
      for (const auto& row : cm.rows)
        for (const auto& e : row)
          for (const Var& v : e.variables()) all.push_back(v);
      int checked = 0;
      for (int attempt = 0; attempt < 40 && checked < 5; ++attempt) {
        auto pt = zero_of(rng, r.certificate->num(), all);
        if (!pt) break;
        bool pole = false;
        for (const auto& row : cm.rows)
          for (const auto& e : row)
            if (e.den().evaluate(*pt) == 0) pole = true;
        if (pole) continue;
        CHECK(rank_at(cm.rows, *pt) < r.rank);
        ++checked;
      }
      CHECK(checked == 5);
    }
  }
}

TEST_CASE("bar extension and tensor constants") {
  CHECK(bar_extend(field({{"a1", "a1"}})) == field({{"a1", "a1"}, {"ba1", "ba1"}}));
  CHECK(bar_extend(field({{"y1_x", "y1"}, {"y2_x", "y2"}})) ==
        field({{"y1_x", "y1"}, {"y2_x", "y2"}, {"by1_x", "by1"}, {"by2_x", "by2"}}));
  CHECK(bar_extend(VectorField()).is_zero());
  CHECK(bar("y1*a2 + x1"_rf) == "by1*ba2 + x1"_rf);

  Distribution ext{{bar_extend(field({{"a1", "a1"}})), bar_extend(field({{"a2", "a1"}}))}, "Delta"};
  CHECK(is_tensor_constant("ba1/a1"_rf, ext).constant);
  CHECK(is_tensor_constant("ba2 - ba1*a2/a1"_rf, ext).constant);
  auto bad = is_tensor_constant("a2/a1"_rf, ext);
  CHECK_FALSE(bad.constant);
  CHECK(bad.residuals[1] == RatFunc(1));

  // Relations are applied before testing.
  Distribution scale{{bar_extend(field({{"a1", "a1"}}))}, ""};
  CHECK_FALSE(is_tensor_constant("ba1 - a1"_rf, scale).constant);
  CHECK(is_tensor_constant("ba1 - a1"_rf, scale, {{Var::parse("ba1"), "a1"_rf}}).constant);
}

TEST_CASE("tensor constants survive adding relation multiples") {
  Rng rng(77);
  Distribution ext{{bar_extend(field({{"a1", "a1"}})), bar_extend(field({{"a2", "a1"}}))}, "Delta"};
  // A relation preserved by the distribution.
  Relations rel = {{Var::parse("ba1"), "a1"_rf}};
  RatFunc relation = "ba1 - a1"_rf;
  for (int t = 0; t < 5; ++t) {
    RatFunc mult(random_poly(rng, vars({"a1", "a2", "ba1", "ba2"}), 2, 3, 5));
    for (RatFunc base : {"ba1/a1"_rf, "ba2 - ba1*a2/a1"_rf, "a2/a1"_rf}) {
      auto a = is_tensor_constant(base, ext, rel);
      auto b = is_tensor_constant(base + mult * relation, ext, rel);
      CHECK(a.constant == b.constant);
    }
  }
}

TEST_CASE("commuting field identity") {
  JetContext line{1, 1, 3, 0};
  VectorField w = field({{"y_x", "y_x"}, {"y_xx", "2*y_xx"}});
  RatFunc phi = "y_x/y"_rf;
  CHECK(commuting_field_residual(w, phi, 1, 1, line).is_zero());
  RatFunc dphi = total_derivative(phi, 1, line);
  CHECK(w.apply(dphi) == dphi * RatFunc(2));
  CHECK(field({{"y_x", "y_x"}}).apply(phi) == phi);
  CHECK(commuting_field_residual(VectorField(), phi, 1, 1, line).is_zero());

  JetContext plane{1, 2, 3, 0};
  VectorField d4 = field({{"y1_xx", "y1_x"}, {"y2_xx", "y2_x"}});
  RatFunc p = "y2*y1_x"_rf;
  CHECK(d4.apply(total_derivative(p, 1, plane)) == p);
  CHECK(commuting_field_residual(d4, p, 1, 1, plane).is_zero());
  for (const auto& g : delta2().generators) CHECK(commuting_field_residual(g, p, 1, 1, plane).is_zero());
}
