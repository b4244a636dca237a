#include "doctest.h"

#include "dgal/errors.hpp"
#include "dgal/expr.hpp"
#include "dgal/galois.hpp"
#include "dgal/random.hpp"

using namespace dgal;

namespace {

UPoly q(std::initializer_list<long> c) {
  std::vector<Rat> v;
  for (long x : c) v.emplace_back(x);
  return UPoly::from_rationals(v);
}

UPoly over(const FieldPtr& f, std::vector<NFElem> c) {
  for (auto& x : c) x = x.embed(f);
  return UPoly(f, std::move(c));
}

FieldPtr cube_root_two() { return NumberField::make(q({-2, 0, 0, 1}), "eta"); }
FieldPtr simplest_cubic() { return NumberField::make(q({1, -3, 0, 1}), "eta"); }

FieldPtr adjoin_j(const FieldPtr& base) {
  NFElem one(base, 1);
  return NumberField::make(UPoly(base, {one, one, one}), "j");
}

FieldPtr gaussian() { return NumberField::make(q({1, 0, 1}), "i"); }

RatMap map(const char* text, const FieldPtr& f = nullptr, std::vector<Var> gens = {}) {
  return to_ratmap(parse_expr(text), Var::parse("y"), f, gens);
}

std::vector<RatFunc> exprs(std::initializer_list<const char*> texts) {
  std::vector<RatFunc> out;
  for (const char* t : texts) out.push_back(parse_expr(t));
  return out;
}

NFElem combine(const std::vector<NFElem>& a, const std::vector<NFElem>& b, const QVector& c) {
  NFElem acc(0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) acc += NFElem(c[i * b.size() + j]) * a[i] * b[j];
  return acc;
}

}  // namespace

TEST_CASE("factorization over the rationals") {
  SUBCASE("y^3 - 1") {
    Factorization f = factor_q(q({-1, 0, 0, 1}));
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].poly == q({-1, 1}));
    CHECK(f.factors[1].poly == q({1, 1, 1}));
    CHECK(f.product() == q({-1, 0, 0, 1}));
  }
  SUBCASE("y^8 - 2 is irreducible") {
    CHECK(is_irreducible(q({-2, 0, 0, 0, 0, 0, 0, 0, 1})));
    CHECK(factor_q(q({-2, 0, 0, 0, 0, 0, 0, 0, 1})).factors.size() == 1);
  }
  SUBCASE("a^8 - 1") {
    Factorization f = factor_q(q({-1, 0, 0, 0, 0, 0, 0, 0, 1}));
    REQUIRE(f.factors.size() == 4);
    CHECK(f.factors[0].poly == q({-1, 1}));
    CHECK(f.factors[1].poly == q({1, 1}));
    CHECK(f.factors[2].poly == q({1, 0, 1}));
    CHECK(f.factors[3].poly == q({1, 0, 0, 0, 1}));
  }
  SUBCASE("multiplicities and content") {
    UPoly p = q({-1, 1}) * q({-1, 1}) * q({2, 0, 1}) * NFElem(Rat(3, 2));
    Factorization f = factor_q(p);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].multiplicity == 2);
    CHECK(f.factors[1].poly == q({2, 0, 1}));
    CHECK(f.unit == NFElem(Rat(3, 2)));
    CHECK(f.product() == p);
  }
  SUBCASE("Swinnerton-Dyer style quartic stays irreducible") {
    // y^4 - 10y^2 + 1 splits modulo every prime
    CHECK(is_irreducible(q({1, 0, -10, 0, 1})));
  }
}

TEST_CASE("factorization over extensions") {
  SUBCASE("y^3 - 2 over the cube root field") {
    FieldPtr l = cube_root_two();
    NFElem eta = NFElem::generator(l);
    Factorization f = factor_ext(q({-2, 0, 0, 1}).embed(l));
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].poly == over(l, {-eta, 1}));
    CHECK(f.factors[1].poly == over(l, {eta * eta, eta, 1}));
  }
  SUBCASE("simplest cubic splits into three linear factors") {
    FieldPtr l = simplest_cubic();
    NFElem eta = NFElem::generator(l);
    Factorization f = factor_ext(q({1, -3, 0, 1}).embed(l));
    REQUIRE(f.factors.size() == 3);
    std::vector<NFElem> roots;
    for (const auto& fac : f.factors) {
      REQUIRE(fac.poly.degree() == 1);
      roots.push_back(-fac.poly.coeff(0));
    }
    for (const NFElem& r : {eta, eta * eta - 2, -eta * eta - eta + 2})
      CHECK(std::find(roots.begin(), roots.end(), r) != roots.end());
    CHECK(std::find(roots.begin(), roots.end(), -eta * eta + eta + 2) == roots.end());
  }
  SUBCASE("y^2 + 1 over Q(i)") {
    FieldPtr k = gaussian();
    NFElem i = NFElem::generator(k);
    Factorization f = factor_ext(q({1, 0, 1}).embed(k));
    REQUIRE(f.factors.size() == 2);
    CHECK(f.product() == q({1, 0, 1}).embed(k));
    std::vector<NFElem> roots{-f.factors[0].poly.coeff(0), -f.factors[1].poly.coeff(0)};
    CHECK(std::find(roots.begin(), roots.end(), i) != roots.end());
    CHECK(std::find(roots.begin(), roots.end(), -i) != roots.end());
  }
  SUBCASE("tower of depth two splits y^3 - 2 completely") {
    FieldPtr m = adjoin_j(cube_root_two());
    Factorization f = factor_ext(q({-2, 0, 0, 1}).embed(m));
    CHECK(f.factors.size() == 3);
    CHECK(f.product() == q({-2, 0, 0, 1}).embed(m));
  }
  SUBCASE("a^4 + 1 over Q(2^(1/8))") {
    FieldPtr l = NumberField::make(q({-2, 0, 0, 0, 0, 0, 0, 0, 1}), "eta");
    NFElem s = NFElem::generator(l).pow(4);
    Factorization f = factor_ext(q({1, 0, 0, 0, 1}).embed(l));
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].poly.degree() == 2);
    CHECK(f.factors[1].poly.degree() == 2);
    CHECK(f.product() == q({1, 0, 0, 0, 1}).embed(l));
    CHECK(s * s == NFElem(2));
  }
  SUBCASE("reducible minimal polynomial is rejected") {
    CHECK_THROWS_AS(NumberField::make(q({-1, 0, 1}), "r"), std::invalid_argument);
  }
}

TEST_CASE("factorization properties on random input") {
  Rng rng(20261019);
  for (int trial = 0; trial < 25; ++trial) {
    UPoly p = UPoly::from_rationals({1});
    const int pieces = rng.uniform(1, 3);
    for (int k = 0; k < pieces; ++k) {
      const int deg = rng.uniform(1, 3);
      std::vector<Rat> c;
      for (int i = 0; i < deg; ++i) c.emplace_back(rng.uniform(-5, 5));
      c.emplace_back(rng.uniform(1, 3));
      p = p * UPoly::from_rationals(c);
    }
    Factorization f = factor_q(p);
    CHECK(f.product() == p);
    for (const auto& fac : f.factors) CHECK(is_irreducible(fac.poly));
    CHECK(factor_q(p).product() == f.product());
  }
  FieldPtr l = simplest_cubic();
  NFElem eta = NFElem::generator(l);
  for (int trial = 0; trial < 6; ++trial) {
    UPoly a = over(l, {eta * NFElem(rng.uniform(-3, 3)) + rng.uniform(-3, 3), 1});
    UPoly b = over(l, {NFElem(rng.uniform(-3, 3)), eta * NFElem(rng.uniform(-2, 2)), 1});
    Factorization f = factor_ext(a * b);
    CHECK(f.product() == a * b);
    for (const auto& fac : f.factors) CHECK(is_irreducible(fac.poly));
  }
}

TEST_CASE("tensor splitting") {
  SUBCASE("simplest cubic is Galois, sigma has order three") {
    FieldPtr l = simplest_cubic();
    NFElem eta = NFElem::generator(l);
    SplitResult s = split_tensor(l);
    REQUIRE(s.factors.size() == 3);
    CHECK(s.degree_sum() == 3);
    CHECK(s.roots[0] == eta);
    CHECK(s.factors[0] == over(l, {-eta, 1}));
    const NFElem sigma = eta * eta - 2;
    CHECK(std::find(s.roots.begin(), s.roots.end(), sigma) != s.roots.end());
    NFElem x = eta;
    for (int k = 0; k < 3; ++k) x = apply_isomorphism(x, sigma);
    CHECK(x == eta);
    CHECK(apply_isomorphism(apply_isomorphism(eta, sigma), sigma) == -eta * eta - eta + 2);
    CHECK(is_galois(l));
  }
  SUBCASE("cube root of two is not Galois") {
    FieldPtr l = cube_root_two();
    SplitResult s = split_tensor(l);
    REQUIRE(s.factors.size() == 2);
    CHECK(s.factors[0].degree() == 1);
    CHECK(s.factors[1].degree() == 2);
    CHECK(s.roots.size() == 1);
    CHECK(s.degree_sum() == 3);
    CHECK_FALSE(is_galois(l));
  }
  SUBCASE("cube roots of unity") {
    FieldPtr l = NumberField::make(q({1, 1, 1}), "z");
    NFElem z = NFElem::generator(l);
    SplitResult s = split_tensor(l);
    REQUIRE(s.factors.size() == 2);
    CHECK(s.factors[0] == over(l, {-z, 1}));
    CHECK(s.factors[1] == over(l, {z + 1, 1}));
    CHECK(is_galois(l));
  }
  SUBCASE("relative extension over a tower") {
    FieldPtr m = adjoin_j(cube_root_two());
    SplitResult s = split_tensor(m);
    CHECK(s.factors.size() == 2);
    CHECK(is_galois(m));
  }
  SUBCASE("degree one") {
    FieldPtr l = NumberField::make(q({-3, 1}), "t");
    CHECK(is_galois(l));
  }
}

TEST_CASE("cubic discriminant") {
  CHECK(cubic_discriminant(0, -3, -1) == 81);
  CHECK(cubic_discriminant(0, 1, -1) == -31);
  CHECK(cubic_discriminant(0, 0, 0) == 0);
  CHECK(general_cubic(0, -3, -1) == q({1, -3, 0, 1}));

  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Rat w1 = rng.small_rat(6), w2 = rng.small_rat(6), w3 = rng.small_rat(6);
    UPoly p = general_cubic(w1, w2, w3);
    CHECK(cubic_discriminant(w1, w2, w3) == -resultant(p, p.derivative()).rational());
  }
}

TEST_CASE("finite rational groups") {
  SUBCASE("cyclic of order three") {
    std::vector<RatMap> g{map("y"), map("1 - 1/y"), map("1/(1-y)")};
    GroupTable t = verify_group(g);
    CHECK(t.order == 3);
    CHECK(t.identity == 0);
    CHECK(t.cayley[1][1] == 2);
    CHECK(t.cayley[1][2] == 0);
    CHECK(t.inverse[1] == 2);
    InvariantCheck c = generating_invariant_check(g, map("(y^3 - 3*y + 1)/(y^2 - y)"));
    CHECK(c.invariant);
    CHECK(c.principal);
    CHECK(c.product.size() == 4);
  }
  SUBCASE("order four over Q(i)") {
    FieldPtr k = gaussian();
    std::vector<Var> gens{Var::symbol("i")};
    std::vector<RatMap> g{map("y", k, gens), map("-y", k, gens), map("i/y", k, gens), map("-i/y", k, gens)};
    GroupTable t = verify_group(g);
    CHECK(t.order == 4);
    CHECK(t.cayley[2][2] == 0);
    InvariantCheck c = generating_invariant_check(g, map("(y^4 - 1)/y^2", k, gens));
    CHECK(c.invariant);
    CHECK(c.principal);
  }
  SUBCASE("order two") {
    std::vector<RatMap> g{map("y"), map("1/y")};
    CHECK(verify_group(g).order == 2);
    InvariantCheck c = generating_invariant_check(g, map("y + 1/y"));
    CHECK(c.invariant);
    CHECK(c.principal);
  }
  SUBCASE("non-invariant function is caught") {
    std::vector<RatMap> g{map("y"), map("1/y")};
    InvariantCheck c = generating_invariant_check(g, map("y^2"));
    CHECK_FALSE(c.invariant);
    CHECK(c.failing == std::vector<int>{1});
    CHECK_FALSE(c.principal);
  }
  SUBCASE("not closed") {
    std::vector<RatMap> g{map("y"), map("y + 1")};
    CHECK_THROWS_AS(verify_group(g), NotAGroup);
    std::vector<RatMap> h{map("-y"), map("1/y")};
    CHECK_THROWS_AS(verify_group(h), NotAGroup);
  }
  SUBCASE("composition") {
    CHECK(map("1 - 1/y").compose(map("1 - 1/y")) == map("1/(1-y)"));
    CHECK(map("y^2 + 1").compose(map("1/y")) == map("(1 + y^2)/y^2"));
    CHECK(map("(y^2 + y)/(y^2 - 1)") == map("y/(y - 1)"));
  }
}

TEST_CASE("Chinese remainder decomposition of y^3 - 1") {
  CrtDecomposition d = crt_decomposition(q({-1, 0, 0, 1}));
  REQUIRE(d.factors.size() == 2);
  const Rat third(1, 3);
  // -(y+2)/3 · (y - 1) ≡ idempotent for y^2 + y + 1, (y^2 + y + 1)/3 for y - 1
  CHECK(d.idempotents[0] == q({1, 1, 1}) * NFElem(third));
  CHECK(d.idempotents[1] == q({2, 1}) * q({-1, 1}) * NFElem(-third));
  CHECK(d.idempotents[0] + d.idempotents[1] == q({1}));
  const UPoly p = q({-1, 0, 0, 1});
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(divmod(d.idempotents[i] * d.idempotents[i] - d.idempotents[i], p).second.is_zero());
    CHECK(divmod(d.idempotents[i], d.factors[1 - i]).second.is_zero());
  }
  CHECK_THROWS(crt_decomposition(q({1, -2, 1})));
}

TEST_CASE("Hopf comorphisms") {
  SUBCASE("multiplicative group") {
    GroupLaw law{exprs({"ba1*a1"}), {Rat(1)}};
    HopfResult h = hopf_comorphisms(exprs({"by/y"}), law);
    CHECK(h.diagonal[0] == rebar(parse_expr("by/y"), {0, 2}));
    CHECK(h.augmentation[0] == parse_expr("1"));
    CHECK(h.antipode[0] == parse_expr("y/by"));
    CHECK(h.coassociative);
    CHECK(h.counit);
    CHECK(h.antipode_law);
  }
  SUBCASE("affine group of the line") {
    GroupLaw law{exprs({"ba1*a1", "ba1*a2 + ba2"}), {Rat(1), Rat(0)}};
    HopfResult h = hopf_comorphisms(exprs({"by_x/y_x", "by - y*by_x/y_x"}), law);
    CHECK(h.augmentation == exprs({"1", "0"}));
    CHECK(h.antipode == exprs({"y_x/by_x", "y - by*y_x/by_x"}));
    CHECK(h.coassociative);
    CHECK(h.counit);
    CHECK(h.antipode_law);
    CHECK(apply_law(law, exprs({"ba1", "ba2"}), exprs({"a1", "a2"})) == exprs({"ba1*a1", "ba1*a2 + ba2"}));
  }
  SUBCASE("law that does not match the parameter") {
    GroupLaw law{exprs({"ba1 + a1"}), {Rat(0)}};
    CHECK_THROWS_AS(hopf_comorphisms(exprs({"by/y"}), law), NotExpressible);
  }
}

TEST_CASE("linear disjointness") {
  SUBCASE("cube root of two against its conjugate") {
    FieldPtr m = adjoin_j(cube_root_two());
    NFElem eta = NFElem::generator(m->base()).embed(m), j = NFElem::generator(m);
    std::vector<NFElem> a{NFElem(m, 1), eta, eta * eta}, b{NFElem(m, 1), j * eta, j * j * eta * eta};
    DisjointnessResult r = linear_disjointness_probe(a, b);
    CHECK_FALSE(r.independent);
    QVector rel(9, Rat(0));
    rel[0 * 3 + 2] = 1;
    rel[1 * 3 + 1] = 1;
    rel[2 * 3 + 0] = 1;
    CHECK(combine(a, b, rel).is_zero());
    for (const auto& v : r.relations) CHECK(combine(a, b, v).is_zero());
  }
  SUBCASE("cube root field and cube roots of unity") {
    FieldPtr m = adjoin_j(cube_root_two());
    NFElem eta = NFElem::generator(m->base()), j = NFElem::generator(m);
    DisjointnessResult r = linear_disjointness_probe({NFElem(1), eta}, {NFElem(1), j});
    CHECK(r.independent);
    CHECK(r.relations.empty());
  }
  SUBCASE("square root of two inside an eighth-root tower") {
    FieldPtr l = NumberField::make(q({-2, 0, 0, 0, 0, 0, 0, 0, 1}), "eta");
    NFElem s = NFElem::generator(l).pow(4);
    FieldPtr m = NumberField::make(over(l, {NFElem(1), -s, NFElem(1)}), "alpha");
    NFElem alpha = NFElem::generator(m);
    CHECK(alpha.pow(4) == NFElem(m, -1));
    std::vector<NFElem> a{NFElem(1), s}, b{NFElem(1), alpha, alpha.pow(2), alpha.pow(3)};
    DisjointnessResult r = linear_disjointness_probe(a, b);
    CHECK_FALSE(r.independent);
    QVector rel(8, Rat(0));
    rel[0] = 1;
    rel[2] = 1;
    rel[4 + 1] = -1;
    CHECK(combine(a, b, rel).is_zero());
    for (const auto& v : r.relations) CHECK(combine(a, b, v).is_zero());
  }
}

TEST_CASE("conversions from expressions") {
  FieldPtr l = cube_root_two();
  std::vector<Var> gens{Var::symbol("eta")};
  UPoly p = to_upoly(parse_expr("y^2 + eta*y + eta^2").num(), Var::parse("y"), l, gens);
  NFElem eta = NFElem::generator(l);
  CHECK(p == over(l, {eta * eta, eta, 1}));
  CHECK(to_nfelem(parse_expr("eta^3").num(), l, gens) == NFElem(l, 2));
  CHECK_THROWS_AS(to_nfelem(parse_expr("zeta").num(), l, gens), ParseError);
}
