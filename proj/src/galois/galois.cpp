#include "dgal/galois.hpp"

#include <algorithm>
#include <stdexcept>

#include "dgal/errors.hpp"

namespace dgal {

// ------------------------------------------------------------- conversions

namespace {

std::vector<FieldPtr> tower_of(const FieldPtr& f) {
  std::vector<FieldPtr> t;
  for (FieldPtr g = f; g; g = g->base()) t.push_back(g);
  std::reverse(t.begin(), t.end());
  return t;
}

}  // namespace

NFElem to_nfelem(const MPoly& p, const FieldPtr& f, const std::vector<Var>& gens) {
  const auto tower = tower_of(f);
  NFElem acc(f, 0);
  for (const auto& [m, c] : p.terms()) {
    NFElem term(f, c);
    for (const auto& [v, e] : m.factors()) {
      auto it = std::find(gens.begin(), gens.end(), v);
      if (it == gens.end() || static_cast<std::size_t>(it - gens.begin()) >= tower.size())
        throw ParseError("symbol " + v.name() + " is not a field generator");
      term *= NFElem::generator(tower[it - gens.begin()]).embed(f).pow(e);
    }
    acc += term;
  }
  return acc;
}

UPoly to_upoly(const MPoly& p, const Var& var, const FieldPtr& f, const std::vector<Var>& gens) {
  std::vector<NFElem> c;
  for (const auto& part : p.coefficients_in(var)) c.push_back(to_nfelem(part, f, gens));
  return UPoly(f, std::move(c));
}

// ----------------------------------------------------------- tensor split

int SplitResult::degree_sum() const {
  int s = 0;
  for (const auto& f : factors) s += f.degree();
  return s;
}

SplitResult split_tensor(const FieldPtr& l) {
  if (!l) throw std::invalid_argument("split_tensor needs a proper extension");
  SplitResult out;
  out.field = l;
  const NFElem eta = NFElem::generator(l);
  Factorization fz = factor_ext(l->minpoly().embed(l));
  std::vector<UPoly> linear, rest;
  for (const auto& f : fz.factors) (f.poly.degree() == 1 ? linear : rest).push_back(f.poly);
  auto id = std::find_if(linear.begin(), linear.end(), [&](const UPoly& f) { return f.coeff(0) == -eta; });
  if (id == linear.end()) throw std::logic_error("generator is not a root of its minimal polynomial");
  std::rotate(linear.begin(), id, id + 1);
  for (const auto& f : linear) {
    out.factors.push_back(f);
    out.roots.push_back(-f.coeff(0));
  }
  for (const auto& f : rest) out.factors.push_back(f);
  // (ȳ − y) divides P̄ − P: checked through the first factor.
  if (!out.factors[0].compose(UPoly::x(l)).evaluate(eta).is_zero()) throw std::logic_error("identity factor missing");
  return out;
}

bool is_galois(const FieldPtr& l) {
  if (!l || l->degree() == 1) return true;
  SplitResult s = split_tensor(l);
  return static_cast<int>(s.roots.size()) == l->degree();
}

NFElem apply_isomorphism(const NFElem& x, const NFElem& image) {
  const FieldPtr& f = image.field();
  NFElem e = x.embed(f);
  NFElem acc(f, 0), power(f, 1);
  for (const auto& c : e.coeffs()) {
    acc += c * power;
    power *= image;
  }
  return acc;
}

UPoly general_cubic(const Rat& w1, const Rat& w2, const Rat& w3) { return UPoly::from_rationals({-w3, w2, -w1, 1}); }

Rat cubic_discriminant(const Rat& w1, const Rat& w2, const Rat& w3) {
  return -27 * w3 * w3 + 18 * w1 * w2 * w3 - 4 * w2 * w2 * w2 - 4 * w1 * w1 * w1 * w3 + w1 * w1 * w2 * w2;
}

// ------------------------------------------------------------------ RatMap

RatMap::RatMap(const UPoly& num, const UPoly& den) {
  if (den.is_zero()) throw DenominatorVanishes("rational map with zero denominator");
  FieldPtr f = is_subfield(num.field(), den.field()) ? den.field() : num.field();
  UPoly n = num.embed(f), d = den.embed(f);
  if (n.is_zero()) {
    num_ = n;
    den_ = UPoly::constant(f, NFElem(f, 1));
    return;
  }
  UPoly g = gcd(n, d);
  n = divmod(n, g).first;
  d = divmod(d, g).first;
  NFElem inv = d.lead().inverse();
  num_ = n * inv;
  den_ = d * inv;
}

RatMap RatMap::identity(const FieldPtr& f) { return RatMap(UPoly::x(f), UPoly::constant(f, NFElem(f, 1))); }

RatMap RatMap::constant(const FieldPtr& f, const NFElem& c) {
  return RatMap(UPoly::constant(f, c), UPoly::constant(f, NFElem(f, 1)));
}

RatMap RatMap::compose(const RatMap& inner) const {
  const int top = std::max(num_.degree(), den_.degree());
  FieldPtr f = is_subfield(field(), inner.field()) ? inner.field() : field();
  std::vector<UPoly> npow{UPoly::constant(f, NFElem(f, 1))}, dpow{UPoly::constant(f, NFElem(f, 1))};
  for (int i = 1; i <= top; ++i) {
    npow.push_back(npow.back() * inner.num_);
    dpow.push_back(dpow.back() * inner.den_);
  }
  UPoly n(f), d(f);
  for (int i = 0; i <= top; ++i) {
    UPoly basis = npow[i] * dpow[top - i];
    n = n + basis * num_.coeff(i);
    d = d + basis * den_.coeff(i);
  }
  return RatMap(n, d);
}

RatMap RatMap::operator+(const RatMap& o) const { return RatMap(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
RatMap RatMap::operator-(const RatMap& o) const { return RatMap(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }
RatMap RatMap::operator*(const RatMap& o) const { return RatMap(num_ * o.num_, den_ * o.den_); }
RatMap RatMap::operator/(const RatMap& o) const { return RatMap(num_ * o.den_, den_ * o.num_); }
bool RatMap::operator==(const RatMap& o) const { return num_ == o.num_ && den_ == o.den_; }

std::string RatMap::to_string(const std::string& var) const {
  if (den_.degree() == 0) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

RatMap to_ratmap(const RatFunc& f, const Var& var, const FieldPtr& field, const std::vector<Var>& gens) {
  return RatMap(to_upoly(f.num(), var, field, gens), to_upoly(f.den(), var, field, gens));
}

GroupTable verify_group(const std::vector<RatMap>& elements) {
  GroupTable t;
  t.order = static_cast<int>(elements.size());
  if (elements.empty()) throw NotAGroup("empty set of maps", -1, -1);
  auto index_of = [&](const RatMap& m) {
    for (int i = 0; i < t.order; ++i)
      if (elements[i] == m) return i;
    return -1;
  };
  t.identity = index_of(RatMap::identity(elements[0].field()));
  if (t.identity < 0) throw NotAGroup("identity map missing", -1, -1);
  t.cayley.assign(t.order, std::vector<int>(t.order, -1));
  for (int i = 0; i < t.order; ++i)
    for (int j = 0; j < t.order; ++j) {
      RatMap c = elements[i].compose(elements[j]);
      int k = index_of(c);
      if (k < 0) throw NotAGroup("composition " + c.to_string() + " leaves the set", i, j);
      t.cayley[i][j] = k;
    }
  t.inverse.assign(t.order, -1);
  for (int i = 0; i < t.order; ++i) {
    for (int j = 0; j < t.order; ++j)
      if (t.cayley[i][j] == t.identity && t.cayley[j][i] == t.identity) t.inverse[i] = j;
    if (t.inverse[i] < 0) throw NotAGroup("element without inverse", i, -1);
  }
  return t;
}

InvariantCheck generating_invariant_check(const std::vector<RatMap>& group, const RatMap& phi) {
  InvariantCheck r;
  FieldPtr f = phi.field();
  for (const auto& g : group)
    if (is_subfield(f, g.field())) f = g.field();
  r.invariant = true;
  for (int i = 0; i < static_cast<int>(group.size()); ++i)
    if (!(phi.compose(group[i]) == phi)) {
      r.invariant = false;
      r.failing.push_back(i);
    }

  const RatMap one = RatMap::constant(f, NFElem(f, 1));
  r.product = {one};
  for (const auto& g : group) {
    std::vector<RatMap> next(r.product.size() + 1, RatMap::constant(f, NFElem(f, 0)));
    for (std::size_t k = 0; k < r.product.size(); ++k) {
      next[k + 1] = next[k + 1] + r.product[k];
      next[k] = next[k] - r.product[k] * g;
    }
    r.product = std::move(next);
  }

  // Numerator of Φ(ȳ) − Φ(y) in powers of ȳ: N_k D(y) − D_k N(y).
  const UPoly one_poly = UPoly::constant(f, NFElem(f, 1));
  const RatMap n_y(phi.num(), one_poly), d_y(phi.den(), one_poly);
  const int top = std::max(phi.num().degree(), phi.den().degree());
  std::vector<RatMap> numer;
  for (int k = 0; k <= top; ++k)
    numer.push_back(RatMap::constant(f, phi.num().coeff(k)) * d_y - RatMap::constant(f, phi.den().coeff(k)) * n_y);
  while (!numer.empty() && numer.back().is_zero()) numer.pop_back();
  if (numer.size() != r.product.size()) return r;
  r.unit = numer.back() / r.product.back();
  r.principal = true;
  for (std::size_t k = 0; k < numer.size(); ++k)
    if (!(numer[k] == r.unit * r.product[k])) r.principal = false;
  return r;
}

// -------------------------------------------------------------------- CRT

CrtDecomposition crt_decomposition(const UPoly& p) {
  CrtDecomposition out;
  Factorization fz = factor_ext(p);
  for (const auto& f : fz.factors) {
    if (f.multiplicity != 1) throw std::invalid_argument("CRT decomposition needs a squarefree polynomial");
    out.factors.push_back(f.poly);
  }
  const UPoly monic = p.monic();
  for (const auto& pi : out.factors) {
    UPoly cofactor = divmod(monic, pi).first;
    ExtendedGcd eg = extended_gcd(cofactor, pi);
    out.idempotents.push_back(divmod(eg.u * cofactor, monic).second);
  }
  return out;
}

// ------------------------------------------------------------------ Hopf

RatFunc rebar(const RatFunc& f, const std::vector<int>& map) {
  Bindings b;
  for (const Var& v : f.variables()) {
    if (v.kind() != VarKind::Jet) continue;
    if (v.bar() >= static_cast<int>(map.size())) throw std::invalid_argument("rebar: bar level out of range");
    if (map[v.bar()] != v.bar()) b[v] = RatFunc(v.with_bar(map[v.bar()]));
  }
  return b.empty() ? f : substitute(f, b);
}

std::vector<RatFunc> apply_law(const GroupLaw& law, const std::vector<RatFunc>& b, const std::vector<RatFunc>& a) {
  Bindings bind;
  for (std::size_t i = 0; i < a.size(); ++i) {
    bind[Var::param(static_cast<int>(i) + 1, 0)] = a[i];
    bind[Var::param(static_cast<int>(i) + 1, 1)] = b[i];
  }
  std::vector<RatFunc> out;
  for (const auto& c : law.compose) out.push_back(substitute(c, bind));
  return out;
}

namespace {

std::vector<RatFunc> rebar_all(const std::vector<RatFunc>& v, const std::vector<int>& map) {
  std::vector<RatFunc> out;
  for (const auto& f : v) out.push_back(rebar(f, map));
  return out;
}

}  // namespace

HopfResult hopf_comorphisms(const std::vector<RatFunc>& parameter, const GroupLaw& law) {
  if (law.compose.size() != parameter.size() || law.identity.size() != parameter.size())
    throw std::invalid_argument("group law and parameter sizes differ");
  HopfResult r;
  const auto& a = parameter;
  const auto b = rebar_all(a, {1, 2});
  const auto c = rebar_all(a, {2, 3});
  std::vector<RatFunc> e(law.identity.begin(), law.identity.end());

  r.diagonal = rebar_all(a, {0, 2});
  if (apply_law(law, b, a) != r.diagonal)
    throw NotExpressible("diagonal image does not factor through the group law");

  r.augmentation = rebar_all(a, {0, 0});
  r.counit = r.augmentation == e && apply_law(law, e, a) == a && apply_law(law, a, e) == a;

  r.antipode = rebar_all(a, {1, 0});
  r.antipode_law = apply_law(law, r.antipode, a) == e && apply_law(law, a, r.antipode) == e;

  const auto lhs = apply_law(law, apply_law(law, c, b), a);
  const auto rhs = apply_law(law, c, apply_law(law, b, a));
  r.coassociative = lhs == rhs && lhs == rebar_all(a, {0, 3});
  return r;
}

// ------------------------------------------------------------ disjointness

DisjointnessResult linear_disjointness_probe(const std::vector<NFElem>& a, const std::vector<NFElem>& b) {
  std::vector<NFElem> products;
  FieldPtr ambient;
  for (const auto& x : a)
    for (const auto& y : b) {
      products.push_back(x * y);
      if (is_subfield(ambient, products.back().field())) ambient = products.back().field();
    }
  QMatrix m;
  for (const auto& p : products) {
    QVector coords = p.embed(ambient).absolute_coordinates();
    if (m.empty()) m.assign(coords.size(), QVector());
    for (std::size_t r = 0; r < coords.size(); ++r) m[r].push_back(coords[r]);
  }
  DisjointnessResult out;
  out.relations = nullspace_q(m, static_cast<int>(products.size()));
  out.independent = out.relations.empty();
  return out;
}

}  // namespace dgal
