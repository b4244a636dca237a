#include "dgal/fieldops.hpp"

#include <set>
#include <stdexcept>

namespace dgal {

// ---------------------------------------------------------------- VectorField

VectorField::VectorField(std::map<Var, RatFunc> coefficients) {
  for (auto& [v, c] : coefficients)
    if (!c.is_zero()) coeffs_.emplace(v, std::move(c));
}

RatFunc VectorField::coefficient(const Var& v) const {
  auto it = coeffs_.find(v);
  return it == coeffs_.end() ? RatFunc() : it->second;
}

void VectorField::add(const Var& v, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.emplace(v, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) coeffs_.erase(it);
}

RatFunc VectorField::apply(const RatFunc& f) const {
  RatFunc acc;
  for (const auto& [v, c] : coeffs_)
    if (f.mentions(v)) acc += c * partial_derivative(f, v);
  return acc;
}

VectorField VectorField::operator+(const VectorField& o) const {
  VectorField r = *this;
  for (const auto& [v, c] : o.coeffs_) r.add(v, c);
  return r;
}

VectorField VectorField::operator-(const VectorField& o) const {
  VectorField r = *this;
  for (const auto& [v, c] : o.coeffs_) r.add(v, -c);
  return r;
}

VectorField VectorField::operator*(const RatFunc& c) const {
  VectorField r;
  for (const auto& [v, a] : coeffs_) r.add(v, a * c);
  return r;
}

std::string VectorField::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (const auto& [v, c] : coeffs_) {
    if (!s.empty()) s += " + ";
    s += c.to_string() + "*d/d" + v.name();
  }
  return s;
}

VectorField bracket_vf(const VectorField& a, const VectorField& b) {
  std::set<Var> support;
  for (const auto& [v, c] : a.coefficients()) support.insert(v);
  for (const auto& [v, c] : b.coefficients()) support.insert(v);
  VectorField r;
  for (const Var& v : support) r.add(v, a.apply(b.coefficient(v)) - b.apply(a.coefficient(v)));
  return r;
}

// ----------------------------------------------------------------- JetSection

JetSection::JetSection(int dim, int q, Base over) : dim_(dim), q_(q), over_(over) {
  if (dim < 1 || q < 0) throw std::invalid_argument("JetSection: bad dimension or order");
  for (const auto& mu : MultiIndex::up_to(dim, q))
    for (int k = 1; k <= dim; ++k) comps_.emplace(std::make_pair(k, mu), RatFunc());
}

Var JetSection::base_var(int i) const { return over_ == Base::Source ? Var::source(i) : Var::jet(i); }

const RatFunc& JetSection::at(int k, const MultiIndex& mu) const {
  auto it = comps_.find({k, mu});
  if (it == comps_.end()) throw std::out_of_range("JetSection: component out of range");
  return it->second;
}

const RatFunc& JetSection::at(int k, const std::vector<int>& dirs) const { return at(k, MultiIndex::from_dirs(dirs, dim_)); }

void JetSection::set(int k, const MultiIndex& mu, RatFunc value) {
  auto it = comps_.find({k, mu});
  if (it == comps_.end()) throw std::out_of_range("JetSection: component out of range");
  it->second = std::move(value);
}

void JetSection::set(int k, const std::vector<int>& dirs, RatFunc value) {
  set(k, MultiIndex::from_dirs(dirs, dim_), std::move(value));
}

JetSection JetSection::truncated(int q) const {
  if (q > q_) throw std::invalid_argument("JetSection: truncation above the order");
  JetSection r(dim_, q, over_);
  for (auto& [key, v] : r.comps_) v = comps_.at(key);
  return r;
}

JetSection JetSection::zero_lift() const {
  JetSection r(dim_, q_ + 1, over_);
  for (const auto& [key, v] : comps_) r.comps_[key] = v;
  return r;
}

bool JetSection::is_holonomic() const { return q_ == 0 || spencer(*this).is_zero(); }

JetSection JetSection::holonomic(const std::vector<RatFunc>& field, int q, Base over) {
  const int dim = static_cast<int>(field.size());
  JetSection r(dim, q, over);
  for (const auto& mu : MultiIndex::up_to(dim, q))
    for (int k = 1; k <= dim; ++k) {
      RatFunc v = field[k - 1];
      for (int d : mu.dirs()) v = partial_derivative(v, r.base_var(d));
      r.set(k, mu, std::move(v));
    }
  return r;
}

JetSection JetSection::operator+(const JetSection& o) const {
  JetSection r = *this;
  for (auto& [key, v] : r.comps_) v += o.comps_.at(key);
  return r;
}

JetSection JetSection::operator-(const JetSection& o) const {
  JetSection r = *this;
  for (auto& [key, v] : r.comps_) v -= o.comps_.at(key);
  return r;
}

bool JetSection::operator==(const JetSection& o) const {
  return dim_ == o.dim_ && q_ == o.q_ && over_ == o.over_ && comps_ == o.comps_;
}

// ------------------------------------------------------------------ Spencer

const RatFunc& SpencerImage::at(int k, const MultiIndex& mu, int i) const { return entries_.at({k, mu, i}); }

void SpencerImage::set(int k, const MultiIndex& mu, int i, RatFunc value) { entries_[{k, mu, i}] = std::move(value); }

bool SpencerImage::is_zero() const {
  for (const auto& [key, v] : entries_)
    if (!v.is_zero()) return false;
  return true;
}

JetSection SpencerImage::contract(const std::vector<RatFunc>& v) const {
  JetSection r(dim_, q_, over_);
  for (const auto& mu : MultiIndex::up_to(dim_, q_))
    for (int k = 1; k <= dim_; ++k) {
      RatFunc acc;
      for (int i = 1; i <= dim_; ++i)
        if (!v[i - 1].is_zero()) acc += v[i - 1] * at(k, mu, i);
      r.set(k, mu, std::move(acc));
    }
  return r;
}

JetSection SpencerImage::along(int i) const {
  std::vector<RatFunc> v(dim_);
  v[i - 1] = RatFunc(Rat(1));
  return contract(v);
}

SpencerImage spencer(const JetSection& xi) {
  if (xi.order() < 1) throw std::invalid_argument("spencer: section of order >= 1 required");
  const int q = xi.order() - 1;
  SpencerImage img(xi.dim(), q, xi.over());
  for (const auto& mu : MultiIndex::up_to(xi.dim(), q))
    for (int k = 1; k <= xi.dim(); ++k)
      for (int i = 1; i <= xi.dim(); ++i)
        img.set(k, mu, i, partial_derivative(xi.at(k, mu), xi.base_var(i)) - xi.at(k, mu.successor(i)));
  return img;
}

JetSection interior_spencer(const JetSection& zeta, const JetSection& xi) {
  std::vector<RatFunc> v;
  for (int i = 1; i <= zeta.dim(); ++i) v.push_back(zeta.at(i));
  return spencer(xi).contract(v);
}

// ------------------------------------------------------------------ brackets

namespace {

constexpr int kFirst = 0;
constexpr int kSecond = 1;

Bindings formal_bindings(int family, const JetSection& s) {
  Bindings b;
  for (const auto& [key, v] : s.components()) b[Var::formal(family, key.first, key.second.dirs())] = v;
  return b;
}

RatFunc formal(int family, int k, const std::vector<int>& dirs = {}) { return RatFunc(Var::formal(family, k, dirs)); }

void require_compatible(const JetSection& a, const JetSection& b) {
  if (a.dim() != b.dim() || a.order() != b.order() || a.over() != b.over())
    throw std::invalid_argument("sections of different shape");
}

}  // namespace

JetSection algebraic_bracket(const JetSection& xi, const JetSection& eta) {
  require_compatible(xi, eta);
  if (xi.order() < 1) throw std::invalid_argument("algebraic_bracket: order >= 1 required");
  const int dim = xi.dim(), q = xi.order() - 1;
  const JetContext ctx{dim, dim, xi.order(), 0};
  DerivOptions opt;
  opt.formal = FormalMode::OverSource;

  Bindings bind = formal_bindings(kFirst, xi);
  bind.merge(formal_bindings(kSecond, eta));

  JetSection out(dim, q, xi.over());
  for (int k = 1; k <= dim; ++k) {
    RatFunc base;
    for (int r = 1; r <= dim; ++r)
      base += formal(kFirst, r) * formal(kSecond, k, {r}) - formal(kSecond, r) * formal(kFirst, k, {r});
    std::map<MultiIndex, RatFunc> expanded;
    for (const auto& mu : MultiIndex::up_to(dim, q)) {
      RatFunc e = mu.order() == 0 ? base : total_derivative(expanded.at(mu.parent()), mu.last_dir(), ctx, opt);
      out.set(k, mu, substitute(e, bind));
      expanded.emplace(mu, std::move(e));
    }
  }
  return out;
}

JetSection algebroid_bracket(const JetSection& xi, const JetSection& eta, const std::optional<JetSection>& xi_lift,
                             const std::optional<JetSection>& eta_lift) {
  require_compatible(xi, eta);
  JetSection xl = xi_lift ? *xi_lift : xi.zero_lift();
  JetSection el = eta_lift ? *eta_lift : eta.zero_lift();
  if (xl.order() != xi.order() + 1 || xl.truncated(xi.order()) != xi || el.order() != eta.order() + 1 ||
      el.truncated(eta.order()) != eta)
    throw std::invalid_argument("algebroid_bracket: lift does not project onto the section");
  return algebraic_bracket(xl, el) + interior_spencer(xi, el) - interior_spencer(eta, xl);
}

JetSection formal_lie_derivative(const JetSection& xi, const JetSection& eta) {
  const int q = eta.order();
  if (xi.order() != q + 1) throw std::invalid_argument("formal_lie_derivative: orders do not match");
  return algebroid_bracket(xi.truncated(q), eta, xi) + interior_spencer(eta, xi);
}

// --------------------------------------------------------- prolonged fields

VectorField prolong_vertical(const VectorField& eta, int q, const JetContext& ctx) {
  VectorField out;
  for (const auto& [v, c] : eta.coefficients()) {
    if (v.kind() != VarKind::Jet || v.order() != 0 || v.bar() != 0)
      throw std::invalid_argument("prolong_vertical: field must be vertical over the target");
    std::map<MultiIndex, RatFunc> d;
    for (const auto& mu : MultiIndex::up_to(ctx.n, q)) {
      RatFunc e = mu.order() == 0 ? c : total_derivative(d.at(mu.parent()), mu.last_dir(), ctx);
      out.add(Var::jet(v.component(), mu.dirs()), e);
      d.emplace(mu, std::move(e));
    }
  }
  return out;
}

VectorField sharp(const JetSection& eta, const JetContext& ctx) {
  if (eta.over() != Base::Target || eta.dim() != ctx.m) throw std::invalid_argument("sharp: section over the target required");
  DerivOptions opt;
  opt.formal = FormalMode::OverTarget;
  const Bindings bind = formal_bindings(kFirst, eta);
  VectorField out;
  for (int k = 1; k <= ctx.m; ++k) {
    std::map<MultiIndex, RatFunc> d;
    for (const auto& mu : MultiIndex::up_to(ctx.n, eta.order())) {
      RatFunc e = mu.order() == 0 ? formal(kFirst, k) : total_derivative(d.at(mu.parent()), mu.last_dir(), ctx, opt);
      out.add(Var::jet(k, mu.dirs()), substitute(e, bind));
      d.emplace(mu, std::move(e));
    }
  }
  return out;
}

VectorField flat(const JetSection& xi, const JetContext& ctx) {
  if (xi.over() != Base::Source || xi.dim() != ctx.n) throw std::invalid_argument("flat: section over the source required");
  DerivOptions opt;
  opt.formal = FormalMode::OverSource;
  const Bindings bind = formal_bindings(kFirst, xi);
  VectorField out;
  for (int i = 1; i <= ctx.n; ++i) out.add(Var::source(i), xi.at(i));
  // Vertical part: d_μ(−F^r y^k_r) + F^r y^k_{μ+1_r}.
  for (int k = 1; k <= ctx.m; ++k) {
    RatFunc evolution;
    for (int r = 1; r <= ctx.n; ++r) evolution -= formal(kFirst, r) * RatFunc(Var::jet(k, {r}));
    std::map<MultiIndex, RatFunc> d;
    for (const auto& mu : MultiIndex::up_to(ctx.n, xi.order())) {
      RatFunc e = mu.order() == 0 ? evolution : total_derivative(d.at(mu.parent()), mu.last_dir(), ctx, opt);
      RatFunc coeff = e;
      for (int r = 1; r <= ctx.n; ++r) coeff += formal(kFirst, r) * RatFunc(Var::jet(k, mu.successor(r).dirs()));
      out.add(Var::jet(k, mu.dirs()), substitute(coeff, bind));
      d.emplace(mu, std::move(e));
    }
  }
  return out;
}

RatFunc commutation_residual(const RatFunc& phi, const JetSection& section, int i, const JetContext& ctx) {
  if (section.order() < 1) throw std::invalid_argument("commutation_residual: section of order >= 1 required");
  const JetSection lower = section.truncated(section.order() - 1);
  const SpencerImage d = spencer(section);
  const RatFunc di_phi = total_derivative(phi, i, ctx);
  if (section.over() == Base::Source) {
    RatFunc rhs = total_derivative(flat(lower, ctx).apply(phi), i, ctx);
    for (int r = 1; r <= ctx.n; ++r) rhs -= section.at(r, {i}) * total_derivative(phi, r, ctx);
    rhs -= flat(d.along(i), ctx).apply(phi);
    return flat(section, ctx).apply(di_phi) - rhs;
  }
  RatFunc rhs = total_derivative(sharp(lower, ctx).apply(phi), i, ctx);
  for (int r = 1; r <= ctx.m; ++r) rhs -= RatFunc(Var::jet(r, {i})) * sharp(d.along(r), ctx).apply(phi);
  return sharp(section, ctx).apply(di_phi) - rhs;
}

JetSection random_section(Rng& rng, int dim, int q, Base over, int max_degree, int terms, int coef) {
  JetSection s(dim, q, over);
  std::vector<Var> base;
  for (int i = 1; i <= dim; ++i) base.push_back(s.base_var(i));
  for (const auto& [key, v] : s.components()) s.set(key.first, key.second, RatFunc(random_poly(rng, base, max_degree, terms, coef)));
  return s;
}

}  // namespace dgal
