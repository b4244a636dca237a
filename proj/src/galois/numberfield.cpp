#include "dgal/numberfield.hpp"

#include <stdexcept>

namespace dgal {

bool is_subfield(const FieldPtr& sub, const FieldPtr& f) {
  if (!sub) return true;
  for (const NumberField* g = f.get(); g; g = g->base().get())
    if (g == sub.get()) return true;
  return false;
}

namespace {

FieldPtr common_field(const FieldPtr& a, const FieldPtr& b) {
  if (a == b) return a;
  if (is_subfield(a, b)) return b;
  if (is_subfield(b, a)) return a;
  throw std::invalid_argument("number field elements from unrelated fields");
}

}  // namespace

// ------------------------------------------------------------------ NFElem

NFElem::NFElem(const Rat& c) : q_(c) {}

NFElem::NFElem(FieldPtr f, const Rat& c) : f_(std::move(f)) {
  if (!f_) {
    q_ = c;
  } else if (c != 0) {
    c_.push_back(NFElem(f_->base(), c));
  }
}

NFElem NFElem::generator(const FieldPtr& f) {
  if (!f) throw std::invalid_argument("Q has no generator");
  return from_coeffs(f, {NFElem(f->base(), 0), NFElem(f->base(), 1)});
}

NFElem NFElem::from_coeffs(const FieldPtr& f, std::vector<NFElem> coeffs) {
  if (!f) {
    if (coeffs.size() > 1) throw std::invalid_argument("from_coeffs over Q takes one coefficient");
    return coeffs.empty() ? NFElem(0) : NFElem(coeffs[0].rational());
  }
  for (auto& c : coeffs) c = c.embed(f->base());
  UPoly p(f->base(), std::move(coeffs));
  if (p.degree() >= f->degree()) p = divmod(p, f->minpoly()).second;
  NFElem e;
  e.f_ = f;
  e.c_ = p.coeffs();
  return e;
}

bool NFElem::is_zero() const { return f_ ? c_.empty() : q_ == 0; }

bool NFElem::is_rational() const {
  if (!f_) return true;
  return c_.empty() || (c_.size() == 1 && c_[0].is_rational());
}

Rat NFElem::rational() const {
  if (!f_) return q_;
  if (c_.empty()) return 0;
  if (c_.size() != 1) throw std::logic_error("element is not rational");
  return c_[0].rational();
}

NFElem NFElem::embed(const FieldPtr& target) const {
  if (f_ == target) return *this;
  if (!is_subfield(f_, target)) throw std::invalid_argument("cannot embed into a smaller field");
  NFElem inner = embed(target->base());
  NFElem e;
  e.f_ = target;
  if (!inner.is_zero()) e.c_.push_back(std::move(inner));
  return e;
}

NFElem NFElem::operator-() const {
  NFElem e = *this;
  e.q_ = -e.q_;
  for (auto& c : e.c_) c = -c;
  return e;
}

NFElem NFElem::operator+(const NFElem& o) const {
  FieldPtr f = common_field(f_, o.f_);
  if (!f) return NFElem(q_ + o.q_);
  NFElem a = embed(f), b = o.embed(f);
  if (a.c_.size() < b.c_.size()) std::swap(a, b);
  for (std::size_t i = 0; i < b.c_.size(); ++i) a.c_[i] += b.c_[i];
  while (!a.c_.empty() && a.c_.back().is_zero()) a.c_.pop_back();
  return a;
}

NFElem NFElem::operator-(const NFElem& o) const { return *this + (-o); }

NFElem NFElem::operator*(const NFElem& o) const {
  FieldPtr f = common_field(f_, o.f_);
  if (!f) return NFElem(q_ * o.q_);
  NFElem a = embed(f), b = o.embed(f);
  if (a.c_.empty() || b.c_.empty()) return NFElem(f, 0);
  // A rational factor only scales the coordinates.
  if (b.is_rational()) std::swap(a, b);
  if (a.is_rational()) {
    const NFElem r(a.rational());
    for (auto& c : b.c_) c = c * r;
    return b;
  }
  UPoly pa(f->base(), a.c_), pb(f->base(), b.c_);
  return from_coeffs(f, (pa * pb).coeffs());
}

NFElem NFElem::operator/(const NFElem& o) const { return *this * o.inverse(); }

NFElem NFElem::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  NFElem result = f_ ? NFElem(f_, 1) : NFElem(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

NFElem NFElem::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (!f_) return NFElem(Rat(1) / q_);
  ExtendedGcd eg = extended_gcd(UPoly(f_->base(), c_), f_->minpoly());
  if (eg.g.degree() != 0) throw std::logic_error("minimal polynomial is reducible");
  return from_coeffs(f_, eg.u.coeffs());
}

bool NFElem::operator==(const NFElem& o) const {
  FieldPtr f = common_field(f_, o.f_);
  if (!f) return q_ == o.q_;
  NFElem a = embed(f), b = o.embed(f);
  if (a.c_.size() != b.c_.size()) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (a.c_[i] != b.c_[i]) return false;
  return true;
}

QVector NFElem::absolute_coordinates() const {
  if (!f_) return {q_};
  const int inner = f_->base() ? f_->base()->absolute_degree() : 1;
  QVector out(static_cast<std::size_t>(inner) * f_->degree(), Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    QVector part = c_[i].absolute_coordinates();
    for (std::size_t j = 0; j < part.size(); ++j) out[i * inner + j] = part[j];
  }
  return out;
}

std::string NFElem::to_string() const {
  if (!f_) return dgal::to_string(q_);
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    std::string coeff = c_[i].to_string();
    const bool compound = !c_[i].is_rational();
    std::string power = i == 0 ? "" : (i == 1 ? f_->name() : f_->name() + "^" + std::to_string(i));
    std::string term;
    if (power.empty()) {
      term = compound && c_.size() > 1 ? "(" + coeff + ")" : coeff;
    } else if (coeff == "1") {
      term = power;
    } else if (coeff == "-1") {
      term = "-" + power;
    } else {
      term = (compound ? "(" + coeff + ")" : coeff) + "*" + power;
    }
    if (!out.empty()) out += term[0] == '-' ? " - " + term.substr(1) : " + " + term;
    else out = term;
  }
  return out;
}

// ------------------------------------------------------------------- UPoly

UPoly::UPoly(FieldPtr f, std::vector<NFElem> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
  for (auto& c : c_) c = c.embed(f_);
  trim();
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::x(const FieldPtr& f) { return UPoly(f, {NFElem(f, 0), NFElem(f, 1)}); }

UPoly UPoly::constant(const FieldPtr& f, const NFElem& c) { return UPoly(f, {c}); }

UPoly UPoly::from_rationals(const std::vector<Rat>& coeffs) {
  std::vector<NFElem> c(coeffs.begin(), coeffs.end());
  return UPoly(nullptr, std::move(c));
}

NFElem UPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return NFElem(f_, 0);
  return c_[i];
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  NFElem inv = lead().inverse();
  return *this * inv;
}

UPoly UPoly::derivative() const {
  std::vector<NFElem> d;
  for (int i = 1; i <= degree(); ++i) d.push_back(c_[i] * NFElem(f_, i));
  return UPoly(f_, std::move(d));
}

NFElem UPoly::evaluate(const NFElem& v) const {
  NFElem acc = NFElem(f_, 0).embed(is_subfield(f_, v.field()) ? v.field() : f_);
  for (int i = degree(); i >= 0; --i) acc = acc * v + c_[i];
  return acc;
}

UPoly UPoly::compose(const UPoly& inner) const {
  FieldPtr f = is_subfield(f_, inner.field()) ? inner.field() : f_;
  UPoly acc(f);
  for (int i = degree(); i >= 0; --i) acc = acc * inner.embed(f) + UPoly::constant(f, c_[i]);
  return acc;
}

UPoly UPoly::embed(const FieldPtr& target) const {
  if (f_ == target) return *this;
  return UPoly(target, c_);
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UPoly UPoly::operator+(const UPoly& o) const {
  FieldPtr f = common_field(f_, o.f_);
  std::vector<NFElem> c(std::max(c_.size(), o.c_.size()), NFElem(f, 0));
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c[i] + c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] = c[i] + o.c_[i];
  return UPoly(f, std::move(c));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const {
  FieldPtr f = common_field(f_, o.f_);
  if (is_zero() || o.is_zero()) return UPoly(f);
  std::vector<NFElem> c(c_.size() + o.c_.size() - 1, NFElem(f, 0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  }
  return UPoly(f, std::move(c));
}

UPoly UPoly::operator*(const NFElem& k) const {
  FieldPtr f = common_field(f_, k.field());
  std::vector<NFElem> c = c_;
  for (auto& e : c) e = e * k;
  return UPoly(f, std::move(c));
}

bool UPoly::operator==(const UPoly& o) const {
  if (c_.size() != o.c_.size()) return false;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i].is_zero()) continue;
    std::string coeff = c_[i].to_string();
    const bool compound = !c_[i].is_rational();
    std::string power = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    std::string term;
    if (power.empty()) {
      term = compound ? "(" + coeff + ")" : coeff;
    } else if (coeff == "1") {
      term = power;
    } else if (coeff == "-1") {
      term = "-" + power;
    } else {
      term = (compound ? "(" + coeff + ")" : coeff) + "*" + power;
    }
    if (!out.empty()) out += term[0] == '-' ? " - " + term.substr(1) : " + " + term;
    else out = term;
  }
  return out;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  FieldPtr f = is_subfield(a.field(), b.field()) ? b.field() : a.field();
  std::vector<NFElem> r = a.embed(f).coeffs();
  const int db = b.degree();
  const NFElem inv = b.lead().inverse();
  if (a.degree() < db) return {UPoly(f), a.embed(f)};
  std::vector<NFElem> q(a.degree() - db + 1, NFElem(f, 0));
  for (int i = a.degree(); i >= db; --i) {
    if (r[i].is_zero()) continue;
    NFElem t = r[i] * inv;
    q[i - db] = t;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= t * b.coeffs()[j];
  }
  r.resize(db);
  return {UPoly(f, std::move(q)), UPoly(f, std::move(r))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const UPoly& a, const UPoly& b) {
  FieldPtr f = is_subfield(a.field(), b.field()) ? b.field() : a.field();
  UPoly r0 = a.embed(f), r1 = b.embed(f);
  UPoly s0 = UPoly::constant(f, NFElem(f, 1)), s1(f);
  UPoly t0(f), t1 = UPoly::constant(f, NFElem(f, 1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  NFElem inv = r0.lead().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

NFElem resultant(const UPoly& a, const UPoly& b) {
  FieldPtr f = is_subfield(a.field(), b.field()) ? b.field() : a.field();
  if (a.is_zero() || b.is_zero()) return NFElem(f, 0);
  UPoly x = a.embed(f), y = b.embed(f);
  NFElem acc(f, 1);
  while (true) {
    if (y.degree() == 0) return acc * y.lead().pow(x.degree());
    UPoly r = divmod(x, y).second;
    if (r.is_zero()) return NFElem(f, 0);
    if ((x.degree() * y.degree()) % 2 == 1) acc = -acc;
    acc *= y.lead().pow(x.degree() - r.degree());
    x = std::move(y);
    y = std::move(r);
  }
}

// ------------------------------------------------------------ NumberField

FieldPtr NumberField::make(const UPoly& minpoly, std::string name) {
  if (minpoly.degree() < 1) throw std::invalid_argument("minimal polynomial must have positive degree");
  UPoly m = minpoly.monic();
  if (!is_irreducible(m)) throw std::invalid_argument("minimal polynomial " + m.to_string() + " is reducible");
  auto nf = std::shared_ptr<NumberField>(new NumberField());
  nf->base_ = m.field();
  nf->minpoly_ = std::move(m);
  nf->name_ = std::move(name);
  return nf;
}

int NumberField::absolute_degree() const { return degree() * (base_ ? base_->absolute_degree() : 1); }

int NumberField::depth() const { return 1 + (base_ ? base_->depth() : 0); }

}  // namespace dgal
