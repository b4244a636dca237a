#include "dgal/mpoly.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "dgal/errors.hpp"

namespace dgal {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(const Var& v, int e) {
  if (e > 0) {
    factors_.emplace_back(v, e);
    degree_ = e;
  }
}

Monomial Monomial::from_factors(std::vector<std::pair<Var, int>> f) {
  std::sort(f.begin(), f.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Monomial m;
  for (auto& [v, e] : f) {
    if (e == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == v)
      m.factors_.back().second += e;
    else
      m.factors_.emplace_back(v, e);
    m.degree_ += e;
  }
  return m;
}

int Monomial::degree_in(const Var& v) const {
  for (const auto& [w, e] : factors_)
    if (w == v) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.factors_.reserve(factors_.size() + o.factors_.size());
  std::size_t i = 0, j = 0;
  while (i < factors_.size() || j < o.factors_.size()) {
    if (j == o.factors_.size() || (i < factors_.size() && factors_[i].first < o.factors_[j].first)) {
      r.factors_.push_back(factors_[i++]);
    } else if (i == factors_.size() || o.factors_[j].first < factors_[i].first) {
      r.factors_.push_back(o.factors_[j++]);
    } else {
      r.factors_.emplace_back(factors_[i].first, factors_[i].second + o.factors_[j].second);
      ++i;
      ++j;
    }
  }
  r.degree_ = degree_ + o.degree_;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (degree_ > o.degree_) return false;
  std::size_t j = 0;
  for (const auto& [v, e] : factors_) {
    while (j < o.factors_.size() && o.factors_[j].first < v) ++j;
    if (j == o.factors_.size() || !(o.factors_[j].first == v) || o.factors_[j].second < e) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial r;
  std::size_t j = 0;
  for (const auto& [v, e] : factors_) {
    int d = 0;
    if (j < divisor.factors_.size() && divisor.factors_[j].first == v) d = divisor.factors_[j++].second;
    if (e - d > 0) r.factors_.emplace_back(v, e - d);
  }
  r.degree_ = degree_ - divisor.degree_;
  return r;
}

Monomial Monomial::without(const Var& v) const {
  Monomial r;
  for (const auto& f : factors_) {
    if (f.first == v) continue;
    r.factors_.push_back(f);
    r.degree_ += f.second;
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& o) const {
  Monomial r;
  std::size_t j = 0;
  for (const auto& [v, e] : factors_) {
    while (j < o.factors_.size() && o.factors_[j].first < v) ++j;
    if (j < o.factors_.size() && o.factors_[j].first == v) {
      int m = std::min(e, o.factors_[j].second);
      r.factors_.emplace_back(v, m);
      r.degree_ += m;
    }
  }
  return r;
}

std::string Monomial::to_string() const {
  std::string s;
  for (const auto& [v, e] : factors_) {
    if (!s.empty()) s += "*";
    s += v.name();
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

bool grlex_greater(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0, j = 0;
  while (i < fa.size() && j < fb.size()) {
    if (fa[i].first == fb[j].first) {
      if (fa[i].second != fb[j].second) return fa[i].second > fb[j].second;
      ++i;
      ++j;
    } else {
      return fa[i].first < fb[j].first;
    }
  }
  return false;
}

// ------------------------------------------------------------------- MPoly

MPoly::MPoly(const Rat& c) {
  if (c != 0) terms_.emplace_back(Monomial(), c);
}

MPoly::MPoly(const Var& v) { terms_.emplace_back(Monomial(v), Rat(1)); }

MPoly::MPoly(const Monomial& m, const Rat& c) {
  if (c != 0) terms_.emplace_back(m, c);
}

MPoly MPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return grlex_greater(a.first, b.first); });
  MPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second == 0) p.terms_.pop_back();
    } else if (t.second != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Rat MPoly::constant_value() const {
  if (terms_.empty()) return Rat(0);
  if (!terms_[0].first.is_one()) throw std::logic_error("constant_value of non-constant polynomial");
  return terms_[0].second;
}

int MPoly::total_degree() const { return terms_.empty() ? -1 : terms_.front().first.degree(); }

int MPoly::degree_in(const Var& v) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max(d, t.first.degree_in(v));
  return d;
}

std::set<Var> MPoly::variables() const {
  std::set<Var> s;
  for (const auto& t : terms_)
    for (const auto& f : t.first.factors()) s.insert(f.first);
  return s;
}

bool MPoly::mentions(const Var& v) const {
  for (const auto& t : terms_)
    if (t.first.degree_in(v) > 0) return true;
  return false;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

MPoly MPoly::from_sorted(std::vector<Term> terms) {
  MPoly p;
  p.terms_ = std::move(terms);
  return p;
}

namespace {

MPoly merge(const MPoly& a, const MPoly& b, bool subtract) {
  std::vector<MPoly::Term> out;
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  out.reserve(ta.size() + tb.size());
  std::size_t i = 0, j = 0;
  while (i < ta.size() || j < tb.size()) {
    if (j == tb.size() || (i < ta.size() && grlex_greater(ta[i].first, tb[j].first))) {
      out.push_back(ta[i++]);
    } else if (i == ta.size() || grlex_greater(tb[j].first, ta[i].first)) {
      out.emplace_back(tb[j].first, subtract ? Rat(-tb[j].second) : tb[j].second);
      ++j;
    } else {
      Rat c = subtract ? Rat(ta[i].second - tb[j].second) : Rat(ta[i].second + tb[j].second);
      if (c != 0) out.emplace_back(ta[i].first, c);
      ++i;
      ++j;
    }
  }
  return MPoly::from_sorted(std::move(out));
}

}  // namespace

MPoly MPoly::operator+(const MPoly& o) const {
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  return merge(*this, o, false);
}

MPoly MPoly::operator-(const MPoly& o) const {
  if (o.is_zero()) return *this;
  if (is_zero()) return -o;
  return merge(*this, o, true);
}

MPoly MPoly::operator*(const MPoly& o) const {
  if (is_zero() || o.is_zero()) return MPoly();
  if (o.is_constant()) return *this * o.constant_value();
  if (is_constant()) return o * constant_value();
  std::vector<Term> out;
  out.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) out.emplace_back(a.first * b.first, a.second * b.second);
  return from_terms(std::move(out));
}

MPoly MPoly::operator*(const Rat& c) const {
  if (c == 0) return MPoly();
  MPoly r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

MPoly MPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative polynomial power");
  MPoly result(Rat(1));
  MPoly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

MPoly MPoly::partial(const Var& v) const {
  std::vector<Term> out;
  for (const auto& [m, c] : terms_) {
    int e = m.degree_in(v);
    if (e == 0) continue;
    out.emplace_back(m.quotient(Monomial(v)), c * e);
  }
  return from_terms(std::move(out));
}

std::vector<MPoly> MPoly::coefficients_in(const Var& v) const {
  int d = degree_in(v);
  std::vector<std::vector<Term>> buckets(std::max(d + 1, 0));
  for (const auto& [m, c] : terms_) buckets[m.degree_in(v)].emplace_back(m.without(v), c);
  std::vector<MPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  return out;
}

MPoly MPoly::from_coefficients(const Var& v, const std::vector<MPoly>& coeffs) {
  std::vector<Term> out;
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    Monomial vd(v, static_cast<int>(d));
    for (const auto& [m, c] : coeffs[d].terms()) out.emplace_back(m * vd, c);
  }
  return from_terms(std::move(out));
}

std::optional<MPoly> MPoly::divide_exact(const MPoly& divisor) const {
  if (divisor.is_zero()) throw DenominatorVanishes("division by the zero polynomial");
  if (is_zero()) return MPoly();
  if (divisor.is_constant()) return *this * (Rat(1) / divisor.constant_value());
  const Monomial& dm = divisor.leading_monomial();
  const Rat& dc = divisor.leading_coefficient();
  std::vector<Term> quotient;
  MPoly rem = *this;
  while (!rem.is_zero()) {
    const auto& [m, c] = rem.terms_.front();
    if (!dm.divides(m)) return std::nullopt;
    MPoly t(m.quotient(dm), c / dc);
    quotient.push_back(t.terms_.front());
    rem = rem - t * divisor;
  }
  return from_terms(std::move(quotient));
}

MPoly MPoly::monic() const {
  if (is_zero()) return *this;
  return *this * (Rat(1) / leading_coefficient());
}

MPoly MPoly::substitute(const std::map<Var, MPoly>& values) const {
  std::map<Var, std::vector<MPoly>> powers;
  auto power = [&](const Var& v, const MPoly& base, int e) -> const MPoly& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(MPoly(Rat(1)));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * base);
    return cache[e];
  };
  MPoly acc;
  for (const auto& [m, c] : terms_) {
    MPoly term{Rat(c)};
    std::vector<std::pair<Var, int>> kept;
    for (const auto& [v, e] : m.factors()) {
      auto it = values.find(v);
      if (it == values.end())
        kept.emplace_back(v, e);
      else
        term = term * power(v, it->second, e);
    }
    if (!kept.empty()) term = term * MPoly(Monomial::from_factors(kept), Rat(1));
    acc += term;
  }
  return acc;
}

Rat MPoly::evaluate(const std::map<Var, Rat>& values) const {
  Rat acc = 0;
  for (const auto& [m, c] : terms_) {
    Rat t = c;
    for (const auto& [v, e] : m.factors()) {
      auto it = values.find(v);
      if (it == values.end()) throw std::invalid_argument("unbound variable " + v.name());
      for (int k = 0; k < e; ++k) t *= it->second;
    }
    acc += t;
  }
  return acc;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rat a = abs(c);
    bool neg = c < 0;
    if (first)
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    first = false;
    if (m.is_one())
      s += a.get_str();
    else if (a == 1)
      s += m.to_string();
    else
      s += a.get_str() + "*" + m.to_string();
  }
  return s;
}

// -------------------------------------------------------------------- GCD

namespace {

using UPoly = std::vector<MPoly>;  // coefficients in a main variable, index = degree

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int udeg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

MPoly exact(const MPoly& a, const MPoly& b) {
  auto q = a.divide_exact(b);
  if (!q) throw std::logic_error("inexact polynomial division in gcd");
  return *q;
}

// lc(b)^(deg a - deg b + 1) * a mod b.
UPoly pseudo_remainder(UPoly a, const UPoly& b) {
  int db = udeg(b);
  const MPoly& lb = b.back();
  int e = udeg(a) - db + 1;
  while (!a.empty() && udeg(a) >= db) {
    MPoly la = a.back();
    int shift = udeg(a) - db;
    for (auto& c : a) c = c * lb;
    for (int k = 0; k <= db; ++k) a[k + shift] -= la * b[k];
    trim(a);
    --e;
  }
  if (e > 0) {
    MPoly f = lb.pow(e);
    for (auto& c : a) c = c * f;
  }
  return a;
}

MPoly gcd_rec(const MPoly& a, const MPoly& b);

MPoly content_of(const UPoly& p) {
  MPoly g;
  for (const auto& c : p) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c : gcd_rec(g, c);
    if (g.is_constant()) return MPoly(Rat(1));
  }
  return g;
}

Monomial monomial_content(const MPoly& p) {
  Monomial g = p.terms().front().first;
  for (const auto& t : p.terms()) {
    g = g.gcd(t.first);
    if (g.is_one()) break;
  }
  return g;
}

// Dense univariate helpers over Q, index = degree.
using QPoly = std::vector<Rat>;

void qtrim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qrem(QPoly a, const QPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rat f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= f * b[k];
    a.pop_back();
    qtrim(a);
  }
  return a;
}

int qgcd_degree(QPoly a, QPoly b) {
  while (!b.empty()) {
    QPoly r = qrem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return static_cast<int>(a.size()) - 1;
}

QPoly image(const MPoly& p, const Var& v, const std::map<Var, Rat>& point) {
  QPoly out(p.degree_in(v) + 1, Rat(0));
  for (const auto& [m, c] : p.terms()) {
    Rat t = c;
    for (const auto& [w, e] : m.factors()) {
      if (w == v) continue;
      const Rat& x = point.at(w);
      for (int k = 0; k < e; ++k) t *= x;
    }
    out[m.degree_in(v)] += t;
  }
  qtrim(out);
  return out;
}

// Upper bound on deg_v gcd(a, b) from an evaluation of the other variables
// that keeps both leading coefficients in v nonzero; -1 if none was found.
int image_gcd_degree(const MPoly& a, const MPoly& b, const Var& v) {
  std::set<Var> others = a.variables();
  for (const auto& w : b.variables()) others.insert(w);
  others.erase(v);
  std::uint64_t state = 0x9E3779B97F4A7C15ull ^ static_cast<std::uint64_t>(a.terms().size() * 131 + b.terms().size());
  const int da = a.degree_in(v), db = b.degree_in(v);
  for (int attempt = 0; attempt < 4; ++attempt) {
    std::map<Var, Rat> point;
    for (const auto& w : others) {
      state = state * 6364136223846793005ull + 1442695040888963407ull;
      point[w] = Rat(static_cast<long>((state >> 33) % 2001) - 1000);
    }
    QPoly ia = image(a, v, point), ib = image(b, v, point);
    if (static_cast<int>(ia.size()) - 1 != da || static_cast<int>(ib.size()) - 1 != db) continue;
    return qgcd_degree(std::move(ia), std::move(ib));
  }
  return -1;
}

MPoly gcd_rec(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_constant() || b.is_constant()) return MPoly(Rat(1));
  if (a == b) return a;

  Monomial ma = monomial_content(a), mb = monomial_content(b);
  MPoly gm(ma.gcd(mb), Rat(1));
  MPoly ra = ma.is_one() ? a : exact(a, MPoly(ma, Rat(1)));
  MPoly rb = mb.is_one() ? b : exact(b, MPoly(mb, Rat(1)));
  if (ra.is_constant() || rb.is_constant()) return gm;
  if (ra.is_monomial() || rb.is_monomial()) return gm;  // monomial content already removed

  // Cheap divisibility shortcuts.
  if (ra.total_degree() <= rb.total_degree()) {
    if (rb.divide_exact(ra)) return gm * ra;
  } else if (ra.divide_exact(rb)) {
    return gm * rb;
  }

  std::set<Var> va = ra.variables(), vb = rb.variables();
  for (const auto& w : va)
    if (!vb.count(w)) return gm * gcd_rec(content_of(ra.coefficients_in(w)), rb);
  for (const auto& w : vb)
    if (!va.count(w)) return gm * gcd_rec(ra, content_of(rb.coefficients_in(w)));

  // Same variable set from here on.  A variable whose image gcd is constant
  // cannot occur in the gcd; otherwise eliminate the one of lowest degree.
  Var v = *va.begin();
  int best = -1;
  for (const auto& w : va) {
    if (image_gcd_degree(ra, rb, w) == 0)
      return gm * gcd_rec(content_of(ra.coefficients_in(w)), content_of(rb.coefficients_in(w)));
    int d = std::max(ra.degree_in(w), rb.degree_in(w));
    if (best < 0 || d < best) {
      best = d;
      v = w;
    }
  }

  UPoly ua = ra.coefficients_in(v), ub = rb.coefficients_in(v);
  MPoly ca = content_of(ua), cb = content_of(ub);
  for (auto& c : ua) c = exact(c, ca);
  for (auto& c : ub) c = exact(c, cb);
  MPoly c = gcd_rec(ca, cb);

  if (udeg(ua) < udeg(ub)) std::swap(ua, ub);
  MPoly g(Rat(1)), h(Rat(1));
  UPoly x = ua, y = ub;
  bool coprime = false;
  while (true) {
    int d = udeg(x) - udeg(y);
    UPoly r = pseudo_remainder(x, y);
    if (r.empty()) break;
    if (udeg(r) == 0) {
      coprime = true;
      break;
    }
    MPoly divisor = g * h.pow(d);
    for (auto& co : r) co = exact(co, divisor);
    x = std::move(y);
    y = std::move(r);
    g = x.back();
    if (d == 1)
      h = g;
    else if (d > 1)
      h = exact(g.pow(d), h.pow(d - 1));
  }
  if (coprime) return gm * c;
  MPoly cy = content_of(y);
  for (auto& co : y) co = exact(co, cy);
  return gm * c * MPoly::from_coefficients(v, y);
}

}  // namespace

MPoly gcd(const MPoly& a, const MPoly& b) { return gcd_rec(a, b).monic(); }

MPoly lcm(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return MPoly();
  return exact(a * b, gcd(a, b)).monic();
}

MPoly squarefree_part(const MPoly& p) {
  if (p.is_constant()) return MPoly(Rat(p.is_zero() ? 0 : 1));
  MPoly g = p;
  for (const auto& v : p.variables()) {
    g = gcd(g, p.partial(v));
    if (g.is_constant()) break;
  }
  return exact(p, g).monic();
}

}  // namespace dgal
