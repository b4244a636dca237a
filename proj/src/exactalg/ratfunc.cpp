#include "dgal/ratfunc.hpp"

#include <stdexcept>

#include "dgal/errors.hpp"

namespace dgal {

namespace {

MPoly quo(const MPoly& a, const MPoly& b) {
  auto q = a.divide_exact(b);
  if (!q) throw std::logic_error("inexact division while normalising a rational function");
  return *q;
}

}  // namespace

RatFunc::RatFunc(const MPoly& num, const MPoly& den) {
  if (den.is_zero()) throw DenominatorVanishes("zero denominator");
  if (num.is_zero()) {
    den_ = MPoly(Rat(1));
    return;
  }
  if (den.is_constant()) {
    num_ = num * (Rat(1) / den.constant_value());
    den_ = MPoly(Rat(1));
    return;
  }
  MPoly g = gcd(num, den);
  MPoly n = g.is_constant() ? num : quo(num, g);
  MPoly d = g.is_constant() ? den : quo(den, g);
  Rat lc = d.leading_coefficient();
  num_ = n * (Rat(1) / lc);
  den_ = d * (Rat(1) / lc);
}

std::set<Var> RatFunc::variables() const {
  auto s = num_.variables();
  auto d = den_.variables();
  s.insert(d.begin(), d.end());
  return s;
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Canonical{}); }

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  if (den_.is_constant() && o.den_.is_constant()) return RatFunc(num_ + o.num_, den_, Canonical{});
  if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
  MPoly g = gcd(den_, o.den_);
  MPoly da = quo(den_, g), db = quo(o.den_, g);
  // num/(g da) + onum/(g db) = (num db + onum da) / (g da db)
  return RatFunc(num_ * db + o.num_ * da, den_ * db);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (is_zero() || o.is_zero()) return RatFunc();
  if (den_.is_constant() && o.den_.is_constant()) return RatFunc(num_ * o.num_, den_, Canonical{});
  // Cross-cancel before multiplying.
  MPoly g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
  MPoly n1 = quo(num_, g1), d2 = quo(o.den_, g1);
  MPoly n2 = quo(o.num_, g2), d1 = quo(den_, g2);
  MPoly n = n1 * n2, d = d1 * d2;
  Rat lc = d.leading_coefficient();
  return RatFunc(n * (Rat(1) / lc), d * (Rat(1) / lc), Canonical{});
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DenominatorVanishes("inverse of zero");
  Rat lc = num_.leading_coefficient();
  return RatFunc(den_ * (Rat(1) / lc), num_ * (Rat(1) / lc), Canonical{});
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  return RatFunc(num_.pow(e), den_.pow(e), Canonical{});
}

std::string RatFunc::to_string() const {
  auto wrap = [](const MPoly& p) {
    std::string s = p.to_string();
    return p.terms().size() > 1 ? "(" + s + ")" : s;
  };
  if (den_.is_constant()) return wrap(num_);
  return wrap(num_) + "/" + wrap(den_);
}

RatFunc substitute(const RatFunc& f, const Bindings& bindings) {
  bool relevant = false;
  bool polynomial = true;
  for (const auto& [v, value] : bindings) {
    if (!f.mentions(v)) continue;
    relevant = true;
    if (!value.is_polynomial()) polynomial = false;
  }
  if (!relevant) return f;
  if (polynomial) {
    std::map<Var, MPoly> values;
    for (const auto& [v, value] : bindings)
      if (f.mentions(v)) values.emplace(v, value.num());
    MPoly n = f.num().substitute(values);
    MPoly d = f.den().substitute(values);
    if (d.is_zero()) throw DenominatorVanishes("substitution makes the denominator vanish: " + f.to_string());
    return RatFunc(n, d);
  }
  // Rational images: Horner-free term-by-term evaluation over RatFunc.
  auto eval = [&](const MPoly& p) {
    RatFunc acc;
    std::map<Var, std::vector<RatFunc>> powers;
    for (const auto& [m, c] : p.terms()) {
      RatFunc term(c);
      std::vector<std::pair<Var, int>> kept;
      for (const auto& [v, e] : m.factors()) {
        auto it = bindings.find(v);
        if (it == bindings.end()) {
          kept.emplace_back(v, e);
          continue;
        }
        auto& cache = powers[v];
        if (cache.empty()) cache.emplace_back(Rat(1));
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * it->second);
        term *= cache[e];
      }
      if (!kept.empty()) term *= RatFunc(MPoly(Monomial::from_factors(kept), Rat(1)));
      acc += term;
    }
    return acc;
  };
  RatFunc d = eval(f.den());
  if (d.is_zero()) throw DenominatorVanishes("substitution makes the denominator vanish: " + f.to_string());
  return eval(f.num()) / d;
}

RatFunc partial_derivative(const RatFunc& f, const Var& v) {
  if (!f.mentions(v)) return RatFunc();
  if (f.is_polynomial()) return RatFunc(f.num().partial(v) * (Rat(1) / f.den().constant_value()));
  // (n' d - n d') / d^2
  return RatFunc(f.num().partial(v) * f.den() - f.num() * f.den().partial(v), f.den() * f.den());
}

Rat evaluate(const RatFunc& f, const std::map<Var, Rat>& point) {
  Rat d = f.den().evaluate(point);
  if (d == 0) throw DenominatorVanishes("pole at evaluation point");
  return f.num().evaluate(point) / d;
}

}  // namespace dgal
