#pragma once

#include <map>
#include <set>
#include <string>

#include "dgal/mpoly.hpp"

namespace dgal {

// Quotient of polynomials in canonical form: coprime parts and a
// denominator with leading coefficient 1.
class RatFunc {
 public:
  RatFunc() : den_(Rat(1)) {}
  RatFunc(const Rat& c) : num_(c), den_(Rat(1)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(long c) : RatFunc(Rat(c)) {}              // NOLINT(google-explicit-constructor)
  RatFunc(const MPoly& p) : num_(p), den_(Rat(1)) {}  // NOLINT(google-explicit-constructor)
  explicit RatFunc(const Var& v) : num_(v), den_(Rat(1)) {}
  // Builds num/den and normalises; throws DenominatorVanishes for den = 0.
  RatFunc(const MPoly& num, const MPoly& den);

  static RatFunc var(const Var& v) { return RatFunc(v); }

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rat constant_value() const { return num_.constant_value(); }
  std::set<Var> variables() const;
  bool mentions(const Var& v) const { return num_.mentions(v) || den_.mentions(v); }

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  RatFunc pow(int e) const;
  RatFunc inverse() const;

  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  MPoly num_;
  MPoly den_;
  struct Canonical {};
  RatFunc(MPoly num, MPoly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
};

using Bindings = std::map<Var, RatFunc>;

// Simultaneous substitution; throws DenominatorVanishes when the image of
// the denominator is the zero polynomial.
RatFunc substitute(const RatFunc& f, const Bindings& bindings);
RatFunc partial_derivative(const RatFunc& f, const Var& v);
Rat evaluate(const RatFunc& f, const std::map<Var, Rat>& point);

}  // namespace dgal
