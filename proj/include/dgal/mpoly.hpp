#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dgal/rat.hpp"
#include "dgal/var.hpp"

namespace dgal {

// Power product stored as (variable, exponent) pairs sorted by variable.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(const Var& v, int e = 1);

  int degree() const { return degree_; }
  int degree_in(const Var& v) const;
  bool is_one() const { return factors_.empty(); }
  const std::vector<std::pair<Var, int>>& factors() const { return factors_; }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  Monomial quotient(const Monomial& divisor) const;  // requires divisor | *this
  Monomial without(const Var& v) const;
  Monomial gcd(const Monomial& o) const;

  bool operator==(const Monomial& o) const = default;
  std::string to_string() const;

  static Monomial from_factors(std::vector<std::pair<Var, int>> f);

 private:
  std::vector<std::pair<Var, int>> factors_;
  int degree_ = 0;
};

// Graded lexicographic comparison: true when a ranks strictly above b.
bool grlex_greater(const Monomial& a, const Monomial& b);

// Sparse polynomial over Q, terms kept in decreasing graded-lex order.
class MPoly {
 public:
  using Term = std::pair<Monomial, Rat>;

  MPoly() = default;
  MPoly(const Rat& c);  // NOLINT(google-explicit-constructor)
  MPoly(long c) : MPoly(Rat(c)) {}  // NOLINT(google-explicit-constructor)
  explicit MPoly(const Var& v);
  MPoly(const Monomial& m, const Rat& c);

  static MPoly from_terms(std::vector<Term> terms);  // sorts and merges
  // Terms already strictly decreasing with nonzero coefficients.
  static MPoly from_sorted(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
  Rat constant_value() const;  // valid when is_constant()
  bool is_monomial() const { return terms_.size() == 1; }
  const Monomial& leading_monomial() const { return terms_.front().first; }
  const Rat& leading_coefficient() const { return terms_.front().second; }
  int total_degree() const;
  int degree_in(const Var& v) const;
  std::set<Var> variables() const;
  bool mentions(const Var& v) const;

  MPoly operator-() const;
  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly operator*(const Rat& c) const;
  MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
  MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  MPoly pow(int e) const;

  bool operator==(const MPoly& o) const = default;

  MPoly partial(const Var& v) const;
  // Coefficients w.r.t. v: result[d] is the coefficient of v^d.
  std::vector<MPoly> coefficients_in(const Var& v) const;
  static MPoly from_coefficients(const Var& v, const std::vector<MPoly>& coeffs);

  // Exact quotient if `divisor` divides *this, otherwise nullopt.
  std::optional<MPoly> divide_exact(const MPoly& divisor) const;
  MPoly monic() const;  // scaled so the leading coefficient is 1

  // Sum of c * prod(value(v)^e); unbound variables are kept as-is.
  MPoly substitute(const std::map<Var, MPoly>& values) const;
  Rat evaluate(const std::map<Var, Rat>& values) const;  // all variables must be bound

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

inline MPoly operator*(const Rat& c, const MPoly& p) { return p * c; }

// Greatest common divisor over Q, normalised to leading coefficient 1
// (gcd(0, 0) = 0).
MPoly gcd(const MPoly& a, const MPoly& b);
MPoly lcm(const MPoly& a, const MPoly& b);
// Primitive squarefree part, leading coefficient 1.
MPoly squarefree_part(const MPoly& p);

}  // namespace dgal
