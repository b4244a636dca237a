#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "dgal/linalg.hpp"
#include "dgal/rat.hpp"

namespace dgal {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;  // null means Q

// Element of Q or of a simple extension K(α), stored as a reduced
// polynomial in α with coefficients in K.
class NFElem {
 public:
  NFElem() = default;
  NFElem(const Rat& c);  // NOLINT(google-explicit-constructor)
  NFElem(long c) : NFElem(Rat(c)) {}  // NOLINT(google-explicit-constructor)
  NFElem(FieldPtr f, const Rat& c);
  static NFElem generator(const FieldPtr& f);
  // Σ coeffs[i] α^i, reduced modulo the minimal polynomial.
  static NFElem from_coeffs(const FieldPtr& f, std::vector<NFElem> coeffs);

  const FieldPtr& field() const { return f_; }
  bool is_zero() const;
  bool is_rational() const;
  Rat rational() const;  // valid when is_rational()
  const std::vector<NFElem>& coeffs() const { return c_; }

  NFElem operator-() const;
  NFElem operator+(const NFElem& o) const;
  NFElem operator-(const NFElem& o) const;
  NFElem operator*(const NFElem& o) const;
  NFElem operator/(const NFElem& o) const;
  NFElem& operator+=(const NFElem& o) { return *this = *this + o; }
  NFElem& operator-=(const NFElem& o) { return *this = *this - o; }
  NFElem& operator*=(const NFElem& o) { return *this = *this * o; }
  NFElem pow(int e) const;
  NFElem inverse() const;
  bool operator==(const NFElem& o) const;
  bool operator!=(const NFElem& o) const { return !(*this == o); }

  // Same element viewed in `target`, which must contain field() in its tower.
  NFElem embed(const FieldPtr& target) const;
  // Coordinates over Q in the tower power basis, length = absolute degree.
  QVector absolute_coordinates() const;
  std::string to_string() const;

 private:
  FieldPtr f_;
  Rat q_;
  std::vector<NFElem> c_;  // over f_->base(), trailing zeros trimmed
};

// Dense univariate polynomial, lowest degree first.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(FieldPtr f) : f_(std::move(f)) {}
  UPoly(FieldPtr f, std::vector<NFElem> coeffs);
  static UPoly x(const FieldPtr& f);
  static UPoly constant(const FieldPtr& f, const NFElem& c);
  static UPoly from_rationals(const std::vector<Rat>& coeffs);  // over Q

  const FieldPtr& field() const { return f_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<NFElem>& coeffs() const { return c_; }
  NFElem coeff(int i) const;
  const NFElem& lead() const { return c_.back(); }

  UPoly monic() const;
  UPoly derivative() const;
  NFElem evaluate(const NFElem& v) const;
  UPoly compose(const UPoly& inner) const;
  UPoly embed(const FieldPtr& target) const;

  UPoly operator-() const;
  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly operator*(const NFElem& c) const;
  bool operator==(const UPoly& o) const;

  std::string to_string(const std::string& var = "y") const;

 private:
  void trim();
  FieldPtr f_;
  std::vector<NFElem> c_;
};

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly gcd(const UPoly& a, const UPoly& b);  // monic, gcd(0, 0) = 0

struct ExtendedGcd {
  UPoly g, u, v;  // u a + v b = g, g monic
};
ExtendedGcd extended_gcd(const UPoly& a, const UPoly& b);
NFElem resultant(const UPoly& a, const UPoly& b);

class NumberField {
 public:
  // `minpoly` is taken over its own field; it must be monic after scaling
  // and irreducible there.  Throws std::invalid_argument otherwise.
  static FieldPtr make(const UPoly& minpoly, std::string name);

  const FieldPtr& base() const { return base_; }
  const UPoly& minpoly() const { return minpoly_; }
  const std::string& name() const { return name_; }
  int degree() const { return minpoly_.degree(); }
  int absolute_degree() const;
  int depth() const;

 private:
  NumberField() = default;
  FieldPtr base_;
  UPoly minpoly_;
  std::string name_;
};

// True when `sub` is Q or appears in the tower of `f`.
bool is_subfield(const FieldPtr& sub, const FieldPtr& f);

struct Factor {
  UPoly poly;  // monic, irreducible
  int multiplicity = 1;
};
struct Factorization {
  NFElem unit;
  std::vector<Factor> factors;  // by degree, then coefficients
  UPoly product() const;
};

// Squarefree decomposition followed by Zassenhaus over Z.
Factorization factor_q(const UPoly& p);
// Over the field of p: Trager norms reduce to factor_q.
Factorization factor_ext(const UPoly& p);
bool is_irreducible(const UPoly& p);

}  // namespace dgal
