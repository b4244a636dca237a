#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dgal/mpoly.hpp"
#include "dgal/numberfield.hpp"
#include "dgal/ratfunc.hpp"

namespace dgal {

// ------------------------------------------------------------- conversions

// Generators of the tower of `f`, innermost first, named by `gens`.
NFElem to_nfelem(const MPoly& p, const FieldPtr& f, const std::vector<Var>& gens = {});
// Polynomial in `var` whose coefficients are polynomials in the tower generators.
UPoly to_upoly(const MPoly& p, const Var& var, const FieldPtr& f = nullptr, const std::vector<Var>& gens = {});

// ----------------------------------------------------------- tensor split

struct SplitResult {
  FieldPtr field;              // L = K(η)
  std::vector<UPoly> factors;  // of the minimal polynomial over L; factors[0] = y − η
  std::vector<NFElem> roots;   // roots in L; roots[0] = η
  int degree_sum() const;
};
SplitResult split_tensor(const FieldPtr& l);
bool is_galois(const FieldPtr& l);

// The K-isomorphism sending the generator of x.field() to `image`.
NFElem apply_isomorphism(const NFElem& x, const NFElem& image);

// y³ − ω¹y² + ω²y − ω³
UPoly general_cubic(const Rat& w1, const Rat& w2, const Rat& w3);
Rat cubic_discriminant(const Rat& w1, const Rat& w2, const Rat& w3);

// ------------------------------------------------------ rational actions

// y ↦ num(y)/den(y), den monic, gcd(num, den) = 1.
class RatMap {
 public:
  RatMap() = default;
  RatMap(const UPoly& num, const UPoly& den);
  static RatMap identity(const FieldPtr& f);
  static RatMap constant(const FieldPtr& f, const NFElem& c);

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  const FieldPtr& field() const { return num_.field(); }
  bool is_zero() const { return num_.is_zero(); }

  RatMap compose(const RatMap& inner) const;  // this ∘ inner
  RatMap operator+(const RatMap& o) const;
  RatMap operator-(const RatMap& o) const;
  RatMap operator*(const RatMap& o) const;
  RatMap operator/(const RatMap& o) const;
  bool operator==(const RatMap& o) const;

  std::string to_string(const std::string& var = "y") const;

 private:
  UPoly num_, den_;
};

RatMap to_ratmap(const RatFunc& f, const Var& var, const FieldPtr& field = nullptr, const std::vector<Var>& gens = {});

struct GroupTable {
  int order = 0;
  int identity = -1;
  std::vector<std::vector<int>> cayley;  // cayley[i][j] = index of g_i ∘ g_j
  std::vector<int> inverse;
};
// Throws NotAGroup naming the failing pair.
GroupTable verify_group(const std::vector<RatMap>& elements);

struct InvariantCheck {
  bool invariant = false;  // Φ∘g = Φ for every g
  bool principal = false;  // numerator of Φ(ȳ) − Φ(y) = unit · Π (ȳ − g(y))
  RatMap unit;
  std::vector<RatMap> product;  // coefficients of Π (ȳ − g(y)) in ȳ, lowest first
  std::vector<int> failing;     // indices g with Φ∘g ≠ Φ
};
InvariantCheck generating_invariant_check(const std::vector<RatMap>& group, const RatMap& phi);

// -------------------------------------------------------------------- CRT

struct CrtDecomposition {
  std::vector<UPoly> factors;
  std::vector<UPoly> idempotents;  // e_i ≡ 1 mod P_i, ≡ 0 mod P_j, Σ e_i = 1
};
CrtDecomposition crt_decomposition(const UPoly& p);

// ------------------------------------------------------------------ Hopf

// Composition (b ∘ a) of the parameter group, written in Param variables:
// bar level 0 for a (applied first), bar level 1 for b.
struct GroupLaw {
  std::vector<RatFunc> compose;
  std::vector<Rat> identity;
};

struct HopfResult {
  std::vector<RatFunc> diagonal;      // a(y, y̿)
  std::vector<RatFunc> augmentation;  // a(y, y)
  std::vector<RatFunc> antipode;      // a(ȳ, y)
  bool coassociative = false;
  bool counit = false;
  bool antipode_law = false;
};
// `parameter` is written in jet variables at bar levels 0 and 1.
// Throws NotExpressible when the diagonal does not factor through the law.
HopfResult hopf_comorphisms(const std::vector<RatFunc>& parameter, const GroupLaw& law);

// Moves every jet variable of bar level b to level map[b].
RatFunc rebar(const RatFunc& f, const std::vector<int>& map);
std::vector<RatFunc> apply_law(const GroupLaw& law, const std::vector<RatFunc>& b, const std::vector<RatFunc>& a);

// ------------------------------------------------------------ disjointness

struct DisjointnessResult {
  bool independent = true;
  std::vector<QVector> relations;  // c[i * |B| + j] on a_i b_j
};
DisjointnessResult linear_disjointness_probe(const std::vector<NFElem>& a, const std::vector<NFElem>& b);

}  // namespace dgal
