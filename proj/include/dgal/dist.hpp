#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dgal/fieldops.hpp"

namespace dgal {

struct Distribution {
  std::vector<VectorField> generators;
  std::string label;
};

// Pairwise brackets [t_a, d_b], row-major in (a, b).
std::vector<VectorField> commutes(const Distribution& t, const Distribution& d);
bool all_zero(const std::vector<VectorField>& fields);

struct CoefficientMatrix {
  RatMatrix rows;  // one row per field
  std::vector<Var> vars;
};
CoefficientMatrix coefficient_matrix(const std::vector<VectorField>& fields, const std::vector<VectorField>& extra = {});

// Membership in the span over the fraction field of the jet coordinates.
bool in_generic_span(const VectorField& f, const std::vector<VectorField>& generators);

struct InvolutivityResult {
  bool involutive = true;
  std::optional<VectorField> witness;
  int left = -1, right = -1;
};
InvolutivityResult is_involutive_frobenius(const Distribution& d);

// Fields of the form Σ_{v in support} p_v ∂/∂v with p_v polynomial of
// degree <= degree in coefficient_vars.
struct Ansatz {
  std::vector<Var> support;
  std::vector<Var> coefficient_vars;
  int degree = 2;
};
// Support on the jet coordinates of orders 1..q; coefficients in those of orders 0..q.
Ansatz default_ansatz(const JetContext& ctx, int q, int degree = 2);

// Q-basis of the degree-bounded commutant, in reduced echelon form.
std::vector<VectorField> commutant_search(const Distribution& t, const Ansatz& ansatz);

// Equality of Q-spans of fields with polynomial coefficients.
bool same_q_span(const std::vector<VectorField>& a, const std::vector<VectorField>& b);

struct InvarianceResult {
  bool invariant = true;
  std::vector<RatFunc> residuals;  // θΦ per generator
};
InvarianceResult is_invariant(const Distribution& t, const RatFunc& phi);

struct DerivedInvariant {
  RatFunc value;
  bool invariant = false;
};
DerivedInvariant derived_invariant(const RatFunc& phi, int i, const JetContext& ctx, const Distribution& next);

// Coefficients c with target = Σ c_j basis_j, exact over Q.
std::optional<QVector> rational_combination(const RatFunc& target, const std::vector<RatFunc>& basis);

struct StabilityEntry {
  int field = 0;
  int generator = 0;
  RatFunc value;
  // Coefficients on {1, monomials in the generators}, absent when outside the span.
  std::optional<QVector> coefficients;
};
struct StabilityTable {
  std::vector<std::string> basis;  // labels: "1", "g1", "g1*g2", ...
  std::vector<StabilityEntry> entries;
  bool stable() const;
};
StabilityTable stability_check(const Distribution& d, const std::vector<RatFunc>& generators, int max_degree = 1);

struct FreenessReport {
  int rank = 0;
  int required = 0;
  RatFunc minor;                       // maximal minor found by elimination
  std::optional<RatFunc> certificate;  // primitive squarefree part, leading coefficient 1
  bool free = false;
};
FreenessReport freeness_probe(const Distribution& t, int parametric_count);
FreenessReport freeness_probe(const RatMatrix& m, int parametric_count);

// Raises the bar level of every jet and parameter variable by one.
RatFunc bar(const RatFunc& f);
VectorField bar_extend(const VectorField& d);

using Relations = std::vector<std::pair<Var, RatFunc>>;

struct TensorConstantResult {
  bool constant = true;
  std::vector<RatFunc> residuals;
};
TensorConstantResult is_tensor_constant(const RatFunc& e, const Distribution& d, const Relations& relations = {});

// W(q+1) d_iΦ − [d_i(W(q)Φ) − Σ_{|μ|<=q} (d_i a^k_μ − a^k_{μ+1_i}) ∂Φ/∂y^k_μ]
// for W = Σ a^k_ν ∂/∂y^k_ν and Φ of order <= q.
RatFunc commuting_field_residual(const VectorField& w, const RatFunc& phi, int i, int q, const JetContext& ctx);

}  // namespace dgal
