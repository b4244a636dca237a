#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "dgal/jets.hpp"
#include "dgal/random.hpp"

namespace dgal {

// Linear combination of coordinate derivations on jet space.
class VectorField {
 public:
  VectorField() = default;
  explicit VectorField(std::map<Var, RatFunc> coefficients);

  const std::map<Var, RatFunc>& coefficients() const { return coeffs_; }
  RatFunc coefficient(const Var& v) const;
  bool is_zero() const { return coeffs_.empty(); }
  void add(const Var& v, const RatFunc& c);

  RatFunc apply(const RatFunc& f) const;

  VectorField operator+(const VectorField& o) const;
  VectorField operator-(const VectorField& o) const;
  VectorField operator*(const RatFunc& c) const;
  bool operator==(const VectorField& o) const = default;

  std::string to_string() const;

 private:
  std::map<Var, RatFunc> coeffs_;  // zero coefficients never stored
};

VectorField bracket_vf(const VectorField& a, const VectorField& b);

enum class Base { Source, Target };

// Section of J_q(T) over the source (base x1..xn) or of J_q(T(Y)) over the
// target (base y1..ym).  Components and directions both run over 1..dim.
class JetSection {
 public:
  JetSection() = default;
  JetSection(int dim, int q, Base over);  // zero section

  int dim() const { return dim_; }
  int order() const { return q_; }
  Base over() const { return over_; }
  Var base_var(int i) const;

  const RatFunc& at(int k, const MultiIndex& mu) const;
  const RatFunc& at(int k, const std::vector<int>& dirs = {}) const;
  void set(int k, const MultiIndex& mu, RatFunc value);
  void set(int k, const std::vector<int>& dirs, RatFunc value);

  JetSection truncated(int q) const;
  JetSection zero_lift() const;  // order q+1, new components zero
  bool is_holonomic() const;

  // j_q of the field with the given components.
  static JetSection holonomic(const std::vector<RatFunc>& field, int q, Base over);

  JetSection operator+(const JetSection& o) const;
  JetSection operator-(const JetSection& o) const;
  bool operator==(const JetSection& o) const;

  const std::map<std::pair<int, MultiIndex>, RatFunc>& components() const { return comps_; }

 private:
  int dim_ = 0;
  int q_ = 0;
  Base over_ = Base::Source;
  std::map<std::pair<int, MultiIndex>, RatFunc> comps_;
};

// Entries (k, μ, i) = ∂_i ξ^k_μ − ξ^k_{μ+1_i} for |μ| <= q.
class SpencerImage {
 public:
  SpencerImage(int dim, int q, Base over) : dim_(dim), q_(q), over_(over) {}
  int dim() const { return dim_; }
  int order() const { return q_; }
  const RatFunc& at(int k, const MultiIndex& mu, int i) const;
  void set(int k, const MultiIndex& mu, int i, RatFunc value);
  bool is_zero() const;
  // Contraction with a vector v^i: the order-q section Σ_i v^i entry(k, μ, i).
  JetSection contract(const std::vector<RatFunc>& v) const;
  JetSection along(int i) const;  // contraction with the i-th base direction

 private:
  int dim_, q_;
  Base over_;
  std::map<std::tuple<int, MultiIndex, int>, RatFunc> entries_;
};

SpencerImage spencer(const JetSection& xi);

// i(ζ)dξ with ζ the order-0 part of `zeta`.
JetSection interior_spencer(const JetSection& zeta, const JetSection& xi);

JetSection algebraic_bracket(const JetSection& xi, const JetSection& eta);
JetSection algebroid_bracket(const JetSection& xi, const JetSection& eta,
                             const std::optional<JetSection>& xi_lift = std::nullopt,
                             const std::optional<JetSection>& eta_lift = std::nullopt);
JetSection formal_lie_derivative(const JetSection& xi, const JetSection& eta);

// Vertical field ρ_q(η) for η with coefficients in the order-0 target variables.
VectorField prolong_vertical(const VectorField& eta, int q, const JetContext& ctx);
VectorField sharp(const JetSection& eta, const JetContext& ctx);
VectorField flat(const JetSection& xi, const JetContext& ctx);

// Left side minus right side of the commutation formula between d_i and
// the flat (source) or sharp (target) image of a section of order q+1.
RatFunc commutation_residual(const RatFunc& phi, const JetSection& section, int i, const JetContext& ctx);

// Complete section with integer polynomial components in the base variables.
JetSection random_section(Rng& rng, int dim, int q, Base over, int max_degree = 2, int terms = 3, int coef = 5);

}  // namespace dgal
