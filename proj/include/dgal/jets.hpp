#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "dgal/linalg.hpp"
#include "dgal/ratfunc.hpp"

namespace dgal {

class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> counts);
  static MultiIndex zero(int n) { return MultiIndex(std::vector<int>(n, 0)); }
  static MultiIndex from_dirs(const std::vector<int>& dirs, int n);

  int n() const { return static_cast<int>(counts_.size()); }
  int order() const;
  int operator[](int i) const { return counts_[i - 1]; }  // 1-based
  const std::vector<int>& counts() const { return counts_; }
  std::vector<int> dirs() const;  // sorted, 1-based

  MultiIndex successor(int i) const;  // μ + 1_i
  // Last direction of the sorted direction list; the canonical parent is
  // obtained by removing it.  Requires order() > 0.
  int last_dir() const;
  MultiIndex parent() const;

  // All multi-indices of order <= q, grouped by order, then by direction string.
  static std::vector<MultiIndex> up_to(int n, int q);
  static std::vector<MultiIndex> of_order(int n, int r);

  std::string to_string() const;  // sorted direction string, "" at order 0

  auto operator<=>(const MultiIndex& o) const {
    if (auto c = order() <=> o.order(); c != 0) return c;
    return dirs() <=> o.dirs();
  }
  bool operator==(const MultiIndex& o) const = default;

 private:
  std::vector<int> counts_;
};

struct JetContext {
  int n = 1;  // independent variables
  int m = 1;  // dependent variables
  int q = 2;  // maximal jet order
  int p = 0;  // parameters
};

// How total derivatives act on the internal formal-function families.
enum class FormalMode {
  Constant,    // formal jets are d_i-constants
  OverSource,  // d_i F_λ = F_{λ+1_i}
  OverTarget,  // chain rule: d_i F_λ = Σ_r F_{λ+1_r} y^r_i
};

struct DerivOptions {
  bool groupoid_chain_rule = false;  // d_i g^u_λ = Σ_r g^u_{λ+1_r} y^r_i
  FormalMode formal = FormalMode::Constant;
  int order_cap = -1;  // negative: no cap
};

RatFunc total_derivative(const RatFunc& f, int i, const JetContext& ctx, const DerivOptions& opt = {});
RatFunc total_derivative(const RatFunc& f, const MultiIndex& mu, const JetContext& ctx, const DerivOptions& opt = {});

// Highest order among jet variables (any bar level); -1 if none.
int jet_order(const RatFunc& f);

// Points of jet spaces: jet variable -> value.
using JetPoint = std::map<Var, RatFunc>;

// Groupoid jet of the identity: g^u = y^u, g^u_v = δ, higher orders zero.
JetPoint identity_groupoid_jet(int m, int q);
// Renames groupoid keys g^u_λ to source jet keys y^u_λ (n = m).
JetPoint groupoid_as_source(const JetPoint& g);
// Renames source jet keys y^u_λ back to groupoid keys.
JetPoint source_as_groupoid(const JetPoint& s);

// Chain-rule composite of a source jet (keys y^u_ν, |ν| <= q, over n
// directions) with a groupoid jet (keys g^u_λ over m directions).
JetPoint jet_compose(const JetPoint& source_jet, const JetPoint& groupoid_jet, int q, const JetContext& ctx);

// Inverse groupoid jet, q <= 2.  Throws SingularJacobian.
JetPoint jet_invert(const JetPoint& groupoid_jet, int q, int m);

struct ProlongationStep {
  std::vector<RatFunc> prolonged;  // d_i of every input equation
  std::vector<RatFunc> projected;  // new equations of the original order
};

// Unknown section components are the unbarred jet variables y^k_μ; the
// source coordinates are x1..xn.
ProlongationStep prolong_linear_system(const std::vector<RatFunc>& system, const JetContext& ctx);

}  // namespace dgal
