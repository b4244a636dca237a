#include "dgal/jets.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "dgal/errors.hpp"

namespace dgal {

// ---------------------------------------------------------------- MultiIndex

MultiIndex::MultiIndex(std::vector<int> counts) : counts_(std::move(counts)) {
  for (int c : counts_)
    if (c < 0) throw std::invalid_argument("negative multi-index entry");
}

MultiIndex MultiIndex::from_dirs(const std::vector<int>& dirs, int n) {
  std::vector<int> c(n, 0);
  for (int d : dirs) {
    if (d < 1 || d > n) throw std::invalid_argument("direction out of range");
    ++c[d - 1];
  }
  return MultiIndex(std::move(c));
}

int MultiIndex::order() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }

std::vector<int> MultiIndex::dirs() const {
  std::vector<int> d;
  for (int i = 0; i < n(); ++i) d.insert(d.end(), counts_[i], i + 1);
  return d;
}

MultiIndex MultiIndex::successor(int i) const {
  if (i < 1 || i > n()) throw std::invalid_argument("direction out of range");
  MultiIndex s = *this;
  ++s.counts_[i - 1];
  return s;
}

int MultiIndex::last_dir() const {
  for (int i = n(); i >= 1; --i)
    if (counts_[i - 1] > 0) return i;
  throw std::logic_error("order-0 multi-index has no parent");
}

MultiIndex MultiIndex::parent() const {
  MultiIndex p = *this;
  --p.counts_[last_dir() - 1];
  return p;
}

std::vector<MultiIndex> MultiIndex::of_order(int n, int r) {
  std::vector<MultiIndex> out;
  std::vector<int> dirs(r, 1);
  // Non-decreasing direction strings in lexicographic order.
  while (true) {
    out.push_back(from_dirs(dirs, n));
    int k = r - 1;
    while (k >= 0 && dirs[k] == n) --k;
    if (k < 0) break;
    ++dirs[k];
    for (int j = k + 1; j < r; ++j) dirs[j] = dirs[k];
  }
  return out;
}

std::vector<MultiIndex> MultiIndex::up_to(int n, int q) {
  std::vector<MultiIndex> out;
  for (int r = 0; r <= q; ++r) {
    auto level = of_order(n, r);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::string MultiIndex::to_string() const { return dirs_string(dirs()); }

// --------------------------------------------------------- total derivative

namespace {

bool has_jet_order(const Var& v) {
  return v.kind() == VarKind::Jet || v.kind() == VarKind::Groupoid || v.kind() == VarKind::Formal;
}

// Image of a single variable under d_i.
MPoly derivative_of_var(const Var& v, int i, const JetContext& ctx, const DerivOptions& opt) {
  switch (v.kind()) {
    case VarKind::Source:
      return v.component() == i ? MPoly(Rat(1)) : MPoly();
    case VarKind::Jet:
      return MPoly(v.with_dir(i));
    case VarKind::Groupoid:
      if (!opt.groupoid_chain_rule) return MPoly();
      {
        MPoly acc;
        for (int r = 1; r <= ctx.m; ++r) acc += MPoly(v.with_dir(r)) * MPoly(Var::jet(r, {i}));
        return acc;
      }
    case VarKind::Formal:
      switch (opt.formal) {
        case FormalMode::Constant:
          return MPoly();
        case FormalMode::OverSource:
          return MPoly(v.with_dir(i));
        case FormalMode::OverTarget: {
          MPoly acc;
          for (int r = 1; r <= ctx.m; ++r) acc += MPoly(v.with_dir(r)) * MPoly(Var::jet(r, {i}));
          return acc;
        }
      }
      return MPoly();
    case VarKind::Param:
    case VarKind::Symbol:
      return MPoly();
  }
  return MPoly();
}

MPoly derive(const MPoly& p, int i, const JetContext& ctx, const DerivOptions& opt) {
  MPoly acc;
  for (const Var& v : p.variables()) {
    if (opt.order_cap >= 0 && has_jet_order(v) && v.order() + 1 > opt.order_cap) {
      // Only an overflow if the variable actually moves under d_i.
      if (!derivative_of_var(v, i, ctx, {opt.groupoid_chain_rule, opt.formal, -1}).is_zero())
        throw OrderOverflow("total derivative of " + v.name() + " exceeds order " + std::to_string(opt.order_cap));
    }
    MPoly dv = derivative_of_var(v, i, ctx, opt);
    if (dv.is_zero()) continue;
    acc += dv * p.partial(v);
  }
  return acc;
}

}  // namespace

RatFunc total_derivative(const RatFunc& f, int i, const JetContext& ctx, const DerivOptions& opt) {
  if (i < 1 || i > ctx.n) throw std::invalid_argument("total_derivative: direction out of range");
  if (f.is_polynomial()) {
    MPoly d = derive(f.num(), i, ctx, opt);
    return RatFunc(d) * RatFunc(Rat(1) / f.den().constant_value());
  }
  MPoly dn = derive(f.num(), i, ctx, opt);
  MPoly dd = derive(f.den(), i, ctx, opt);
  return RatFunc(dn * f.den() - f.num() * dd, f.den() * f.den());
}

RatFunc total_derivative(const RatFunc& f, const MultiIndex& mu, const JetContext& ctx, const DerivOptions& opt) {
  RatFunc g = f;
  for (int d : mu.dirs()) g = total_derivative(g, d, ctx, opt);
  return g;
}

int jet_order(const RatFunc& f) {
  int best = -1;
  for (const Var& v : f.variables())
    if (v.kind() == VarKind::Jet) best = std::max(best, v.order());
  return best;
}

// ------------------------------------------------------- composition, inverse

JetPoint identity_groupoid_jet(int m, int q) {
  JetPoint g;
  for (const auto& lam : MultiIndex::up_to(m, q)) {
    for (int u = 1; u <= m; ++u) {
      Var key = Var::groupoid(u, lam.dirs());
      if (lam.order() == 0)
        g[key] = RatFunc(Var::jet(u));
      else if (lam.order() == 1)
        g[key] = RatFunc(Rat(lam[u] == 1 ? 1 : 0));
      else
        g[key] = RatFunc();
    }
  }
  return g;
}

JetPoint groupoid_as_source(const JetPoint& g) {
  JetPoint s;
  for (const auto& [k, v] : g) s[Var::jet(k.component(), k.dirs())] = v;
  return s;
}

JetPoint source_as_groupoid(const JetPoint& s) {
  JetPoint g;
  for (const auto& [k, v] : s) g[Var::groupoid(k.component(), k.dirs())] = v;
  return g;
}

JetPoint jet_compose(const JetPoint& source_jet, const JetPoint& groupoid_jet, int q, const JetContext& ctx) {
  DerivOptions opt;
  opt.groupoid_chain_rule = true;
  Bindings bind;
  for (const auto& [k, v] : groupoid_jet) bind[k] = v;
  for (const auto& [k, v] : source_jet)
    if (k.order() > 0) bind[k] = v;

  JetPoint out;
  for (int u = 1; u <= ctx.m; ++u) {
    std::map<MultiIndex, RatFunc> symbolic;
    for (const auto& nu : MultiIndex::up_to(ctx.n, q)) {
      RatFunc e = nu.order() == 0 ? RatFunc(Var::groupoid(u)) : total_derivative(symbolic.at(nu.parent()), nu.last_dir(), ctx, opt);
      out[Var::jet(u, nu.dirs())] = substitute(e, bind);
      symbolic.emplace(nu, std::move(e));
    }
  }
  return out;
}

JetPoint jet_invert(const JetPoint& groupoid_jet, int q, int m) {
  if (q > 2) throw std::invalid_argument("jet_invert: orders above 2 are not supported");
  auto value = [&](const Var& v) {
    auto it = groupoid_jet.find(v);
    return it == groupoid_jet.end() ? RatFunc(v) : it->second;
  };
  JetPoint inv;
  for (int u = 1; u <= m; ++u) inv[Var::groupoid(u)] = RatFunc(Var::jet(u));
  if (q == 0) return inv;

  RatMatrix a(m, RatVector(m));
  for (int u = 1; u <= m; ++u)
    for (int r = 1; r <= m; ++r) a[u - 1][r - 1] = value(Var::groupoid(u, {r}));
  if (determinant(a).is_zero()) throw SingularJacobian("first-order block of the groupoid jet is singular");
  RatMatrix h(m, RatVector(m));
  for (int b = 0; b < m; ++b) {
    RatVector e(m);
    e[b] = RatFunc(Rat(1));
    SolveResult s = solve_linear(a, e);
    for (int u = 0; u < m; ++u) h[u][b] = s.particular[u];
  }
  for (int u = 1; u <= m; ++u)
    for (int r = 1; r <= m; ++r) inv[Var::groupoid(u, {r})] = h[u - 1][r - 1];
  if (q == 1) return inv;

  for (const auto& ab : MultiIndex::of_order(m, 2)) {
    auto d = ab.dirs();
    const int ia = d[0] - 1, ib = d[1] - 1;
    for (int u = 1; u <= m; ++u) {
      RatFunc acc;
      for (int v = 1; v <= m; ++v) {
        if (h[u - 1][v - 1].is_zero()) continue;
        for (int r = 1; r <= m; ++r)
          for (int s = 1; s <= m; ++s) {
            RatFunc g2 = value(Var::groupoid(v, {r, s}));
            if (g2.is_zero()) continue;
            acc += h[u - 1][v - 1] * g2 * h[r - 1][ia] * h[s - 1][ib];
          }
      }
      inv[Var::groupoid(u, d)] = -acc;
    }
  }
  return inv;
}

// ------------------------------------------------------------- prolongation

namespace {

bool is_unknown(const Var& v) { return v.kind() == VarKind::Jet && v.bar() == 0; }

std::set<Var> unknowns_of(const RatFunc& f) {
  std::set<Var> out;
  for (const Var& v : f.variables())
    if (is_unknown(v)) out.insert(v);
  return out;
}

RatVector coefficient_row(const RatFunc& eq, const std::vector<Var>& cols) {
  RatVector row;
  row.reserve(cols.size());
  for (const Var& c : cols) row.push_back(eq.mentions(c) ? partial_derivative(eq, c) : RatFunc());
  return row;
}

RatFunc normalised_equation(const RatVector& row, const std::vector<Var>& cols) {
  MPoly content;
  for (const auto& e : row)
    if (!e.is_zero()) content = content.is_zero() ? e.num() : gcd(content, e.num());
  MPoly eq;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (row[j].is_zero()) continue;
    eq += *row[j].num().divide_exact(content) * MPoly(cols[j]);
  }
  return RatFunc(eq.monic());
}

}  // namespace

ProlongationStep prolong_linear_system(const std::vector<RatFunc>& system, const JetContext& ctx) {
  ProlongationStep out;
  if (system.empty()) return out;
  int top = 0;
  std::set<Var> low_set;
  for (const auto& eq : system)
    for (const Var& v : unknowns_of(eq)) {
      top = std::max(top, v.order());
      low_set.insert(v);
    }

  std::set<Var> high_set;
  for (const auto& eq : system)
    for (int i = 1; i <= ctx.n; ++i) {
      RatFunc d = total_derivative(eq, i, ctx);
      for (const Var& v : unknowns_of(d)) (v.order() > top ? high_set : low_set).insert(v);
      out.prolonged.push_back(std::move(d));
    }

  std::vector<Var> cols(high_set.begin(), high_set.end());
  const int nhigh = static_cast<int>(cols.size());
  cols.insert(cols.end(), low_set.begin(), low_set.end());

  RatMatrix rows;
  for (const auto& eq : out.prolonged) rows.push_back(coefficient_row(eq, cols));
  EchelonForm ech = fraction_free_echelon(rows, nhigh);

  // Span of the original equations, grown by each accepted projection.
  std::vector<Var> low_cols(cols.begin() + nhigh, cols.end());
  RatMatrix span;
  for (const auto& eq : system) span.push_back(coefficient_row(eq, low_cols));
  int span_rank = generic_rank(span).rank;

  for (std::size_t r = ech.pivot_cols.size(); r < ech.rows.size(); ++r) {
    RatVector low(ech.rows[r].begin() + nhigh, ech.rows[r].end());
    if (std::all_of(low.begin(), low.end(), [](const RatFunc& e) { return e.is_zero(); })) continue;
    span.push_back(low);
    int rk = generic_rank(span).rank;
    if (rk == span_rank) {
      span.pop_back();
      continue;
    }
    span_rank = rk;
    out.projected.push_back(normalised_equation(low, low_cols));
  }
  return out;
}

}  // namespace dgal
