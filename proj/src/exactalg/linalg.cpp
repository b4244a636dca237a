#include "dgal/linalg.hpp"

#include <algorithm>
#include <stdexcept>

#include "dgal/errors.hpp"

namespace dgal {

namespace {

using PolyRow = std::vector<MPoly>;

struct Cleared {
  std::vector<PolyRow> rows;
  std::vector<MPoly> multipliers;  // row i of the input times multipliers[i] gives rows[i]
};

Cleared clear_denominators(const RatMatrix& m) {
  Cleared c;
  for (const auto& row : m) {
    MPoly l(Rat(1));
    for (const auto& e : row)
      if (!e.is_polynomial()) l = lcm(l, e.den());
    PolyRow pr;
    pr.reserve(row.size());
    for (const auto& e : row) {
      auto q = l.divide_exact(e.den());
      pr.push_back(e.num() * *q);
    }
    c.rows.push_back(std::move(pr));
    c.multipliers.push_back(l);
  }
  return c;
}

struct Elimination {
  std::vector<PolyRow> rows;
  std::vector<int> order;  // order[r] = original index of current row r
  std::vector<int> pivot_cols;
  int swaps_parity = 0;
};

// Bareiss elimination; pivots are searched only in columns < pivot_limit.
Elimination bareiss(std::vector<PolyRow> rows, int pivot_limit) {
  Elimination e;
  e.order.resize(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) e.order[i] = static_cast<int>(i);
  if (rows.empty()) return e;
  const int ncols = static_cast<int>(rows[0].size());
  const int nrows = static_cast<int>(rows.size());
  MPoly prev(Rat(1));
  int r = 0;
  for (int c = 0; c < pivot_limit && r < nrows; ++c) {
    int p = r;
    while (p < nrows && rows[p][c].is_zero()) ++p;
    if (p == nrows) continue;
    if (p != r) {
      std::rotate(rows.begin() + r, rows.begin() + p, rows.begin() + p + 1);
      std::rotate(e.order.begin() + r, e.order.begin() + p, e.order.begin() + p + 1);
      e.swaps_parity ^= (p - r) & 1;
    }
    const MPoly& piv = rows[r][c];
    for (int i = r + 1; i < nrows; ++i) {
      const MPoly lead = rows[i][c];
      for (int j = c + 1; j < ncols; ++j) {
        MPoly v = piv * rows[i][j] - lead * rows[r][j];
        if (!prev.is_constant() || prev.constant_value() != 1) {
          auto q = v.divide_exact(prev);
          if (!q) throw std::logic_error("Bareiss division not exact");
          v = std::move(*q);
        }
        rows[i][j] = std::move(v);
      }
      rows[i][c] = MPoly();
    }
    prev = rows[r][c];
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.rows = std::move(rows);
  return e;
}

// Solves the echelon system for the pivot unknowns with the free unknowns
// given; rhs[r] is the right-hand side of echelon row r.
RatVector back_substitute(const Elimination& e, int ncols, const RatVector& rhs, const RatVector& free_values) {
  RatVector x = free_values;
  x.resize(ncols);
  const int rank = static_cast<int>(e.pivot_cols.size());
  for (int r = rank - 1; r >= 0; --r) {
    int pc = e.pivot_cols[r];
    RatFunc acc = rhs[r];
    for (int j = pc + 1; j < ncols; ++j)
      if (!e.rows[r][j].is_zero() && !x[j].is_zero()) acc -= RatFunc(e.rows[r][j]) * x[j];
    x[pc] = acc / RatFunc(e.rows[r][pc]);
  }
  return x;
}

}  // namespace

EchelonForm fraction_free_echelon(const RatMatrix& m, int pivot_limit) {
  EchelonForm out;
  if (m.empty()) return out;
  Elimination e = bareiss(clear_denominators(m).rows, pivot_limit);
  for (const auto& row : e.rows) {
    RatVector r;
    r.reserve(row.size());
    for (const auto& p : row) r.emplace_back(p);
    out.rows.push_back(std::move(r));
  }
  out.order = std::move(e.order);
  out.pivot_cols = std::move(e.pivot_cols);
  return out;
}

RatFunc determinant(const RatMatrix& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return RatFunc(Rat(1));
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("determinant of a non-square matrix");
  Cleared c = clear_denominators(m);
  Elimination e = bareiss(c.rows, n);
  if (static_cast<int>(e.pivot_cols.size()) < n) return RatFunc();
  MPoly mult(Rat(1));
  for (const auto& l : c.multipliers) mult = mult * l;
  RatFunc d(e.rows[n - 1][n - 1], mult);
  return e.swaps_parity ? -d : d;
}

RankResult generic_rank(const RatMatrix& m) {
  RankResult res;
  if (m.empty()) return res;
  const int ncols = static_cast<int>(m[0].size());
  Cleared c = clear_denominators(m);
  Elimination e = bareiss(c.rows, ncols);
  res.rank = static_cast<int>(e.pivot_cols.size());
  res.pivot_cols = e.pivot_cols;
  res.pivot_rows.assign(e.order.begin(), e.order.begin() + res.rank);
  std::sort(res.pivot_rows.begin(), res.pivot_rows.end());
  if (res.rank > 0) {
    RatMatrix sub;
    for (int r : res.pivot_rows) {
      RatVector row;
      for (int col : res.pivot_cols) row.push_back(m[r][col]);
      sub.push_back(std::move(row));
    }
    res.certificate = determinant(sub);
  }
  return res;
}

std::vector<RatVector> nullspace(const RatMatrix& m, int ncols) {
  std::vector<RatVector> basis;
  if (m.empty()) {
    for (int f = 0; f < ncols; ++f) {
      RatVector v(ncols);
      v[f] = RatFunc(Rat(1));
      basis.push_back(std::move(v));
    }
    return basis;
  }
  Cleared c = clear_denominators(m);
  Elimination e = bareiss(c.rows, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (int pc : e.pivot_cols) is_pivot[pc] = true;
  const int rank = static_cast<int>(e.pivot_cols.size());
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    RatVector free(ncols);
    free[f] = RatFunc(Rat(1));
    RatVector rhs(rank);
    for (int r = 0; r < rank; ++r) rhs[r] = -RatFunc(e.rows[r][f]);
    // Free column f is excluded from the back-substitution sums by zeroing it.
    RatVector start(ncols);
    RatVector x = back_substitute(e, ncols, rhs, start);
    x[f] = RatFunc(Rat(1));
    basis.push_back(std::move(x));
  }
  return basis;
}

SolveResult solve_linear(const RatMatrix& m, const RatVector& b) {
  if (m.size() != b.size()) throw std::invalid_argument("solve_linear: dimension mismatch");
  SolveResult res;
  const int ncols = m.empty() ? 0 : static_cast<int>(m[0].size());
  RatMatrix aug = m;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  Cleared c = clear_denominators(aug);
  Elimination e = bareiss(c.rows, ncols);
  const int rank = static_cast<int>(e.pivot_cols.size());
  for (std::size_t r = rank; r < e.rows.size(); ++r) {
    if (!e.rows[r][ncols].is_zero()) {
      res.consistent = false;
      // Left kernel vector of M that does not annihilate b.
      RatMatrix mt(ncols, RatVector(m.size()));
      for (std::size_t i = 0; i < m.size(); ++i)
        for (int j = 0; j < ncols; ++j) mt[j][i] = m[i][j];
      for (auto& y : nullspace(mt, static_cast<int>(m.size()))) {
        RatFunc dot;
        for (std::size_t i = 0; i < y.size(); ++i) dot += y[i] * b[i];
        if (!dot.is_zero()) {
          res.inconsistency = std::move(y);
          break;
        }
      }
      return res;
    }
  }
  RatVector rhs(rank);
  for (int r = 0; r < rank; ++r) rhs[r] = RatFunc(e.rows[r][ncols]);
  res.particular = back_substitute(e, ncols, rhs, RatVector(ncols));
  res.nullspace = nullspace(m, ncols);
  return res;
}

// ------------------------------------------------------------------ over Q

QEchelon rref(QMatrix m, int ncols) {
  QEchelon out;
  int r = 0;
  const int nrows = static_cast<int>(m.size());
  for (int c = 0; c < ncols && r < nrows; ++c) {
    int p = r;
    while (p < nrows && m[p][c] == 0) ++p;
    if (p == nrows) continue;
    std::swap(m[p], m[r]);
    Rat inv = Rat(1) / m[r][c];
    for (auto& v : m[r]) v *= inv;
    for (int i = 0; i < nrows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] -= f * m[r][j];
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

int rank_q(const QMatrix& m, int ncols) { return static_cast<int>(rref(m, ncols).pivot_cols.size()); }

std::vector<QVector> nullspace_q(const QMatrix& m, int ncols) {
  QEchelon e = rref(m, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (int pc : e.pivot_cols) is_pivot[pc] = true;
  std::vector<QVector> basis;
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    QVector v(ncols, Rat(0));
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) v[e.pivot_cols[r]] = -e.rows[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVector> solve_q(const QMatrix& m, const QVector& b) {
  const int ncols = m.empty() ? 0 : static_cast<int>(m[0].size());
  QMatrix aug = m;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  QEchelon e = rref(aug, ncols + 1);
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == ncols) return std::nullopt;
  QVector x(ncols, Rat(0));
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) x[e.pivot_cols[r]] = e.rows[r][ncols];
  return x;
}

int rank_at(const RatMatrix& m, const std::map<Var, Rat>& point) {
  if (m.empty()) return 0;
  QMatrix q;
  for (const auto& row : m) {
    QVector qr;
    for (const auto& e : row) qr.push_back(evaluate(e, point));
    q.push_back(std::move(qr));
  }
  return rank_q(q, static_cast<int>(m[0].size()));
}

}  // namespace dgal
