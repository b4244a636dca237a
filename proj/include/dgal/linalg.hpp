#pragma once

#include <map>
#include <optional>
#include <vector>

#include "dgal/ratfunc.hpp"

namespace dgal {

using RatVector = std::vector<RatFunc>;
using RatMatrix = std::vector<RatVector>;

struct RankResult {
  int rank = 0;
  std::optional<RatFunc> certificate;  // absent for rank 0
  std::vector<int> pivot_rows;         // original row indices, ascending
  std::vector<int> pivot_cols;
};

// Rank over the fraction field, with the minor on the first pivot rows and
// columns found by fraction-free elimination.
RankResult generic_rank(const RatMatrix& m);

RatFunc determinant(const RatMatrix& m);

struct SolveResult {
  bool consistent = true;
  RatVector particular;              // free unknowns set to 0
  std::vector<RatVector> nullspace;  // basis, one vector per free column
  RatVector inconsistency;           // y with y*M = 0 and y*b != 0
};

SolveResult solve_linear(const RatMatrix& m, const RatVector& b);

struct EchelonForm {
  RatMatrix rows;               // polynomial entries, input row order permuted
  std::vector<int> order;       // order[r] = input index of echelon row r
  std::vector<int> pivot_cols;  // pivots searched only below pivot_limit
};

// Fraction-free echelon form after clearing row denominators.
EchelonForm fraction_free_echelon(const RatMatrix& m, int pivot_limit);

// Basis of {x : M x = 0}.
std::vector<RatVector> nullspace(const RatMatrix& m, int ncols);

// ---- Linear algebra over Q ---------------------------------------------

using QVector = std::vector<Rat>;
using QMatrix = std::vector<QVector>;

struct QEchelon {
  QMatrix rows;  // reduced row echelon form, zero rows dropped
  std::vector<int> pivot_cols;
};

QEchelon rref(QMatrix m, int ncols);
int rank_q(const QMatrix& m, int ncols);
std::vector<QVector> nullspace_q(const QMatrix& m, int ncols);
std::optional<QVector> solve_q(const QMatrix& m, const QVector& b);

// Rank of M evaluated at a rational point; throws DenominatorVanishes at poles.
int rank_at(const RatMatrix& m, const std::map<Var, Rat>& point);

}  // namespace dgal
