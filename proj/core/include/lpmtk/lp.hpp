#pragma once

#include <vector>

#include "lpmtk/rational.hpp"

namespace lpmtk {

enum class Rel { Le, Eq, Ge };
enum class VarSign { Free, NonNegative };
enum class LpStatus { Optimal, Infeasible, Unbounded };

/// A linear program in the form
///   maximize objective · x
///   subject to row_i · x (<= | = | >=) rhs_i
/// with each variable either free or constrained to be nonnegative.
struct LinearProgram {
  explicit LinearProgram(int num_vars)
      : objective(num_vars, Rat(0)), signs(num_vars, VarSign::Free) {}

  int num_vars() const { return static_cast<int>(objective.size()); }
  int num_rows() const { return static_cast<int>(rhs.size()); }

  void add_row(QVec coeffs, Rel rel, Rat value);

  QVec objective;
  std::vector<VarSign> signs;
  std::vector<QVec> rows;
  std::vector<Rel> rels;
  QVec rhs;
};

/// Result of an exact simplex solve.
///
/// For Optimal results the primal point, the objective value, and a dual
/// vector (one multiplier per row) are returned; strong duality and dual
/// feasibility are re-verified against the input before returning. For
/// Infeasible results `farkas` holds a verified certificate: a row
/// combination proving emptiness.
struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Rat objective = 0;
  QVec primal;
  QVec dual;
  QVec farkas;
};

/// Two-phase primal simplex over exact rationals. Uses a largest-reduced-
/// cost rule and falls back to Bland's rule after a stretch of degenerate
/// pivots, so it always terminates.
LpSolution solve_lp(const LinearProgram& lp);

}  // namespace lpmtk
