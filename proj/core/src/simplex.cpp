#include "lpmtk/lp.hpp"

#include <algorithm>
#include <vector>

#include "lpmtk/error.hpp"

namespace lpmtk {

void LinearProgram::add_row(QVec coeffs, Rel rel, Rat value) {
  if (static_cast<int>(coeffs.size()) != num_vars())
    throw MalformedInputError("LP row has wrong arity");
  // mpq comparisons assume canonical form; normalize at the API boundary.
  for (auto& c : coeffs) c.canonicalize();
  value.canonicalize();
  rows.push_back(std::move(coeffs));
  rels.push_back(rel);
  rhs.push_back(std::move(value));
}

namespace {

// Dense tableau for the standard form  min cost·z  s.t.  A z = b, z >= 0,
// b >= 0. Columns are laid out as [variable columns | artificials]; the
// artificial for row i is the identity column e_i and doubles as the place
// the dual multiplier of row i can be read from after optimizing.
struct Tableau {
  int m;
  int width;  // number of structural (non-artificial) columns
  std::vector<QVec> a;
  QVec b;
  std::vector<int> basis;

  int ncols() const { return width + m; }

  explicit Tableau(int rows, int structural)
      : m(rows), width(structural), a(rows, QVec(structural + rows, Rat(0))),
        b(rows, Rat(0)), basis(rows, 0) {}

  void pivot(int row, int col) {
    Rat piv = a[row][col];
    for (auto& x : a[row]) x /= piv;
    b[row] /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == row) continue;
      Rat f = a[i][col];
      if (f == 0) continue;
      for (int j = 0; j < ncols(); ++j) a[i][j] -= f * a[row][j];
      b[i] -= f * b[row];
    }
    basis[row] = col;
  }

  // Minimizes cost·z from the current basic feasible solution. `allowed`
  // marks the columns that may enter. Returns false on unboundedness.
  // On return `reduced` holds the final reduced-cost row and `value` the
  // attained objective.
  bool optimize(const QVec& cost, const std::vector<char>& allowed, QVec& reduced,
                Rat& value) {
    // Multiplier representation: reduced costs are recomputed from the
    // basis each iteration block; we keep them incrementally instead.
    reduced = cost;
    value = 0;
    for (int i = 0; i < m; ++i) {
      if (reduced[basis[i]] == 0) continue;
      Rat f = reduced[basis[i]];
      for (int j = 0; j < ncols(); ++j) reduced[j] -= f * a[i][j];
      value -= f * b[i];
    }
    // `value` now equals -cost·z for the current point; track it as the
    // running negated objective.
    long stalled = 0;
    const long stall_limit = 64 + 4L * (m + ncols());
    bool bland = false;
    while (true) {
      int enter = -1;
      if (!bland) {
        // Largest violation.
        for (int j = 0; j < ncols(); ++j)
          if (allowed[j] && reduced[j] < 0 && (enter < 0 || reduced[j] < reduced[enter]))
            enter = j;
      } else {
        for (int j = 0; j < ncols(); ++j)
          if (allowed[j] && reduced[j] < 0) {
            enter = j;
            break;
          }
      }
      if (enter < 0) {
        value = -value;
        return true;
      }
      int leave = -1;
      for (int i = 0; i < m; ++i) {
        if (a[i][enter] <= 0) continue;
        if (leave < 0) {
          leave = i;
          continue;
        }
        Rat lhs = b[i] * a[leave][enter];
        Rat rhs2 = b[leave] * a[i][enter];
        if (lhs < rhs2 || (lhs == rhs2 && basis[i] < basis[leave])) leave = i;
      }
      if (leave < 0) return false;
      bool degenerate = (b[leave] == 0);
      Rat f = reduced[enter];
      pivot(leave, enter);
      for (int j = 0; j < ncols(); ++j) reduced[j] -= f * a[leave][j];
      value -= f * b[leave];
      if (degenerate) {
        if (++stalled > stall_limit) bland = true;
      } else {
        stalled = 0;
      }
    }
  }
};

void verify_optimal(const LinearProgram& lp, const LpSolution& sol) {
  const int n = lp.num_vars();
  // Primal feasibility.
  for (int i = 0; i < lp.num_rows(); ++i) {
    Rat lhs = dot(lp.rows[i], sol.primal);
    bool ok = lp.rels[i] == Rel::Le   ? lhs <= lp.rhs[i]
              : lp.rels[i] == Rel::Ge ? lhs >= lp.rhs[i]
                                      : lhs == lp.rhs[i];
    if (!ok) throw Error("simplex internal error: primal infeasible");
  }
  for (int j = 0; j < n; ++j)
    if (lp.signs[j] == VarSign::NonNegative && sol.primal[j] < 0)
      throw Error("simplex internal error: primal sign violated");
  // Dual sign conditions and dual feasibility.
  Rat dual_value = 0;
  for (int i = 0; i < lp.num_rows(); ++i) {
    if (lp.rels[i] == Rel::Le && sol.dual[i] < 0)
      throw Error("simplex internal error: dual sign (<= row)");
    if (lp.rels[i] == Rel::Ge && sol.dual[i] > 0)
      throw Error("simplex internal error: dual sign (>= row)");
    dual_value += sol.dual[i] * lp.rhs[i];
  }
  for (int j = 0; j < n; ++j) {
    Rat coeff = 0;
    for (int i = 0; i < lp.num_rows(); ++i) coeff += sol.dual[i] * lp.rows[i][j];
    if (lp.signs[j] == VarSign::Free && coeff != lp.objective[j])
      throw Error("simplex internal error: dual infeasible (free var)");
    if (lp.signs[j] == VarSign::NonNegative && coeff < lp.objective[j])
      throw Error("simplex internal error: dual infeasible");
  }
  if (dual_value != sol.objective)
    throw Error("simplex internal error: strong duality violated");
}

void verify_farkas(const LinearProgram& lp, const QVec& y) {
  Rat total = 0;
  for (int i = 0; i < lp.num_rows(); ++i) {
    if (lp.rels[i] == Rel::Le && y[i] < 0)
      throw Error("simplex internal error: farkas sign (<= row)");
    if (lp.rels[i] == Rel::Ge && y[i] > 0)
      throw Error("simplex internal error: farkas sign (>= row)");
    total += y[i] * lp.rhs[i];
  }
  for (int j = 0; j < lp.num_vars(); ++j) {
    Rat coeff = 0;
    for (int i = 0; i < lp.num_rows(); ++i) coeff += y[i] * lp.rows[i][j];
    if (lp.signs[j] == VarSign::Free && coeff != 0)
      throw Error("simplex internal error: farkas combination (free var)");
    if (lp.signs[j] == VarSign::NonNegative && coeff < 0)
      throw Error("simplex internal error: farkas combination");
  }
  if (total >= 0) throw Error("simplex internal error: farkas value");
}

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
  const int n = lp.num_vars();
  const int m = lp.num_rows();
  for (const auto& r : lp.rows)
    if (static_cast<int>(r.size()) != n) throw MalformedInputError("ragged LP row");

  // Column layout: for each variable one column (nonnegative) or a +/- pair
  // (free), then one slack/surplus column per inequality row.
  std::vector<int> var_col(n), var_neg_col(n, -1);
  int width = 0;
  for (int j = 0; j < n; ++j) {
    var_col[j] = width++;
    if (lp.signs[j] == VarSign::Free) var_neg_col[j] = width++;
  }
  std::vector<int> slack_col(m, -1);
  for (int i = 0; i < m; ++i)
    if (lp.rels[i] != Rel::Eq) slack_col[i] = width++;

  Tableau t(m, width);
  QVec sigma(m, Rat(1));  // row scaling applied to reach b >= 0
  for (int i = 0; i < m; ++i) {
    Rat s = lp.rhs[i] < 0 ? Rat(-1) : Rat(1);
    sigma[i] = s;
    for (int j = 0; j < n; ++j) {
      Rat v = s * lp.rows[i][j];
      t.a[i][var_col[j]] = v;
      if (var_neg_col[j] >= 0) t.a[i][var_neg_col[j]] = -v;
    }
    if (slack_col[i] >= 0) t.a[i][slack_col[i]] = s * (lp.rels[i] == Rel::Le ? 1 : -1);
    t.a[i][width + i] = 1;  // artificial
    t.b[i] = s * lp.rhs[i];
    t.basis[i] = width + i;
  }

  // Phase 1: drive the artificials to zero.
  QVec cost1(t.ncols(), Rat(0));
  for (int i = 0; i < m; ++i) cost1[width + i] = 1;
  std::vector<char> allowed(t.ncols(), 1);
  QVec reduced;
  Rat value;
  if (!t.optimize(cost1, allowed, reduced, value))
    throw Error("simplex internal error: phase 1 unbounded");

  LpSolution sol;
  if (value > 0) {
    sol.status = LpStatus::Infeasible;
    sol.farkas.assign(m, Rat(0));
    // Phase-1 duals: pi_i = 1 - reduced(artificial_i); certificate is
    // y_i = -sigma_i * pi_i.
    for (int i = 0; i < m; ++i) sol.farkas[i] = -sigma[i] * (Rat(1) - reduced[width + i]);
    verify_farkas(lp, sol.farkas);
    return sol;
  }

  // Pivot any artificial still sitting (at zero) in the basis out of it, so
  // phase 2 can bar all artificials from entering.
  for (int i = 0; i < m; ++i) {
    if (t.basis[i] < width) continue;
    int col = -1;
    for (int j = 0; j < width; ++j)
      if (t.a[i][j] != 0) {
        col = j;
        break;
      }
    if (col >= 0) t.pivot(i, col);
    // If the row is all zero on structural columns it is a redundant
    // equality; the artificial stays basic at value zero, which is harmless.
  }

  QVec cost2(t.ncols(), Rat(0));
  for (int j = 0; j < n; ++j) {
    cost2[var_col[j]] = -lp.objective[j];
    if (var_neg_col[j] >= 0) cost2[var_neg_col[j]] = lp.objective[j];
  }
  for (int i = 0; i < m; ++i) allowed[width + i] = 0;
  if (!t.optimize(cost2, allowed, reduced, value)) {
    sol.status = LpStatus::Unbounded;
    return sol;
  }

  sol.status = LpStatus::Optimal;
  sol.objective = -value;
  sol.primal.assign(n, Rat(0));
  QVec z(t.ncols(), Rat(0));
  for (int i = 0; i < m; ++i) z[t.basis[i]] = t.b[i];
  for (int j = 0; j < n; ++j) {
    sol.primal[j] = z[var_col[j]];
    if (var_neg_col[j] >= 0) sol.primal[j] -= z[var_neg_col[j]];
  }
  sol.dual.assign(m, Rat(0));
  for (int i = 0; i < m; ++i) sol.dual[i] = sigma[i] * reduced[width + i];
  verify_optimal(lp, sol);
  return sol;
}

}  // namespace lpmtk
