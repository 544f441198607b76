#pragma once

// Brute-force reference implementations used only by tests. They share no
// code with the production paths they check: linear algebra is a local
// Gaussian elimination and all searches are exhaustive.

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "lpmtk/matroid.hpp"
#include "lpmtk/rational.hpp"

namespace oracle {

using lpmtk::Basis;
using lpmtk::QVec;
using lpmtk::Rat;

// Rank of a rational matrix, by plain elimination.
inline int rank(std::vector<QVec> rows) {
  int r = 0;
  const int cols = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    int pivot = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][c] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[r], rows[pivot]);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rat f = rows[i][c] / rows[r][c];
      for (int j = 0; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

inline int affine_rank(const std::vector<QVec>& pts) {
  if (pts.empty()) return -1;
  std::vector<QVec> rows;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    QVec d(pts[i].size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = pts[i][j] - pts[0][j];
    rows.push_back(std::move(d));
  }
  return rank(std::move(rows));
}

// Solves M x = b for one particular solution (free variables zero).
// Returns nullopt when inconsistent.
inline std::optional<QVec> solve(std::vector<QVec> m, QVec b) {
  const int nrows = static_cast<int>(m.size());
  const int ncols = m.empty() ? 0 : static_cast<int>(m.front().size());
  std::vector<int> pivot_col(nrows, -1);
  int r = 0;
  for (int c = 0; c < ncols && r < nrows; ++c) {
    int pivot = -1;
    for (int i = r; i < nrows; ++i)
      if (m[i][c] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[r], m[pivot]);
    std::swap(b[r], b[pivot]);
    for (int i = 0; i < nrows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c] / m[r][c];
      for (int j = 0; j < ncols; ++j) m[i][j] -= f * m[r][j];
      b[i] -= f * b[r];
    }
    pivot_col[r] = c;
    ++r;
  }
  for (int i = r; i < nrows; ++i)
    if (b[i] != 0) return std::nullopt;
  QVec x(ncols, Rat(0));
  for (int i = 0; i < r; ++i) x[pivot_col[i]] = b[i] / m[i][pivot_col[i]];
  return x;
}

// All maximal cells of the regular subdivision (min convention), found by
// fitting an affine functional through every affinely spanning
// (d+1)-subset of lifted points and keeping the globally valid ones.
inline std::set<std::vector<std::size_t>> lower_cells(const std::vector<QVec>& pts,
                                                      const QVec& heights) {
  const std::size_t npts = pts.size();
  const int n = static_cast<int>(pts.front().size());
  const int d = affine_rank(pts);
  std::set<std::vector<std::size_t>> cells;
  std::vector<std::size_t> subset(d + 1);
  auto rec = [&](auto&& self, int pos, std::size_t start) -> void {
    if (pos == d + 1) {
      // Fit c·v + c0 = h on the subset.
      std::vector<QVec> m;
      QVec b;
      std::vector<QVec> sub_pts;
      for (auto idx : subset) {
        QVec row(n + 1);
        for (int j = 0; j < n; ++j) row[j] = pts[idx][j];
        row[n] = 1;
        m.push_back(std::move(row));
        b.push_back(heights[idx]);
        sub_pts.push_back(pts[idx]);
      }
      if (affine_rank(sub_pts) != d) return;
      auto fit = solve(std::move(m), std::move(b));
      if (!fit) return;
      std::vector<std::size_t> tight;
      for (std::size_t i = 0; i < npts; ++i) {
        Rat v = (*fit)[n];
        for (int j = 0; j < n; ++j) v += (*fit)[j] * pts[i][j];
        if (v > heights[i]) return;  // functional pokes above the lift
        if (v == heights[i]) tight.push_back(i);
      }
      std::vector<QVec> tight_pts;
      for (auto i : tight) tight_pts.push_back(pts[i]);
      if (affine_rank(tight_pts) == d) cells.insert(tight);
      return;
    }
    for (std::size_t i = start; i + (d - pos) < npts; ++i) {
      subset[pos] = i;
      self(self, pos + 1, i + 1);
    }
  };
  if (d == 0) {
    cells.insert([&] {
      std::vector<std::size_t> all(npts);
      for (std::size_t i = 0; i < npts; ++i) all[i] = i;
      return all;
    }());
    return cells;
  }
  rec(rec, 0, 0);
  return cells;
}

// Componentwise-interval filter over all k-subsets of [n].
inline std::vector<Basis> interval_filter(const Basis& p, const Basis& q, int n) {
  const int k = static_cast<int>(p.size());
  std::vector<Basis> out;
  lpmtk::Matroid uni = lpmtk::Matroid::uniform(k, n);
  for (const auto& cand : uni.bases()) {
    bool ok = true;
    for (int j = 0; j < k; ++j)
      if (cand[j] < p[j] || cand[j] > q[j]) ok = false;
    if (ok) out.push_back(cand);
  }
  return out;
}

// Gale-minimal basis by pairwise comparison over the full basis list.
inline Basis gale_min(const lpmtk::Matroid& m, int t) {
  auto shifted = [&](int e) { return (e - t + m.n()) % m.n(); };
  auto leq = [&](const Basis& a, const Basis& b) {
    Basis sa = a, sb = b;
    auto cmp = [&](int x, int y) { return shifted(x) < shifted(y); };
    std::sort(sa.begin(), sa.end(), cmp);
    std::sort(sb.begin(), sb.end(), cmp);
    for (std::size_t i = 0; i < sa.size(); ++i)
      if (shifted(sa[i]) > shifted(sb[i])) return false;
    return true;
  };
  Basis best = m.bases().front();
  for (const auto& b : m.bases())
    if (leq(b, best)) best = b;
  // The Gale minimum must compare below every basis; verify.
  for (const auto& b : m.bases())
    if (!leq(best, b)) throw std::logic_error("no Gale minimum found");
  return best;
}

}  // namespace oracle
