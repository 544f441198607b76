#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lpmtk/matroid.hpp"
#include "lpmtk/rational.hpp"

namespace lpmtk {

/// An NE-path across the k x (n-k) grid, encoded by the positions of its k
/// north steps among the n steps. Positions are strictly increasing values
/// in 1..n.
class LatticePath {
 public:
  LatticePath(std::vector<int> north_steps, int n);

  const std::vector<int>& north_steps() const { return north_; }
  int n() const { return n_; }
  int k() const { return static_cast<int>(north_.size()); }

  /// Height of the path after s steps (number of north steps at positions
  /// <= s), for s in 0..n.
  int height_after(int s) const;

  bool operator==(const LatticePath& o) const {
    return n_ == o.n_ && north_ == o.north_;
  }

 private:
  std::vector<int> north_;
  int n_;
};

/// Lattice path matroid M[P,Q]: bases are the north-step sets of all paths
/// lying componentwise between P and Q. P is the componentwise minimum
/// (Gale-minimal) bounding path and Q the componentwise maximum; the
/// constructor rejects crossing paths with InvalidBoundsError.
class LatticePathMatroid {
 public:
  LatticePathMatroid(LatticePath p, LatticePath q);

  const LatticePath& P() const { return p_; }
  const LatticePath& Q() const { return q_; }
  const Matroid& matroid() const { return matroid_; }
  int n() const { return p_.n(); }
  int k() const { return p_.k(); }

 private:
  LatticePath p_;
  LatticePath q_;
  Matroid matroid_;
};

/// Builds M[P,Q] by enumerating the basis interval [P,Q].
LatticePathMatroid lpm_bases(const LatticePath& p, const LatticePath& q);

/// Interval recognition: P = componentwise minimum of the sorted bases,
/// Q = componentwise maximum; succeeds iff the bases are exactly the
/// interval [P,Q].
std::optional<std::pair<LatticePath, LatticePath>> recognize_lpm(const Matroid& m);

/// A snake is a connected LPM on at least two elements whose bounding strip
/// is tight: it attains the minimal basis count k(n-k)+1 of a connected
/// matroid.
bool is_snake(const LatticePathMatroid& l);

/// Totally nonnegative certificate matrix for an LPM: a k x n matrix with
/// a_{i,j} = x_i^{j-1} on the column window [P_i, Q_i] of row i and zero
/// outside it, seeded by x_1 = x1 and x_{i+1} = x_i^{k^2}.
class PositroidMatrix {
 public:
  PositroidMatrix(const LatticePathMatroid& l, long x1);

  int rows() const { return k_; }
  int cols() const { return n_; }
  const BigInt& entry(int i, int j) const { return entries_[i * n_ + j]; }
  const std::vector<BigInt>& seeds() const { return seeds_; }

  /// Exact determinant of the column submatrix indexed by a k-subset.
  BigInt minor_det(const Basis& columns) const;

  /// True iff minors are strictly positive exactly on the bases of the LPM
  /// and zero exactly on the non-bases.
  bool verify(const LatticePathMatroid& l) const;

 private:
  int k_;
  int n_;
  std::vector<BigInt> entries_;
  std::vector<BigInt> seeds_;
};

}  // namespace lpmtk
