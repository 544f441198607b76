#pragma once

#include <map>
#include <vector>

#include "lpmtk/lattice_path.hpp"
#include "lpmtk/matroid.hpp"

namespace lpmtk {

/// The cyclic total order t < t+1 < ... < n < 1 < ... < t-1 on [n].
class CyclicOrder {
 public:
  CyclicOrder(int t, int n);

  int t() const { return t_; }
  /// Position of element e in the shifted order (0-based).
  int position(int e) const { return (e - t_ + n_) % n_; }
  bool less_eq(int a, int b) const { return position(a) <= position(b); }

  /// Gale order on equal-size subsets: sort both by the shifted order and
  /// compare componentwise.
  bool gale_less_eq(const Basis& a, const Basis& b) const;

  /// Sorts a subset into the shifted order.
  Basis shifted_sort(const Basis& a) const;

 private:
  int t_;
  int n_;
};

/// The unique Gale-minimal basis with respect to the order starting at t,
/// found greedily.
Basis gale_min(const Matroid& m, int t);

/// Sequence of Gale-minimal bases I_t for t = 1..n.
class GrassmannNecklace {
 public:
  explicit GrassmannNecklace(std::vector<Basis> terms);

  const std::vector<Basis>& terms() const { return terms_; }
  int n() const { return static_cast<int>(terms_.size()); }

  /// Checks the defining axiom: I_{t+1} = (I_t \ {t}) ∪ {j} when t ∈ I_t
  /// and I_{t+1} = I_t otherwise (indices mod n).
  bool satisfies_axiom() const;

 private:
  std::vector<Basis> terms_;
};

GrassmannNecklace grassmann_necklace(const Matroid& m);

/// Permutation of [n] with colored fixed points. Colors are the raw values
/// of the construction: -1 on fixed points lying in the upper bounding
/// basis, +1 otherwise.
struct DecoratedPermutation {
  std::vector<int> images;    // images[i-1] = pi(i)
  std::map<int, int> colors;  // fixed point -> -1 or +1

  int n() const { return static_cast<int>(images.size()); }
  /// Anti-excedances: i with pi^{-1}(i) > i, plus fixed points colored -1.
  int anti_excedances() const;
};

/// Decorated permutation of an LPM: with I the Gale-minimal and J the
/// Gale-maximal basis, pi maps the r-th element of J to the r-th element of
/// I and the r-th element of [n]\J to the r-th element of [n]\I.
DecoratedPermutation decorated_permutation_lpm(const LatticePathMatroid& l);

/// Oh-envelope positroid test: the bases must equal the intersection of
/// the cyclically shifted Schubert matroids of the Grassmann necklace.
bool is_positroid(const Matroid& m);

/// Weak separation of two subsets of [n]: one of the difference sets can be
/// split into a part entirely below and a part entirely above the other
/// difference set.
bool weakly_separated(const Basis& i, const Basis& j);

/// Cluster test: pairwise weakly separated, of size dim(P_M)+1, and
/// containing the Grassmann necklace of M.
bool is_cluster(const std::vector<Basis>& c, const Matroid& m);

}  // namespace lpmtk
