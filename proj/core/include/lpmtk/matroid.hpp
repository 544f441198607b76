#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lpmtk {

/// A basis is a strictly increasing list of ground set elements in 1..n.
using Basis = std::vector<int>;

enum class MinorKind { Delete, Contract };

/// A matroid of rank k on the ordered ground set {1,...,n}, stored as its
/// explicit list of bases. Bases are kept sorted lexicographically, which is
/// also the documented order for flat weight vectors.
///
/// The constructor validates shape only (sizes, range, duplicates); use
/// is_matroid() to test the exchange axiom.
class Matroid {
 public:
  Matroid(int n, std::vector<Basis> bases);

  static Matroid uniform(int k, int n);

  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<Basis>& bases() const { return bases_; }
  std::size_t num_bases() const { return bases_.size(); }

  /// Bitmask of a basis: bit (e-1) set iff element e is in the basis.
  const std::vector<std::uint32_t>& basis_masks() const { return masks_; }

  bool has_basis(const Basis& b) const;
  bool has_basis_mask(std::uint32_t mask) const;

  /// Position of b in the lexicographic basis list; throws if absent.
  std::size_t basis_index(const Basis& b) const;

  /// True iff some independent set contains e (i.e. e is not a loop).
  bool is_loop(int e) const;
  /// True iff e lies in every basis.
  bool is_coloop(int e) const;

  /// Rank of a subset S, computed as max |B ∩ S| over bases.
  int rank(std::uint32_t subset_mask) const;

  bool operator==(const Matroid& other) const {
    return n_ == other.n_ && bases_ == other.bases_;
  }

 private:
  int n_;
  int k_;
  std::vector<Basis> bases_;
  std::vector<std::uint32_t> masks_;
};

/// Exchange axiom check: for all I, J in the collection and i in I there is
/// j in J with (I \ {i}) ∪ {j} in the collection. The collection must be a
/// nonempty family of equal-size subsets of [n]; anything else throws
/// MalformedInputError.
bool is_matroid(const std::vector<Basis>& bases, int n);

/// Single-element minor. Deletion keeps the bases avoiding e, contraction
/// keeps the bases through e with e removed; both relabel the ground set to
/// [n-1]. Contracting a loop or deleting a coloop throws
/// DegenerateMinorError.
Matroid minor(const Matroid& m, MinorKind kind, int e);

/// Dual matroid: complements of bases, rank n-k.
Matroid dual(const Matroid& m);

/// Finest partition of [n] into connected components, found by scanning
/// subsets for rank additivity r(A) + r([n]\A) = r([n]). Blocks are sorted.
std::vector<std::vector<int>> connected_components(const Matroid& m);

bool is_connected(const Matroid& m);

/// Dimension of the matroid base polytope: n minus the number of connected
/// components.
int polytope_dimension(const Matroid& m);

/// True iff some sequence of deletions and contractions produces U_{2,4}.
/// Implemented as a scan over (4-subset, contracted-set) pairs against the
/// full rank table, so it is exact for n up to ~12.
bool has_u24_minor(const Matroid& m);

/// Connected matroids without a U_{2,4} minor. This is the classification
/// of series-parallel matroids within the class of connected positroids,
/// which is the setting where the library uses it.
bool is_series_parallel(const Matroid& m);

std::string to_string(const Basis& b);

}  // namespace lpmtk
