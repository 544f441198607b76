#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lpmtk/geometry.hpp"
#include "lpmtk/matroid.hpp"
#include "lpmtk/rational.hpp"

namespace lpmtk {

/// A rational lifting of the bases of an ambient matroid. Values are stored
/// in the ambient's (lexicographic) basis order; non-bases carry no value.
class WeightVector {
 public:
  explicit WeightVector(Matroid ambient);  // zero weight
  WeightVector(Matroid ambient, QVec values);

  const Matroid& ambient() const { return ambient_; }
  const QVec& values() const { return values_; }
  const Rat& at(const Basis& b) const { return values_[ambient_.basis_index(b)]; }
  Rat& at(const Basis& b) { return values_[ambient_.basis_index(b)]; }
  const Rat& at_index(std::size_t i) const { return values_[i]; }

  WeightVector operator+(const WeightVector& other) const;
  WeightVector operator*(const Rat& scale) const;

  bool operator==(const WeightVector& other) const {
    return ambient_ == other.ambient_ && values_ == other.values_;
  }

 private:
  Matroid ambient_;
  QVec values_;
};

/// One maximal cell of a subdivision, with its supporting-functional
/// certificate: normal·e_B + offset <= w(B) for every basis, with equality
/// exactly on the cell's bases.
struct SubdivisionCell {
  std::vector<Basis> bases;
  QVec normal;
  Rat offset;
};

/// A polytopal subdivision of a matroid base polytope, recorded through the
/// basis sets of its maximal cells.
class Subdivision {
 public:
  Subdivision(Matroid ambient, std::vector<SubdivisionCell> cells,
              std::optional<WeightVector> weight);

  const Matroid& ambient() const { return ambient_; }
  const std::vector<SubdivisionCell>& cells() const { return cells_; }
  const std::optional<WeightVector>& weight() const { return weight_; }
  std::size_t num_cells() const { return cells_.size(); }

  /// The cells as a canonical set of basis sets (certificates dropped).
  std::vector<std::vector<Basis>> cell_sets() const;

 private:
  Matroid ambient_;
  std::vector<SubdivisionCell> cells_;
  std::optional<WeightVector> weight_;
};

/// Regular subdivision of the ambient matroid polytope in the lower-hull
/// (min) convention: maximal cells are the tight sets of the lower facets
/// of the lifted vertex configuration.
Subdivision regular_subdivision(const Matroid& m, const WeightVector& w);

/// Per-cell classification report.
struct CellClassification {
  bool is_matroid = false;
  bool is_lpm = false;
  bool is_snake = false;
  bool is_positroid = false;
  bool is_series_parallel = false;
};

std::vector<CellClassification> classify_cells(const Subdivision& s);

/// A split of the ambient polytope by the hyperplane x(A) = mu, with the
/// two induced cells.
struct Split {
  std::vector<int> a_set;
  int mu = 0;
  std::vector<Basis> below;  // bases with |B ∩ A| <= mu
  std::vector<Basis> above;  // bases with |B ∩ A| >= mu

  /// Two descriptions are the same split iff they cut the bases the same
  /// way (this identifies (A, mu) with its complement description).
  bool same_cut(const Split& other) const;
};

/// Canonical split weight w(B) = max(|B ∩ A| - mu, 0). Throws
/// NotASplitError unless the hyperplane meets the relative interior of the
/// polytope and induces a two-cell subdivision.
WeightVector split_weight(const Matroid& m, const std::vector<int>& a_set, int mu);

/// Builds and validates the Split for (A, mu); throws NotASplitError when
/// the hyperplane does not define a split of P_M.
Split make_split(const Matroid& m, const std::vector<int>& a_set, int mu);

/// Splits are compatible iff their hyperplanes do not meet in the relative
/// interior of P_M. A split is compatible with itself by convention.
bool splits_compatible(const Split& s1, const Split& s2, const Matroid& m);

/// Common refinement: full-dimensional pairwise intersections of cells
/// (vertex-set intersections). When both inputs carry inducing weights the
/// result carries their sum together with summed functional certificates.
Subdivision common_refinement(const Subdivision& s1, const Subdivision& s2);

bool subdivisions_equal(const Subdivision& s1, const Subdivision& s2);

/// Structural verification: cells full-dimensional, pairwise intersections
/// are common faces (margin LP), and cell volumes add up to the ambient
/// volume exactly.
struct SubdivisionCheck {
  bool cells_full_dimensional = false;
  bool pairwise_common_face = false;
  bool volume_additive = false;
  bool ok() const {
    return cells_full_dimensional && pairwise_common_face && volume_additive;
  }
};

class VolumeCache {
 public:
  /// Normalized volume of conv of the basis indicator vectors, as a
  /// degree-`dim` leading coefficient. Memoized.
  Rat volume(const std::vector<Basis>& bases, int n, int dim);

 private:
  std::map<std::pair<int, std::vector<Basis>>, Rat> memo_;
};

SubdivisionCheck verify_subdivision(const Subdivision& s, VolumeCache& cache);

/// Convex-position helper: is conv(points[subset]) a face of conv(points)?
/// Certified by a strictness-margin LP.
bool is_face_subset(const PointConfiguration& pc, const std::vector<std::size_t>& subset);

PointConfiguration config_from_bases(const std::vector<Basis>& bases, int n);

/// Orders in which a flat weight vector can list the bases. Lex is the
/// documented default (and the internal storage order).
enum class BasisOrder { Lex, Colex, RevLex };

WeightVector weight_from_flat(const Matroid& m, const QVec& flat, BasisOrder order);

const char* basis_order_name(BasisOrder order);

}  // namespace lpmtk
