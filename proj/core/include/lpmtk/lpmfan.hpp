#pragma once

#include <utility>
#include <vector>

#include "lpmtk/lattice_path.hpp"
#include "lpmtk/matroid.hpp"
#include "lpmtk/subdivision.hpp"

namespace lpmtk {

/// All hyperplane splits (A, mu) of the base polytope of a connected
/// matroid, deduplicated under the complement identification
/// (A, mu) ~ ([n]\A, k-mu). Both closed sides must be matroidal and
/// full-dimensional and the hyperplane must meet the relative interior.
std::vector<Split> enumerate_hypersimplex_splits(const Matroid& m);

/// The splits of an LPM polytope whose two cells are both LPM polytopes.
std::vector<Split> enumerate_lpm_splits(const LatticePathMatroid& l);

/// One cone of the LPMfan: a set of pairwise compatible LPM splits whose
/// common refinement is an LPM subdivision. The cone's dimension is the
/// number of splits; its representative weight is the sum of the split
/// weights.
struct FanCone {
  std::vector<std::size_t> split_indices;  // into LPMFan::splits
  Subdivision subdivision;
  WeightVector weight;
};

class LPMFan {
 public:
  LPMFan(Matroid ambient, std::vector<Split> splits, std::vector<FanCone> cones);

  const Matroid& ambient() const { return ambient_; }
  const std::vector<Split>& splits() const { return splits_; }
  const std::vector<FanCone>& cones() const { return cones_; }

  /// Cone counts by dimension 0..max.
  std::vector<int> f_vector() const;

  /// Covering relations of the face poset (subset relation on split sets).
  std::vector<std::pair<std::size_t, std::size_t>> poset_edges() const;

 private:
  Matroid ambient_;
  std::vector<Split> splits_;
  std::vector<FanCone> cones_;
};

LPMFan build_lpmfan(const LatticePathMatroid& l);

/// Duality symmetry of the fan: for every cone's subdivision, taking
/// cell-wise duals (complements relabeled by i -> n+1-i) yields a
/// subdivision appearing in the LPMfan of the dual hypersimplex (the same
/// fan when n = 2k). Only uniform ambient matroids are supported.
bool dual_fan_check(const LPMFan& fan);

}  // namespace lpmtk
