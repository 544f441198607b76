#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lpmtk/lattice_path.hpp"
#include "lpmtk/matroid.hpp"
#include "lpmtk/subdivision.hpp"

namespace lpmtk {

/// Verification record for a collection of matroid polytopes inside an
/// ambient matroid polytope.
struct DissectionReport {
  std::vector<bool> full_dimensional;   // one entry per cell
  bool pairwise_interior_disjoint = false;
  bool covers = false;                  // exact volume identity
  bool good = false;                    // codim-1 intersections are common facets
  std::optional<QVec> overlap_witness;  // shared relative-interior point, if any

  bool all_full_dimensional() const;
  bool is_dissection() const;
  bool is_good_dissection() const;
};

/// Checks the dissection conditions: full dimension per cell, pairwise
/// disjoint interiors (via a shared-relative-interior LP), exact coverage
/// by volume additivity, and goodness (codimension-one intersections are
/// facets of both cells).
DissectionReport check_dissection(const std::vector<Matroid>& cells, const Matroid& ambient,
                                  VolumeCache* cache = nullptr);

/// Contraction and deletion of a dissection at element i: cells whose minor
/// stays full-dimensional survive into the minor dissection on the smaller
/// hypersimplex.
struct DissectionMinors {
  Matroid contraction_ambient;
  Matroid deletion_ambient;
  std::vector<Matroid> contraction_cells;
  std::vector<Matroid> deletion_cells;
  DissectionReport contraction_report;
  DissectionReport deletion_report;
};

DissectionMinors dissection_minors(const std::vector<Matroid>& cells, const Matroid& ambient,
                                   int i, VolumeCache* cache = nullptr);

/// All componentwise-ordered pairs of NE-paths in the k x (n-k-4)
/// rectangle.
struct NoncrossingPairSet {
  int n = 0;
  int k = 0;
  std::vector<std::pair<LatticePath, LatticePath>> pairs;
};

NoncrossingPairSet noncrossing_pairs(int n, int k);

/// The LPM cells M[P,Q] of the noncrossing pairs, viewed inside U_{k,n-4},
/// together with the (recorded, not asserted) dissection report.
struct BcfwCollection {
  Matroid ambient;
  std::vector<LatticePathMatroid> cells;
  DissectionReport report;
};

BcfwCollection bcfw_lpm_collection(int n, int k, VolumeCache* cache = nullptr);

}  // namespace lpmtk
