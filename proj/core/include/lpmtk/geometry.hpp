#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "lpmtk/lp.hpp"
#include "lpmtk/matroid.hpp"
#include "lpmtk/rational.hpp"

namespace lpmtk {

/// A finite list of rational points, optionally labeled by the bases whose
/// indicator vectors they are.
struct PointConfiguration {
  std::vector<QVec> points;
  std::vector<Basis> labels;  // empty, or one label per point
  int ambient = 0;

  /// Indicator vectors e_B of the bases of m, labeled and in basis order.
  static PointConfiguration from_matroid(const Matroid& m);
};

/// Exact affine chart for the flat spanned by a point set: a base point and
/// a reduced row-echelon basis of the difference space. Local coordinates
/// are read off the pivot columns, so both directions of the chart are
/// cheap and exact.
class AffineCoords {
 public:
  explicit AffineCoords(const std::vector<QVec>& points);

  int dim() const { return static_cast<int>(rref_.size()); }
  int ambient() const { return ambient_; }
  const QVec& base() const { return base_; }

  bool on_flat(const QVec& ambient_point) const;
  /// Local coordinates of a point on the flat; throws MalformedInputError
  /// if the point is off the flat.
  QVec to_local(const QVec& ambient_point) const;
  /// Local coordinates of ambient_point relative to scale * base; used for
  /// membership tests in dilated polytopes.
  std::optional<QVec> try_local_scaled(const QVec& ambient_point, const Rat& scale) const;

  /// Lifts a local affine functional y -> c_local·y + c0_local to an
  /// ambient pair (c, c0) agreeing with it on the flat.
  std::pair<QVec, Rat> functional_to_ambient(const QVec& c_local, const Rat& c0_local) const;

 private:
  QVec base_;
  std::vector<QVec> rref_;
  std::vector<int> pivot_cols_;
  int ambient_;
};

int affine_dimension(const PointConfiguration& pc);

enum class Membership { Member, RelativeInterior };

/// Exact convex-hull membership via linear programming. RelativeInterior
/// asks for a convex combination whose coefficients are all at least some
/// positive threshold (the threshold is maximized).
bool contains_point(const PointConfiguration& pc, const QVec& x, Membership mode);

/// Extreme rays of the pointed cone { e : row · e <= 0 for every row }.
/// Throws if the cone contains a line.
std::vector<QVec> cone_extreme_rays(const std::vector<QVec>& rows, int dim);

/// A facet of a polytope: normal·x <= offset valid for all points, with
/// equality exactly on the tight ones.
struct Facet {
  QVec normal;
  Rat offset;
  std::vector<std::size_t> tight;
};

/// All facets of conv(points), via extreme-ray enumeration of the cone of
/// supporting affine functionals in an exact local chart.
std::vector<Facet> polytope_facets(const PointConfiguration& pc);

/// One maximal cell of a regular subdivision: an affine functional lying
/// (weakly) below the lifted points, tight exactly on `tight`.
struct LowerFacet {
  QVec normal;  // c with c·v + offset <= h(v) for all points v
  Rat offset;   // c0
  std::vector<std::size_t> tight;
};

/// All facets of the lower envelope of the lifted configuration
/// (v_i, h_i), i.e. the maximal cells of the regular subdivision induced by
/// the heights in the min convention. Implemented as a breadth-first walk
/// over the vertices of the polyhedron of affine functionals below the
/// lift; completeness follows from connectivity of the dual graph of the
/// subdivision.
std::vector<LowerFacet> lower_facets(const PointConfiguration& pc, const QVec& heights);

/// Normalized volume (dim! times Euclidean volume inside the affine hull,
/// with respect to the induced lattice), computed by Ehrhart interpolation:
/// lattice points of the dilates t·P for t = 0..dim are counted exactly and
/// the leading coefficient is extracted as a finite difference. Points must
/// have integer coordinates.
Rat normalized_volume(const PointConfiguration& pc);

/// Same, but as a degree-`dim` leading coefficient: configurations of lower
/// dimension get volume 0. Used for additivity checks inside an ambient
/// polytope of known dimension.
Rat normalized_volume(const PointConfiguration& pc, int dim);

}  // namespace lpmtk
