#include "lpmtk/dissection.hpp"

#include <algorithm>

#include "lpmtk/error.hpp"

namespace lpmtk {

bool DissectionReport::all_full_dimensional() const {
  return std::all_of(full_dimensional.begin(), full_dimensional.end(),
                     [](bool b) { return b; });
}

bool DissectionReport::is_dissection() const {
  return all_full_dimensional() && pairwise_interior_disjoint && covers;
}

bool DissectionReport::is_good_dissection() const { return is_dissection() && good; }

namespace {

// Shared relative-interior point of two matroid polytopes, if one exists.
std::optional<QVec> shared_interior_point(const Matroid& c1, const Matroid& c2) {
  const int n = c1.n();
  const int n1 = static_cast<int>(c1.num_bases());
  const int n2 = static_cast<int>(c2.num_bases());
  // Variables: coefficients for both vertex sets plus the margin.
  LinearProgram lp(n1 + n2 + 1);
  lp.objective[n1 + n2] = 1;
  for (int j = 0; j < n; ++j) {
    QVec row(lp.num_vars(), Rat(0));
    for (int i = 0; i < n1; ++i)
      row[i] = std::binary_search(c1.bases()[i].begin(), c1.bases()[i].end(), j + 1) ? 1 : 0;
    for (int i = 0; i < n2; ++i)
      row[n1 + i] =
          std::binary_search(c2.bases()[i].begin(), c2.bases()[i].end(), j + 1) ? -1 : 0;
    lp.add_row(std::move(row), Rel::Eq, Rat(0));
  }
  for (int side = 0; side < 2; ++side) {
    QVec row(lp.num_vars(), Rat(0));
    for (int i = 0; i < (side == 0 ? n1 : n2); ++i) row[(side == 0 ? 0 : n1) + i] = 1;
    lp.add_row(std::move(row), Rel::Eq, Rat(1));
  }
  for (int i = 0; i < n1 + n2; ++i) {
    QVec row(lp.num_vars(), Rat(0));
    row[i] = 1;
    row[n1 + n2] = -1;
    lp.add_row(std::move(row), Rel::Ge, Rat(0));
  }
  auto sol = solve_lp(lp);
  if (sol.status != LpStatus::Optimal || sol.objective <= 0) return std::nullopt;
  QVec point(n, Rat(0));
  for (int i = 0; i < n1; ++i)
    for (int e : c1.bases()[i]) point[e - 1] += sol.primal[i];
  return point;
}

}  // namespace

DissectionReport check_dissection(const std::vector<Matroid>& cells, const Matroid& ambient,
                                  VolumeCache* cache) {
  VolumeCache local;
  VolumeCache& vc = cache ? *cache : local;
  for (const auto& c : cells) {
    if (c.n() != ambient.n() || c.k() != ambient.k())
      throw MalformedInputError("dissection cell has wrong rank or ground set");
    for (const auto& b : c.bases())
      if (!ambient.has_basis(b))
        throw MalformedInputError("dissection cell exceeds the ambient matroid");
    if (!is_matroid(c.bases(), c.n()))
      throw MalformedInputError("dissection cell is not a matroid");
  }
  DissectionReport report;
  const int dim = polytope_dimension(ambient);
  for (const auto& c : cells)
    report.full_dimensional.push_back(polytope_dimension(c) == dim);

  report.pairwise_interior_disjoint = true;
  for (std::size_t i = 0; i < cells.size() && report.pairwise_interior_disjoint; ++i)
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      auto witness = shared_interior_point(cells[i], cells[j]);
      if (witness) {
        report.pairwise_interior_disjoint = false;
        report.overlap_witness = std::move(witness);
        break;
      }
    }

  Rat total = vc.volume(ambient.bases(), ambient.n(), dim);
  Rat sum = 0;
  for (const auto& c : cells) sum += vc.volume(c.bases(), c.n(), dim);
  report.covers = (sum == total);

  // Goodness: whenever two cells meet in codimension one, the intersection
  // must be a facet of both. Matroid polytopes intersect in the convex hull
  // of their shared vertices, so the shared bases describe the
  // intersection exactly.
  report.good = true;
  for (std::size_t i = 0; i < cells.size() && report.good; ++i)
    for (std::size_t j = i + 1; j < cells.size() && report.good; ++j) {
      std::vector<Basis> inter;
      std::set_intersection(cells[i].bases().begin(), cells[i].bases().end(),
                            cells[j].bases().begin(), cells[j].bases().end(),
                            std::back_inserter(inter));
      if (inter.empty()) continue;
      if (affine_dimension(config_from_bases(inter, ambient.n())) != dim - 1) continue;
      for (std::size_t side = 0; side < 2 && report.good; ++side) {
        const Matroid& cell = side == 0 ? cells[i] : cells[j];
        auto pc = config_from_bases(cell.bases(), cell.n());
        std::vector<std::size_t> idx;
        for (const auto& b : inter) idx.push_back(cell.basis_index(b));
        if (!is_face_subset(pc, idx)) report.good = false;
      }
    }
  return report;
}

DissectionMinors dissection_minors(const std::vector<Matroid>& cells, const Matroid& ambient,
                                   int i, VolumeCache* cache) {
  if (i < 1 || i > ambient.n()) throw MalformedInputError("minor element out of range");
  if (!(ambient == Matroid::uniform(ambient.k(), ambient.n())))
    throw UnsupportedAmbientError("dissection minors need a hypersimplex ambient");
  const int n = ambient.n();
  const int k = ambient.k();
  if (k < 1 || n < 2) throw UnsupportedAmbientError("hypersimplex too small for minors");
  DissectionMinors out{Matroid::uniform(k - 1, n - 1), Matroid::uniform(k, n - 1),
                       {}, {}, {}, {}};
  const int cdim = polytope_dimension(out.contraction_ambient);
  const int ddim = polytope_dimension(out.deletion_ambient);
  for (const auto& cell : cells) {
    if (!cell.is_loop(i)) {
      Matroid contracted = minor(cell, MinorKind::Contract, i);
      if (polytope_dimension(contracted) == cdim)
        out.contraction_cells.push_back(std::move(contracted));
    }
    if (!cell.is_coloop(i)) {
      Matroid deleted = minor(cell, MinorKind::Delete, i);
      if (polytope_dimension(deleted) == ddim)
        out.deletion_cells.push_back(std::move(deleted));
    }
  }
  out.contraction_report =
      check_dissection(out.contraction_cells, out.contraction_ambient, cache);
  out.deletion_report = check_dissection(out.deletion_cells, out.deletion_ambient, cache);
  return out;
}

NoncrossingPairSet noncrossing_pairs(int n, int k) {
  if (k < 1) throw MalformedInputError("noncrossing pairs need k >= 1");
  if (n < k + 4) throw MalformedInputError("noncrossing pairs need n >= k+4");
  const int ground = n - 4;
  Matroid all = Matroid::uniform(k, ground);
  NoncrossingPairSet out;
  out.n = n;
  out.k = k;
  for (const auto& p : all.bases())
    for (const auto& q : all.bases()) {
      bool leq = true;
      for (int j = 0; j < k && leq; ++j)
        if (p[j] > q[j]) leq = false;
      if (leq)
        out.pairs.emplace_back(LatticePath(p, ground), LatticePath(q, ground));
    }
  return out;
}

BcfwCollection bcfw_lpm_collection(int n, int k, VolumeCache* cache) {
  auto pairs = noncrossing_pairs(n, k);
  BcfwCollection out{Matroid::uniform(k, n - 4), {}, {}};
  std::vector<Matroid> cell_matroids;
  for (const auto& [p, q] : pairs.pairs) {
    LatticePathMatroid l(p, q);
    cell_matroids.push_back(l.matroid());
    out.cells.push_back(std::move(l));
  }
  out.report = check_dissection(cell_matroids, out.ambient, cache);
  return out;
}

}  // namespace lpmtk
