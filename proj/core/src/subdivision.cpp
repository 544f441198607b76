#include "lpmtk/subdivision.hpp"

#include <algorithm>
#include <set>

#include "lpmtk/error.hpp"
#include "lpmtk/lattice_path.hpp"
#include "lpmtk/positroid.hpp"

namespace lpmtk {

WeightVector::WeightVector(Matroid ambient)
    : ambient_(std::move(ambient)), values_(ambient_.num_bases(), Rat(0)) {}

WeightVector::WeightVector(Matroid ambient, QVec values)
    : ambient_(std::move(ambient)), values_(std::move(values)) {
  if (values_.size() != ambient_.num_bases())
    throw MalformedInputError("weight vector must assign a value to every basis");
}

WeightVector WeightVector::operator+(const WeightVector& other) const {
  if (!(ambient_ == other.ambient_))
    throw MalformedInputError("weight vectors live on different matroids");
  QVec sum(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) sum[i] = values_[i] + other.values_[i];
  return WeightVector(ambient_, std::move(sum));
}

WeightVector WeightVector::operator*(const Rat& scale) const {
  QVec out(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) out[i] = values_[i] * scale;
  return WeightVector(ambient_, std::move(out));
}

Subdivision::Subdivision(Matroid ambient, std::vector<SubdivisionCell> cells,
                         std::optional<WeightVector> weight)
    : ambient_(std::move(ambient)), cells_(std::move(cells)), weight_(std::move(weight)) {
  for (auto& c : cells_) std::sort(c.bases.begin(), c.bases.end());
  std::sort(cells_.begin(), cells_.end(),
            [](const SubdivisionCell& a, const SubdivisionCell& b) {
              return a.bases < b.bases;
            });
}

std::vector<std::vector<Basis>> Subdivision::cell_sets() const {
  std::vector<std::vector<Basis>> out;
  out.reserve(cells_.size());
  for (const auto& c : cells_) out.push_back(c.bases);
  return out;
}

Subdivision regular_subdivision(const Matroid& m, const WeightVector& w) {
  if (!(w.ambient() == m))
    throw MalformedInputError("weight vector does not match the matroid");
  auto pc = PointConfiguration::from_matroid(m);
  auto facets = lower_facets(pc, w.values());
  std::vector<SubdivisionCell> cells;
  cells.reserve(facets.size());
  for (auto& f : facets) {
    SubdivisionCell c;
    c.normal = std::move(f.normal);
    c.offset = std::move(f.offset);
    c.bases.reserve(f.tight.size());
    for (auto idx : f.tight) c.bases.push_back(m.bases()[idx]);
    cells.push_back(std::move(c));
  }
  return Subdivision(m, std::move(cells), w);
}

std::vector<CellClassification> classify_cells(const Subdivision& s) {
  std::vector<CellClassification> out;
  out.reserve(s.num_cells());
  for (const auto& cell : s.cells()) {
    CellClassification c;
    c.is_matroid = is_matroid(cell.bases, s.ambient().n());
    if (c.is_matroid) {
      Matroid m(s.ambient().n(), cell.bases);
      auto pq = recognize_lpm(m);
      c.is_lpm = pq.has_value();
      if (pq) c.is_snake = is_snake(LatticePathMatroid(pq->first, pq->second));
      c.is_positroid = is_positroid(m);
      c.is_series_parallel = is_series_parallel(m);
    }
    out.push_back(c);
  }
  return out;
}

namespace {

int intersection_size(const Basis& b, const std::vector<int>& a_set) {
  int c = 0;
  for (int e : a_set)
    if (std::binary_search(b.begin(), b.end(), e)) ++c;
  return c;
}

// Does the hyperplane x(A) = mu pass through the relative interior of the
// matroid polytope?
bool hyperplane_meets_relint(const Matroid& m, const std::vector<int>& a_set, int mu) {
  const int npts = static_cast<int>(m.num_bases());
  LinearProgram lp(npts + 1);
  lp.objective[npts] = 1;
  QVec plane(npts + 1, Rat(0));
  QVec ones(npts + 1, Rat(0));
  for (int i = 0; i < npts; ++i) {
    plane[i] = intersection_size(m.bases()[i], a_set);
    ones[i] = 1;
  }
  lp.add_row(std::move(plane), Rel::Eq, Rat(mu));
  lp.add_row(std::move(ones), Rel::Eq, Rat(1));
  for (int i = 0; i < npts; ++i) {
    QVec row(npts + 1, Rat(0));
    row[i] = 1;
    row[npts] = -1;
    lp.add_row(std::move(row), Rel::Ge, Rat(0));
  }
  auto sol = solve_lp(lp);
  return sol.status == LpStatus::Optimal && sol.objective > 0;
}

}  // namespace

WeightVector split_weight(const Matroid& m, const std::vector<int>& a_set, int mu) {
  make_split(m, a_set, mu);  // validation only
  QVec values(m.num_bases());
  for (std::size_t i = 0; i < m.num_bases(); ++i) {
    int excess = intersection_size(m.bases()[i], a_set) - mu;
    values[i] = excess > 0 ? Rat(excess) : Rat(0);
  }
  return WeightVector(m, std::move(values));
}

Split make_split(const Matroid& m, const std::vector<int>& a_set, int mu) {
  for (int e : a_set)
    if (e < 1 || e > m.n()) throw MalformedInputError("split set element out of range");
  if (!hyperplane_meets_relint(m, a_set, mu))
    throw NotASplitError("hyperplane misses the relative interior");
  Split s;
  s.a_set = a_set;
  std::sort(s.a_set.begin(), s.a_set.end());
  s.mu = mu;
  for (const auto& b : m.bases()) {
    int v = intersection_size(b, a_set);
    if (v <= mu) s.below.push_back(b);
    if (v >= mu) s.above.push_back(b);
  }
  // The canonical split weight must induce exactly the two sides.
  QVec values(m.num_bases());
  for (std::size_t i = 0; i < m.num_bases(); ++i) {
    int excess = intersection_size(m.bases()[i], a_set) - mu;
    values[i] = excess > 0 ? Rat(excess) : Rat(0);
  }
  auto sub = regular_subdivision(m, WeightVector(m, std::move(values)));
  if (sub.num_cells() != 2)
    throw NotASplitError("hyperplane does not induce a two-cell subdivision");
  auto sets = sub.cell_sets();
  std::set<std::vector<Basis>> got(sets.begin(), sets.end());
  std::set<std::vector<Basis>> want{s.below, s.above};
  if (got != want)
    throw NotASplitError("induced cells do not match the hyperplane sides");
  return s;
}

bool Split::same_cut(const Split& other) const {
  std::set<std::vector<Basis>> a{below, above};
  std::set<std::vector<Basis>> b{other.below, other.above};
  return a == b;
}

bool splits_compatible(const Split& s1, const Split& s2, const Matroid& m) {
  if (s1.same_cut(s2)) return true;
  const int npts = static_cast<int>(m.num_bases());
  LinearProgram lp(npts + 1);
  lp.objective[npts] = 1;
  QVec plane1(npts + 1, Rat(0)), plane2(npts + 1, Rat(0)), ones(npts + 1, Rat(0));
  for (int i = 0; i < npts; ++i) {
    plane1[i] = intersection_size(m.bases()[i], s1.a_set);
    plane2[i] = intersection_size(m.bases()[i], s2.a_set);
    ones[i] = 1;
  }
  lp.add_row(std::move(plane1), Rel::Eq, Rat(s1.mu));
  lp.add_row(std::move(plane2), Rel::Eq, Rat(s2.mu));
  lp.add_row(std::move(ones), Rel::Eq, Rat(1));
  for (int i = 0; i < npts; ++i) {
    QVec row(npts + 1, Rat(0));
    row[i] = 1;
    row[npts] = -1;
    lp.add_row(std::move(row), Rel::Ge, Rat(0));
  }
  auto sol = solve_lp(lp);
  bool meet_inside = sol.status == LpStatus::Optimal && sol.objective > 0;
  return !meet_inside;
}

Subdivision common_refinement(const Subdivision& s1, const Subdivision& s2) {
  if (!(s1.ambient() == s2.ambient()))
    throw MalformedInputError("refinement needs a common ambient matroid");
  const Matroid& m = s1.ambient();
  const int dim = polytope_dimension(m);
  const bool certified = s1.weight().has_value() && s2.weight().has_value();
  std::vector<SubdivisionCell> cells;
  std::set<std::vector<Basis>> seen;
  for (const auto& c1 : s1.cells()) {
    for (const auto& c2 : s2.cells()) {
      std::vector<Basis> inter;
      std::set_intersection(c1.bases.begin(), c1.bases.end(), c2.bases.begin(),
                            c2.bases.end(), std::back_inserter(inter));
      if (inter.empty()) continue;
      if (affine_dimension(config_from_bases(inter, m.n())) != dim) continue;
      if (!seen.insert(inter).second) continue;
      SubdivisionCell cell;
      cell.bases = std::move(inter);
      if (certified) {
        cell.normal.resize(m.n());
        for (int j = 0; j < m.n(); ++j) cell.normal[j] = c1.normal[j] + c2.normal[j];
        cell.offset = c1.offset + c2.offset;
      }
      cells.push_back(std::move(cell));
    }
  }
  std::optional<WeightVector> weight;
  if (certified) weight = *s1.weight() + *s2.weight();
  return Subdivision(m, std::move(cells), std::move(weight));
}

bool subdivisions_equal(const Subdivision& s1, const Subdivision& s2) {
  if (!(s1.ambient() == s2.ambient())) return false;
  auto a = s1.cell_sets();
  auto b = s2.cell_sets();
  return std::set<std::vector<Basis>>(a.begin(), a.end()) ==
         std::set<std::vector<Basis>>(b.begin(), b.end());
}

PointConfiguration config_from_bases(const std::vector<Basis>& bases, int n) {
  PointConfiguration pc;
  pc.ambient = n;
  pc.labels = bases;
  for (const auto& b : bases) {
    QVec v(n, Rat(0));
    for (int e : b) v[e - 1] = 1;
    pc.points.push_back(std::move(v));
  }
  return pc;
}

WeightVector weight_from_flat(const Matroid& m, const QVec& flat, BasisOrder order) {
  if (flat.size() != m.num_bases())
    throw MalformedInputError("flat weight vector has wrong length");
  std::vector<std::size_t> perm(m.num_bases());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  switch (order) {
    case BasisOrder::Lex:
      break;
    case BasisOrder::RevLex:
      std::reverse(perm.begin(), perm.end());
      break;
    case BasisOrder::Colex:
      std::sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) {
        const Basis& a = m.bases()[x];
        const Basis& b = m.bases()[y];
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
      });
      break;
  }
  QVec values(m.num_bases());
  for (std::size_t i = 0; i < perm.size(); ++i) values[perm[i]] = flat[i];
  return WeightVector(m, std::move(values));
}

const char* basis_order_name(BasisOrder order) {
  switch (order) {
    case BasisOrder::Lex:
      return "lex";
    case BasisOrder::Colex:
      return "colex";
    case BasisOrder::RevLex:
      return "revlex";
  }
  return "?";
}

Rat VolumeCache::volume(const std::vector<Basis>& bases, int n, int dim) {
  std::vector<Basis> key = bases;
  std::sort(key.begin(), key.end());
  auto mk = std::make_pair(n * 64 + dim, std::move(key));
  auto it = memo_.find(mk);
  if (it != memo_.end()) return it->second;
  Rat vol = normalized_volume(config_from_bases(mk.second, n), dim);
  memo_.emplace(std::move(mk), vol);
  return vol;
}

bool is_face_subset(const PointConfiguration& pc, const std::vector<std::size_t>& subset) {
  if (subset.empty()) return true;
  const int n = pc.ambient;
  std::vector<char> in_subset(pc.points.size(), 0);
  for (auto i : subset) in_subset[i] = 1;
  // Variables: functional c (n free), offset c0, margin t. Maximize t with
  // c·v = c0 on the subset, c·v <= c0 - t off it, and |c_j| <= 1, t <= 1 to
  // keep the problem bounded.
  LinearProgram lp(n + 2);
  lp.objective[n + 1] = 1;
  for (std::size_t i = 0; i < pc.points.size(); ++i) {
    QVec row(n + 2, Rat(0));
    for (int j = 0; j < n; ++j) row[j] = pc.points[i][j];
    row[n] = -1;
    if (in_subset[i]) {
      lp.add_row(std::move(row), Rel::Eq, Rat(0));
    } else {
      row[n + 1] = 1;
      lp.add_row(std::move(row), Rel::Le, Rat(0));
    }
  }
  for (int j = 0; j < n; ++j) {
    QVec row(n + 2, Rat(0));
    row[j] = 1;
    lp.add_row(row, Rel::Le, Rat(1));
    row[j] = -1;
    lp.add_row(std::move(row), Rel::Le, Rat(1));
  }
  QVec cap(n + 2, Rat(0));
  cap[n + 1] = 1;
  lp.add_row(std::move(cap), Rel::Le, Rat(1));
  auto sol = solve_lp(lp);
  return sol.status == LpStatus::Optimal && sol.objective > 0;
}

SubdivisionCheck verify_subdivision(const Subdivision& s, VolumeCache& cache) {
  SubdivisionCheck result;
  const Matroid& m = s.ambient();
  const int dim = polytope_dimension(m);
  result.cells_full_dimensional = true;
  for (const auto& c : s.cells())
    if (affine_dimension(config_from_bases(c.bases, m.n())) != dim)
      result.cells_full_dimensional = false;

  result.pairwise_common_face = true;
  const auto& cells = s.cells();
  for (std::size_t i = 0; i < cells.size() && result.pairwise_common_face; ++i) {
    for (std::size_t j = i + 1; j < cells.size() && result.pairwise_common_face; ++j) {
      std::vector<Basis> inter;
      std::set_intersection(cells[i].bases.begin(), cells[i].bases.end(),
                            cells[j].bases.begin(), cells[j].bases.end(),
                            std::back_inserter(inter));
      for (std::size_t side = 0; side < 2; ++side) {
        const auto& cell = side == 0 ? cells[i] : cells[j];
        auto pc = config_from_bases(cell.bases, m.n());
        std::vector<std::size_t> idx;
        for (const auto& b : inter)
          idx.push_back(std::lower_bound(cell.bases.begin(), cell.bases.end(), b) -
                        cell.bases.begin());
        if (!is_face_subset(pc, idx)) result.pairwise_common_face = false;
      }
    }
  }

  Rat total = cache.volume(m.bases(), m.n(), dim);
  Rat sum = 0;
  for (const auto& c : s.cells()) sum += cache.volume(c.bases, m.n(), dim);
  result.volume_additive = (sum == total);
  return result;
}

}  // namespace lpmtk
