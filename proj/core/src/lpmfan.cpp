#include "lpmtk/lpmfan.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lpmtk/error.hpp"

namespace lpmtk {

namespace {

std::vector<Basis> side_bases(const Matroid& m, const std::vector<int>& a_set, int mu,
                              bool below) {
  std::vector<Basis> out;
  for (const auto& b : m.bases()) {
    int v = 0;
    for (int e : a_set)
      if (std::binary_search(b.begin(), b.end(), e)) ++v;
    if (below ? v <= mu : v >= mu) out.push_back(b);
  }
  return out;
}

}  // namespace

std::vector<Split> enumerate_hypersimplex_splits(const Matroid& m) {
  if (!is_connected(m))
    throw UnsupportedAmbientError("split enumeration needs a connected matroid");
  const int n = m.n();
  const int k = m.k();
  const int dim = polytope_dimension(m);
  std::vector<Split> out;
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    std::vector<int> a_set;
    for (int e = 1; e <= n; ++e)
      if (mask & (1u << (e - 1))) a_set.push_back(e);
    for (int mu = 1; mu < k; ++mu) {
      auto below = side_bases(m, a_set, mu, true);
      auto above = side_bases(m, a_set, mu, false);
      if (below.size() == m.num_bases() || above.size() == m.num_bases()) continue;
      if (affine_dimension(config_from_bases(below, n)) != dim) continue;
      if (affine_dimension(config_from_bases(above, n)) != dim) continue;
      if (!is_matroid(below, n) || !is_matroid(above, n)) continue;
      Split s;
      try {
        s = make_split(m, a_set, mu);
      } catch (const NotASplitError&) {
        continue;
      }
      bool duplicate = false;
      for (const auto& prev : out)
        if (prev.same_cut(s)) {
          duplicate = true;
          break;
        }
      if (!duplicate) out.push_back(std::move(s));
    }
  }
  return out;
}

std::vector<Split> enumerate_lpm_splits(const LatticePathMatroid& l) {
  const Matroid& m = l.matroid();
  std::vector<Split> out;
  for (auto& s : enumerate_hypersimplex_splits(m)) {
    Matroid below(m.n(), s.below);
    Matroid above(m.n(), s.above);
    if (!recognize_lpm(below) || !recognize_lpm(above)) continue;
    out.push_back(std::move(s));
  }
  return out;
}

LPMFan::LPMFan(Matroid ambient, std::vector<Split> splits, std::vector<FanCone> cones)
    : ambient_(std::move(ambient)), splits_(std::move(splits)), cones_(std::move(cones)) {}

std::vector<int> LPMFan::f_vector() const {
  std::size_t maxdim = 0;
  for (const auto& c : cones_) maxdim = std::max(maxdim, c.split_indices.size());
  std::vector<int> f(maxdim + 1, 0);
  for (const auto& c : cones_) ++f[c.split_indices.size()];
  return f;
}

std::vector<std::pair<std::size_t, std::size_t>> LPMFan::poset_edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < cones_.size(); ++i)
    for (std::size_t j = 0; j < cones_.size(); ++j) {
      if (cones_[i].split_indices.size() + 1 != cones_[j].split_indices.size()) continue;
      if (std::includes(cones_[j].split_indices.begin(), cones_[j].split_indices.end(),
                        cones_[i].split_indices.begin(), cones_[i].split_indices.end()))
        edges.emplace_back(i, j);
    }
  return edges;
}

LPMFan build_lpmfan(const LatticePathMatroid& l) {
  const Matroid& m = l.matroid();
  const bool splittable = is_connected(m) && !is_snake(l) && polytope_dimension(m) > 0;
  std::vector<Split> splits =
      splittable ? enumerate_lpm_splits(l) : std::vector<Split>{};
  const std::size_t ns = splits.size();
  // Pairwise compatibility table.
  std::vector<std::vector<char>> compat(ns, std::vector<char>(ns, 0));
  for (std::size_t i = 0; i < ns; ++i)
    for (std::size_t j = i; j < ns; ++j)
      compat[i][j] = compat[j][i] = splits_compatible(splits[i], splits[j], m) ? 1 : 0;

  std::vector<Subdivision> split_subs;
  split_subs.reserve(ns);
  for (const auto& s : splits)
    split_subs.push_back(regular_subdivision(m, split_weight(m, s.a_set, s.mu)));

  Subdivision trivial = regular_subdivision(m, WeightVector(m));
  std::vector<FanCone> cones;
  for (std::uint32_t mask = 0; mask < (1u << ns); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < ns; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    bool ok = true;
    for (std::size_t a = 0; a < idx.size() && ok; ++a)
      for (std::size_t b = a + 1; b < idx.size() && ok; ++b)
        if (!compat[idx[a]][idx[b]]) ok = false;
    if (!ok) continue;
    Subdivision refinement = trivial;
    for (auto i : idx) refinement = common_refinement(refinement, split_subs[i]);
    bool all_lpm = true;
    for (const auto& cell : refinement.cells()) {
      if (!is_matroid(cell.bases, m.n()) ||
          !recognize_lpm(Matroid(m.n(), cell.bases))) {
        all_lpm = false;
        break;
      }
    }
    if (!all_lpm) continue;
    WeightVector w(m);
    for (auto i : idx) w = w + split_weight(m, splits[i].a_set, splits[i].mu);
    cones.push_back(FanCone{std::move(idx), std::move(refinement), std::move(w)});
  }
  return LPMFan(m, std::move(splits), std::move(cones));
}

namespace {

std::vector<Basis> dual_cell(const std::vector<Basis>& cell, int n) {
  std::vector<Basis> out;
  out.reserve(cell.size());
  for (const auto& b : cell) {
    Basis d;
    for (int e = n; e >= 1; --e)
      if (!std::binary_search(b.begin(), b.end(), e)) d.push_back(n + 1 - e);
    std::sort(d.begin(), d.end());
    out.push_back(std::move(d));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::set<std::vector<Basis>> subdivision_key(const Subdivision& s) {
  auto sets = s.cell_sets();
  return {sets.begin(), sets.end()};
}

}  // namespace

bool dual_fan_check(const LPMFan& fan) {
  const Matroid& m = fan.ambient();
  if (!(m == Matroid::uniform(m.k(), m.n())))
    throw UnsupportedAmbientError("dual fan check is defined for uniform ambients");
  const int n = m.n();
  const int k = m.k();
  std::set<std::set<std::vector<Basis>>> targets;
  if (n == 2 * k) {
    for (const auto& c : fan.cones()) targets.insert(subdivision_key(c.subdivision));
  } else {
    Matroid dual_amb = Matroid::uniform(n - k, n);
    auto pq = recognize_lpm(dual_amb);
    LPMFan dual_fan = build_lpmfan(LatticePathMatroid(pq->first, pq->second));
    for (const auto& c : dual_fan.cones()) targets.insert(subdivision_key(c.subdivision));
  }
  for (const auto& c : fan.cones()) {
    std::set<std::vector<Basis>> image;
    for (const auto& cell : c.subdivision.cell_sets()) image.insert(dual_cell(cell, n));
    if (!targets.count(image)) return false;
  }
  return true;
}

}  // namespace lpmtk
