#include "lpmtk/verification.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <sstream>
#include <cstdio>

#include "lpmtk/catalog.hpp"
#include "lpmtk/dissection.hpp"
#include "lpmtk/dressian.hpp"
#include "lpmtk/positroid.hpp"

namespace lpmtk {

namespace {

template <typename F>
CheckResult timed(const std::string& name, F&& body) {
  CheckResult r;
  r.name = name;
  auto start = std::chrono::steady_clock::now();
  body(r);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string cell_count_summary(const Subdivision& s) {
  std::ostringstream os;
  os << s.num_cells() << " cells";
  return os.str();
}

}  // namespace

long eulerian_number(int n, int descents) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  long count = 0;
  do {
    int d = 0;
    for (int i = 0; i + 1 < n; ++i)
      if (perm[i] > perm[i + 1]) ++d;
    if (d == descents) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

struct ReferenceChecks::State {
  Matroid u36 = Matroid::uniform(3, 6);
  VolumeCache volumes;
  std::optional<LPMFan> fan36;
  std::optional<Subdivision> snakes36;
  std::optional<BasisOrder> snake_order;

  const LPMFan& fan() {
    if (!fan36) {
      auto pq = recognize_lpm(u36);
      fan36 = build_lpmfan(LatticePathMatroid(pq->first, pq->second));
    }
    return *fan36;
  }

  // Resolves the basis order of the bundled flat vectors by checking which
  // order makes the split weights two-cell LPM splits whose refinement
  // matches the total weight. Lex is tried first.
  bool resolve_snake_subdivision(std::string& detail) {
    if (snakes36) return true;
    for (BasisOrder order : {BasisOrder::Lex, BasisOrder::Colex, BasisOrder::RevLex}) {
      auto splits_ok = [&](const QVec& flat, Subdivision& out) {
        WeightVector w = weight_from_flat(u36, flat, order);
        out = regular_subdivision(u36, w);
        if (out.num_cells() != 2) return false;
        auto cls = classify_cells(out);
        for (const auto& c : cls)
          if (!c.is_matroid || !c.is_lpm) return false;
        return true;
      };
      bool ok = true;
      std::optional<Subdivision> refinement;
      for (const auto& flat : catalog::delta36_split_flats()) {
        Subdivision s = regular_subdivision(u36, WeightVector(u36));
        if (!splits_ok(flat, s)) {
          ok = false;
          break;
        }
        refinement = refinement ? common_refinement(*refinement, s) : s;
      }
      if (!ok) continue;
      Subdivision total =
          regular_subdivision(u36, weight_from_flat(u36, catalog::delta36_snake_flat(), order));
      if (!subdivisions_equal(*refinement, total)) continue;
      if (total.num_cells() != 6) continue;
      auto cls = classify_cells(total);
      bool snakes = true;
      for (const auto& c : cls)
        if (!c.is_matroid || !c.is_lpm || !c.is_snake || !c.is_positroid ||
            !c.is_series_parallel)
          snakes = false;
      if (!snakes) continue;
      snakes36 = total;
      snake_order = order;
      detail = std::string("basis order: ") + basis_order_name(order);
      return true;
    }
    detail = "no supported basis order reproduces the split structure";
    return false;
  }
};

ReferenceChecks::ReferenceChecks() : state_(std::make_unique<State>()) {}
ReferenceChecks::~ReferenceChecks() = default;

CheckResult ReferenceChecks::split_sum_identity() {
  return timed("split weights sum to the snake weight", [&](CheckResult& r) {
    auto splits = catalog::delta36_split_flats();
    QVec total = catalog::delta36_snake_flat();
    QVec sum(total.size(), Rat(0));
    for (const auto& flat : splits)
      for (std::size_t i = 0; i < flat.size(); ++i) sum[i] += flat[i];
    r.pass = (sum == total);
    r.details = r.pass ? "componentwise equality over 20 entries" : "sum differs";
  });
}

CheckResult ReferenceChecks::split_refinement_snakes() {
  return timed("split subdivisions refine to the six-snake subdivision",
               [&](CheckResult& r) {
                 std::string detail;
                 r.pass = state_->resolve_snake_subdivision(detail);
                 r.details = detail;
                 if (r.pass)
                   r.details += "; refinement of 4 splits equals the weight's subdivision"
                                "; 6 cells, all snakes/positroids/series-parallel";
               });
}

CheckResult ReferenceChecks::finest_cell_count() {
  return timed("finest subdivisions have binomial(4,2)=6 cells", [&](CheckResult& r) {
    const auto& fan = state_->fan();
    std::size_t maxdim = 0;
    for (const auto& c : fan.cones()) maxdim = std::max(maxdim, c.split_indices.size());
    r.pass = maxdim > 0;
    int checked = 0;
    for (const auto& c : fan.cones()) {
      if (c.split_indices.size() != maxdim) continue;
      ++checked;
      if (c.subdivision.num_cells() != 6) r.pass = false;
    }
    std::ostringstream os;
    os << checked << " maximal cone(s) of dimension " << maxdim;
    r.details = os.str();
  });
}

CheckResult ReferenceChecks::hypersimplex_split_census() {
  return timed("Delta(3,6) has 35 hyperplane splits", [&](CheckResult& r) {
    auto splits = enumerate_hypersimplex_splits(state_->u36);
    r.pass = splits.size() == 35;
    r.details = std::to_string(splits.size()) + " splits";
  });
}

CheckResult ReferenceChecks::lpm_split_census_and_fan() {
  return timed("LPM split census and fan structure", [&](CheckResult& r) {
    const auto& fan = state_->fan();
    auto f = fan.f_vector();
    bool splits_ok = fan.splits().size() == 5;
    bool f_ok = (f == std::vector<int>{1, 5, 7, 3, 1});
    bool dual_ok = dual_fan_check(fan);
    r.pass = splits_ok && f_ok && dual_ok;
    std::ostringstream os;
    os << fan.splits().size() << " LPM splits; f-vector (";
    for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
    os << "); dual symmetry " << (dual_ok ? "holds" : "fails");
    r.details = os.str();
  });
}

CheckResult ReferenceChecks::fan_weights_positive() {
  return timed("fan cone weights satisfy the positive three-term check",
               [&](CheckResult& r) {
                 r.pass = true;
                 for (const auto& c : state_->fan().cones())
                   if (!is_positive_tropical_plucker(c.weight)) r.pass = false;
                 r.details =
                     std::to_string(state_->fan().cones().size()) + " cone weights";
               });
}

namespace {

// One randomized equivalence trial: tropical <=> all cells matroidal and
// positive <=> all cells positroid, judged against the computed
// subdivision.
bool equivalence_trial(const Matroid& m, const WeightVector& w, std::string& why) {
  Subdivision s = regular_subdivision(m, w);
  auto cls = classify_cells(s);
  bool all_matroid = true, all_positroid = true;
  for (const auto& c : cls) {
    all_matroid = all_matroid && c.is_matroid;
    all_positroid = all_positroid && c.is_matroid && c.is_positroid;
  }
  bool trop = is_tropical_plucker(w);
  bool pos = is_positive_tropical_plucker(w);
  if (trop != all_matroid) {
    why = "tropical check disagrees with cell matroidality";
    return false;
  }
  if (pos != all_positroid) {
    why = "positive check disagrees with cell positroidality";
    return false;
  }
  return true;
}

}  // namespace

CheckResult ReferenceChecks::plucker_equivalences() {
  return timed("Plücker checks match subdivision geometry", [&](CheckResult& r) {
    r.pass = true;
    std::string why;
    Matroid u24 = Matroid::uniform(2, 4);
    std::mt19937_64 rng24(240401);
    std::uniform_int_distribution<int> d24(-2, 2);
    int trials24 = 0;
    for (int trial = 0; trial < 1000 && r.pass; ++trial) {
      QVec values(u24.num_bases());
      for (auto& v : values) v = d24(rng24);
      if (!equivalence_trial(u24, WeightVector(u24, std::move(values)), why)) r.pass = false;
      ++trials24;
    }
    std::mt19937_64 rng36(360601);
    std::uniform_int_distribution<int> d36(-3, 3);
    int trials36 = 0;
    for (int trial = 0; trial < 200 && r.pass; ++trial) {
      QVec values(state_->u36.num_bases());
      for (auto& v : values) v = d36(rng36);
      if (!equivalence_trial(state_->u36, WeightVector(state_->u36, std::move(values)), why))
        r.pass = false;
      ++trials36;
    }
    std::ostringstream os;
    os << trials24 << " weights on Delta(2,4), " << trials36 << " on Delta(3,6)";
    if (!r.pass) os << "; " << why;
    else os << "; zero counterexamples";
    r.details = os.str();
  });
}

CheckResult ReferenceChecks::minor_recurrence() {
  return timed("contraction/deletion of maximal dissections stay dissections",
               [&](CheckResult& r) {
                 const auto& fan = state_->fan();
                 std::size_t maxdim = 0;
                 for (const auto& c : fan.cones())
                   maxdim = std::max(maxdim, c.split_indices.size());
                 r.pass = maxdim > 0;
                 int runs = 0;
                 for (const auto& cone : fan.cones()) {
                   if (cone.split_indices.size() != maxdim) continue;
                   std::vector<Matroid> cells;
                   for (const auto& cell : cone.subdivision.cell_sets())
                     cells.emplace_back(state_->u36.n(), cell);
                   for (int i = 1; i <= state_->u36.n(); ++i) {
                     auto minors = dissection_minors(cells, state_->u36, i, &state_->volumes);
                     if (!minors.contraction_report.is_dissection()) r.pass = false;
                     if (!minors.deletion_report.is_dissection()) r.pass = false;
                     ++runs;
                   }
                 }
                 r.details = std::to_string(runs) + " element minors verified";
               });
}

CheckResult ReferenceChecks::certificate_matrices() {
  return timed("nonnegative certificate matrices match basis membership",
               [&](CheckResult& r) {
                 std::mt19937_64 rng(902103);
                 r.pass = true;
                 int built = 0;
                 while (built < 20) {
                   std::uniform_int_distribution<int> dk(1, 3);
                   int k = dk(rng);
                   std::uniform_int_distribution<int> dn(k + 1, 7);
                   int n = dn(rng);
                   Matroid uni = Matroid::uniform(k, n);
                   std::uniform_int_distribution<std::size_t> db(0, uni.num_bases() - 1);
                   Basis x = uni.bases()[db(rng)];
                   Basis y = uni.bases()[db(rng)];
                   Basis lo(k), hi(k);
                   for (int j = 0; j < k; ++j) {
                     lo[j] = std::min(x[j], y[j]);
                     hi[j] = std::max(x[j], y[j]);
                   }
                   LatticePathMatroid l(LatticePath(lo, n), LatticePath(hi, n));
                   PositroidMatrix cert(l, 2);
                   if (!cert.verify(l)) r.pass = false;
                   ++built;
                 }
                 r.details = "20 random bounded-path matroids, seed x1 = 2";
               });
}

CheckResult ReferenceChecks::combinatorial_spot_values() {
  return timed("weak separation, cluster size, decorated permutation",
               [&](CheckResult& r) {
                 bool ws = !weakly_separated({1, 2, 4}, {1, 3, 5});
                 std::vector<Basis> c1 = {{1, 2, 3}, {2, 3, 4}, {1, 3, 4},
                                          {1, 2, 4}, {1, 2, 5}, {1, 2, 6}};
                 bool c1_ws = true;
                 for (std::size_t i = 0; i < c1.size(); ++i)
                   for (std::size_t j = i + 1; j < c1.size(); ++j)
                     if (!weakly_separated(c1[i], c1[j])) c1_ws = false;
                 bool c1_size = c1.size() == 6;
                 auto pq = recognize_lpm(Matroid::uniform(2, 4));
                 auto perm = decorated_permutation_lpm(
                     LatticePathMatroid(pq->first, pq->second));
                 bool perm_ok = perm.images == std::vector<int>{3, 4, 1, 2} &&
                                perm.anti_excedances() == 2;
                 r.pass = ws && c1_ws && c1_size && perm_ok;
                 r.details = "124|135 not separated; |C|=6 pairwise separated; pi=3412";
               });
}

CheckResult ReferenceChecks::volume_oracle() {
  return timed("volumes match the descent-counting oracle; additivity holds",
               [&](CheckResult& r) {
                 r.pass = true;
                 struct Case {
                   int k, n;
                   long expect;
                 };
                 for (Case c : {Case{1, 3, 1}, Case{2, 4, 4}, Case{3, 6, 66}}) {
                   Matroid m = Matroid::uniform(c.k, c.n);
                   Rat vol = state_->volumes.volume(m.bases(), c.n, c.n - 1);
                   long oracle = eulerian_number(c.n - 1, c.k - 1);
                   if (vol != oracle || oracle != c.expect) r.pass = false;
                 }
                 // Volume additivity across the subdivisions this suite
                 // computes: the four splits, the six-snake subdivision and
                 // every fan cone refinement.
                 std::string dummy;
                 if (!state_->resolve_snake_subdivision(dummy)) r.pass = false;
                 std::vector<Subdivision> subs;
                 if (state_->snakes36) subs.push_back(*state_->snakes36);
                 for (const auto& cone : state_->fan().cones()) subs.push_back(cone.subdivision);
                 int checked = 0;
                 for (const auto& s : subs) {
                   auto check = verify_subdivision(s, state_->volumes);
                   if (!check.volume_additive || !check.cells_full_dimensional ||
                       !check.pairwise_common_face)
                     r.pass = false;
                   ++checked;
                 }
                 r.details = "Delta(1,3)/(2,4)/(3,6) = 1/4/66; additivity over " +
                             std::to_string(checked) + " subdivisions";
               });
}

CheckResult ReferenceChecks::delta48_subdivision() {
  return timed("Delta(4,8) weight induces an all-LPM matroidal subdivision",
               [&](CheckResult& r) {
                 Matroid u48 = Matroid::uniform(4, 8);
                 WeightVector w = catalog::delta48_weight();
                 Subdivision s = regular_subdivision(u48, w);
                 auto cls = classify_cells(s);
                 bool all_ok = true;
                 for (const auto& c : cls)
                   if (!c.is_matroid || !c.is_lpm) all_ok = false;
                 bool pos = is_positive_tropical_plucker(w);
                 r.pass = all_ok && pos;
                 r.details = cell_count_summary(s) +
                             (all_ok ? ", all matroidal and LPM" : ", classification failed") +
                             (pos ? "; positive three-term check holds"
                                  : "; positive three-term check fails");
               });
}

CheckResult ReferenceChecks::exclusions_note() {
  CheckResult r;
  r.name = "documented exclusions";
  r.pass = true;
  r.skipped = true;
  r.details =
      "full Dressian/tropical Grassmannian ray censuses, metric tree arrangements "
      "and amplituhedron triangulations are out of scope; the randomized "
      "equivalence suites above stand in";
  return r;
}

std::vector<CheckResult> ReferenceChecks::run_all() {
  return {split_sum_identity(),     split_refinement_snakes(), finest_cell_count(),
          hypersimplex_split_census(), lpm_split_census_and_fan(), fan_weights_positive(),
          plucker_equivalences(),   minor_recurrence(),        certificate_matrices(),
          combinatorial_spot_values(), volume_oracle(),        delta48_subdivision(),
          exclusions_note()};
}

std::vector<CheckResult> ReferenceChecks::run_delta36() {
  return {split_sum_identity(),     split_refinement_snakes(), finest_cell_count(),
          hypersimplex_split_census(), lpm_split_census_and_fan(), fan_weights_positive(),
          plucker_equivalences(),   minor_recurrence(),        combinatorial_spot_values(),
          volume_oracle()};
}

std::vector<CheckResult> ReferenceChecks::run_delta48() { return {delta48_subdivision()}; }

CheckResult ReferenceChecks::bcfw_collection_report(int n, int k) {
  return timed("noncrossing-path collection for (n,k)=(" + std::to_string(n) + "," +
                   std::to_string(k) + ")",
               [&](CheckResult& r) {
                 auto collection = bcfw_lpm_collection(n, k, &state_->volumes);
                 auto pairs = noncrossing_pairs(n, k);
                 r.pass = collection.cells.size() == pairs.pairs.size();
                 std::ostringstream os;
                 os << collection.cells.size() << " LPM cells in Delta(" << k << ","
                    << (n - 4) << "); report: full-dim "
                    << (collection.report.all_full_dimensional() ? "yes" : "no")
                    << ", interiors disjoint "
                    << (collection.report.pairwise_interior_disjoint ? "yes" : "no")
                    << ", covers " << (collection.report.covers ? "yes" : "no")
                    << ", dissection "
                    << (collection.report.is_dissection() ? "yes" : "no");
                 r.details = os.str();
               });
}

std::string format_results(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  bool all_ok = true;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    os << '[' << (i + 1 < 10 ? " " : "") << (i + 1) << "] "
       << (r.skipped ? "SKIP" : r.pass ? "PASS" : "FAIL") << "  " << r.name;
    if (!r.details.empty()) os << " - " << r.details;
    char buf[32];
    std::snprintf(buf, sizeof(buf), " (%.2fs)", r.seconds);
    os << buf << '\n';
    if (!r.ok()) all_ok = false;
  }
  os << (all_ok ? "all checks passed" : "CHECK FAILURES PRESENT") << '\n';
  return os.str();
}

}  // namespace lpmtk
