#include "lpmtk/geometry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "lpmtk/error.hpp"

namespace lpmtk {

PointConfiguration PointConfiguration::from_matroid(const Matroid& m) {
  PointConfiguration pc;
  pc.ambient = m.n();
  pc.points.reserve(m.num_bases());
  pc.labels = m.bases();
  for (const auto& b : m.bases()) {
    QVec v(m.n(), Rat(0));
    for (int e : b) v[e - 1] = 1;
    pc.points.push_back(std::move(v));
  }
  return pc;
}

AffineCoords::AffineCoords(const std::vector<QVec>& points) {
  if (points.empty()) throw MalformedInputError("empty point configuration");
  ambient_ = static_cast<int>(points.front().size());
  base_ = points.front();
  for (const auto& p : points)
    if (static_cast<int>(p.size()) != ambient_)
      throw MalformedInputError("points of mixed dimension");
  // Row reduce the difference vectors to reduced row echelon form.
  std::vector<QVec> rows;
  for (std::size_t i = 1; i < points.size(); ++i) {
    QVec d(ambient_);
    for (int j = 0; j < ambient_; ++j) d[j] = points[i][j] - base_[j];
    rows.push_back(std::move(d));
  }
  std::size_t rank = 0;
  for (int col = 0; col < ambient_ && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    Rat p = rows[rank][col];
    for (auto& x : rows[rank]) x /= p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      Rat f = rows[r][col];
      for (int j = 0; j < ambient_; ++j) rows[r][j] -= f * rows[rank][j];
    }
    pivot_cols_.push_back(col);
    ++rank;
  }
  rows.resize(rank);
  rref_ = std::move(rows);
}

bool AffineCoords::on_flat(const QVec& ambient_point) const {
  return try_local_scaled(ambient_point, Rat(1)).has_value();
}

QVec AffineCoords::to_local(const QVec& ambient_point) const {
  auto loc = try_local_scaled(ambient_point, Rat(1));
  if (!loc) throw MalformedInputError("point is off the affine hull");
  return *loc;
}

std::optional<QVec> AffineCoords::try_local_scaled(const QVec& ambient_point,
                                                   const Rat& scale) const {
  const int d = dim();
  QVec diff(ambient_);
  for (int j = 0; j < ambient_; ++j) diff[j] = ambient_point[j] - scale * base_[j];
  QVec y(d);
  for (int i = 0; i < d; ++i) y[i] = diff[pivot_cols_[i]];
  // The rref rows carry the identity on the pivot columns, so y are the
  // unique candidate coordinates; verify the remaining columns.
  for (int j = 0; j < ambient_; ++j) {
    Rat acc = 0;
    for (int i = 0; i < d; ++i)
      if (rref_[i][j] != 0) acc += y[i] * rref_[i][j];
    if (acc != diff[j]) return std::nullopt;
  }
  return y;
}

std::pair<QVec, Rat> AffineCoords::functional_to_ambient(const QVec& c_local,
                                                         const Rat& c0_local) const {
  QVec c(ambient_, Rat(0));
  for (int i = 0; i < dim(); ++i) c[pivot_cols_[i]] = c_local[i];
  Rat c0 = c0_local - dot(c, base_);
  return {std::move(c), std::move(c0)};
}

int affine_dimension(const PointConfiguration& pc) {
  return AffineCoords(pc.points).dim();
}

bool contains_point(const PointConfiguration& pc, const QVec& x, Membership mode) {
  const int n = pc.ambient;
  const int npts = static_cast<int>(pc.points.size());
  if (static_cast<int>(x.size()) != n)
    throw MalformedInputError("membership query point has wrong dimension");
  const bool relint = mode == Membership::RelativeInterior;
  // Variables: one coefficient per point, plus the interiority margin.
  LinearProgram lp(npts + (relint ? 1 : 0));
  for (int i = 0; i < npts; ++i)
    lp.signs[i] = relint ? VarSign::Free : VarSign::NonNegative;
  if (relint) lp.objective[npts] = 1;
  for (int j = 0; j < n; ++j) {
    QVec row(lp.num_vars(), Rat(0));
    for (int i = 0; i < npts; ++i) row[i] = pc.points[i][j];
    lp.add_row(std::move(row), Rel::Eq, x[j]);
  }
  QVec ones(lp.num_vars(), Rat(0));
  for (int i = 0; i < npts; ++i) ones[i] = 1;
  lp.add_row(std::move(ones), Rel::Eq, Rat(1));
  if (relint) {
    for (int i = 0; i < npts; ++i) {
      QVec row(lp.num_vars(), Rat(0));
      row[i] = 1;
      row[npts] = -1;
      lp.add_row(std::move(row), Rel::Ge, Rat(0));
    }
  }
  auto sol = solve_lp(lp);
  if (sol.status != LpStatus::Optimal) return false;
  return relint ? sol.objective > 0 : true;
}

namespace {

// Canonical primitive integer representative of a ray direction.
QVec canonical_ray(const QVec& v) {
  BigInt denom_lcm = 1;
  for (const auto& x : v)
    mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), x.get_den_mpz_t());
  std::vector<BigInt> ints(v.size());
  BigInt g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    ints[i] = BigInt(v[i].get_num()) * (denom_lcm / BigInt(v[i].get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  if (g == 0) throw Error("canonical_ray: zero direction");
  QVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(ints[i] / g);
  return out;
}

struct DDRay {
  QVec dir;
  std::vector<char> zero;  // tightness per processed constraint
};

}  // namespace

std::vector<QVec> cone_extreme_rays(const std::vector<QVec>& rows, int dim) {
  const std::size_t m = rows.size();
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != dim)
      throw MalformedInputError("cone constraint of wrong dimension");
  // Double description with an explicit lineality phase: start from the
  // full space and absorb constraints one at a time.
  std::vector<QVec> lineality;
  for (int i = 0; i < dim; ++i) {
    QVec e(dim, Rat(0));
    e[i] = 1;
    lineality.push_back(std::move(e));
  }
  std::vector<DDRay> rays;
  for (std::size_t c = 0; c < m; ++c) {
    const QVec& r = rows[c];
    // Look for a lineality generator not on the hyperplane.
    int hit = -1;
    for (std::size_t i = 0; i < lineality.size(); ++i)
      if (dot(r, lineality[i]) != 0) {
        hit = static_cast<int>(i);
        break;
      }
    if (hit >= 0) {
      QVec l = lineality[hit];
      lineality.erase(lineality.begin() + hit);
      Rat rl = dot(r, l);
      if (rl > 0)
        for (auto& x : l) x = -x;  // point into the feasible side
      rl = dot(r, l);
      for (auto& other : lineality) {
        Rat v = dot(r, other);
        if (v == 0) continue;
        Rat f = v / rl;
        for (int j = 0; j < dim; ++j) other[j] -= f * l[j];
      }
      for (auto& ray : rays) {
        Rat v = dot(r, ray.dir);
        if (v != 0) {
          Rat f = v / rl;
          for (int j = 0; j < dim; ++j) ray.dir[j] -= f * l[j];
        }
        ray.zero.push_back(1);
      }
      DDRay nr;
      nr.dir = canonical_ray(l);
      nr.zero.assign(c, 1);
      nr.zero.push_back(0);
      rays.push_back(std::move(nr));
      continue;
    }
    // Pure ray step: split by sign.
    std::vector<std::size_t> plus, minus;
    std::vector<Rat> vals(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) vals[i] = dot(r, rays[i].dir);
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (vals[i] > 0) {
        plus.push_back(i);
      } else if (vals[i] < 0) {
        minus.push_back(i);
      }
    }
    std::vector<DDRay> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (vals[i] > 0) continue;
      DDRay nr = rays[i];
      nr.zero.push_back(vals[i] == 0 ? 1 : 0);
      next.push_back(std::move(nr));
    }
    for (auto ip : plus) {
      for (auto im : minus) {
        // Combinatorial adjacency: no third ray is tight on the common
        // tight set of the pair.
        const auto& zp = rays[ip].zero;
        const auto& zm = rays[im].zero;
        bool adjacent = true;
        for (std::size_t o = 0; o < rays.size() && adjacent; ++o) {
          if (o == ip || o == im) continue;
          const auto& zo = rays[o].zero;
          bool contains = true;
          for (std::size_t t = 0; t < c && contains; ++t)
            if (zp[t] && zm[t] && !zo[t]) contains = false;
          if (contains) adjacent = false;
        }
        if (!adjacent) continue;
        DDRay nr;
        nr.dir.assign(dim, Rat(0));
        for (int j = 0; j < dim; ++j)
          nr.dir[j] = vals[ip] * rays[im].dir[j] - vals[im] * rays[ip].dir[j];
        nr.dir = canonical_ray(nr.dir);
        nr.zero.assign(c + 1, 0);
        for (std::size_t t = 0; t < c; ++t) nr.zero[t] = (zp[t] && zm[t]) ? 1 : 0;
        nr.zero[c] = 1;
        next.push_back(std::move(nr));
      }
    }
    rays.swap(next);
  }
  if (!lineality.empty()) throw Error("cone_extreme_rays: cone is not pointed");
  std::vector<QVec> out;
  std::set<QVec> seen;
  for (auto& ray : rays) {
    if (seen.insert(ray.dir).second) out.push_back(ray.dir);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Facet> polytope_facets(const PointConfiguration& pc) {
  AffineCoords ac(pc.points);
  const int d = ac.dim();
  std::vector<QVec> local;
  local.reserve(pc.points.size());
  for (const auto& p : pc.points) local.push_back(ac.to_local(p));
  std::vector<QVec> rows;
  for (const auto& y : local) {
    QVec row(d + 1);
    for (int j = 0; j < d; ++j) row[j] = y[j];
    row[d] = 1;
    rows.push_back(std::move(row));
  }
  auto rays = cone_extreme_rays(rows, d + 1);
  std::vector<Facet> out;
  for (const auto& g : rays) {
    QVec c_local(g.begin(), g.begin() + d);
    auto [c, c0] = ac.functional_to_ambient(c_local, g[d]);
    Facet f;
    f.normal = std::move(c);
    f.offset = -c0;
    for (std::size_t i = 0; i < pc.points.size(); ++i)
      if (dot(f.normal, pc.points[i]) == f.offset) f.tight.push_back(i);
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(),
            [](const Facet& a, const Facet& b) { return a.tight < b.tight; });
  return out;
}

namespace {

struct LiftVertex {
  QVec u;                          // functional in local chart, size d+1
  std::vector<std::size_t> tight;  // rows at equality
};

std::vector<std::size_t> tight_rows(const std::vector<QVec>& rows, const QVec& h,
                                    const QVec& u) {
  std::vector<std::size_t> t;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (dot(rows[i], u) == h[i]) t.push_back(i);
  return t;
}

// Some vertex of the polyhedron { u : rows·u <= h }, found by maximizing a
// strictly-decreasing-on-rays objective and then pinning every coordinate
// lexicographically.
QVec seed_vertex(const std::vector<QVec>& rows, const QVec& h, int dim) {
  LinearProgram lp(dim);
  for (std::size_t i = 0; i < rows.size(); ++i) lp.add_row(rows[i], Rel::Le, h[i]);
  QVec first(dim, Rat(0));
  for (const auto& r : rows)
    for (int j = 0; j < dim; ++j) first[j] += r[j];
  std::vector<QVec> goals;
  goals.push_back(std::move(first));
  for (int j = 0; j < dim; ++j) {
    QVec e(dim, Rat(0));
    e[j] = 1;
    goals.push_back(std::move(e));
  }
  QVec u;
  for (const auto& goal : goals) {
    lp.objective = goal;
    auto sol = solve_lp(lp);
    if (sol.status != LpStatus::Optimal)
      throw Error("lower_facets: seed LP did not reach an optimum");
    u = sol.primal;
    lp.add_row(goal, Rel::Eq, sol.objective);
  }
  return u;
}

}  // namespace

std::vector<LowerFacet> lower_facets(const PointConfiguration& pc, const QVec& heights) {
  const std::size_t npts = pc.points.size();
  if (heights.size() != npts)
    throw MalformedInputError("one height per point required");
  AffineCoords ac(pc.points);
  const int d = ac.dim();
  std::vector<QVec> rows;
  rows.reserve(npts);
  for (const auto& p : pc.points) {
    QVec y = ac.to_local(p);
    QVec row(d + 1);
    for (int j = 0; j < d; ++j) row[j] = y[j];
    row[d] = 1;
    rows.push_back(std::move(row));
  }

  QVec u0 = seed_vertex(rows, heights, d + 1);
  std::map<std::vector<std::size_t>, QVec> visited;
  std::queue<LiftVertex> work;
  {
    LiftVertex v{u0, tight_rows(rows, heights, u0)};
    visited.emplace(v.tight, v.u);
    work.push(std::move(v));
  }
  while (!work.empty()) {
    LiftVertex v = std::move(work.front());
    work.pop();
    std::vector<QVec> cone;
    cone.reserve(v.tight.size());
    for (auto i : v.tight) cone.push_back(rows[i]);
    auto edges = cone_extreme_rays(cone, d + 1);
    for (const auto& e : edges) {
      // Step along the edge to the next vertex, if the edge is bounded.
      bool bounded = false;
      Rat best_t;
      for (std::size_t j = 0; j < npts; ++j) {
        Rat s = dot(rows[j], e);
        if (s <= 0) continue;
        Rat t = (heights[j] - dot(rows[j], v.u)) / s;
        if (!bounded || t < best_t) {
          bounded = true;
          best_t = t;
        }
      }
      if (!bounded) continue;
      QVec u2(v.u);
      for (int j = 0; j < d + 1; ++j) u2[j] += best_t * e[j];
      auto t2 = tight_rows(rows, heights, u2);
      if (visited.emplace(t2, u2).second) work.push(LiftVertex{std::move(u2), std::move(t2)});
    }
  }

  std::vector<LowerFacet> out;
  out.reserve(visited.size());
  for (const auto& [tight, u] : visited) {
    QVec c_local(u.begin(), u.begin() + d);
    auto [c, c0] = ac.functional_to_ambient(c_local, u[d]);
    out.push_back(LowerFacet{std::move(c), std::move(c0), tight});
  }
  std::sort(out.begin(), out.end(),
            [](const LowerFacet& a, const LowerFacet& b) { return a.tight < b.tight; });
  return out;
}

namespace {

// Facet-based membership tester for dilates of an integral polytope.
class HullTester {
 public:
  explicit HullTester(const std::vector<QVec>& points) : ac_(points) {
    const int d = ac_.dim();
    std::vector<QVec> rows;
    for (const auto& p : points) {
      QVec y = ac_.to_local(p);
      QVec row(d + 1);
      for (int j = 0; j < d; ++j) row[j] = y[j];
      row[d] = 1;
      rows.push_back(std::move(row));
    }
    facets_ = cone_extreme_rays(rows, d + 1);
  }

  // Is x an element of scale * conv(points)?
  bool contains_scaled(const QVec& x, const Rat& scale) const {
    auto y = ac_.try_local_scaled(x, scale);
    if (!y) return false;
    const int d = ac_.dim();
    for (const auto& g : facets_) {
      Rat acc = g[d] * scale;
      for (int j = 0; j < d; ++j) acc += g[j] * (*y)[j];
      if (acc > 0) return false;
    }
    return true;
  }

 private:
  AffineCoords ac_;
  std::vector<QVec> facets_;
};

long count_lattice_points(const std::vector<QVec>& points, const HullTester& tester,
                          int ambient, long t) {
  // Coordinate bounds of the dilate.
  std::vector<long> lo(ambient), hi(ambient);
  for (int j = 0; j < ambient; ++j) {
    Rat mn = points.front()[j], mx = points.front()[j];
    for (const auto& p : points) {
      mn = std::min(mn, p[j]);
      mx = std::max(mx, p[j]);
    }
    lo[j] = Rat(mn * t).get_num().get_si();
    hi[j] = Rat(mx * t).get_num().get_si();
  }
  // Common coordinate-sum constraint, when present (matroid polytopes).
  bool has_sum = true;
  Rat sum0 = std::accumulate(points.front().begin(), points.front().end(), Rat(0));
  for (const auto& p : points)
    if (std::accumulate(p.begin(), p.end(), Rat(0)) != sum0) {
      has_sum = false;
      break;
    }
  long target = 0;
  if (has_sum) {
    Rat st = sum0 * t;
    if (st.get_den() != 1) return 0;
    target = static_cast<long>(st.get_num().get_si());
  }
  std::vector<long> suffix_lo(ambient + 1, 0), suffix_hi(ambient + 1, 0);
  for (int j = ambient - 1; j >= 0; --j) {
    suffix_lo[j] = suffix_lo[j + 1] + lo[j];
    suffix_hi[j] = suffix_hi[j + 1] + hi[j];
  }
  long count = 0;
  QVec x(ambient, Rat(0));
  std::vector<long> xi(ambient, 0);
  auto rec = [&](auto&& self, int j, long sum) -> void {
    if (j == ambient) {
      if (!has_sum || sum == target) {
        for (int i = 0; i < ambient; ++i) x[i] = xi[i];
        if (tester.contains_scaled(x, Rat(t))) ++count;
      }
      return;
    }
    for (long v = lo[j]; v <= hi[j]; ++v) {
      long s = sum + v;
      if (has_sum &&
          (s + suffix_lo[j + 1] > target || s + suffix_hi[j + 1] < target))
        continue;
      xi[j] = v;
      self(self, j + 1, s);
    }
  };
  rec(rec, 0, 0);
  return count;
}

}  // namespace

Rat normalized_volume(const PointConfiguration& pc, int dim) {
  for (const auto& p : pc.points)
    for (const auto& c : p)
      if (c.get_den() != 1)
        throw MalformedInputError("normalized_volume expects lattice points");
  AffineCoords probe(pc.points);
  if (probe.dim() < dim) return 0;
  if (probe.dim() > dim)
    throw MalformedInputError("configuration exceeds the stated dimension");
  if (dim == 0) return 1;
  HullTester tester(pc.points);
  // Ehrhart counts for t = 0..dim; the normalized volume is the dim-th
  // finite difference at zero.
  std::vector<Rat> counts(dim + 1);
  counts[0] = 1;
  for (int t = 1; t <= dim; ++t)
    counts[t] = count_lattice_points(pc.points, tester, pc.ambient, t);
  Rat vol = 0;
  Rat binom = 1;  // C(dim, j), updated incrementally
  for (int j = dim; j >= 0; --j) {
    Rat term = binom * counts[j];
    vol += ((dim - j) % 2 == 0) ? term : -term;
    binom = binom * j / (dim - j + 1);
  }
  return vol;
}

Rat normalized_volume(const PointConfiguration& pc) {
  return normalized_volume(pc, AffineCoords(pc.points).dim());
}

}  // namespace lpmtk
