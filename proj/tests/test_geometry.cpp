#include <doctest.h>

#include <random>

#include "lpmtk/error.hpp"
#include "lpmtk/geometry.hpp"
#include "lpmtk/verification.hpp"
#include "oracles.hpp"

using namespace lpmtk;

namespace {

QVec rv(std::initializer_list<long> xs) {
  QVec out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("simplex: bounded maxima") {
  LinearProgram lp(1);
  lp.objective[0] = 1;
  lp.add_row({Rat(1)}, Rel::Ge, Rat(0));
  lp.add_row({Rat(1)}, Rel::Le, Rat(1));
  auto sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.objective == 1);
  CHECK(sol.primal[0] == 1);
}

TEST_CASE("simplex: two variables") {
  LinearProgram lp(2);
  lp.objective = rv({1, 1});
  lp.signs = {VarSign::NonNegative, VarSign::NonNegative};
  lp.add_row(rv({1, 1}), Rel::Le, Rat(3));
  auto sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.objective == 3);
}

TEST_CASE("simplex: infeasibility yields a verified certificate") {
  LinearProgram lp(1);
  lp.add_row({Rat(1)}, Rel::Ge, Rat(1));
  lp.add_row({Rat(1)}, Rel::Le, Rat(0));
  auto sol = solve_lp(lp);
  CHECK(sol.status == LpStatus::Infeasible);
  REQUIRE(sol.farkas.size() == 2);
}

TEST_CASE("simplex: unbounded detection") {
  LinearProgram lp(1);
  lp.objective[0] = 1;
  lp.signs[0] = VarSign::NonNegative;
  lp.add_row({Rat(-1)}, Rel::Le, Rat(0));
  auto sol = solve_lp(lp);
  CHECK(sol.status == LpStatus::Unbounded);
}

TEST_CASE("simplex: degenerate equalities") {
  LinearProgram lp(2);
  lp.objective = rv({3, -1});
  lp.add_row(rv({1, 1}), Rel::Eq, Rat(2));
  lp.add_row(rv({2, 2}), Rel::Eq, Rat(4));  // redundant copy
  lp.add_row(rv({1, -1}), Rel::Le, Rat(0));
  auto sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.primal[0] == 1);
  CHECK(sol.primal[1] == 1);
  CHECK(sol.objective == 2);
}

TEST_CASE("membership") {
  auto pc = PointConfiguration::from_matroid(Matroid::uniform(2, 4));
  CHECK(contains_point(pc, pc.points[0], Membership::Member));
  QVec barycenter(4, Rat(1, 2));
  CHECK(contains_point(pc, barycenter, Membership::Member));
  CHECK(contains_point(pc, barycenter, Membership::RelativeInterior));
  // A vertex is not in the relative interior, and not in the hull of the
  // other five vertices.
  QVec e13 = rv({1, 0, 1, 0});
  CHECK_FALSE(contains_point(pc, e13, Membership::RelativeInterior));
  PointConfiguration others;
  others.ambient = 4;
  for (std::size_t i = 0; i < pc.points.size(); ++i)
    if (pc.points[i] != e13) others.points.push_back(pc.points[i]);
  CHECK_FALSE(contains_point(others, e13, Membership::Member));
}

TEST_CASE("affine dimension") {
  CHECK(affine_dimension(PointConfiguration::from_matroid(Matroid::uniform(2, 4))) == 3);
  CHECK(affine_dimension(PointConfiguration::from_matroid(Matroid::uniform(3, 6))) == 5);
  PointConfiguration single;
  single.ambient = 3;
  single.points.push_back(rv({1, 0, 0}));
  CHECK(affine_dimension(single) == 0);
}

TEST_CASE("facet enumeration counts") {
  CHECK(polytope_facets(PointConfiguration::from_matroid(Matroid::uniform(1, 3))).size() == 3);
  CHECK(polytope_facets(PointConfiguration::from_matroid(Matroid::uniform(2, 4))).size() == 8);
  CHECK(polytope_facets(PointConfiguration::from_matroid(Matroid::uniform(3, 6))).size() == 12);
}

TEST_CASE("facet description agrees with LP membership") {
  Matroid m = Matroid::uniform(2, 4);
  auto pc = PointConfiguration::from_matroid(m);
  auto facets = polytope_facets(pc);
  AffineCoords chart(pc.points);
  std::mt19937_64 rng(5150);
  std::uniform_int_distribution<int> coord(-2, 4);
  for (int trial = 0; trial < 60; ++trial) {
    QVec x{Rat(coord(rng)) / 2, Rat(coord(rng)) / 2, Rat(coord(rng)) / 2,
           Rat(coord(rng)) / 2};
    bool by_facets = chart.on_flat(x);
    if (by_facets)
      for (const auto& f : facets)
        if (dot(f.normal, x) > f.offset) by_facets = false;
    CHECK(by_facets == contains_point(pc, x, Membership::Member));
  }
}

TEST_CASE("lower facets: flat heights give the trivial cell") {
  auto pc = PointConfiguration::from_matroid(Matroid::uniform(3, 6));
  QVec h(pc.points.size(), Rat(0));
  auto cells = lower_facets(pc, h);
  REQUIRE(cells.size() == 1);
  CHECK(cells[0].tight.size() == pc.points.size());
}

TEST_CASE("lower facets: raised vertex splits the octahedron") {
  Matroid m = Matroid::uniform(2, 4);
  auto pc = PointConfiguration::from_matroid(m);
  QVec h(pc.points.size(), Rat(0));
  h[m.basis_index({1, 3})] = 1;
  auto cells = lower_facets(pc, h);
  REQUIRE(cells.size() == 2);
  // One cell misses e_13 and the other misses the opposite vertex e_24.
  std::set<std::vector<std::size_t>> got;
  for (const auto& c : cells) got.insert(c.tight);
  std::vector<std::size_t> all_but_13, all_but_24;
  for (std::size_t i = 0; i < m.num_bases(); ++i) {
    if (m.bases()[i] != Basis{1, 3}) all_but_13.push_back(i);
    if (m.bases()[i] != Basis{2, 4}) all_but_24.push_back(i);
  }
  CHECK(got.count(all_but_13));
  CHECK(got.count(all_but_24));
}

TEST_CASE("lower facets: dropped vertex makes four corner cells") {
  Matroid m = Matroid::uniform(2, 4);
  auto pc = PointConfiguration::from_matroid(m);
  QVec h(pc.points.size(), Rat(0));
  h[m.basis_index({1, 3})] = -1;
  auto cells = lower_facets(pc, h);
  REQUIRE(cells.size() == 4);
  for (const auto& c : cells) {
    CHECK(c.tight.size() == 4);
    // Every cell contains the diagonal {e_13, e_24}.
    bool has13 = false, has24 = false;
    for (auto i : c.tight) {
      if (m.bases()[i] == Basis{1, 3}) has13 = true;
      if (m.bases()[i] == Basis{2, 4}) has24 = true;
    }
    CHECK(has13);
    CHECK(has24);
  }
}

TEST_CASE("lower facets match the subset-fitting oracle") {
  std::mt19937_64 rng(424242);
  SUBCASE("octahedron, exhaustive-ish weights") {
    Matroid m = Matroid::uniform(2, 4);
    auto pc = PointConfiguration::from_matroid(m);
    std::uniform_int_distribution<int> d(-2, 2);
    for (int trial = 0; trial < 120; ++trial) {
      QVec h(pc.points.size());
      for (auto& x : h) x = d(rng);
      auto cells = lower_facets(pc, h);
      auto expect = oracle::lower_cells(pc.points, h);
      std::set<std::vector<std::size_t>> got;
      for (const auto& c : cells) got.insert(c.tight);
      CHECK(got == expect);
    }
  }
  SUBCASE("Delta(3,6), sampled weights") {
    Matroid m = Matroid::uniform(3, 6);
    auto pc = PointConfiguration::from_matroid(m);
    std::uniform_int_distribution<int> d(-2, 2);
    for (int trial = 0; trial < 6; ++trial) {
      QVec h(pc.points.size());
      for (auto& x : h) x = d(rng);
      auto cells = lower_facets(pc, h);
      auto expect = oracle::lower_cells(pc.points, h);
      std::set<std::vector<std::size_t>> got;
      for (const auto& c : cells) got.insert(c.tight);
      CHECK(got == expect);
    }
  }
}

TEST_CASE("lower facet certificates are valid") {
  Matroid m = Matroid::uniform(3, 6);
  auto pc = PointConfiguration::from_matroid(m);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(-3, 3);
  QVec h(pc.points.size());
  for (auto& x : h) x = d(rng);
  for (const auto& cell : lower_facets(pc, h)) {
    for (std::size_t i = 0; i < pc.points.size(); ++i) {
      Rat v = dot(cell.normal, pc.points[i]) + cell.offset;
      CHECK(v <= h[i]);
      bool tight = std::find(cell.tight.begin(), cell.tight.end(), i) != cell.tight.end();
      CHECK((v == h[i]) == tight);
    }
  }
}

TEST_CASE("normalized volume equals the descent oracle on hypersimplices") {
  CHECK(normalized_volume(PointConfiguration::from_matroid(Matroid::uniform(1, 3))) ==
        eulerian_number(2, 0));
  CHECK(normalized_volume(PointConfiguration::from_matroid(Matroid::uniform(2, 4))) ==
        eulerian_number(3, 1));
  CHECK(normalized_volume(PointConfiguration::from_matroid(Matroid::uniform(2, 5))) ==
        eulerian_number(4, 1));
  CHECK(normalized_volume(PointConfiguration::from_matroid(Matroid::uniform(3, 6))) ==
        eulerian_number(5, 2));
}

TEST_CASE("normalized volume basics") {
  PointConfiguration single;
  single.ambient = 2;
  single.points.push_back(rv({1, 0}));
  CHECK(normalized_volume(single) == 1);
  CHECK(normalized_volume(single, 1) == 0);

  // A segment has length 1 in its own hull, volume 0 in a 2-dimensional
  // reading.
  PointConfiguration seg;
  seg.ambient = 2;
  seg.points.push_back(rv({0, 0}));
  seg.points.push_back(rv({1, 0}));
  CHECK(normalized_volume(seg) == 1);
  CHECK(normalized_volume(seg, 2) == 0);

  PointConfiguration frac;
  frac.ambient = 1;
  frac.points.push_back(QVec{Rat(1, 2)});
  CHECK_THROWS_AS(normalized_volume(frac), MalformedInputError);
}

TEST_CASE("cone extreme rays: orthant") {
  std::vector<QVec> rows = {rv({-1, 0}), rv({0, -1})};
  auto rays = cone_extreme_rays(rows, 2);
  REQUIRE(rays.size() == 2);
  CHECK_THROWS_AS(cone_extreme_rays({rv({0, -1})}, 2), Error);  // has lineality
}
