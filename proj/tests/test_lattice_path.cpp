#include <doctest.h>

#include <numeric>
#include <random>

#include "lpmtk/error.hpp"
#include "lpmtk/geometry.hpp"
#include "lpmtk/lattice_path.hpp"
#include "oracles.hpp"

using namespace lpmtk;

namespace {

// Every LPM with both grid sides bounded by `side`, enumerated through all
// ordered bounding-path pairs.
std::vector<LatticePathMatroid> all_lpms(int max_k, int max_width) {
  std::vector<LatticePathMatroid> out;
  for (int k = 1; k <= max_k; ++k)
    for (int width = 0; width <= max_width; ++width) {
      int n = k + width;
      Matroid uni = Matroid::uniform(k, n);
      for (const auto& p : uni.bases())
        for (const auto& q : uni.bases()) {
          bool leq = true;
          for (int j = 0; j < k; ++j)
            if (p[j] > q[j]) leq = false;
          if (!leq) continue;
          out.emplace_back(LatticePath(p, n), LatticePath(q, n));
        }
    }
  return out;
}

}  // namespace

TEST_CASE("interval enumeration") {
  LatticePathMatroid point(LatticePath({1, 3}, 4), LatticePath({1, 3}, 4));
  CHECK(point.matroid().bases() == std::vector<Basis>{{1, 3}});

  LatticePathMatroid u24(LatticePath({1, 2}, 4), LatticePath({3, 4}, 4));
  CHECK(u24.matroid() == Matroid::uniform(2, 4));

  LatticePathMatroid snake(LatticePath({1, 3}, 4), LatticePath({3, 4}, 4));
  CHECK(snake.matroid() ==
        Matroid(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}));

  CHECK_THROWS_AS(LatticePathMatroid(LatticePath({3, 4}, 4), LatticePath({1, 2}, 4)),
                  InvalidBoundsError);
}

TEST_CASE("interval enumeration matches the subset filter oracle") {
  for (const auto& lpm : all_lpms(3, 3)) {
    auto expect = oracle::interval_filter(lpm.P().north_steps(), lpm.Q().north_steps(),
                                          lpm.n());
    CHECK(lpm.matroid().bases() == expect);
  }
}

TEST_CASE("recognition") {
  auto u24 = recognize_lpm(Matroid::uniform(2, 4));
  REQUIRE(u24.has_value());
  CHECK(u24->first.north_steps() == std::vector<int>{1, 2});
  CHECK(u24->second.north_steps() == std::vector<int>{3, 4});

  CHECK_FALSE(recognize_lpm(Matroid(4, {{1, 2}, {1, 4}, {2, 3}, {2, 4}, {3, 4}})));

  auto direct = recognize_lpm(Matroid(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}}));
  REQUIRE(direct.has_value());
  CHECK(direct->first.north_steps() == std::vector<int>{1, 3});
  CHECK(direct->second.north_steps() == std::vector<int>{2, 4});
}

TEST_CASE("recognition round trip over all small bounding pairs") {
  for (const auto& lpm : all_lpms(4, 4)) {
    auto rec = recognize_lpm(lpm.matroid());
    REQUIRE(rec.has_value());
    CHECK(rec->first == lpm.P());
    CHECK(rec->second == lpm.Q());
  }
}

TEST_CASE("snake recognition") {
  CHECK_FALSE(is_snake(LatticePathMatroid(LatticePath({1, 2}, 4), LatticePath({3, 4}, 4))));
  CHECK(is_snake(LatticePathMatroid(LatticePath({1, 3}, 4), LatticePath({3, 4}, 4))));
  CHECK_FALSE(is_snake(LatticePathMatroid(LatticePath({1, 3}, 4), LatticePath({1, 3}, 4))));
  CHECK(is_snake(LatticePathMatroid(LatticePath({1}, 3), LatticePath({3}, 3))));
}

TEST_CASE("snakes are connected, binary, and minimal") {
  int snakes_seen = 0;
  for (const auto& lpm : all_lpms(3, 3)) {
    if (!is_snake(lpm)) continue;
    ++snakes_seen;
    const Matroid& m = lpm.matroid();
    CHECK(is_connected(m));
    CHECK_FALSE(has_u24_minor(m));
    CHECK(m.num_bases() == static_cast<std::size_t>(m.k() * (m.n() - m.k()) + 1));
  }
  CHECK(snakes_seen > 10);
}

TEST_CASE("minors of bounded-path matroids keep the interval property") {
  for (const auto& lpm : all_lpms(3, 3)) {
    const Matroid& m = lpm.matroid();
    if (m.n() < 2) continue;
    for (int e = 1; e <= m.n(); ++e) {
      if (!m.is_coloop(e)) CHECK(recognize_lpm(minor(m, MinorKind::Delete, e)));
      // Contractions that empty the rank leave no bounding paths to find.
      if (!m.is_loop(e) && m.k() > 1)
        CHECK(recognize_lpm(minor(m, MinorKind::Contract, e)));
    }
  }
}

namespace {

// Faces of these polytopes are again polytopes of bounded-path matroids,
// but only after relabeling the ground set (a deletion facet leaves a loop
// in the middle of the order, say). Search the relabelings.
bool lpm_after_some_relabeling(const Matroid& m) {
  if (recognize_lpm(m)) return true;
  std::vector<int> perm(m.n());
  std::iota(perm.begin(), perm.end(), 1);
  do {
    std::vector<Basis> relabeled;
    relabeled.reserve(m.num_bases());
    for (const auto& b : m.bases()) {
      Basis img;
      for (int e : b) img.push_back(perm[e - 1]);
      std::sort(img.begin(), img.end());
      relabeled.push_back(std::move(img));
    }
    if (recognize_lpm(Matroid(m.n(), std::move(relabeled)))) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_CASE("facets of these polytopes are bounded-path polytopes up to relabeling") {
  std::mt19937_64 rng(7701);
  auto lpms = all_lpms(3, 3);
  std::shuffle(lpms.begin(), lpms.end(), rng);
  int tested = 0;
  for (const auto& lpm : lpms) {
    if (tested >= 25) break;
    const Matroid& m = lpm.matroid();
    if (polytope_dimension(m) < 1) continue;
    ++tested;
    auto pc = PointConfiguration::from_matroid(m);
    for (const auto& facet : polytope_facets(pc)) {
      std::vector<Basis> vertex_bases;
      for (auto idx : facet.tight) vertex_bases.push_back(m.bases()[idx]);
      CHECK(lpm_after_some_relabeling(Matroid(m.n(), vertex_bases)));
    }
  }
  CHECK(tested == 25);
}

TEST_CASE("certificate matrices") {
  LatticePathMatroid u12(LatticePath({1}, 2), LatticePath({2}, 2));
  PositroidMatrix row(u12, 2);
  CHECK(row.entry(0, 0) == 1);
  CHECK(row.entry(0, 1) == 2);
  CHECK(row.verify(u12));

  LatticePathMatroid snake(LatticePath({1, 3}, 4), LatticePath({3, 4}, 4));
  PositroidMatrix cert(snake, 2);
  CHECK(cert.minor_det({1, 2}) == 0);
  for (const auto& b : snake.matroid().bases()) CHECK(cert.minor_det(b) > 0);
  CHECK(cert.verify(snake));

  LatticePathMatroid u24(LatticePath({1, 2}, 4), LatticePath({3, 4}, 4));
  PositroidMatrix vand(u24, 2);
  for (const auto& b : u24.matroid().bases()) CHECK(vand.minor_det(b) > 0);
  CHECK(vand.verify(u24));

  CHECK_THROWS_AS(PositroidMatrix(u24, 1), MalformedInputError);
}
