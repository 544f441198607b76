#include <doctest.h>

#include <set>

#include "lpmtk/error.hpp"
#include "lpmtk/lpmfan.hpp"

using namespace lpmtk;

namespace {

LatticePathMatroid lpm_of(const Matroid& m) {
  auto pq = recognize_lpm(m);
  REQUIRE(pq.has_value());
  return LatticePathMatroid(pq->first, pq->second);
}

}  // namespace

TEST_CASE("hypersimplex split enumeration") {
  CHECK(enumerate_hypersimplex_splits(Matroid::uniform(2, 4)).size() == 3);
  CHECK(enumerate_hypersimplex_splits(Matroid::uniform(1, 4)).empty());
  CHECK(enumerate_hypersimplex_splits(Matroid::uniform(2, 5)).size() == 10);
  CHECK_THROWS_AS(enumerate_hypersimplex_splits(Matroid(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}})),
                  UnsupportedAmbientError);
}

TEST_CASE("LPM split enumeration") {
  auto u24_splits = enumerate_lpm_splits(lpm_of(Matroid::uniform(2, 4)));
  REQUIRE(u24_splits.size() == 1);
  // The single LPM split of the octahedron cuts along x(12) = 1.
  auto want = make_split(Matroid::uniform(2, 4), {1, 2}, 1);
  CHECK(u24_splits[0].same_cut(want));

  auto snake_splits =
      enumerate_lpm_splits(lpm_of(Matroid(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}})));
  CHECK(snake_splits.empty());
}

TEST_CASE("fans of the simplex and octahedron") {
  auto trivial = build_lpmfan(lpm_of(Matroid::uniform(1, 3)));
  CHECK(trivial.f_vector() == std::vector<int>{1});
  CHECK(dual_fan_check(trivial));

  auto octa = build_lpmfan(lpm_of(Matroid::uniform(2, 4)));
  CHECK(octa.f_vector() == std::vector<int>{1, 1});
  CHECK(dual_fan_check(octa));
  CHECK(octa.poset_edges().size() == 1);

  // Fan cones are closed under subsets of their split sets.
  std::set<std::vector<std::size_t>> cone_keys;
  for (const auto& c : octa.cones()) cone_keys.insert(c.split_indices);
  for (const auto& c : octa.cones())
    for (std::size_t drop = 0; drop < c.split_indices.size(); ++drop) {
      auto sub = c.split_indices;
      sub.erase(sub.begin() + drop);
      CHECK(cone_keys.count(sub));
    }
}

TEST_CASE("dual fan check rejects non-uniform ambients") {
  auto snake = lpm_of(Matroid(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}));
  auto fan = build_lpmfan(snake);
  CHECK(fan.f_vector() == std::vector<int>{1});
  CHECK_THROWS_AS(dual_fan_check(fan), UnsupportedAmbientError);
}
