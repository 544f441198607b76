#include <doctest.h>

#include <random>

#include "lpmtk/error.hpp"
#include "lpmtk/positroid.hpp"
#include "oracles.hpp"

using namespace lpmtk;

namespace {

Matroid snake4() { return Matroid(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}); }

LatticePathMatroid lpm_of(const Matroid& m) {
  auto pq = recognize_lpm(m);
  REQUIRE(pq.has_value());
  return LatticePathMatroid(pq->first, pq->second);
}

std::vector<Matroid> zoo() {
  return {
      Matroid::uniform(2, 4),  Matroid::uniform(1, 3),  Matroid::uniform(3, 6),
      Matroid::uniform(2, 5),  snake4(),
      Matroid(4, {{1, 2}}),
      Matroid(3, {{1, 2}, {1, 3}}),
      Matroid(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}}),
      Matroid(4, {{1, 2}, {1, 4}, {2, 3}, {3, 4}}),  // interleaved direct sum
      Matroid(6, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 2, 6}, {1, 3, 4}, {1, 3, 5},
                  {1, 3, 6}, {2, 3, 4}, {2, 3, 5}, {2, 3, 6}}),
  };
}

}  // namespace

TEST_CASE("Gale minima, greedily and by brute force") {
  CHECK(gale_min(Matroid::uniform(2, 4), 1) == Basis{1, 2});
  CHECK(gale_min(snake4(), 3) == Basis{3, 4});
  CHECK(gale_min(snake4(), 1) == Basis{1, 3});
  for (const auto& m : zoo())
    for (int t = 1; t <= m.n(); ++t) CHECK(gale_min(m, t) == oracle::gale_min(m, t));
}

TEST_CASE("necklaces") {
  auto u24 = grassmann_necklace(Matroid::uniform(2, 4));
  CHECK(u24.terms() ==
        std::vector<Basis>{{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  auto snk = grassmann_necklace(snake4());
  CHECK(snk.terms() ==
        std::vector<Basis>{{1, 3}, {2, 3}, {3, 4}, {1, 4}});
  auto single = grassmann_necklace(Matroid(4, {{1, 2}}));
  for (const auto& term : single.terms()) CHECK(term == Basis{1, 2});
  for (const auto& m : zoo()) CHECK(grassmann_necklace(m).satisfies_axiom());
}

TEST_CASE("decorated permutations of bounded-path matroids") {
  auto u24 = decorated_permutation_lpm(lpm_of(Matroid::uniform(2, 4)));
  CHECK(u24.images == std::vector<int>{3, 4, 1, 2});
  CHECK(u24.colors.empty());
  CHECK(u24.anti_excedances() == 2);

  auto snk = decorated_permutation_lpm(lpm_of(snake4()));
  CHECK(snk.images == std::vector<int>{2, 4, 1, 3});
  CHECK(snk.anti_excedances() == 2);

  LatticePathMatroid fixed(LatticePath({1, 2}, 3), LatticePath({1, 2}, 3));
  auto dec = decorated_permutation_lpm(fixed);
  CHECK(dec.images == std::vector<int>{1, 2, 3});
  CHECK(dec.colors.at(1) == -1);
  CHECK(dec.colors.at(2) == -1);
  CHECK(dec.colors.at(3) == 1);
  CHECK(dec.anti_excedances() == 2);
}

TEST_CASE("anti-excedance count equals the rank on bounded-path matroids") {
  for (int k = 1; k <= 3; ++k)
    for (int width = 0; width <= 3; ++width) {
      int n = k + width;
      Matroid uni = Matroid::uniform(k, n);
      for (const auto& p : uni.bases())
        for (const auto& q : uni.bases()) {
          bool leq = true;
          for (int j = 0; j < k; ++j)
            if (p[j] > q[j]) leq = false;
          if (!leq) continue;
          LatticePathMatroid l(LatticePath(p, n), LatticePath(q, n));
          CHECK(decorated_permutation_lpm(l).anti_excedances() == k);
        }
    }
}

TEST_CASE("Schubert-envelope positroid test") {
  CHECK(is_positroid(Matroid::uniform(2, 4)));
  CHECK(is_positroid(snake4()));
  CHECK_FALSE(is_positroid(Matroid(4, {{1, 2}, {1, 4}, {2, 3}, {3, 4}})));
  // Consecutive-blocks direct sum is fine, interleaved is not.
  CHECK(is_positroid(Matroid(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}})));
  // Every small bounded-path matroid is a positroid.
  for (int k = 1; k <= 2; ++k)
    for (int n = k + 1; n <= 5; ++n) {
      Matroid uni = Matroid::uniform(k, n);
      for (const auto& p : uni.bases())
        for (const auto& q : uni.bases()) {
          bool leq = true;
          for (int j = 0; j < k; ++j)
            if (p[j] > q[j]) leq = false;
          if (!leq) continue;
          CHECK(is_positroid(LatticePathMatroid(LatticePath(p, n), LatticePath(q, n))
                                 .matroid()));
        }
    }
}

TEST_CASE("weak separation") {
  CHECK(weakly_separated({1, 2}, {3, 4}));
  CHECK_FALSE(weakly_separated({1, 3}, {2, 4}));
  CHECK_FALSE(weakly_separated({1, 2, 4}, {1, 3, 5}));
  CHECK(weakly_separated({2, 3}, {1, 4}));
  CHECK(weakly_separated({1, 2}, {1, 2, 3}));
  std::mt19937_64 rng(314159);
  std::uniform_int_distribution<int> d(0, 1);
  for (int trial = 0; trial < 200; ++trial) {
    Basis a, b;
    for (int e = 1; e <= 6; ++e) {
      if (d(rng)) a.push_back(e);
      if (d(rng)) b.push_back(e);
    }
    if (a.empty() || b.empty()) continue;
    CHECK(weakly_separated(a, b) == weakly_separated(b, a));
  }
}

TEST_CASE("clusters") {
  Matroid u24 = Matroid::uniform(2, 4);
  auto necklace = grassmann_necklace(u24).terms();
  CHECK(is_cluster(necklace, u24));
  CHECK_FALSE(is_cluster({{1, 3}, {2, 4}}, u24));
  CHECK_THROWS_AS(is_cluster({{9, 9}}, u24), MalformedInputError);
}
