#include <doctest.h>

#include <random>

#include "lpmtk/catalog.hpp"
#include "lpmtk/dressian.hpp"
#include "lpmtk/subdivision.hpp"

using namespace lpmtk;

TEST_CASE("three-term relation enumeration") {
  Matroid u24 = Matroid::uniform(2, 4);
  auto rels = enumerate_three_terms(u24);
  REQUIRE(rels.size() == 1);
  int live = 0;
  for (const auto& t : rels[0].terms)
    if (t.live) ++live;
  CHECK(live == 3);
  CHECK(rels[0].terms[1].positive);

  CHECK(enumerate_three_terms(Matroid::uniform(3, 6)).size() == 30);

  Matroid single(4, {{1, 3}});
  for (const auto& rel : enumerate_three_terms(single)) {
    int l = 0;
    for (const auto& t : rel.terms)
      if (t.live) ++l;
    CHECK(l <= 1);
  }
}

TEST_CASE("tropical three-term check") {
  Matroid u24 = Matroid::uniform(2, 4);
  CHECK(is_tropical_plucker(WeightVector(u24)));

  WeightVector bad(u24);
  bad.at({1, 3}) = -1;
  CHECK_FALSE(is_tropical_plucker(bad));
  auto witness = first_tropical_violation(bad);
  REQUIRE(witness.has_value());
  CHECK(witness->describe().find("a,b,c,d") != std::string::npos);

  CHECK(is_tropical_plucker(catalog::delta36_snake_weight()));
}

TEST_CASE("positive three-term check") {
  Matroid u24 = Matroid::uniform(2, 4);
  CHECK(is_positive_tropical_plucker(WeightVector(u24)));

  // Positive pair strictly above the minimum: tropical holds, positivity
  // does not.
  WeightVector off(u24);
  off.at({1, 3}) = 1;
  off.at({2, 4}) = 1;
  CHECK(is_tropical_plucker(off));
  CHECK_FALSE(is_positive_tropical_plucker(off));

  CHECK(is_positive_tropical_plucker(catalog::delta36_snake_weight()));
  CHECK(is_positive_tropical_plucker(catalog::delta48_weight()));
}

TEST_CASE("positivity implies the tropical condition") {
  Matroid u25 = Matroid::uniform(2, 5);
  std::mt19937_64 rng(200);
  std::uniform_int_distribution<int> d(-2, 2);
  for (int trial = 0; trial < 300; ++trial) {
    QVec values(u25.num_bases());
    for (auto& v : values) v = d(rng);
    WeightVector w(u25, std::move(values));
    if (is_positive_tropical_plucker(w)) CHECK(is_tropical_plucker(w));
  }
}

TEST_CASE("local relations on a non-uniform ambient") {
  // The snake has dead terms in most relations; the zero weight is still
  // tropical and positive there.
  Matroid snake(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  WeightVector zero(snake);
  CHECK(is_tropical_plucker(zero));
  CHECK(is_positive_tropical_plucker(zero));
  // The interleaved direct sum is a matroid but not a positroid; its only
  // relation has a dead positive term and two live negative terms, so the
  // zero weight is tropical but not positive.
  Matroid twisted(4, {{1, 2}, {1, 4}, {2, 3}, {3, 4}});
  WeightVector z2(twisted);
  CHECK(is_tropical_plucker(z2));
  CHECK_FALSE(is_positive_tropical_plucker(z2));
}
