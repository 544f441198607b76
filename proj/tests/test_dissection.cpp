#include <doctest.h>

#include "lpmtk/catalog.hpp"
#include "lpmtk/dissection.hpp"
#include "lpmtk/error.hpp"

using namespace lpmtk;

TEST_CASE("the ambient matroid dissects itself") {
  Matroid u24 = Matroid::uniform(2, 4);
  auto report = check_dissection({u24}, u24);
  CHECK(report.is_dissection());
  CHECK(report.is_good_dissection());
}

TEST_CASE("overlapping cells are rejected with a witness") {
  Matroid u24 = Matroid::uniform(2, 4);
  std::vector<Basis> no13, no12;
  for (const auto& b : u24.bases()) {
    if (b != Basis{1, 3}) no13.push_back(b);
    if (b != Basis{1, 2}) no12.push_back(b);
  }
  auto report = check_dissection({Matroid(4, no13), Matroid(4, no12)}, u24);
  CHECK_FALSE(report.pairwise_interior_disjoint);
  CHECK_FALSE(report.is_dissection());
  REQUIRE(report.overlap_witness.has_value());
  // The witness is a point of the hypersimplex slice.
  Rat sum = 0;
  for (const auto& x : *report.overlap_witness) sum += x;
  CHECK(sum == 2);
}

TEST_CASE("dissection minors of the trivial dissection") {
  Matroid u35 = Matroid::uniform(3, 5);
  for (int i = 1; i <= 5; ++i) {
    auto minors = dissection_minors({u35}, u35, i);
    REQUIRE(minors.contraction_cells.size() == 1);
    REQUIRE(minors.deletion_cells.size() == 1);
    CHECK(minors.contraction_cells[0] == Matroid::uniform(2, 4));
    CHECK(minors.deletion_cells[0] == Matroid::uniform(3, 4));
    CHECK(minors.contraction_report.is_dissection());
    CHECK(minors.deletion_report.is_dissection());
  }
}

TEST_CASE("minors of the six-snake subdivision at the first element") {
  Matroid u36 = Matroid::uniform(3, 6);
  auto sub = regular_subdivision(u36, catalog::delta36_snake_weight());
  REQUIRE(sub.num_cells() == 6);
  std::vector<Matroid> cells;
  for (const auto& cell : sub.cell_sets()) cells.emplace_back(6, cell);
  VolumeCache cache;
  auto minors = dissection_minors(cells, u36, 1, &cache);
  CHECK(minors.contraction_cells.size() == 3);
  CHECK(minors.deletion_cells.size() == 5);
  CHECK(minors.contraction_report.is_dissection());
  CHECK(minors.deletion_report.is_dissection());
  CHECK(minors.contraction_report.good);
  CHECK(minors.deletion_report.good);
}

TEST_CASE("noncrossing path pairs") {
  CHECK(noncrossing_pairs(7, 1).pairs.size() == 6);
  CHECK(noncrossing_pairs(8, 2).pairs.size() == 20);
  CHECK(noncrossing_pairs(6, 2).pairs.size() == 1);
  CHECK_THROWS_AS(noncrossing_pairs(6, 3), MalformedInputError);
}

TEST_CASE("noncrossing collections and their recorded reports") {
  auto c71 = bcfw_lpm_collection(7, 1);
  CHECK(c71.cells.size() == 6);
  CHECK(c71.ambient == Matroid::uniform(1, 3));
  // The report is recorded, not asserted: the interval cells cover the
  // triangle and have disjoint interiors, but most are lower-dimensional.
  CHECK(c71.report.covers);
  CHECK(c71.report.pairwise_interior_disjoint);
  CHECK_FALSE(c71.report.all_full_dimensional());
  CHECK_FALSE(c71.report.is_dissection());

  auto c82 = bcfw_lpm_collection(8, 2);
  CHECK(c82.cells.size() == 20);
  CHECK(c82.report.full_dimensional.size() == 20);

  auto tight = bcfw_lpm_collection(6, 2);
  CHECK(tight.cells.size() == 1);
  CHECK(tight.report.covers);
}
