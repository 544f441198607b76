#pragma once

#include <vector>

#include "lpmtk/subdivision.hpp"

namespace lpmtk::catalog {

/// Bundled reference weights for the demonstration runs on the
/// hypersimplices Delta(3,6) and Delta(4,8). All flat vectors are in
/// lexicographic basis order.

/// Weight on Delta(3,6) whose regular subdivision has six snake cells.
WeightVector delta36_snake_weight();

/// The four split-weight summands of delta36_snake_weight (their sum equals
/// it entry by entry).
std::vector<WeightVector> delta36_split_weights();

/// The raw flat vectors behind the two functions above.
QVec delta36_snake_flat();
std::vector<QVec> delta36_split_flats();

/// Weight on Delta(4,8) inducing a lattice-path-matroidal subdivision.
WeightVector delta48_weight();
QVec delta48_flat();

}  // namespace lpmtk::catalog
