#include "lpmtk/catalog.hpp"

namespace lpmtk::catalog {

namespace {

QVec ints(std::initializer_list<long> xs) {
  QVec out;
  out.reserve(xs.size());
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

QVec delta36_snake_flat() {
  return ints({0, 0, 0, 0, 0, 0, 0, 1, 1, 2, 0, 0, 0, 1, 1, 2, 2, 2, 3, 5});
}

std::vector<QVec> delta36_split_flats() {
  return {
      ints({0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0, 1, 1, 1, 1, 1, 1, 2}),
      ints({0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1}),
      ints({0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1}),
      ints({0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}),
  };
}

WeightVector delta36_snake_weight() {
  return weight_from_flat(Matroid::uniform(3, 6), delta36_snake_flat(), BasisOrder::Lex);
}

std::vector<WeightVector> delta36_split_weights() {
  Matroid m = Matroid::uniform(3, 6);
  std::vector<WeightVector> out;
  for (const auto& flat : delta36_split_flats())
    out.push_back(weight_from_flat(m, flat, BasisOrder::Lex));
  return out;
}

QVec delta48_flat() {
  return ints({0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 2, 2, 3, 0, 0, 0, 0, 1, 1, 1, 2,
               2, 3, 2, 2, 2, 3, 3, 4, 5, 5, 6, 8, 0, 0, 0, 0, 1, 1, 1, 2, 2, 3, 2,
               2, 2, 3, 3, 4, 5, 5, 6, 8, 3, 3, 3, 4, 4, 5, 6, 6, 7, 9, 8, 8, 9, 11,
               14});
}

WeightVector delta48_weight() {
  return weight_from_flat(Matroid::uniform(4, 8), delta48_flat(), BasisOrder::Lex);
}

}  // namespace lpmtk::catalog
