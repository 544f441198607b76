#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lpmtk/matroid.hpp"
#include "lpmtk/subdivision.hpp"

namespace lpmtk {

/// One three-term relation, indexed by a (k-2)-set S and four elements
/// a < b < c < d outside it. The three terms pair up the index sets
/// (Sab,Scd), (Sac,Sbd), (Sad,Sbc); the middle pair is the positive one.
/// A term is live iff both of its index sets are bases.
struct ThreeTermRelation {
  Basis s;
  int a = 0, b = 0, c = 0, d = 0;

  struct Term {
    Basis first;
    Basis second;
    bool positive = false;
    bool live = false;
  };
  Term terms[3];

  std::string describe() const;
};

/// All three-term relations of the ambient matroid, with liveness flags per
/// the local-Dressian convention (terms with a non-basis index are dead).
std::vector<ThreeTermRelation> enumerate_three_terms(const Matroid& m);

/// Tropical Plücker test in the min convention: in every relation with at
/// least two live terms the minimum of the live term values is attained at
/// least twice. Relations with fewer than two live terms hold vacuously.
bool is_tropical_plucker(const WeightVector& w);

/// Positive tropical Plücker test: additionally the minimum must be
/// attained by a live positive term and by a live negative term.
bool is_positive_tropical_plucker(const WeightVector& w);

/// First violated relation, for diagnostics; nullopt when the test passes.
std::optional<ThreeTermRelation> first_tropical_violation(const WeightVector& w);
std::optional<ThreeTermRelation> first_positive_violation(const WeightVector& w);

}  // namespace lpmtk
