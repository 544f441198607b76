#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lpmtk/dissection.hpp"
#include "lpmtk/lattice_path.hpp"
#include "lpmtk/lpmfan.hpp"
#include "lpmtk/matroid.hpp"
#include "lpmtk/positroid.hpp"
#include "lpmtk/subdivision.hpp"

namespace lpmtk {

// Serialization of the documented interchange formats. Rationals appear as
// "p" or "p/q" strings; bases are 1-based sorted integer arrays.

std::string matroid_to_json(const Matroid& m, int indent = -1);
Matroid matroid_from_json(const std::string& text);

std::string lpm_to_json(const LatticePathMatroid& l, int indent = -1);
LatticePathMatroid lpm_from_json(const std::string& text);

// Weight files either key weights by basis ("1,2,3": "p/q") or carry a flat
// "vector" with an "order" field; a flat vector without an order in the
// file needs `fallback_order`.
std::string weight_to_json(const WeightVector& w, int indent = -1);
WeightVector weight_from_json(const std::string& text,
                              std::optional<BasisOrder> fallback_order = std::nullopt);

std::string subdivision_to_json(const Subdivision& s,
                                const std::vector<CellClassification>* classifications,
                                int indent = -1);
std::string subdivision_to_dot(const Subdivision& s);

std::string decorated_permutation_to_json(const DecoratedPermutation& p, int indent = -1);

std::string fan_to_json(const LPMFan& fan, int indent = -1);
std::string fan_to_dot(const LPMFan& fan);

std::string dissection_report_to_json(const DissectionReport& report, int indent = -1);

std::vector<Matroid> matroid_list_from_json(const std::string& text);

BasisOrder basis_order_from_name(const std::string& name);

}  // namespace lpmtk
