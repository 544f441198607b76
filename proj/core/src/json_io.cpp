#include "lpmtk/json_io.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "lpmtk/error.hpp"

namespace lpmtk {

using Json = nlohmann::ordered_json;

namespace {

Json parse(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw MalformedInputError("invalid JSON");
  return j;
}

Basis basis_from_json(const Json& j) {
  if (!j.is_array()) throw MalformedInputError("basis must be an array");
  Basis b;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw MalformedInputError("basis element must be an integer");
    b.push_back(e.get<int>());
  }
  return b;
}

Json basis_to_json(const Basis& b) {
  Json arr = Json::array();
  for (int e : b) arr.push_back(e);
  return arr;
}

std::string dump(const Json& j, int indent) { return indent < 0 ? j.dump() : j.dump(indent); }

Rat rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw MalformedInputError("rational must be an integer or a \"p/q\" string");
}

Json rational_to_json(const Rat& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p())
    return Json(static_cast<long long>(r.get_num().get_si()));
  return Json(rational_to_string(r));
}

Basis basis_from_key(const std::string& key) {
  Basis b;
  std::istringstream is(key);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    try {
      b.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw MalformedInputError("bad basis key: " + key);
    }
  }
  return b;
}

std::string basis_to_key(const Basis& b) {
  std::ostringstream os;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) os << ',';
    os << b[i];
  }
  return os.str();
}

}  // namespace

std::string matroid_to_json(const Matroid& m, int indent) {
  Json j;
  j["n"] = m.n();
  j["k"] = m.k();
  Json bases = Json::array();
  for (const auto& b : m.bases()) bases.push_back(basis_to_json(b));
  j["bases"] = bases;
  return dump(j, indent);
}

Matroid matroid_from_json(const std::string& text) {
  Json j = parse(text);
  if (!j.contains("n") || !j.contains("bases"))
    throw MalformedInputError("matroid JSON needs \"n\" and \"bases\"");
  std::vector<Basis> bases;
  for (const auto& b : j["bases"]) bases.push_back(basis_from_json(b));
  Matroid m(j["n"].get<int>(), std::move(bases));
  if (j.contains("k") && j["k"].get<int>() != m.k())
    throw MalformedInputError("matroid JSON rank disagrees with bases");
  return m;
}

std::string lpm_to_json(const LatticePathMatroid& l, int indent) {
  Json j;
  j["n"] = l.n();
  j["k"] = l.k();
  j["P"] = basis_to_json(l.P().north_steps());
  j["Q"] = basis_to_json(l.Q().north_steps());
  return dump(j, indent);
}

LatticePathMatroid lpm_from_json(const std::string& text) {
  Json j = parse(text);
  for (const char* field : {"n", "P", "Q"})
    if (!j.contains(field))
      throw MalformedInputError(std::string("LPM JSON needs \"") + field + '"');
  int n = j["n"].get<int>();
  LatticePath p(basis_from_json(j["P"]), n);
  LatticePath q(basis_from_json(j["Q"]), n);
  return LatticePathMatroid(p, q);
}

std::string weight_to_json(const WeightVector& w, int indent) {
  Json j;
  j["ambient"] = Json::parse(matroid_to_json(w.ambient()));
  Json weights = Json::object();
  for (std::size_t i = 0; i < w.ambient().num_bases(); ++i)
    weights[basis_to_key(w.ambient().bases()[i])] = rational_to_json(w.at_index(i));
  j["weights"] = weights;
  return dump(j, indent);
}

WeightVector weight_from_json(const std::string& text,
                              std::optional<BasisOrder> fallback_order) {
  Json j = parse(text);
  if (!j.contains("ambient"))
    throw MalformedInputError("weight JSON needs an \"ambient\" matroid");
  Matroid m = matroid_from_json(j["ambient"].dump());
  if (j.contains("weights")) {
    QVec values(m.num_bases(), Rat(0));
    std::vector<char> seen(m.num_bases(), 0);
    for (auto it = j["weights"].begin(); it != j["weights"].end(); ++it) {
      std::size_t idx = m.basis_index(basis_from_key(it.key()));
      values[idx] = rational_from_json(it.value());
      seen[idx] = 1;
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
      if (!seen[i])
        throw MalformedInputError("weight missing for basis " +
                                  to_string(m.bases()[i]));
    return WeightVector(m, std::move(values));
  }
  if (j.contains("vector")) {
    BasisOrder order;
    if (j.contains("order")) {
      order = basis_order_from_name(j["order"].get<std::string>());
    } else if (fallback_order) {
      order = *fallback_order;
    } else {
      throw MalformedInputError("flat weight vector requires a basis order");
    }
    QVec flat;
    for (const auto& v : j["vector"]) flat.push_back(rational_from_json(v));
    return weight_from_flat(m, flat, order);
  }
  throw MalformedInputError("weight JSON needs \"weights\" or \"vector\"");
}

std::string subdivision_to_json(const Subdivision& s,
                                const std::vector<CellClassification>* classifications,
                                int indent) {
  Json j;
  j["ambient"] = Json::parse(matroid_to_json(s.ambient()));
  Json cells = Json::array();
  for (std::size_t ci = 0; ci < s.cells().size(); ++ci) {
    const auto& c = s.cells()[ci];
    Json cell;
    Json bases = Json::array();
    for (const auto& b : c.bases) bases.push_back(basis_to_json(b));
    cell["bases"] = bases;
    if (!c.normal.empty()) {
      Json normal = Json::array();
      for (const auto& x : c.normal) normal.push_back(rational_to_json(x));
      cell["functional"] = {{"normal", normal}, {"offset", rational_to_json(c.offset)}};
    }
    if (classifications) {
      const auto& cls = (*classifications)[ci];
      cell["is_matroid"] = cls.is_matroid;
      cell["is_lpm"] = cls.is_lpm;
      cell["is_snake"] = cls.is_snake;
      cell["is_positroid"] = cls.is_positroid;
      cell["is_series_parallel"] = cls.is_series_parallel;
    }
    cells.push_back(cell);
  }
  j["cells"] = cells;
  return dump(j, indent);
}

std::string subdivision_to_dot(const Subdivision& s) {
  // Dual graph: nodes are maximal cells, edges join cells whose
  // intersection has codimension one.
  const int dim = polytope_dimension(s.ambient());
  std::ostringstream os;
  os << "graph subdivision {\n";
  for (std::size_t i = 0; i < s.cells().size(); ++i)
    os << "  c" << i << " [label=\"cell " << i << " (" << s.cells()[i].bases.size()
       << " bases)\"];\n";
  for (std::size_t i = 0; i < s.cells().size(); ++i)
    for (std::size_t j = i + 1; j < s.cells().size(); ++j) {
      std::vector<Basis> inter;
      std::set_intersection(s.cells()[i].bases.begin(), s.cells()[i].bases.end(),
                            s.cells()[j].bases.begin(), s.cells()[j].bases.end(),
                            std::back_inserter(inter));
      if (inter.empty()) continue;
      if (affine_dimension(config_from_bases(inter, s.ambient().n())) == dim - 1)
        os << "  c" << i << " -- c" << j << ";\n";
    }
  os << "}\n";
  return os.str();
}

std::string decorated_permutation_to_json(const DecoratedPermutation& p, int indent) {
  Json j;
  Json pi = Json::array();
  for (int v : p.images) pi.push_back(v);
  j["pi"] = pi;
  Json colors = Json::object();
  for (const auto& [fixed, color] : p.colors) colors[std::to_string(fixed)] = color;
  j["colors"] = colors;
  return dump(j, indent);
}

namespace {

Json split_to_json(const Split& s) {
  Json j;
  j["A"] = basis_to_json(Basis(s.a_set.begin(), s.a_set.end()));
  j["mu"] = s.mu;
  return j;
}

}  // namespace

std::string fan_to_json(const LPMFan& fan, int indent) {
  Json j;
  j["ambient"] = Json::parse(matroid_to_json(fan.ambient()));
  Json splits = Json::array();
  for (const auto& s : fan.splits()) splits.push_back(split_to_json(s));
  j["splits"] = splits;
  Json cones = Json::array();
  for (const auto& c : fan.cones()) {
    Json cone;
    Json idx = Json::array();
    for (auto i : c.split_indices) idx.push_back(i);
    cone["splits"] = idx;
    Json cells = Json::array();
    for (const auto& cell : c.subdivision.cell_sets()) {
      Json basesj = Json::array();
      for (const auto& b : cell) basesj.push_back(basis_to_json(b));
      cells.push_back(basesj);
    }
    cone["cells"] = cells;
    Json wv = Json::array();
    for (std::size_t i = 0; i < c.weight.values().size(); ++i)
      wv.push_back(rational_to_json(c.weight.at_index(i)));
    cone["weight_lex"] = wv;
    cones.push_back(cone);
  }
  j["cones"] = cones;
  Json f = Json::array();
  for (int x : fan.f_vector()) f.push_back(x);
  j["f_vector"] = f;
  return dump(j, indent);
}

std::string fan_to_dot(const LPMFan& fan) {
  std::ostringstream os;
  os << "digraph lpmfan {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < fan.cones().size(); ++i) {
    const auto& c = fan.cones()[i];
    os << "  n" << i << " [label=\"{";
    for (std::size_t t = 0; t < c.split_indices.size(); ++t) {
      if (t) os << ',';
      os << 'S' << c.split_indices[t] + 1;
    }
    os << "}\"];\n";
  }
  for (const auto& [lo, hi] : fan.poset_edges())
    os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

std::string dissection_report_to_json(const DissectionReport& report, int indent) {
  Json j;
  Json fd = Json::array();
  for (bool b : report.full_dimensional) fd.push_back(b);
  j["full_dimensional"] = fd;
  j["pairwise_interior_disjoint"] = report.pairwise_interior_disjoint;
  j["covers"] = report.covers;
  j["good"] = report.good;
  j["is_dissection"] = report.is_dissection();
  j["is_good_dissection"] = report.is_good_dissection();
  if (report.overlap_witness) {
    Json w = Json::array();
    for (const auto& x : *report.overlap_witness) w.push_back(rational_to_json(x));
    j["overlap_witness"] = w;
  }
  return dump(j, indent);
}

std::vector<Matroid> matroid_list_from_json(const std::string& text) {
  Json j = parse(text);
  const Json* arr = &j;
  if (j.is_object() && j.contains("cells")) arr = &j["cells"];
  if (!arr->is_array()) throw MalformedInputError("expected an array of matroids");
  std::vector<Matroid> out;
  for (const auto& mj : *arr) out.push_back(matroid_from_json(mj.dump()));
  return out;
}

BasisOrder basis_order_from_name(const std::string& name) {
  if (name == "lex") return BasisOrder::Lex;
  if (name == "colex") return BasisOrder::Colex;
  if (name == "revlex") return BasisOrder::RevLex;
  throw MalformedInputError("unknown basis order: " + name);
}

}  // namespace lpmtk
