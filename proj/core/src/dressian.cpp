#include "lpmtk/dressian.hpp"

#include <algorithm>
#include <sstream>

#include "lpmtk/error.hpp"

namespace lpmtk {

std::string ThreeTermRelation::describe() const {
  std::ostringstream os;
  os << "S=" << to_string(s) << " {a,b,c,d}={" << a << ',' << b << ',' << c << ',' << d
     << '}';
  return os.str();
}

namespace {

Basis with(const Basis& s, int x, int y) {
  Basis out = s;
  out.push_back(x);
  out.push_back(y);
  std::sort(out.begin(), out.end());
  return out;
}

void subsets_rec(int n, int k, int start, Basis& cur, std::vector<Basis>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int e = start; e <= n; ++e) {
    cur.push_back(e);
    subsets_rec(n, k, e + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<Basis> all_subsets(int n, int k) {
  std::vector<Basis> out;
  Basis cur;
  subsets_rec(n, k, 1, cur, out);
  return out;
}

}  // namespace

std::vector<ThreeTermRelation> enumerate_three_terms(const Matroid& m) {
  const int n = m.n();
  const int k = m.k();
  std::vector<ThreeTermRelation> out;
  if (k < 2 || n - k < 2) return out;
  for (const auto& s : all_subsets(n, k - 2)) {
    std::vector<int> rest;
    for (int e = 1; e <= n; ++e)
      if (!std::binary_search(s.begin(), s.end(), e)) rest.push_back(e);
    const int r = static_cast<int>(rest.size());
    for (int ia = 0; ia < r; ++ia)
      for (int ib = ia + 1; ib < r; ++ib)
        for (int ic = ib + 1; ic < r; ++ic)
          for (int id = ic + 1; id < r; ++id) {
            ThreeTermRelation rel;
            rel.s = s;
            rel.a = rest[ia];
            rel.b = rest[ib];
            rel.c = rest[ic];
            rel.d = rest[id];
            rel.terms[0] = {with(s, rel.a, rel.b), with(s, rel.c, rel.d), false, false};
            rel.terms[1] = {with(s, rel.a, rel.c), with(s, rel.b, rel.d), true, false};
            rel.terms[2] = {with(s, rel.a, rel.d), with(s, rel.b, rel.c), false, false};
            for (auto& t : rel.terms)
              t.live = m.has_basis(t.first) && m.has_basis(t.second);
            out.push_back(std::move(rel));
          }
  }
  return out;
}

namespace {

enum class Mode { Tropical, Positive };

// Checks one relation; true means it holds.
bool relation_holds(const ThreeTermRelation& rel, const WeightVector& w, Mode mode) {
  int live = 0;
  for (const auto& t : rel.terms)
    if (t.live) ++live;
  if (live <= 1) return true;  // dead monomials drop out of the relation
  Rat best;
  bool first = true;
  for (const auto& t : rel.terms) {
    if (!t.live) continue;
    Rat v = w.at(t.first) + w.at(t.second);
    if (first || v < best) {
      best = v;
      first = false;
    }
  }
  int hits = 0;
  bool pos_hit = false, neg_hit = false;
  for (const auto& t : rel.terms) {
    if (!t.live) continue;
    Rat v = w.at(t.first) + w.at(t.second);
    if (v == best) {
      ++hits;
      if (t.positive) pos_hit = true;
      else neg_hit = true;
    }
  }
  if (hits < 2) return false;
  if (mode == Mode::Positive && !(pos_hit && neg_hit)) return false;
  return true;
}

std::optional<ThreeTermRelation> first_violation(const WeightVector& w, Mode mode) {
  for (auto& rel : enumerate_three_terms(w.ambient()))
    if (!relation_holds(rel, w, mode)) return rel;
  return std::nullopt;
}

}  // namespace

bool is_tropical_plucker(const WeightVector& w) {
  return !first_violation(w, Mode::Tropical).has_value();
}

bool is_positive_tropical_plucker(const WeightVector& w) {
  return !first_violation(w, Mode::Positive).has_value();
}

std::optional<ThreeTermRelation> first_tropical_violation(const WeightVector& w) {
  return first_violation(w, Mode::Tropical);
}

std::optional<ThreeTermRelation> first_positive_violation(const WeightVector& w) {
  return first_violation(w, Mode::Positive);
}

}  // namespace lpmtk
