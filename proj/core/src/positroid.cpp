#include "lpmtk/positroid.hpp"

#include <algorithm>
#include <set>

#include "lpmtk/error.hpp"
#include "lpmtk/geometry.hpp"

namespace lpmtk {

CyclicOrder::CyclicOrder(int t, int n) : t_(t), n_(n) {
  if (n < 1 || t < 1 || t > n) throw MalformedInputError("bad cyclic order start");
}

Basis CyclicOrder::shifted_sort(const Basis& a) const {
  Basis out = a;
  std::sort(out.begin(), out.end(),
            [this](int x, int y) { return position(x) < position(y); });
  return out;
}

bool CyclicOrder::gale_less_eq(const Basis& a, const Basis& b) const {
  if (a.size() != b.size()) throw MalformedInputError("Gale order needs equal sizes");
  Basis sa = shifted_sort(a);
  Basis sb = shifted_sort(b);
  for (std::size_t r = 0; r < sa.size(); ++r)
    if (position(sa[r]) > position(sb[r])) return false;
  return true;
}

Basis gale_min(const Matroid& m, int t) {
  CyclicOrder ord(t, m.n());
  // Greedy in the shifted order; a set is independent iff it extends to a
  // basis, which for explicit basis lists is a subset test.
  std::vector<int> order(m.n());
  for (int i = 0; i < m.n(); ++i) order[i] = ((t - 1 + i) % m.n()) + 1;
  std::uint32_t current = 0;
  int taken = 0;
  auto independent = [&](std::uint32_t s) {
    for (auto bm : m.basis_masks())
      if ((s & bm) == s) return true;
    return false;
  };
  for (int e : order) {
    if (taken == m.k()) break;
    std::uint32_t cand = current | (1u << (e - 1));
    if (independent(cand)) {
      current = cand;
      ++taken;
    }
  }
  Basis out;
  for (int e = 1; e <= m.n(); ++e)
    if (current & (1u << (e - 1))) out.push_back(e);
  return out;
}

GrassmannNecklace::GrassmannNecklace(std::vector<Basis> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw MalformedInputError("empty necklace");
}

bool GrassmannNecklace::satisfies_axiom() const {
  const int len = static_cast<int>(terms_.size());
  for (int t = 1; t <= len; ++t) {
    const Basis& cur = terms_[t - 1];
    const Basis& next = terms_[t % len];
    bool has_t = std::binary_search(cur.begin(), cur.end(), t);
    if (!has_t) {
      if (next != cur) return false;
      continue;
    }
    // next must be (cur \ {t}) ∪ {j} for some j.
    std::vector<int> removed, added;
    std::set_difference(cur.begin(), cur.end(), next.begin(), next.end(),
                        std::back_inserter(removed));
    std::set_difference(next.begin(), next.end(), cur.begin(), cur.end(),
                        std::back_inserter(added));
    if (removed.empty() && added.empty()) continue;  // j = t
    if (removed.size() != 1 || added.size() != 1 || removed[0] != t) return false;
  }
  return true;
}

GrassmannNecklace grassmann_necklace(const Matroid& m) {
  std::vector<Basis> terms;
  terms.reserve(m.n());
  for (int t = 1; t <= m.n(); ++t) terms.push_back(gale_min(m, t));
  return GrassmannNecklace(std::move(terms));
}

int DecoratedPermutation::anti_excedances() const {
  const int nn = n();
  std::vector<int> inverse(nn + 1, 0);
  for (int i = 1; i <= nn; ++i) inverse[images[i - 1]] = i;
  int count = 0;
  for (int i = 1; i <= nn; ++i) {
    if (images[i - 1] == i) {
      auto it = colors.find(i);
      if (it != colors.end() && it->second == -1) ++count;
    } else if (inverse[i] > i) {
      ++count;
    }
  }
  return count;
}

DecoratedPermutation decorated_permutation_lpm(const LatticePathMatroid& l) {
  const int n = l.n();
  const Basis lower = l.P().north_steps();  // Gale-minimal basis
  const Basis upper = l.Q().north_steps();  // Gale-maximal basis
  std::vector<int> co_lower, co_upper;
  for (int e = 1; e <= n; ++e) {
    if (!std::binary_search(lower.begin(), lower.end(), e)) co_lower.push_back(e);
    if (!std::binary_search(upper.begin(), upper.end(), e)) co_upper.push_back(e);
  }
  DecoratedPermutation out;
  out.images.assign(n, 0);
  for (std::size_t r = 0; r < upper.size(); ++r) out.images[upper[r] - 1] = lower[r];
  for (std::size_t r = 0; r < co_upper.size(); ++r)
    out.images[co_upper[r] - 1] = co_lower[r];
  for (int i = 1; i <= n; ++i) {
    if (out.images[i - 1] != i) continue;
    bool in_upper = std::binary_search(upper.begin(), upper.end(), i);
    out.colors[i] = in_upper ? -1 : 1;
  }
  return out;
}

bool is_positroid(const Matroid& m) {
  auto necklace = grassmann_necklace(m);
  Matroid uni = Matroid::uniform(m.k(), m.n());
  // Envelope: a k-set J survives iff I_t <=_t J for every t.
  std::set<Basis> envelope;
  for (const auto& j : uni.bases()) {
    bool inside = true;
    for (int t = 1; t <= m.n() && inside; ++t) {
      CyclicOrder ord(t, m.n());
      if (!ord.gale_less_eq(necklace.terms()[t - 1], j)) inside = false;
    }
    if (inside) envelope.insert(j);
  }
  std::set<Basis> bases(m.bases().begin(), m.bases().end());
  return envelope == bases;
}

bool weakly_separated(const Basis& a, const Basis& b) {
  auto splits = [](const Basis& x, const Basis& y) {
    // x \ y must avoid the open interval spanned by y \ x.
    std::vector<int> xo, yo;
    std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(xo));
    std::set_difference(y.begin(), y.end(), x.begin(), x.end(), std::back_inserter(yo));
    if (xo.empty() || yo.empty()) return true;
    int lo = yo.front(), hi = yo.back();
    for (int e : xo)
      if (e > lo && e < hi) return false;
    return true;
  };
  if (a.size() <= b.size() && splits(a, b)) return true;
  if (b.size() <= a.size() && splits(b, a)) return true;
  return false;
}

bool is_cluster(const std::vector<Basis>& c, const Matroid& m) {
  for (const auto& b : c)
    if (!m.has_basis(b)) throw MalformedInputError("cluster member is not a basis");
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (!weakly_separated(c[i], c[j])) return false;
  std::set<Basis> members(c.begin(), c.end());
  if (static_cast<int>(members.size()) != polytope_dimension(m) + 1) return false;
  for (const auto& term : grassmann_necklace(m).terms())
    if (!members.count(term)) return false;
  return true;
}

}  // namespace lpmtk
