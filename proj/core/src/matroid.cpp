#include "lpmtk/matroid.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>

#include "lpmtk/error.hpp"

namespace lpmtk {

namespace {

std::uint32_t mask_of(const Basis& b) {
  std::uint32_t m = 0;
  for (int e : b) m |= 1u << (e - 1);
  return m;
}

void validate_basis(const Basis& b, int n) {
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] < 1 || b[i] > n)
      throw MalformedInputError("basis element out of range: " +
                                std::to_string(b[i]));
    if (i > 0 && b[i] <= b[i - 1])
      throw MalformedInputError("basis not strictly increasing: " +
                                to_string(b));
  }
}

}  // namespace

Matroid::Matroid(int n, std::vector<Basis> bases) : n_(n), bases_(std::move(bases)) {
  if (n_ < 1) throw MalformedInputError("ground set size must be positive");
  if (n_ > 30) throw MalformedInputError("ground set too large (n <= 30)");
  if (bases_.empty()) throw MalformedInputError("matroid needs at least one basis");
  k_ = static_cast<int>(bases_.front().size());
  for (auto& b : bases_) {
    if (static_cast<int>(b.size()) != k_)
      throw MalformedInputError("bases of unequal size");
    validate_basis(b, n_);
  }
  std::sort(bases_.begin(), bases_.end());
  bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
  masks_.reserve(bases_.size());
  for (const auto& b : bases_) masks_.push_back(mask_of(b));
}

Matroid Matroid::uniform(int k, int n) {
  if (k < 0 || k > n) throw MalformedInputError("uniform matroid needs 0 <= k <= n");
  std::vector<Basis> bases;
  Basis cur;
  // Iterative k-subset enumeration in lexicographic order.
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 1);
  if (k == 0) {
    bases.push_back({});
    return Matroid(n, std::move(bases));
  }
  while (true) {
    bases.emplace_back(idx.begin(), idx.end());
    int i = k - 1;
    while (i >= 0 && idx[i] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return Matroid(n, std::move(bases));
}

bool Matroid::has_basis(const Basis& b) const {
  return std::binary_search(bases_.begin(), bases_.end(), b);
}

bool Matroid::has_basis_mask(std::uint32_t mask) const {
  for (auto m : masks_)
    if (m == mask) return true;
  return false;
}

std::size_t Matroid::basis_index(const Basis& b) const {
  auto it = std::lower_bound(bases_.begin(), bases_.end(), b);
  if (it == bases_.end() || *it != b)
    throw MalformedInputError("not a basis: " + to_string(b));
  return static_cast<std::size_t>(it - bases_.begin());
}

bool Matroid::is_loop(int e) const {
  std::uint32_t bit = 1u << (e - 1);
  for (auto m : masks_)
    if (m & bit) return false;
  return true;
}

bool Matroid::is_coloop(int e) const {
  std::uint32_t bit = 1u << (e - 1);
  for (auto m : masks_)
    if (!(m & bit)) return false;
  return true;
}

int Matroid::rank(std::uint32_t subset_mask) const {
  int best = 0;
  for (auto m : masks_) best = std::max(best, std::popcount(m & subset_mask));
  return best;
}

bool is_matroid(const std::vector<Basis>& bases, int n) {
  if (bases.empty()) throw MalformedInputError("empty basis collection");
  const std::size_t k = bases.front().size();
  std::set<std::uint32_t> seen;
  std::vector<std::uint32_t> masks;
  for (const auto& b : bases) {
    if (b.size() != k) throw MalformedInputError("bases of unequal size");
    validate_basis(b, n);
    masks.push_back(mask_of(b));
    seen.insert(masks.back());
  }
  for (auto I : seen) {
    for (auto J : seen) {
      std::uint32_t only_I = I & ~J;
      for (std::uint32_t bits = only_I; bits;) {
        std::uint32_t ibit = bits & (~bits + 1);
        bits ^= ibit;
        bool found = false;
        for (std::uint32_t cand = J & ~I; cand;) {
          std::uint32_t jbit = cand & (~cand + 1);
          cand ^= jbit;
          if (seen.count((I ^ ibit) | jbit)) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

namespace {

Basis relabel_without(const Basis& b, int e) {
  Basis out;
  out.reserve(b.size());
  for (int x : b) {
    if (x == e) continue;
    out.push_back(x > e ? x - 1 : x);
  }
  return out;
}

}  // namespace

Matroid minor(const Matroid& m, MinorKind kind, int e) {
  if (e < 1 || e > m.n()) throw MalformedInputError("minor element out of range");
  if (m.n() == 1) throw DegenerateMinorError("cannot take minors on a singleton ground set");
  std::vector<Basis> out;
  if (kind == MinorKind::Delete) {
    if (m.is_coloop(e))
      throw DegenerateMinorError("deleting coloop " + std::to_string(e));
    for (const auto& b : m.bases())
      if (!std::binary_search(b.begin(), b.end(), e)) out.push_back(relabel_without(b, e));
  } else {
    if (m.is_loop(e))
      throw DegenerateMinorError("contracting loop " + std::to_string(e));
    for (const auto& b : m.bases())
      if (std::binary_search(b.begin(), b.end(), e)) out.push_back(relabel_without(b, e));
  }
  return Matroid(m.n() - 1, std::move(out));
}

Matroid dual(const Matroid& m) {
  std::vector<Basis> out;
  out.reserve(m.num_bases());
  for (const auto& b : m.bases()) {
    Basis comp;
    comp.reserve(m.n() - m.k());
    std::size_t pos = 0;
    for (int e = 1; e <= m.n(); ++e) {
      if (pos < b.size() && b[pos] == e) {
        ++pos;
      } else {
        comp.push_back(e);
      }
    }
    out.push_back(std::move(comp));
  }
  return Matroid(m.n(), std::move(out));
}

std::vector<std::vector<int>> connected_components(const Matroid& m) {
  const int n = m.n();
  const int k = m.k();
  // A subset A is a separator iff r(A) + r([n]\A) = k. Separators form a
  // Boolean subalgebra, so refining the trivial partition by every separator
  // yields the component partition.
  std::vector<std::uint32_t> blocks = {(n == 32 ? ~0u : (1u << n) - 1u)};
  const std::uint32_t full = (1u << n) - 1u;
  for (std::uint32_t a = 1; a < full; ++a) {
    if (m.rank(a) + m.rank(full & ~a) != k) continue;
    std::vector<std::uint32_t> next;
    for (auto blk : blocks) {
      std::uint32_t in = blk & a;
      std::uint32_t out = blk & ~a;
      if (in) next.push_back(in);
      if (out) next.push_back(out);
    }
    blocks.swap(next);
  }
  std::vector<std::vector<int>> result;
  for (auto blk : blocks) {
    std::vector<int> elems;
    for (int e = 1; e <= n; ++e)
      if (blk & (1u << (e - 1))) elems.push_back(e);
    result.push_back(std::move(elems));
  }
  std::sort(result.begin(), result.end());
  return result;
}

bool is_connected(const Matroid& m) { return connected_components(m).size() == 1; }

int polytope_dimension(const Matroid& m) {
  return m.n() - static_cast<int>(connected_components(m).size());
}

bool has_u24_minor(const Matroid& m) {
  const int n = m.n();
  if (n < 4 || m.k() < 2 || m.n() - m.k() < 2) return false;
  const std::uint32_t full = (1u << n) - 1u;
  // Full rank table; 2^n entries with n <= ~12 in practice.
  std::vector<std::int8_t> rk(1u << n);
  for (std::uint32_t s = 0; s <= full; ++s) rk[s] = static_cast<std::int8_t>(m.rank(s));

  std::vector<int> elems(n);
  std::iota(elems.begin(), elems.end(), 0);
  // Choose the 4-set F to keep, then scan contracted subsets C of the rest;
  // the untouched elements are deleted. The minor rank function is
  // r(X ∪ C) - r(C).
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          std::uint32_t f = (1u << a) | (1u << b) | (1u << c) | (1u << d);
          std::uint32_t rest = full & ~f;
          // Iterate over all subsets of rest.
          std::uint32_t sub = 0;
          while (true) {
            int rc = rk[sub];
            if (rk[f | sub] - rc == 2) {
              bool all_pairs = true;
              const std::uint32_t pts[4] = {1u << a, 1u << b, 1u << c, 1u << d};
              for (int i = 0; i < 4 && all_pairs; ++i)
                for (int j = i + 1; j < 4 && all_pairs; ++j)
                  if (rk[pts[i] | pts[j] | sub] - rc != 2) all_pairs = false;
              if (all_pairs) return true;
            }
            if (sub == rest) break;
            sub = (sub - rest) & rest;
          }
        }
  return false;
}

bool is_series_parallel(const Matroid& m) {
  return is_connected(m) && !has_u24_minor(m);
}

std::string to_string(const Basis& b) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) os << ',';
    os << b[i];
  }
  os << '}';
  return os.str();
}

}  // namespace lpmtk
