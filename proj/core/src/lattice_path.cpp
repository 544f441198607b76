#include "lpmtk/lattice_path.hpp"

#include <algorithm>

#include "lpmtk/error.hpp"

namespace lpmtk {

LatticePath::LatticePath(std::vector<int> north_steps, int n)
    : north_(std::move(north_steps)), n_(n) {
  if (n_ < 1) throw MalformedInputError("lattice path needs n >= 1");
  if (north_.empty() || static_cast<int>(north_.size()) > n_)
    throw MalformedInputError("lattice path needs 1 <= k <= n north steps");
  for (std::size_t i = 0; i < north_.size(); ++i) {
    if (north_[i] < 1 || north_[i] > n_)
      throw MalformedInputError("north step position out of range");
    if (i > 0 && north_[i] <= north_[i - 1])
      throw MalformedInputError("north step positions must increase");
  }
}

int LatticePath::height_after(int s) const {
  return static_cast<int>(std::upper_bound(north_.begin(), north_.end(), s) -
                          north_.begin());
}

namespace {

std::vector<Basis> interval_bases(const std::vector<int>& p, const std::vector<int>& q) {
  const int k = static_cast<int>(p.size());
  std::vector<Basis> out;
  Basis cur(k);
  // DFS over i_1 < ... < i_k with p_j <= i_j <= q_j.
  auto rec = [&](auto&& self, int j) -> void {
    if (j == k) {
      out.push_back(cur);
      return;
    }
    int lo = std::max(p[j], j > 0 ? cur[j - 1] + 1 : 1);
    for (int v = lo; v <= q[j]; ++v) {
      cur[j] = v;
      self(self, j + 1);
    }
  };
  rec(rec, 0);
  return out;
}

Matroid build_interval_matroid(const LatticePath& p, const LatticePath& q) {
  if (p.n() != q.n() || p.k() != q.k())
    throw InvalidBoundsError("bounding paths live on different grids");
  for (int j = 0; j < p.k(); ++j)
    if (p.north_steps()[j] > q.north_steps()[j])
      throw InvalidBoundsError("bounding paths cross at index " + std::to_string(j + 1));
  return Matroid(p.n(), interval_bases(p.north_steps(), q.north_steps()));
}

}  // namespace

LatticePathMatroid::LatticePathMatroid(LatticePath p, LatticePath q)
    : p_(std::move(p)), q_(std::move(q)), matroid_(build_interval_matroid(p_, q_)) {}

LatticePathMatroid lpm_bases(const LatticePath& p, const LatticePath& q) {
  return LatticePathMatroid(p, q);
}

std::optional<std::pair<LatticePath, LatticePath>> recognize_lpm(const Matroid& m) {
  const int k = m.k();
  if (k == 0) return std::nullopt;
  std::vector<int> p(m.bases().front());
  std::vector<int> q(m.bases().front());
  for (const auto& b : m.bases())
    for (int j = 0; j < k; ++j) {
      p[j] = std::min(p[j], b[j]);
      q[j] = std::max(q[j], b[j]);
    }
  auto interval = interval_bases(p, q);
  if (interval.size() != m.num_bases()) return std::nullopt;
  if (!std::is_permutation(interval.begin(), interval.end(), m.bases().begin()))
    return std::nullopt;
  return std::make_pair(LatticePath(p, m.n()), LatticePath(q, m.n()));
}

bool is_snake(const LatticePathMatroid& l) {
  // Snakes are the connected bounded-path matroids whose strip is thin
  // enough to leave no slack, which is equivalent to attaining the minimal
  // basis count k(n-k)+1 of a connected matroid. The count is the reliable
  // form of the condition: zigzag strips such as M[{1,3},{3,5}] contain no
  // lattice point off the bounding paths yet exceed the minimal count.
  if (l.n() < 2) return false;
  if (!is_connected(l.matroid())) return false;
  const auto k = static_cast<long>(l.k());
  const auto width = static_cast<long>(l.n() - l.k());
  return static_cast<long>(l.matroid().num_bases()) == k * width + 1;
}

PositroidMatrix::PositroidMatrix(const LatticePathMatroid& l, long x1)
    : k_(l.k()), n_(l.n()), entries_(static_cast<std::size_t>(l.k()) * l.n(), BigInt(0)) {
  if (x1 <= 1) throw MalformedInputError("positroid matrix seed needs x1 >= 2");
  seeds_.resize(k_);
  seeds_[0] = x1;
  const unsigned long ksq = static_cast<unsigned long>(k_) * static_cast<unsigned long>(k_);
  for (int i = 1; i < k_; ++i) {
    mpz_pow_ui(seeds_[i].get_mpz_t(), seeds_[i - 1].get_mpz_t(), ksq);
  }
  const auto& p = l.P().north_steps();
  const auto& q = l.Q().north_steps();
  for (int i = 0; i < k_; ++i)
    for (int j = p[i]; j <= q[i]; ++j) {
      BigInt v;
      mpz_pow_ui(v.get_mpz_t(), seeds_[i].get_mpz_t(), static_cast<unsigned long>(j - 1));
      entries_[i * n_ + (j - 1)] = v;
    }
}

BigInt PositroidMatrix::minor_det(const Basis& columns) const {
  const int k = k_;
  // Cofactor expansion; k is at most 4 or 5 in practice.
  std::vector<BigInt> sub(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) sub[i * k + j] = entry(i, columns[j] - 1);
  auto det = [&](auto&& self, std::vector<BigInt> m, int dim) -> BigInt {
    if (dim == 1) return m[0];
    BigInt acc = 0;
    int sign = 1;
    for (int c = 0; c < dim; ++c) {
      std::vector<BigInt> inner(static_cast<std::size_t>(dim - 1) * (dim - 1));
      for (int i = 1; i < dim; ++i) {
        int cc = 0;
        for (int j = 0; j < dim; ++j) {
          if (j == c) continue;
          inner[(i - 1) * (dim - 1) + cc] = m[i * dim + j];
          ++cc;
        }
      }
      if (sgn(m[c]) != 0) {
        BigInt term = m[c] * self(self, inner, dim - 1);
        acc += sign > 0 ? term : -term;
      }
      sign = -sign;
    }
    return acc;
  };
  return det(det, sub, k);
}

bool PositroidMatrix::verify(const LatticePathMatroid& l) const {
  Matroid uni = Matroid::uniform(k_, n_);
  for (const auto& cols : uni.bases()) {
    BigInt d = minor_det(cols);
    bool is_basis = l.matroid().has_basis(cols);
    if (is_basis && sgn(d) <= 0) return false;
    if (!is_basis && sgn(d) != 0) return false;
  }
  return true;
}

}  // namespace lpmtk
