#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace lpmtk {

/// Exact rational scalar. All geometric certificates in this library are
/// carried in this type; no floating point is used anywhere.
using Rat = mpq_class;

/// Arbitrary-precision integer (used for determinants of certificate
/// matrices whose entries grow far beyond 64 bits).
using BigInt = mpz_class;

/// Vector with exact rational coordinates.
using QVec = std::vector<Rat>;

/// Parses "p", "-p" or "p/q" into an exact rational. Throws
/// MalformedInputError on anything else (including q == 0).
Rat parse_rational(const std::string& text);

/// Renders a rational as "p" or "p/q" in canonical (reduced) form.
std::string rational_to_string(const Rat& value);

inline Rat dot(const QVec& a, const QVec& b) {
  Rat sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

}  // namespace lpmtk
