#pragma once

// Solving n = x^2 + d y^2 with x > 0 and y > 0.

#include <optional>

#include "gmforms/core_arith.hpp"

namespace gmforms {

struct Representation {
  NatInt n;
  unsigned long d = 0;
  NatInt x;
  NatInt y;

  bool valid() const {
    return sgn(x) > 0 && sgn(y) > 0 && x * x + NatInt(d) * y * y == n;
  }

  friend bool operator==(const Representation&,
                         const Representation&) = default;
};

/// Largest n accepted by represent_bruteforce().
inline constexpr unsigned long long kBruteForceLimit = 1'000'000'000'000ULL;

/// Cornacchia descent for an odd prime n and 1 <= d < n.
///
/// Seeds the Euclidean remainder sequence of (n, r0) with the square root r0
/// of -d mod n taken in (n/2, n), stops at the first remainder below
/// sqrt(n), and accepts iff the cofactor is d times a square. For composite
/// n the result is unspecified but any returned value is re-verified.
std::optional<Representation> cornacchia(const NatInt& n, unsigned long d);

/// Exhaustive search over y = 1 .. floor(sqrt((n-1)/d)); returns the
/// solution with the smallest y. Requires n <= kBruteForceLimit.
std::optional<Representation> represent_bruteforce(const NatInt& n,
                                                   unsigned long d);

/// Positive-pair representability: Cornacchia for odd primes n > d, brute
/// force otherwise (subject to kBruteForceLimit).
bool representable(const NatInt& n, unsigned long d);

/// representable() that also returns the pair.
std::optional<Representation> represent(const NatInt& n, unsigned long d);

}  // namespace gmforms
