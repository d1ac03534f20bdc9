#pragma once

// Arbitrary-precision number-theoretic kernel.
//
// Integers are GMP's mpz_class. NatInt marks places where the value is
// nonnegative by contract; BigInt is used where a sign is meaningful.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace gmforms {

using NatInt = mpz_class;
using BigInt = mpz_class;

/// Raised on contract violations of the public API (bad modulus, even
/// exponent, mismatched discriminants, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses a decimal string; throws InvalidArgument on anything else.
BigInt parse_integer(const std::string& text);

/// Least nonnegative residue of a modulo m (m > 0).
BigInt mod_floor(const BigInt& a, const BigInt& m);

/// a mod m for a small modulus, always in [0, m).
unsigned long mod_ui(const BigInt& a, unsigned long m);

/// base^exp mod modulus. A negative base is reduced first.
NatInt mod_pow(const BigInt& base, const NatInt& exp, const NatInt& modulus);

/// Jacobi symbol (a/n) for odd n >= 1. a may be negative.
int jacobi(const BigInt& a, const NatInt& n);

/// Square root of a modulo an odd prime p via Tonelli-Shanks.
///
/// Returns the root r with 0 <= r <= (p-1)/2, or nullopt when a is a
/// quadratic nonresidue. Passing a composite p is a contract violation; the
/// routine then returns nullopt or a verified root, never an unchecked value.
std::optional<NatInt> sqrt_mod_prime(const BigInt& a, const NatInt& p);

struct IntegerSqrt {
  NatInt root;
  bool exact = false;
};

/// floor(sqrt(n)) together with an exactness flag.
IntegerSqrt integer_sqrt(const NatInt& n);

/// Baillie-PSW: trial division, strong base-2 test, strong Lucas test
/// (Selfridge parameters). Exact for n < 2^64.
bool is_probable_prime(const NatInt& n);

/// True when is_probable_prime() is known to be exact for n.
bool primality_is_deterministic(const NatInt& n);

NatInt gcd(const NatInt& a, const NatInt& b);

// Small-integer helpers.

std::vector<unsigned long> primes_up_to(unsigned long limit);
bool is_square_free(unsigned long n);

namespace detail {

bool strong_probable_prime(const NatInt& n, const NatInt& base);
bool strong_lucas_probable_prime(const NatInt& n);

}  // namespace detail

}  // namespace gmforms
