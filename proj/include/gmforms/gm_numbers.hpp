#pragma once

// Gaussian Mersenne norms G_p = N((1+i)^p - 1).

#include <optional>
#include <string_view>
#include <vector>

#include "gmforms/core_arith.hpp"

namespace gmforms {

/// An element re + im*i of Z[i].
struct GaussianInt {
  BigInt re;
  BigInt im;

  NatInt norm() const { return re * re + im * im; }
  GaussianInt conj() const { return {re, -im}; }

  friend GaussianInt operator+(const GaussianInt& l, const GaussianInt& r) {
    return {l.re + r.re, l.im + r.im};
  }
  friend GaussianInt operator-(const GaussianInt& l, const GaussianInt& r) {
    return {l.re - r.re, l.im - r.im};
  }
  friend GaussianInt operator*(const GaussianInt& l, const GaussianInt& r) {
    return {l.re * r.re - l.im * r.im, l.re * r.im + l.im * r.re};
  }
  friend bool operator==(const GaussianInt& l, const GaussianInt& r) {
    return l.re == r.re && l.im == r.im;
  }
};

/// z^e by square-and-multiply.
GaussianInt pow(GaussianInt z, unsigned long e);

enum class Primality { ProvenSmall, ProbablePrime, Composite, Untested };

std::string_view to_string(Primality p);
Primality primality_from_string(std::string_view s);

/// Primality of n: ProvenSmall when the test is exact at this size.
Primality classify_primality(const NatInt& n);

inline bool is_prime_status(Primality p) {
  return p == Primality::ProvenSmall || p == Primality::ProbablePrime;
}

struct GmNorm {
  unsigned long p = 0;
  int epsilon = 0;  // (2/p)
  NatInt value;
  Primality primality = Primality::Untested;

  friend bool operator==(const GmNorm&, const GmNorm&) = default;
};

/// Throws InvalidArgument unless p is an odd prime.
void require_odd_prime(unsigned long p);

/// (2/p): +1 iff p = +-1 (mod 8).
int epsilon(unsigned long p);

/// Closed form 2^p - (2/p) 2^((p+1)/2) + 1, without a primality test.
NatInt gm_value(unsigned long p);

/// Closed form plus primality classification.
GmNorm gm_norm(unsigned long p);

/// Norm of (1+i)^p - 1 computed in Z[i]; independent of the closed form.
NatInt gm_norm_oracle(unsigned long p);

/// Residues of G_p next to the congruences predicted for it.
///
/// mod 8 = 1 is predicted for p > 3, mod 16 = 1 for p = +-1 (mod 8),
/// mod 32 = 1 for p > 7. The mod-7 prediction (1 for p = 1 mod 6, 4 for
/// p = 5 mod 6) is only made when (2/p) = +1: G_5 = 41 = 6 (mod 7).
struct CongruencePrediction {
  unsigned long p = 0;
  int epsilon = 0;
  unsigned actual_mod8 = 0;
  unsigned actual_mod16 = 0;
  unsigned actual_mod32 = 0;
  unsigned actual_mod7 = 0;
  std::optional<unsigned> mod8;
  std::optional<unsigned> mod16;
  std::optional<unsigned> mod32;
  std::optional<unsigned> mod7;

  /// Every applicable prediction matches the actual residue.
  bool holds() const;

  friend bool operator==(const CongruencePrediction&,
                         const CongruencePrediction&) = default;
};

CongruencePrediction predict_congruences(unsigned long p);

/// Exponents p in [p_min, p_max] (inclusive, prime) whose G_p is prime, in
/// increasing order. An empty range yields an empty list. Exponents are
/// partitioned across `workers` threads; the output order does not depend
/// on the worker count.
std::vector<GmNorm> scan_exponents(unsigned long p_min, unsigned long p_max,
                                   unsigned workers = 1);

}  // namespace gmforms
