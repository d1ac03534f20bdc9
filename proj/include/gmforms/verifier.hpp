#pragma once

// Audits of the x^2 + d y^2 congruence statements on concrete Gaussian
// Mersenne primes, plus the ordinary Mersenne control.

#include <optional>
#include <string_view>
#include <vector>

#include "gmforms/core_arith.hpp"
#include "gmforms/repr_solver.hpp"

namespace gmforms {

struct LemmaChecks {
  bool x_odd = false;
  bool y_even = false;
  bool four_divides_y = false;
  bool x_pm1_mod8 = false;

  bool all() const { return x_odd && y_even && four_divides_y && x_pm1_mod8; }
};

/// Evaluates each step of "x = +-1 (mod 8) and 4 | y" separately.
/// Throws InvalidArgument when x^2 + 7 y^2 != g.
LemmaChecks audit_lemma(const NatInt& x, const NatInt& y, const NatInt& g);

enum class ArtinClass { Trivial, Rho };

std::string_view to_string(ArtinClass a);
ArtinClass artin_class_from_string(std::string_view s);

/// Image of x + y sqrt(-7) under O_K -> Z/8 (omega -> -2, so sqrt(-7) -> 3):
/// trivial iff x + 3y = +-1 (mod 8).
ArtinClass artin_class_d7(const NatInt& x, const NatInt& y);

enum class Verdict {
  Confirmed,
  HypothesisNotMet,
  Refuted,
  NoRepresentation,
  OutOfRange,  // p <= 7; the d = 7 statement covers p > 7 only
};

std::string_view to_string(Verdict v);
Verdict verdict_from_string(std::string_view s);

struct HypothesisFlags {
  bool p_mod8_ok = false;            // p = +-1 (mod 8)
  bool gp_probable_prime = false;
  bool legendre_2_d = false;         // (2/d) = 1
  bool legendre_minus_d_gp = false;  // (-d/G_p) = 1
  bool class_group_order4 = false;   // Cl(-8d) has an element of order 4

  friend bool operator==(const HypothesisFlags&, const HypothesisFlags&) = default;
};

struct VerificationRecord {
  unsigned long p = 0;
  unsigned long d = 0;
  NatInt g_value;
  HypothesisFlags flags;
  std::optional<Representation> representation;
  std::optional<unsigned> x_mod8;
  std::optional<unsigned> y_mod8;
  std::optional<ArtinClass> artin;  // d = 7 only
  Verdict verdict = Verdict::HypothesisNotMet;

  friend bool operator==(const VerificationRecord&,
                         const VerificationRecord&) = default;
};

/// d = 7, p > 7: p = +-1 (mod 8) and G_p prime imply G_p = x^2 + 7y^2 with
/// x = +-1 (mod 8) and 8 | y. Exponents p <= 7 produce an OutOfRange record
/// with the data still filled in. Throws unless p is an odd prime.
VerificationRecord audit_theorem_d7(unsigned long p);

/// d = 7 (mod 24) square-free. "Confirmed" is additionally gated on
/// (2/d) = 1, (-d/G_p) = 1 and an order-4 class in Cl(-8d). d = 7 is
/// delegated to audit_theorem_d7.
VerificationRecord audit_generalized(unsigned long p, unsigned long d);

/// Throws InvalidArgument unless d = 7 (mod 24) and d is square-free.
void require_generalized_d(unsigned long d);

struct D2dRecord {
  unsigned long p = 0;
  unsigned long d = 0;
  NatInt g_value;
  bool ramified = false;  // gcd(G_p, 2d) > 1; then nothing is audited
  std::optional<bool> rep_d;
  std::optional<bool> rep_2d;
  std::optional<bool> equivalent;
  unsigned d_mod4 = 0;
};

/// Representability of G_p by x^2 + d y^2 and by x^2 + 2d y^2, reported as
/// data.
D2dRecord audit_d_2d(unsigned long p, unsigned long d);

enum class MersenneStatus { Checked, SkippedComposite };

struct MersenneRecord {
  unsigned long p = 0;
  NatInt m_value;
  MersenneStatus status = MersenneStatus::SkippedComposite;
  std::optional<Representation> representation;
  std::optional<unsigned> x_mod8;
  std::optional<unsigned> y_mod8;
  /// 8 | x and y = +-3 (mod 8).
  bool consistent = false;
};

/// Control experiment on M_p = 2^p - 1. Composite M_p gives a skipped
/// record; a prime M_p with p != 1 (mod 3) is rejected.
MersenneRecord mersenne_crosscheck(unsigned long p);

struct SuiteCounts {
  unsigned long confirmed = 0;
  unsigned long hypothesis_not_met = 0;
  unsigned long refuted = 0;
  unsigned long no_representation = 0;
  unsigned long out_of_range = 0;

  unsigned long total() const {
    return confirmed + hypothesis_not_met + refuted + no_representation +
           out_of_range;
  }
  friend bool operator==(const SuiteCounts&, const SuiteCounts&) = default;
};

SuiteCounts tally(const std::vector<VerificationRecord>& records);

struct SuiteReport {
  std::vector<VerificationRecord> records;  // sorted by (p, d)
  SuiteCounts counts;
};

/// Audits every Gaussian Mersenne prime exponent 3 <= p <= p_max against
/// each d (7, or d = 7 mod 24 square-free).
SuiteReport run_suite(unsigned long p_max, const std::vector<unsigned long>& d_list,
                      unsigned workers = 1);

/// Records where the d = 7 statement predicts a representation that the
/// data does not deliver: d = 7, p > 7, p = +-1 (mod 8), G_p prime, and
/// no representation found.
std::vector<VerificationRecord> unexpected_failures(
    const std::vector<VerificationRecord>& records);

}  // namespace gmforms
