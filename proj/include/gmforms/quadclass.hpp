#pragma once

// Positive definite binary quadratic forms a x^2 + b xy + c y^2 and the form
// class group of a negative discriminant.

#include <compare>
#include <set>
#include <string>
#include <vector>

#include "gmforms/core_arith.hpp"

namespace gmforms {

struct QuadForm {
  BigInt a;
  BigInt b;
  BigInt c;

  BigInt discriminant() const { return b * b - 4 * a * c; }
  bool is_primitive() const;
  /// |b| <= a <= c, and b >= 0 when |b| = a or a = c.
  bool is_reduced() const;
  BigInt evaluate(const BigInt& x, const BigInt& y) const {
    return a * x * x + b * x * y + c * y * y;
  }
  QuadForm inverse() const { return {a, -b, c}; }

  std::string to_string() const;

  friend bool operator==(const QuadForm& l, const QuadForm& r) {
    return l.a == r.a && l.b == r.b && l.c == r.c;
  }
  friend std::strong_ordering operator<=>(const QuadForm& l,
                                          const QuadForm& r);
};

struct ClassGroupSummary {
  long discriminant = 0;
  unsigned long h = 0;
  /// Invariant factors n1 | n2 | ... with product h; [1] for the trivial group.
  std::vector<unsigned long> cyclic_orders;
  bool has_order_4_element = false;
  std::vector<QuadForm> forms;

  friend bool operator==(const ClassGroupSummary&,
                         const ClassGroupSummary&) = default;
};

/// Throws InvalidArgument unless D < 0 and D = 0, 1 (mod 4).
void require_discriminant(long D);

/// x^2 + xy + (1-D)/4 y^2 or x^2 - (D/4) y^2.
QuadForm principal_form(long D);

/// Unique reduced form properly equivalent to f. f must be primitive,
/// positive definite.
QuadForm reduce(const QuadForm& f);

/// All primitive reduced forms of discriminant D, sorted by (a, b).
std::vector<QuadForm> enumerate_reduced(long D);

/// Dirichlet composition of two primitive forms of equal discriminant,
/// returned reduced.
QuadForm compose(const QuadForm& f, const QuadForm& g);

/// Order of the class of f.
unsigned long form_order(const QuadForm& f);

ClassGroupSummary group_structure(long D);

/// Reduced classes that represent the prime n, built from the square roots
/// b of D mod 4n as (n, b, (b^2 - D) / 4n). Empty when D is a nonresidue.
/// Requires gcd(n, 2D) = 1.
std::set<QuadForm> represented_by_class(const NatInt& n, long D);

}  // namespace gmforms
