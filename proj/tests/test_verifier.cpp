#include <gtest/gtest.h>

#include "gmforms/gm_numbers.hpp"
#include "gmforms/verifier.hpp"

using namespace gmforms;

TEST(AuditLemma, Examples) {
  EXPECT_TRUE(audit_lemma(1, 4, 113).all());

  const NatInt g47("140737471578113");
  const auto c = audit_lemma(5732351, 3925696, g47);
  EXPECT_TRUE(c.all());
  EXPECT_EQ(mod_ui(NatInt(5732351), 8), 7UL);
  EXPECT_EQ(mod_ui(NatInt(3925696), 8), 0UL);

  const auto neg = audit_lemma(3, 2, 37);
  EXPECT_FALSE(neg.x_pm1_mod8);
  EXPECT_TRUE(neg.x_odd);
  EXPECT_TRUE(neg.y_even);
  EXPECT_FALSE(neg.four_divides_y);

  EXPECT_THROW(audit_lemma(1, 4, 114), InvalidArgument);
}

TEST(ArtinClass, Examples) {
  EXPECT_EQ(artin_class_d7(5732351, 3925696), ArtinClass::Trivial);
  EXPECT_EQ(artin_class_d7(1, 4), ArtinClass::Rho);
  EXPECT_EQ(artin_class_d7(8, 3), ArtinClass::Trivial);
}

TEST(ArtinClass, MatchesRingHomomorphismImage) {
  // x + y sqrt(-7) = (x - y) + 2y omega maps to (x - y) - 4y = x - 5y = x + 3y.
  for (long x = 0; x <= 40; ++x) {
    for (long y = 0; y <= 40; ++y) {
      const long image = (((x - y) - 2 * (2 * y)) % 8 + 8) % 8;
      const bool trivial = image == 1 || image == 7;
      ASSERT_EQ(artin_class_d7(x, y) == ArtinClass::Trivial, trivial) << x << " " << y;
    }
  }
}

TEST(AuditTheoremD7, ReferenceRowsConfirmed) {
  const auto r47 = audit_theorem_d7(47);
  EXPECT_EQ(r47.verdict, Verdict::Confirmed);
  EXPECT_EQ(r47.x_mod8, 7U);
  EXPECT_EQ(r47.y_mod8, 0U);
  EXPECT_EQ(r47.artin, ArtinClass::Trivial);

  const auto r113 = audit_theorem_d7(113);
  EXPECT_EQ(r113.verdict, Verdict::Confirmed);
  ASSERT_TRUE(r113.representation.has_value());
  EXPECT_EQ(r113.representation->x, NatInt("79288509938147361"));
  EXPECT_EQ(r113.representation->y, NatInt("24195412519312600"));
}

TEST(AuditTheoremD7, HypothesisNotMet) {
  const auto r11 = audit_theorem_d7(11);
  EXPECT_EQ(r11.verdict, Verdict::HypothesisNotMet);
  EXPECT_FALSE(r11.flags.p_mod8_ok);
  EXPECT_EQ(jacobi(-7, 2113), -1);
  EXPECT_FALSE(r11.flags.legendre_minus_d_gp);
  EXPECT_FALSE(r11.representation.has_value());

  // G_13 = 8321 = 53 * 157.
  const auto r13 = audit_theorem_d7(13);
  EXPECT_FALSE(r13.flags.gp_probable_prime);
  EXPECT_EQ(r13.verdict, Verdict::HypothesisNotMet);
}

TEST(AuditTheoremD7, SevenIsOutOfRange) {
  const auto r7 = audit_theorem_d7(7);
  EXPECT_EQ(r7.verdict, Verdict::OutOfRange);
  ASSERT_TRUE(r7.representation.has_value());
  EXPECT_EQ(r7.representation->x, 1);
  EXPECT_EQ(r7.representation->y, 4);
  EXPECT_EQ(r7.artin, ArtinClass::Rho);
  EXPECT_THROW(audit_theorem_d7(9), InvalidArgument);
  EXPECT_THROW(audit_theorem_d7(2), InvalidArgument);
}

TEST(AuditTheoremD7, RefutedAt239) {
  // All hypotheses hold and the unique representation has y = 4 (mod 8).
  const auto r = audit_theorem_d7(239);
  EXPECT_TRUE(r.flags.p_mod8_ok);
  EXPECT_TRUE(r.flags.gp_probable_prime);
  EXPECT_TRUE(r.flags.legendre_minus_d_gp);
  ASSERT_TRUE(r.representation.has_value());
  EXPECT_TRUE(r.representation->valid());
  EXPECT_EQ(r.representation->x, NatInt("758203885276846997068698250434242089"));
  EXPECT_EQ(r.representation->y, NatInt("209949109731819807515469864630642916"));
  EXPECT_EQ(r.x_mod8, 1U);
  EXPECT_EQ(r.y_mod8, 4U);
  EXPECT_EQ(r.artin, ArtinClass::Rho);
  EXPECT_EQ(r.verdict, Verdict::Refuted);
  EXPECT_TRUE(audit_lemma(r.representation->x, r.representation->y, r.g_value).all());
}

TEST(AuditGeneralized, Examples) {
  EXPECT_EQ(audit_generalized(47, 7), audit_theorem_d7(47));

  EXPECT_EQ(jacobi(2, 5) * jacobi(2, 11), 1);
  const auto r55 = audit_generalized(47, 55);
  EXPECT_TRUE(r55.flags.legendre_2_d);
  EXPECT_FALSE(r55.flags.class_group_order4);
  EXPECT_EQ(r55.verdict, Verdict::HypothesisNotMet);

  EXPECT_THROW(audit_generalized(47, 9), InvalidArgument);
  EXPECT_THROW(audit_generalized(47, 8), InvalidArgument);
  EXPECT_THROW(audit_generalized(47, 175), InvalidArgument);  // 175 = 7 (mod 24), 25 | 175
}

TEST(AuditGeneralized, EveryPassingRecordIsDecided) {
  for (unsigned long d : {31UL, 79UL, 103UL, 127UL}) {
    for (const auto& g : scan_exponents(11, 600)) {
      const auto r = audit_generalized(g.p, d);
      const bool flags = r.flags.p_mod8_ok && r.flags.gp_probable_prime &&
                         r.flags.legendre_2_d && r.flags.legendre_minus_d_gp &&
                         r.flags.class_group_order4;
      if (!flags) {
        ASSERT_EQ(r.verdict, Verdict::HypothesisNotMet);
        continue;
      }
      if (r.representation) {
        ASSERT_TRUE(r.representation->valid());
        ASSERT_EQ(r.verdict, *r.y_mod8 == 0 && (*r.x_mod8 == 1 || *r.x_mod8 == 7)
                                 ? Verdict::Confirmed
                                 : Verdict::Refuted);
      } else {
        ASSERT_EQ(r.verdict, Verdict::NoRepresentation);
      }
    }
  }
}

TEST(AuditD2d, Examples) {
  const auto a = audit_d_2d(7, 7);
  EXPECT_FALSE(a.ramified);
  EXPECT_EQ(a.rep_d, true);
  EXPECT_EQ(a.rep_2d, false);
  EXPECT_EQ(a.equivalent, false);
  EXPECT_EQ(a.d_mod4, 3U);

  const auto b = audit_d_2d(47, 7);
  EXPECT_EQ(b.rep_d, true);
  EXPECT_EQ(b.rep_2d, true);
  EXPECT_EQ(b.equivalent, true);

  // (-7/G_11) = -1 rules out both forms.
  const auto c = audit_d_2d(11, 7);
  EXPECT_EQ(c.rep_d, false);
  EXPECT_EQ(c.rep_2d, false);
}

TEST(AuditD2d, RamifiedIsFlagged) {
  // G_5 = 41: gcd(41, 82) = 41.
  const auto r = audit_d_2d(5, 41);
  EXPECT_TRUE(r.ramified);
  EXPECT_FALSE(r.rep_d.has_value());
  EXPECT_FALSE(r.equivalent.has_value());
}

TEST(Mersenne, Examples) {
  const auto m7 = mersenne_crosscheck(7);
  EXPECT_EQ(m7.status, MersenneStatus::Checked);
  ASSERT_TRUE(m7.representation.has_value());
  EXPECT_EQ(m7.representation->x, 8);
  EXPECT_EQ(m7.representation->y, 3);
  EXPECT_EQ(m7.x_mod8, 0U);
  EXPECT_EQ(m7.y_mod8, 3U);
  EXPECT_TRUE(m7.consistent);

  const auto m13 = mersenne_crosscheck(13);
  ASSERT_TRUE(m13.representation.has_value());
  EXPECT_EQ(m13.x_mod8, 0U);
  const auto brute = represent_bruteforce(8191, 7);
  EXPECT_EQ(m13.representation, brute);

  const auto m11 = mersenne_crosscheck(11);
  EXPECT_EQ(m11.status, MersenneStatus::SkippedComposite);
  EXPECT_EQ(m11.m_value, 2047);

  EXPECT_THROW(mersenne_crosscheck(5), InvalidArgument);  // M_5 prime, 5 = 2 mod 3
  EXPECT_THROW(mersenne_crosscheck(9), InvalidArgument);
}

TEST(Mersenne, ControlPatternHoldsUpTo700) {
  for (unsigned long p : primes_up_to(700)) {
    if (p % 3 != 1) continue;
    const auto m = mersenne_crosscheck(p);
    if (m.status == MersenneStatus::SkippedComposite) continue;
    ASSERT_TRUE(m.consistent) << p;
  }
}

TEST(RunSuite, UpTo120) {
  const auto s = run_suite(120, {7});
  std::vector<unsigned long> confirmed;
  for (const auto& r : s.records) {
    if (r.verdict == Verdict::Confirmed) confirmed.push_back(r.p);
    if (r.p == 7) EXPECT_EQ(r.verdict, Verdict::OutOfRange);
  }
  EXPECT_EQ(confirmed, (std::vector<unsigned long>{47, 73, 79, 113}));
  EXPECT_EQ(s.counts.refuted, 0U);
  EXPECT_EQ(s.counts, tally(s.records));
  EXPECT_TRUE(unexpected_failures(s.records).empty());
}

TEST(RunSuite, UpTo600FindsRefutations) {
  const auto s = run_suite(600, {7});
  std::vector<unsigned long> refuted;
  for (const auto& r : s.records) {
    if (r.verdict == Verdict::Refuted) refuted.push_back(r.p);
  }
  EXPECT_EQ(refuted, (std::vector<unsigned long>{239, 353, 457}));
  EXPECT_EQ(s.counts.confirmed, 8U);
}

TEST(RunSuite, ConfirmedRecordsAgreeThreeWays) {
  const auto s = run_suite(600, {7, 31, 79, 103});
  for (const auto& r : s.records) {
    if (r.verdict != Verdict::Confirmed) continue;
    ASSERT_TRUE(r.representation->valid());
    ASSERT_EQ(r.representation->n, r.g_value);
    ASSERT_TRUE(*r.x_mod8 == 1 || *r.x_mod8 == 7);
    ASSERT_EQ(*r.y_mod8, 0U);
    if (r.d == 7) ASSERT_EQ(r.artin, ArtinClass::Trivial);
  }
  // Artin class tracks y mod 8 on every d = 7 representation.
  for (const auto& r : s.records) {
    if (r.d != 7 || !r.representation || r.p <= 7) continue;
    ASSERT_EQ(r.artin == ArtinClass::Trivial, *r.y_mod8 == 0) << r.p;
  }
}

TEST(RunSuite, DeterministicAndSortedAcrossWorkerCounts) {
  const std::vector<unsigned long> ds{127, 7, 31};
  const auto a = run_suite(400, ds, 1);
  const auto b = run_suite(400, ds, 1);
  const auto c = run_suite(400, ds, 3);
  EXPECT_EQ(a.records, b.records);
  EXPECT_EQ(a.records, c.records);
  for (std::size_t i = 1; i < a.records.size(); ++i) {
    const auto& x = a.records[i - 1];
    const auto& y = a.records[i];
    ASSERT_TRUE(x.p < y.p || (x.p == y.p && x.d < y.d));
  }
}

TEST(RunSuite, BadArguments) {
  EXPECT_THROW(run_suite(5, {7}), InvalidArgument);
  EXPECT_THROW(run_suite(100, {9}), InvalidArgument);
  EXPECT_THROW(run_suite(100, {}), InvalidArgument);
}

TEST(Verdict, StringRoundTrip) {
  for (auto v : {Verdict::Confirmed, Verdict::HypothesisNotMet, Verdict::Refuted,
                 Verdict::NoRepresentation, Verdict::OutOfRange}) {
    EXPECT_EQ(verdict_from_string(to_string(v)), v);
  }
  EXPECT_EQ(to_string(Verdict::Refuted), "REFUTED");
}
