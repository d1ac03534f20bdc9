#include <random>

#include <gtest/gtest.h>

#include "gmforms/gm_numbers.hpp"

using namespace gmforms;

TEST(Epsilon, Examples) {
  EXPECT_EQ(epsilon(7), 1);
  EXPECT_EQ(epsilon(5), -1);
  EXPECT_EQ(epsilon(47), 1);
  EXPECT_THROW(epsilon(4), InvalidArgument);
}

TEST(Epsilon, EqualsJacobiOfTwo) {
  for (unsigned long p : primes_up_to(5000)) {
    if (p == 2) continue;
    ASSERT_EQ(epsilon(p), jacobi(2, p)) << p;
  }
}

TEST(GmNorm, ReferenceRows) {
  EXPECT_EQ(gm_norm(7).value, 113);
  EXPECT_EQ(gm_norm(47).value, NatInt("140737471578113"));
  EXPECT_EQ(gm_norm(73).value, NatInt("9444732965601851473921"));
  EXPECT_EQ(gm_norm(113).value, NatInt("10384593717069655112945804582584321"));
  EXPECT_EQ(gm_norm(47).primality, Primality::ProvenSmall);
  EXPECT_EQ(gm_norm(73).primality, Primality::ProbablePrime);
  EXPECT_EQ(gm_norm(13).primality, Primality::Composite);
}

TEST(GmNorm, RejectsNonPrimeExponent) {
  EXPECT_THROW(gm_norm(4), InvalidArgument);
  EXPECT_THROW(gm_norm(1), InvalidArgument);
  EXPECT_THROW(gm_norm(2), InvalidArgument);
  EXPECT_THROW(gm_norm(9), InvalidArgument);
  EXPECT_THROW(gm_norm_oracle(15), InvalidArgument);
}

TEST(GmNormOracle, Examples) {
  // (1+i)^2 = 2i, (1+i)^3 = -2 + 2i, minus one gives -3 + 2i.
  EXPECT_EQ(pow(GaussianInt{1, 1}, 3), (GaussianInt{-2, 2}));
  EXPECT_EQ(gm_norm_oracle(3), 13);
  EXPECT_EQ(gm_norm_oracle(7), 113);
  EXPECT_EQ(gm_norm_oracle(113), NatInt("10384593717069655112945804582584321"));
}

TEST(GmNormOracle, MatchesClosedFormAndConjugate) {
  for (unsigned long p : primes_up_to(601)) {
    if (p == 2) continue;
    ASSERT_EQ(gm_norm_oracle(p), gm_value(p)) << p;
    const GaussianInt conj = pow(GaussianInt{1, -1}, p) - GaussianInt{1, 0};
    ASSERT_EQ(conj.norm(), gm_norm_oracle(p)) << p;
  }
}

TEST(GaussianInt, NormIsMultiplicative) {
  std::mt19937_64 rng(1);
  auto draw = [&] { return BigInt(static_cast<long>(rng() % 2000001) - 1000000); };
  for (int i = 0; i < 5000; ++i) {
    const GaussianInt z{draw(), draw()};
    const GaussianInt w{draw(), draw()};
    ASSERT_EQ((z * w).norm(), z.norm() * w.norm());
  }
}

TEST(Congruences, ReferenceExamples) {
  const auto c47 = predict_congruences(47);
  ASSERT_TRUE(c47.mod7.has_value());
  EXPECT_EQ(*c47.mod7, 4U);
  EXPECT_EQ(c47.actual_mod7, 4U);
  EXPECT_TRUE(c47.holds());

  const auto c73 = predict_congruences(73);
  EXPECT_EQ(c73.mod7, 1U);
  EXPECT_EQ(c73.actual_mod7, 1U);

  // G_5 = 41 = 6 (mod 7): the mod-7 rule does not apply when (2/p) = -1.
  const auto c5 = predict_congruences(5);
  EXPECT_EQ(gm_value(5), 41);
  EXPECT_EQ(c5.actual_mod7, 6U);
  EXPECT_FALSE(c5.mod7.has_value());
  EXPECT_TRUE(c5.holds());

  const auto c3 = predict_congruences(3);
  EXPECT_FALSE(c3.mod8.has_value());
  EXPECT_EQ(c3.actual_mod8, 5U);  // 13
}

TEST(Congruences, HoldOnAllPrimesUpTo601) {
  for (unsigned long p : primes_up_to(601)) {
    if (p == 2) continue;
    const auto c = predict_congruences(p);
    ASSERT_TRUE(c.holds()) << p;
    if (p > 3) ASSERT_EQ(c.actual_mod8, 1U) << p;
    if (p > 7 && epsilon(p) == 1) ASSERT_EQ(c.actual_mod32, 1U) << p;
  }
}

TEST(Congruences, UngatedMod7RuleFailsForSomeExponents) {
  std::vector<unsigned long> violators;
  for (unsigned long p : {5UL, 11UL, 13UL}) {
    const unsigned expect = p % 6 == 1 ? 1 : 4;
    if (predict_congruences(p).actual_mod7 != expect) violators.push_back(p);
  }
  EXPECT_EQ(violators, (std::vector<unsigned long>{5, 11, 13}));
}

namespace {

// Frozen from scan_exponents(3, 1200) and cross-checked against GMP's
// mpz_probab_prime_p in ScanAgreesWithGmpOracle below.
const std::vector<unsigned long> kExponentsTo1200 = {
    3,   5,   7,   11,  19,  29,  47,  73,  79,  113, 151,
    157, 163, 167, 239, 241, 283, 353, 367, 379, 457, 997};

std::vector<unsigned long> exponents_of(const std::vector<GmNorm>& v) {
  std::vector<unsigned long> out;
  for (const auto& g : v) out.push_back(g.p);
  return out;
}

}  // namespace

TEST(Scan, ContainsKnownExponents) {
  const auto e = exponents_of(scan_exponents(3, 120));
  for (unsigned long p : {7UL, 47UL, 73UL, 113UL, 5UL, 11UL, 19UL, 29UL, 79UL}) {
    EXPECT_NE(std::find(e.begin(), e.end(), p), e.end()) << p;
  }
  // Trial division on the two smallest.
  for (unsigned long n : {41UL, 2113UL}) {
    for (unsigned long f = 2; f * f <= n; ++f) ASSERT_NE(n % f, 0UL);
  }
}

TEST(Scan, InclusiveBounds) {
  EXPECT_TRUE(scan_exponents(48, 72).empty());
  EXPECT_EQ(exponents_of(scan_exponents(47, 73)), (std::vector<unsigned long>{47, 73}));
  EXPECT_TRUE(scan_exponents(100, 90).empty());
  EXPECT_THROW(scan_exponents(2, 10), InvalidArgument);
}

TEST(Scan, FrozenListTo1200) {
  EXPECT_EQ(exponents_of(scan_exponents(3, 1200)), kExponentsTo1200);
}

TEST(Scan, AgreesWithGmpOracle) {
  std::vector<unsigned long> oracle;
  for (unsigned long p : primes_up_to(1200)) {
    if (p == 2) continue;
    const NatInt g = gm_norm_oracle(p);
    if (mpz_probab_prime_p(g.get_mpz_t(), 40) != 0) oracle.push_back(p);
  }
  EXPECT_EQ(oracle, kExponentsTo1200);
}

TEST(Scan, DeterministicAcrossRunsAndWorkerCounts) {
  const auto a = scan_exponents(3, 600, 1);
  const auto b = scan_exponents(3, 600, 1);
  const auto c = scan_exponents(3, 600, 4);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
  for (const auto& g : a) {
    EXPECT_TRUE(is_prime_status(g.primality));
    EXPECT_EQ(g.epsilon, epsilon(g.p));
  }
}

TEST(Primality, StringRoundTrip) {
  for (auto p : {Primality::ProvenSmall, Primality::ProbablePrime, Primality::Composite,
                 Primality::Untested}) {
    EXPECT_EQ(primality_from_string(to_string(p)), p);
  }
  EXPECT_THROW(primality_from_string("prime"), InvalidArgument);
}
