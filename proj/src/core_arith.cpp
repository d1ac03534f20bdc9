#include "gmforms/core_arith.hpp"

#include <array>
#include <limits>

namespace gmforms {

namespace {

constexpr std::array<unsigned long, 25> kSmallPrimes = {
    2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
    43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

// (n + v) / 2 mod n for odd n, with v already reduced.
NatInt half_mod(NatInt v, const NatInt& n) {
  if (mpz_odd_p(v.get_mpz_t())) v += n;
  mpz_fdiv_q_2exp(v.get_mpz_t(), v.get_mpz_t(), 1);
  return v;
}

}  // namespace

BigInt parse_integer(const std::string& text) {
  if (text.empty()) throw InvalidArgument("empty integer literal");
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) throw InvalidArgument("bad integer literal: " + text);
  for (std::size_t k = i; k < text.size(); ++k) {
    if (text[k] < '0' || text[k] > '9') {
      throw InvalidArgument("bad integer literal: " + text);
    }
  }
  BigInt out;
  out.set_str(text[0] == '+' ? text.substr(1) : text, 10);
  return out;
}

BigInt mod_floor(const BigInt& a, const BigInt& m) {
  if (sgn(m) <= 0) throw InvalidArgument("modulus must be positive");
  BigInt r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

unsigned long mod_ui(const BigInt& a, unsigned long m) {
  if (m == 0) throw InvalidArgument("modulus must be positive");
  return mpz_fdiv_ui(a.get_mpz_t(), m);
}

NatInt mod_pow(const BigInt& base, const NatInt& exp, const NatInt& modulus) {
  if (sgn(modulus) <= 0) throw InvalidArgument("mod_pow: modulus must be >= 1");
  if (sgn(exp) < 0) throw InvalidArgument("mod_pow: negative exponent");
  NatInt r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(),
           modulus.get_mpz_t());
  return r;
}

int jacobi(const BigInt& a_in, const NatInt& n_in) {
  if (sgn(n_in) <= 0 || mpz_even_p(n_in.get_mpz_t())) {
    throw InvalidArgument("jacobi: modulus must be odd and positive");
  }
  NatInt n = n_in;
  NatInt a = mod_floor(a_in, n);
  int result = 1;
  while (sgn(a) != 0) {
    // Pull out factors of two: (2/n) = -1 iff n = 3, 5 (mod 8).
    const auto twos = mpz_scan1(a.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(a.get_mpz_t(), a.get_mpz_t(), twos);
    const unsigned long n8 = mod_ui(n, 8);
    if ((twos & 1U) && (n8 == 3 || n8 == 5)) result = -result;
    // Reciprocity: flip when both are 3 mod 4.
    if (mod_ui(a, 4) == 3 && mod_ui(n, 4) == 3) result = -result;
    std::swap(a, n);
    a = a % n;
  }
  return n == 1 ? result : 0;
}

std::optional<NatInt> sqrt_mod_prime(const BigInt& a_in, const NatInt& p) {
  if (sgn(p) <= 0 || mpz_even_p(p.get_mpz_t())) {
    throw InvalidArgument("sqrt_mod_prime: modulus must be an odd prime");
  }
  const NatInt a = mod_floor(a_in, p);
  if (sgn(a) == 0) return NatInt(0);
  if (p == 1) return std::nullopt;
  if (jacobi(a, p) != 1) return std::nullopt;

  NatInt r;
  if (mod_ui(p, 4) == 3) {
    r = mod_pow(a, (p + 1) / 4, p);
  } else {
    // p - 1 = q * 2^s with q odd.
    NatInt q = p - 1;
    const auto s = mpz_scan1(q.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(q.get_mpz_t(), q.get_mpz_t(), s);

    NatInt z = 2;
    for (;; ++z) {
      const int sym = jacobi(z, p);
      if (sym == -1) break;
      if (sym == 0 || z > 10000) return std::nullopt;  // p is not prime
    }

    auto m = s;
    NatInt c = mod_pow(z, q, p);
    NatInt t = mod_pow(a, q, p);
    r = mod_pow(a, (q + 1) / 2, p);
    while (t != 1) {
      // Least i with t^(2^i) = 1.
      unsigned long i = 0;
      NatInt t2 = t;
      while (t2 != 1) {
        t2 = t2 * t2 % p;
        if (++i == m) return std::nullopt;  // p is not prime
      }
      NatInt b = c;
      for (unsigned long k = 0; k + i + 1 < m; ++k) b = b * b % p;
      m = i;
      c = b * b % p;
      t = t * c % p;
      r = r * b % p;
    }
  }
  if (r * r % p != a) return std::nullopt;
  if (r > (p - 1) / 2) r = p - r;
  return r;
}

IntegerSqrt integer_sqrt(const NatInt& n) {
  if (sgn(n) < 0) throw InvalidArgument("integer_sqrt: negative argument");
  IntegerSqrt out;
  NatInt rem;
  mpz_sqrtrem(out.root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
  out.exact = sgn(rem) == 0;
  return out;
}

NatInt gcd(const NatInt& a, const NatInt& b) {
  NatInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

namespace detail {

bool strong_probable_prime(const NatInt& n, const NatInt& base) {
  NatInt d = n - 1;
  const auto s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  NatInt x = mod_pow(base, d, n);
  const NatInt minus_one = n - 1;
  if (x == 1 || x == minus_one) return true;
  for (unsigned long r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == minus_one) return true;
    if (x == 1) return false;
  }
  return false;
}

bool strong_lucas_probable_prime(const NatInt& n) {
  // Selfridge method A: first D in 5, -7, 9, -11, ... with (D/n) = -1.
  long dd = 5;
  for (int tries = 0;; ++tries) {
    const int sym = jacobi(BigInt(dd), n);
    if (sym == -1) break;
    if (sym == 0 && n != (dd < 0 ? -dd : dd)) return false;
    if (tries == 20 && integer_sqrt(n).exact) return false;
    dd = dd > 0 ? -(dd + 2) : -dd + 2;
  }
  const BigInt D = dd;
  const BigInt Q = BigInt(1 - dd) / 4;  // P = 1

  // n + 1 = d * 2^s, d odd.
  NatInt d = n + 1;
  const auto s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  NatInt u = 1;
  NatInt v = 1;
  NatInt qk = mod_floor(Q, n);
  const NatInt q_mod = qk;
  const auto bits = mpz_sizeinbase(d.get_mpz_t(), 2);
  for (auto i = static_cast<long>(bits) - 2; i >= 0; --i) {
    u = u * v % n;
    v = mod_floor(v * v - 2 * qk, n);
    qk = qk * qk % n;
    if (mpz_tstbit(d.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) {
      const NatInt u_next = half_mod(mod_floor(u + v, n), n);
      v = half_mod(mod_floor(D * u + v, n), n);
      u = u_next;
      qk = qk * q_mod % n;
    }
  }
  if (sgn(u) == 0 || sgn(v) == 0) return true;
  for (unsigned long r = 1; r < s; ++r) {
    v = mod_floor(v * v - 2 * qk, n);
    if (sgn(v) == 0) return true;
    qk = qk * qk % n;
  }
  return false;
}

}  // namespace detail

bool is_probable_prime(const NatInt& n) {
  if (n < 2) return false;
  for (const unsigned long sp : kSmallPrimes) {
    if (n == sp) return true;
    if (mod_ui(n, sp) == 0) return false;
  }
  if (n < 97 * 97) return true;
  if (!detail::strong_probable_prime(n, 2)) return false;
  return detail::strong_lucas_probable_prime(n);
}

bool primality_is_deterministic(const NatInt& n) {
  static const NatInt kLimit = NatInt(1) << 64;
  return n < kLimit;
}

std::vector<unsigned long> primes_up_to(unsigned long limit) {
  std::vector<unsigned long> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (unsigned long i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (unsigned long j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

bool is_square_free(unsigned long n) {
  if (n == 0) return false;
  for (unsigned long f = 2; f * f <= n; ++f) {
    if (n % (f * f) == 0) return false;
  }
  return true;
}

}  // namespace gmforms
