#include "gmforms/quadclass.hpp"

#include <algorithm>
#include <map>

namespace gmforms {

namespace {

BigInt abs_big(const BigInt& v) { return sgn(v) < 0 ? BigInt(-v) : v; }

// b into (-a, a], c recomputed from the discriminant.
void normalize(BigInt& a, BigInt& b, BigInt& c, const BigInt& D) {
  const BigInt two_a = 2 * a;
  BigInt k;
  // k = floor((a - b) / 2a)
  mpz_fdiv_q(k.get_mpz_t(), BigInt(a - b).get_mpz_t(), two_a.get_mpz_t());
  b += two_a * k;
  c = (b * b - D) / (4 * a);
}

struct GcdExt {
  BigInt g, s, t;  // s*x + t*y = g
};

GcdExt gcdext(const BigInt& x, const BigInt& y) {
  GcdExt r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), x.get_mpz_t(),
             y.get_mpz_t());
  return r;
}

void require_form(const QuadForm& f, const char* who) {
  if (sgn(f.a) <= 0) throw InvalidArgument(std::string(who) + ": a must be positive");
  if (sgn(f.discriminant()) >= 0) {
    throw InvalidArgument(std::string(who) + ": discriminant must be negative");
  }
  if (!f.is_primitive()) throw InvalidArgument(std::string(who) + ": form not primitive");
}

}  // namespace

bool QuadForm::is_primitive() const {
  return gcd(gcd(abs_big(a), abs_big(b)), abs_big(c)) == 1;
}

bool QuadForm::is_reduced() const {
  if (abs_big(b) > a || a > c) return false;
  if ((abs_big(b) == a || a == c) && sgn(b) < 0) return false;
  return true;
}

std::string QuadForm::to_string() const {
  return "(" + a.get_str() + ", " + b.get_str() + ", " + c.get_str() + ")";
}

std::strong_ordering operator<=>(const QuadForm& l, const QuadForm& r) {
  if (auto o = cmp(l.a, r.a); o != 0) return o < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  if (auto o = cmp(l.b, r.b); o != 0) return o < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  if (auto o = cmp(l.c, r.c); o != 0) return o < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

void require_discriminant(long D) {
  const long r = ((D % 4) + 4) % 4;
  if (D >= 0 || (r != 0 && r != 1)) {
    throw InvalidArgument("discriminant must be negative and 0 or 1 mod 4, got " +
                          std::to_string(D));
  }
}

QuadForm principal_form(long D) {
  require_discriminant(D);
  const long r = ((D % 4) + 4) % 4;
  if (r == 0) return {1, 0, BigInt(-D / 4)};
  return {1, 1, BigInt((1 - D) / 4)};
}

QuadForm reduce(const QuadForm& f) {
  require_form(f, "reduce");
  const BigInt D = f.discriminant();
  BigInt a = f.a, b = f.b, c = f.c;
  normalize(a, b, c, D);
  while (a > c) {
    std::swap(a, c);
    b = -b;
    normalize(a, b, c, D);
  }
  if (a == c && sgn(b) < 0) b = -b;
  return {a, b, c};
}

std::vector<QuadForm> enumerate_reduced(long D) {
  require_discriminant(D);
  const long n = -D;
  std::vector<QuadForm> out;
  for (long a = 1; 3 * a * a <= n; ++a) {
    for (long b = -a + 1; b <= a; ++b) {
      if (((b - D) % 2) != 0) continue;
      const long num = b * b - D;
      if (num % (4 * a) != 0) continue;
      const long c = num / (4 * a);
      if (c < a) continue;
      if (a == c && b < 0) continue;
      QuadForm f{a, b, c};
      if (!f.is_primitive()) continue;
      out.push_back(std::move(f));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

QuadForm compose(const QuadForm& f_in, const QuadForm& g_in) {
  require_form(f_in, "compose");
  require_form(g_in, "compose");
  if (f_in.discriminant() != g_in.discriminant()) {
    throw InvalidArgument("compose: discriminants differ");
  }
  const QuadForm* f = &f_in;
  const QuadForm* g = &g_in;
  if (f->a > g->a) std::swap(f, g);

  const BigInt& a1 = f->a;
  const BigInt& a2 = g->a;
  const BigInt& b2 = g->b;
  const BigInt& c2 = g->c;
  const BigInt s = (f->b + b2) / 2;
  const BigInt n = b2 - s;

  BigInt y1, d;
  if (mpz_divisible_p(a2.get_mpz_t(), a1.get_mpz_t())) {
    y1 = 0;
    d = a1;
  } else {
    const GcdExt e = gcdext(a2, a1);  // u*a2 + v*a1 = d
    d = e.g;
    y1 = e.s;
  }

  BigInt x2, y2, d1;
  if (mpz_divisible_p(s.get_mpz_t(), d.get_mpz_t())) {
    y2 = -1;
    x2 = 0;
    d1 = d;
  } else {
    const GcdExt e = gcdext(s, d);  // x2*s + y2*d = d1
    d1 = e.g;
    x2 = e.s;
    y2 = -e.t;
  }

  const BigInt v1 = a1 / d1;
  const BigInt v2 = a2 / d1;
  const BigInt r = mod_floor(y1 * y2 * n - x2 * c2, v1);
  const BigInt b3 = b2 + 2 * v2 * r;
  const BigInt a3 = v1 * v2;
  const BigInt c3 = (c2 * d1 + r * (b2 + v2 * r)) / v1;
  return reduce({a3, b3, c3});
}

unsigned long form_order(const QuadForm& f) {
  const QuadForm start = reduce(f);
  QuadForm acc = start;
  unsigned long k = 1;
  while (!(acc.a == 1)) {
    acc = compose(acc, start);
    ++k;
  }
  return k;
}

ClassGroupSummary group_structure(long D) {
  ClassGroupSummary out;
  out.discriminant = D;
  out.forms = enumerate_reduced(D);
  out.h = out.forms.size();

  std::vector<unsigned long> orders;
  orders.reserve(out.forms.size());
  for (const auto& f : out.forms) {
    orders.push_back(form_order(f));
    if (orders.back() % 4 == 0) out.has_order_4_element = true;
  }

  // For each prime l | h, |G[l^k]| / |G[l^(k-1)]| = l^(number of cyclic
  // l-factors of order >= l^k). The element orders determine the group.
  auto count_dividing = [&](unsigned long m) {
    return static_cast<unsigned long>(std::count_if(
        orders.begin(), orders.end(), [m](unsigned long o) { return m % o == 0; }));
  };
  std::map<unsigned long, std::vector<unsigned long>> exponents;  // l -> e_i desc
  unsigned long rest = out.h;
  for (unsigned long l = 2; rest > 1; ++l) {
    if (rest % l != 0) continue;
    while (rest % l == 0) rest /= l;
    std::vector<unsigned long> at_least;  // at_least[k-1] = #factors >= l^k
    unsigned long prev = 1;
    for (unsigned long pk = l;; pk *= l) {
      const unsigned long cnt = count_dividing(pk);
      unsigned long ratio = cnt / prev, rank = 0;
      while (ratio > 1) {
        ratio /= l;
        ++rank;
      }
      if (rank == 0) break;
      at_least.push_back(rank);
      prev = cnt;
    }
    auto& es = exponents[l];
    const unsigned long factors = at_least.empty() ? 0 : at_least.front();
    for (unsigned long i = 0; i < factors; ++i) {
      unsigned long e = 0;
      while (e < at_least.size() && at_least[e] > i) ++e;
      es.push_back(e);
    }
  }

  std::size_t width = 0;
  for (const auto& [l, es] : exponents) width = std::max(width, es.size());
  out.cyclic_orders.assign(std::max<std::size_t>(width, 1), 1);
  for (const auto& [l, es] : exponents) {
    // es is descending; the largest exponent lands in the last factor.
    for (std::size_t i = 0; i < es.size(); ++i) {
      auto& slot = out.cyclic_orders[out.cyclic_orders.size() - 1 - i];
      for (unsigned long k = 0; k < es[i]; ++k) slot *= l;
    }
  }
  return out;
}

std::set<QuadForm> represented_by_class(const NatInt& n, long D) {
  require_discriminant(D);
  if (gcd(n, NatInt(2 * -D)) != 1) {
    throw InvalidArgument("represented_by_class: gcd(n, 2D) must be 1");
  }
  std::set<QuadForm> out;
  const auto root = sqrt_mod_prime(BigInt(D), n);
  if (!root) return out;
  const bool d_odd = (D % 2) != 0;
  for (BigInt b : {BigInt(*root), BigInt(n - *root)}) {
    if (mpz_odd_p(b.get_mpz_t()) != d_odd) b += n;
    const BigInt c = (b * b - D) / (4 * n);
    out.insert(reduce({n, b, c}));
  }
  return out;
}

}  // namespace gmforms
