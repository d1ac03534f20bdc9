#include "gmforms/repr_solver.hpp"

#include <cmath>
#include <cstdint>

namespace gmforms {

namespace {

std::uint64_t isqrt64(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

std::optional<Representation> cornacchia(const NatInt& n, unsigned long d) {
  if (d == 0) throw InvalidArgument("cornacchia: d must be positive");
  if (mpz_even_p(n.get_mpz_t())) throw InvalidArgument("cornacchia: n must be odd");
  if (n <= d) throw InvalidArgument("cornacchia: requires d < n");

  const BigInt minus_d = -BigInt(d);
  if (jacobi(minus_d, n) != 1) return std::nullopt;
  const auto root = sqrt_mod_prime(minus_d, n);
  if (!root) return std::nullopt;

  NatInt a = n;
  NatInt b = n - *root;  // sqrt_mod_prime gives the root <= (n-1)/2
  const NatInt limit = integer_sqrt(n).root;
  while (b > limit) {
    NatInt r = a % b;
    a = std::move(b);
    b = std::move(r);
  }

  const NatInt rest = n - b * b;
  if (!mpz_divisible_ui_p(rest.get_mpz_t(), d)) return std::nullopt;
  const auto y = integer_sqrt(rest / d);
  if (!y.exact) return std::nullopt;

  Representation rep{n, d, b, y.root};
  if (!rep.valid()) return std::nullopt;
  return rep;
}

std::optional<Representation> represent_bruteforce(const NatInt& n,
                                                   unsigned long d) {
  if (d == 0) throw InvalidArgument("represent_bruteforce: d must be positive");
  if (sgn(n) < 1) throw InvalidArgument("represent_bruteforce: n must be >= 1");
  if (n > NatInt(std::to_string(kBruteForceLimit))) {
    throw InvalidArgument("represent_bruteforce: n exceeds brute-force limit");
  }
  const std::uint64_t nn = n.get_ui();
  if (nn <= d) return std::nullopt;
  const std::uint64_t y_max = isqrt64((nn - 1) / d);
  for (std::uint64_t y = 1; y <= y_max; ++y) {
    const std::uint64_t rest = nn - d * y * y;
    const std::uint64_t x = isqrt64(rest);
    if (x > 0 && x * x == rest) {
      return Representation{n, d, NatInt(static_cast<unsigned long>(x)),
                            NatInt(static_cast<unsigned long>(y))};
    }
  }
  return std::nullopt;
}

std::optional<Representation> represent(const NatInt& n, unsigned long d) {
  if (d == 0) throw InvalidArgument("represent: d must be positive");
  if (n > d && mpz_odd_p(n.get_mpz_t()) && is_probable_prime(n)) {
    return cornacchia(n, d);
  }
  return represent_bruteforce(n, d);
}

bool representable(const NatInt& n, unsigned long d) {
  return represent(n, d).has_value();
}

}  // namespace gmforms
