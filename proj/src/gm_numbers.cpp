#include "gmforms/gm_numbers.hpp"

#include <algorithm>
#include <future>
#include <string>

namespace gmforms {

GaussianInt pow(GaussianInt z, unsigned long e) {
  GaussianInt acc{1, 0};
  while (e != 0) {
    if (e & 1UL) acc = acc * z;
    e >>= 1;
    if (e != 0) z = z * z;
  }
  return acc;
}

std::string_view to_string(Primality p) {
  switch (p) {
    case Primality::ProvenSmall: return "proven-small";
    case Primality::ProbablePrime: return "probable-prime";
    case Primality::Composite: return "composite";
    case Primality::Untested: return "untested";
  }
  return "untested";
}

Primality primality_from_string(std::string_view s) {
  for (auto p : {Primality::ProvenSmall, Primality::ProbablePrime,
                 Primality::Composite, Primality::Untested}) {
    if (to_string(p) == s) return p;
  }
  throw InvalidArgument("unknown primality status: " + std::string(s));
}

Primality classify_primality(const NatInt& n) {
  if (!is_probable_prime(n)) return Primality::Composite;
  return primality_is_deterministic(n) ? Primality::ProvenSmall
                                       : Primality::ProbablePrime;
}

void require_odd_prime(unsigned long p) {
  if (p < 3 || p % 2 == 0 || !is_probable_prime(NatInt(p))) {
    throw InvalidArgument("exponent must be an odd prime, got " +
                          std::to_string(p));
  }
}

int epsilon(unsigned long p) {
  if (p % 2 == 0) throw InvalidArgument("epsilon: p must be odd");
  const unsigned long r = p % 8;
  return (r == 1 || r == 7) ? 1 : -1;
}

NatInt gm_value(unsigned long p) {
  require_odd_prime(p);
  NatInt high = NatInt(1) << p;
  NatInt mid = NatInt(1) << ((p + 1) / 2);
  return epsilon(p) > 0 ? NatInt(high - mid + 1) : NatInt(high + mid + 1);
}

GmNorm gm_norm(unsigned long p) {
  GmNorm out;
  out.value = gm_value(p);
  out.p = p;
  out.epsilon = epsilon(p);
  out.primality = classify_primality(out.value);
  return out;
}

NatInt gm_norm_oracle(unsigned long p) {
  require_odd_prime(p);
  const GaussianInt mu = pow(GaussianInt{1, 1}, p) - GaussianInt{1, 0};
  return mu.norm();
}

bool CongruencePrediction::holds() const {
  return (!mod8 || *mod8 == actual_mod8) &&
         (!mod16 || *mod16 == actual_mod16) &&
         (!mod32 || *mod32 == actual_mod32) && (!mod7 || *mod7 == actual_mod7);
}

CongruencePrediction predict_congruences(unsigned long p) {
  const NatInt g = gm_value(p);
  CongruencePrediction out;
  out.p = p;
  out.epsilon = epsilon(p);
  out.actual_mod8 = static_cast<unsigned>(mod_ui(g, 8));
  out.actual_mod16 = static_cast<unsigned>(mod_ui(g, 16));
  out.actual_mod32 = static_cast<unsigned>(mod_ui(g, 32));
  out.actual_mod7 = static_cast<unsigned>(mod_ui(g, 7));
  if (p > 3) out.mod8 = 1;
  if (out.epsilon > 0) out.mod16 = 1;
  if (p > 7) out.mod32 = 1;
  if (out.epsilon > 0) {
    if (p % 6 == 1) out.mod7 = 1;
    if (p % 6 == 5) out.mod7 = 4;
  }
  return out;
}

std::vector<GmNorm> scan_exponents(unsigned long p_min, unsigned long p_max,
                                   unsigned workers) {
  if (p_min < 3) throw InvalidArgument("scan: p_min must be >= 3");
  if (p_min > p_max) return {};

  std::vector<unsigned long> exponents;
  for (unsigned long p : primes_up_to(p_max)) {
    if (p >= p_min && p >= 3) exponents.push_back(p);
  }

  const unsigned n_workers = std::max(1U, workers);
  std::vector<std::optional<GmNorm>> slots(exponents.size());
  auto work = [&](std::size_t begin) {
    for (std::size_t i = begin; i < exponents.size(); i += n_workers) {
      GmNorm g = gm_norm(exponents[i]);
      if (is_prime_status(g.primality)) slots[i] = std::move(g);
    }
  };
  if (n_workers == 1) {
    work(0);
  } else {
    std::vector<std::future<void>> jobs;
    for (unsigned w = 0; w < n_workers; ++w) {
      jobs.push_back(std::async(std::launch::async, work, w));
    }
    for (auto& j : jobs) j.get();
  }

  std::vector<GmNorm> out;
  for (auto& s : slots) {
    if (s) out.push_back(std::move(*s));
  }
  return out;
}

}  // namespace gmforms
