#include "gmforms/verifier.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <mutex>
#include <string>

#include "gmforms/gm_numbers.hpp"
#include "gmforms/quadclass.hpp"

namespace gmforms {

namespace {

bool order4_in_class_group(unsigned long d) {
  static std::mutex mu;
  static std::map<unsigned long, bool> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(d); it != cache.end()) return it->second;
  }
  const bool v = group_structure(-8 * static_cast<long>(d)).has_order_4_element;
  std::lock_guard lock(mu);
  cache[d] = v;
  return v;
}

HypothesisFlags compute_flags(unsigned long p, unsigned long d, const NatInt& g,
                              Primality primality) {
  HypothesisFlags f;
  f.p_mod8_ok = epsilon(p) == 1;
  f.gp_probable_prime = is_prime_status(primality);
  f.legendre_2_d = (d % 2 == 1) && jacobi(2, NatInt(d)) == 1;
  f.legendre_minus_d_gp = jacobi(-BigInt(d), g) == 1;
  f.class_group_order4 = order4_in_class_group(d);
  return f;
}

// `generalized` adds the (2/d), (-d/G_p) and class-group flags to the gate.
VerificationRecord audit(unsigned long p, unsigned long d, bool generalized) {
  const GmNorm gm = gm_norm(p);
  VerificationRecord rec;
  rec.p = p;
  rec.d = d;
  rec.g_value = gm.value;
  rec.flags = compute_flags(p, d, gm.value, gm.primality);

  if (rec.flags.gp_probable_prime && gm.value > d) {
    rec.representation = cornacchia(gm.value, d);
  }
  if (rec.representation) {
    rec.x_mod8 = static_cast<unsigned>(mod_ui(rec.representation->x, 8));
    rec.y_mod8 = static_cast<unsigned>(mod_ui(rec.representation->y, 8));
    if (d == 7) rec.artin = artin_class_d7(rec.representation->x, rec.representation->y);
  }

  bool hypotheses = rec.flags.p_mod8_ok && rec.flags.gp_probable_prime;
  if (generalized) {
    hypotheses = hypotheses && rec.flags.legendre_2_d &&
                 rec.flags.legendre_minus_d_gp && rec.flags.class_group_order4;
  }

  if (p <= 7) {
    rec.verdict = Verdict::OutOfRange;
  } else if (!hypotheses) {
    rec.verdict = Verdict::HypothesisNotMet;
  } else if (!rec.representation) {
    rec.verdict = Verdict::NoRepresentation;
  } else {
    const bool x_ok = *rec.x_mod8 == 1 || *rec.x_mod8 == 7;
    rec.verdict = (x_ok && *rec.y_mod8 == 0) ? Verdict::Confirmed : Verdict::Refuted;
  }
  return rec;
}

}  // namespace

LemmaChecks audit_lemma(const NatInt& x, const NatInt& y, const NatInt& g) {
  if (x * x + 7 * y * y != g) {
    throw InvalidArgument("audit_lemma: x^2 + 7y^2 != g");
  }
  LemmaChecks c;
  c.x_odd = mpz_odd_p(x.get_mpz_t()) != 0;
  c.y_even = mpz_even_p(y.get_mpz_t()) != 0;
  c.four_divides_y = mod_ui(y, 4) == 0;
  const unsigned long xm = mod_ui(x, 8);
  c.x_pm1_mod8 = xm == 1 || xm == 7;
  return c;
}

std::string_view to_string(ArtinClass a) {
  return a == ArtinClass::Trivial ? "trivial" : "rho";
}

ArtinClass artin_class_from_string(std::string_view s) {
  if (s == "trivial") return ArtinClass::Trivial;
  if (s == "rho") return ArtinClass::Rho;
  throw InvalidArgument("unknown Artin class: " + std::string(s));
}

ArtinClass artin_class_d7(const NatInt& x, const NatInt& y) {
  const unsigned long r = mod_ui(x + 3 * y, 8);
  return (r == 1 || r == 7) ? ArtinClass::Trivial : ArtinClass::Rho;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Confirmed: return "confirmed";
    case Verdict::HypothesisNotMet: return "hypothesis-not-met";
    case Verdict::Refuted: return "REFUTED";
    case Verdict::NoRepresentation: return "no-representation";
    case Verdict::OutOfRange: return "out-of-range";
  }
  return "hypothesis-not-met";
}

Verdict verdict_from_string(std::string_view s) {
  for (auto v : {Verdict::Confirmed, Verdict::HypothesisNotMet, Verdict::Refuted,
                 Verdict::NoRepresentation, Verdict::OutOfRange}) {
    if (to_string(v) == s) return v;
  }
  throw InvalidArgument("unknown verdict: " + std::string(s));
}

VerificationRecord audit_theorem_d7(unsigned long p) {
  require_odd_prime(p);
  return audit(p, 7, false);
}

void require_generalized_d(unsigned long d) {
  if (d % 24 != 7 || !is_square_free(d)) {
    throw InvalidArgument("d must be square-free and 7 mod 24, got " +
                          std::to_string(d));
  }
}

VerificationRecord audit_generalized(unsigned long p, unsigned long d) {
  require_generalized_d(d);
  if (d == 7) return audit_theorem_d7(p);
  require_odd_prime(p);
  return audit(p, d, true);
}

D2dRecord audit_d_2d(unsigned long p, unsigned long d) {
  if (d == 0) throw InvalidArgument("audit_d_2d: d must be positive");
  D2dRecord rec;
  rec.p = p;
  rec.d = d;
  rec.g_value = gm_value(p);
  rec.d_mod4 = static_cast<unsigned>(d % 4);
  rec.ramified = gcd(rec.g_value, NatInt(2 * d)) != 1;
  if (rec.ramified) return rec;
  rec.rep_d = representable(rec.g_value, d);
  rec.rep_2d = representable(rec.g_value, 2 * d);
  rec.equivalent = *rec.rep_d == *rec.rep_2d;
  return rec;
}

MersenneRecord mersenne_crosscheck(unsigned long p) {
  if (p < 2 || !is_probable_prime(NatInt(p))) {
    throw InvalidArgument("mersenne_crosscheck: p must be prime");
  }
  MersenneRecord rec;
  rec.p = p;
  rec.m_value = (NatInt(1) << p) - 1;
  if (!is_probable_prime(rec.m_value)) {
    rec.status = MersenneStatus::SkippedComposite;
    return rec;
  }
  if (p % 3 != 1) {
    throw InvalidArgument("mersenne_crosscheck: p must be 1 mod 3");
  }
  rec.status = MersenneStatus::Checked;
  rec.representation = represent(rec.m_value, 7);
  if (rec.representation) {
    rec.x_mod8 = static_cast<unsigned>(mod_ui(rec.representation->x, 8));
    rec.y_mod8 = static_cast<unsigned>(mod_ui(rec.representation->y, 8));
    rec.consistent = *rec.x_mod8 == 0 && (*rec.y_mod8 == 3 || *rec.y_mod8 == 5);
  }
  return rec;
}

SuiteCounts tally(const std::vector<VerificationRecord>& records) {
  SuiteCounts c;
  for (const auto& r : records) {
    switch (r.verdict) {
      case Verdict::Confirmed: ++c.confirmed; break;
      case Verdict::HypothesisNotMet: ++c.hypothesis_not_met; break;
      case Verdict::Refuted: ++c.refuted; break;
      case Verdict::NoRepresentation: ++c.no_representation; break;
      case Verdict::OutOfRange: ++c.out_of_range; break;
    }
  }
  return c;
}

SuiteReport run_suite(unsigned long p_max, const std::vector<unsigned long>& d_list,
                      unsigned workers) {
  if (p_max < 7) throw InvalidArgument("run_suite: p_max must be >= 7");
  if (d_list.empty()) throw InvalidArgument("run_suite: empty d list");
  for (unsigned long d : d_list) require_generalized_d(d);

  const auto scanned = scan_exponents(3, p_max, workers);
  std::vector<std::pair<unsigned long, unsigned long>> jobs;
  for (const auto& g : scanned) {
    for (unsigned long d : d_list) jobs.emplace_back(g.p, d);
  }
  std::sort(jobs.begin(), jobs.end());
  jobs.erase(std::unique(jobs.begin(), jobs.end()), jobs.end());

  SuiteReport report;
  report.records.resize(jobs.size());
  const unsigned n_workers = std::max(1U, workers);
  auto work = [&](std::size_t begin) {
    for (std::size_t i = begin; i < jobs.size(); i += n_workers) {
      report.records[i] = audit_generalized(jobs[i].first, jobs[i].second);
    }
  };
  if (n_workers == 1) {
    work(0);
  } else {
    std::vector<std::future<void>> futures;
    for (unsigned w = 0; w < n_workers; ++w) {
      futures.push_back(std::async(std::launch::async, work, w));
    }
    for (auto& f : futures) f.get();
  }
  report.counts = tally(report.records);
  return report;
}

std::vector<VerificationRecord> unexpected_failures(
    const std::vector<VerificationRecord>& records) {
  std::vector<VerificationRecord> out;
  for (const auto& r : records) {
    if (r.d != 7 || r.p <= 7) continue;
    if (!(r.flags.p_mod8_ok && r.flags.gp_probable_prime)) continue;
    if (r.verdict == Verdict::NoRepresentation) out.push_back(r);
  }
  return out;
}

}  // namespace gmforms
