#include "gmforms/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gmforms/report.hpp"

namespace gmforms::cli {

namespace {

struct Options {
  unsigned long p_min = 3;
  std::optional<unsigned long> p_max;
  std::optional<unsigned long> p;
  std::vector<unsigned long> d_list;
  std::optional<long> discriminant;
  bool generalized = false;
  bool strict = false;
  std::string emit = "table";
  std::optional<std::string> out_path;
  std::optional<unsigned> workers;
  std::optional<std::string> config_path;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string residue_str(const std::optional<unsigned>& r) {
  return r ? std::to_string(*r) : "-";
}

std::string flag_str(bool b) { return b ? "yes" : "no"; }

void write_report(const Options& opt, const ReportEnvelope& env,
                  const std::function<void(std::ostream&)>& table, std::ostream& out) {
  std::ofstream file;
  std::ostream* os = &out;
  if (opt.out_path) {
    file.open(*opt.out_path);
    if (!file) throw UsageError("cannot open output file " + *opt.out_path);
    os = &file;
  }
  if (opt.emit == "json") {
    *os << Json(env).dump(2) << '\n';
  } else {
    table(*os);
  }
}

ReportEnvelope make_envelope(std::string command, Json parameters) {
  ReportEnvelope env;
  env.command = std::move(command);
  env.parameters = std::move(parameters);
  env.generated_at = utc_timestamp();
  return env;
}

void check_exponent(unsigned long p, const Config& cfg) {
  if (p > cfg.p_cap) {
    throw UsageError("exponent " + std::to_string(p) + " exceeds cap " +
                     std::to_string(cfg.p_cap));
  }
  try {
    require_odd_prime(p);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
}

int cmd_scan(const Options& opt, const Config& cfg, std::ostream& out, std::ostream& err) {
  if (!opt.p_max) throw UsageError("scan requires --pmax");
  const unsigned long lo = opt.p_min, hi = *opt.p_max;
  if (lo < 3 || lo > hi || hi > cfg.p_cap) {
    throw UsageError("scan range must satisfy 3 <= pmin <= pmax <= " +
                     std::to_string(cfg.p_cap));
  }
  err << "scanning p in [" << lo << ", " << hi << "] with " << cfg.workers
      << " worker(s)\n";
  const auto found = scan_exponents(lo, hi, cfg.workers);

  auto env = make_envelope("scan", {{"pmin", lo}, {"pmax", hi}});
  env.records = found;
  env.summary = {{"count", found.size()}};
  write_report(opt, env, [&](std::ostream& os) {
    TextTable t({"p", "eps", "primality", "G_p"});
    for (const auto& g : found) {
      t.add_row({std::to_string(g.p), g.epsilon > 0 ? "+1" : "-1",
                 std::string(to_string(g.primality)), g.value.get_str()});
    }
    t.print(os);
    os << found.size() << " Gaussian Mersenne prime(s)\n";
  }, out);
  return kOk;
}

int cmd_represent(const Options& opt, const Config& cfg, std::ostream& out) {
  if (!opt.p) throw UsageError("represent requires --p");
  if (opt.d_list.size() != 1 || opt.d_list.front() == 0) {
    throw UsageError("represent requires a single positive --d");
  }
  const unsigned long p = *opt.p;
  const unsigned long d = opt.d_list.front();
  check_exponent(p, cfg);

  const GmNorm g = gm_norm(p);
  std::optional<Representation> rep;
  try {
    rep = represent(g.value, d);
  } catch (const InvalidArgument& e) {
    throw UsageError(std::string("cannot decide representability: ") + e.what());
  }

  Json rec = {{"p", p},
              {"d", d},
              {"g_value", g.value},
              {"primality", std::string(to_string(g.primality))},
              {"representation", rep},
              {"x_mod8", nullptr},
              {"y_mod8", nullptr}};
  if (rep) {
    rec["x_mod8"] = mod_ui(rep->x, 8);
    rec["y_mod8"] = mod_ui(rep->y, 8);
  }
  auto env = make_envelope("represent", {{"p", p}, {"d", d}});
  env.records.push_back(rec);
  env.summary = {{"solved", rep.has_value()}};
  write_report(opt, env, [&](std::ostream& os) {
    os << "G_" << p << " = " << g.value.get_str() << " (" << to_string(g.primality) << ")\n";
    if (rep) {
      os << "x = " << rep->x.get_str() << "\ny = " << rep->y.get_str() << '\n';
      os << "x mod 8 = " << mod_ui(rep->x, 8) << ", y mod 8 = " << mod_ui(rep->y, 8) << '\n';
    } else {
      os << "none\n";
    }
  }, out);
  return rep ? kOk : kNegative;
}

int cmd_verify(const Options& opt, const Config& cfg, std::ostream& out, std::ostream& err) {
  if (!opt.p_max) throw UsageError("verify requires --pmax");
  const unsigned long p_max = *opt.p_max;
  if (p_max < 7 || p_max > cfg.p_cap) {
    throw UsageError("verify requires 7 <= pmax <= " + std::to_string(cfg.p_cap));
  }
  std::vector<unsigned long> ds = opt.d_list.empty() ? std::vector<unsigned long>{7} : opt.d_list;
  for (unsigned long d : ds) {
    if (opt.generalized) {
      try {
        require_generalized_d(d);
      } catch (const InvalidArgument& e) {
        throw UsageError(e.what());
      }
    } else if (d != 7) {
      throw UsageError("d = " + std::to_string(d) + " needs --generalized");
    }
  }
  err << "auditing p <= " << p_max << " for d in {";
  for (std::size_t i = 0; i < ds.size(); ++i) err << (i ? "," : "") << ds[i];
  err << "}\n";

  const SuiteReport report = run_suite(p_max, ds, cfg.workers);
  const auto unexpected = unexpected_failures(report.records);

  auto env = make_envelope("verify", {{"pmax", p_max},
                                      {"d", ds},
                                      {"generalized", opt.generalized},
                                      {"strict", opt.strict}});
  env.records = report.records;
  env.summary = report.counts;
  env.summary["unexpected_failures"] = unexpected.size();
  write_report(opt, env, [&](std::ostream& os) {
    TextTable t({"p", "d", "p+-1(8)", "prime", "(2/d)", "(-d/G)", "ord4", "x mod 8",
                 "y mod 8", "artin", "verdict"});
    for (const auto& r : report.records) {
      t.add_row({std::to_string(r.p), std::to_string(r.d), flag_str(r.flags.p_mod8_ok),
                 flag_str(r.flags.gp_probable_prime), flag_str(r.flags.legendre_2_d),
                 flag_str(r.flags.legendre_minus_d_gp), flag_str(r.flags.class_group_order4),
                 residue_str(r.x_mod8), residue_str(r.y_mod8),
                 r.artin ? std::string(to_string(*r.artin)) : "-",
                 std::string(to_string(r.verdict))});
    }
    t.print(os);
    const auto& c = report.counts;
    os << "confirmed " << c.confirmed << ", hypothesis-not-met " << c.hypothesis_not_met
       << ", no-representation " << c.no_representation << ", out-of-range "
       << c.out_of_range << ", REFUTED " << c.refuted << '\n';
  }, out);

  if (report.counts.refuted > 0) {
    err << report.counts.refuted << " REFUTED record(s)\n";
    return kRefuted;
  }
  if (opt.strict && !unexpected.empty()) return kNegative;
  return kOk;
}

int cmd_classgroup(const Options& opt, std::ostream& out) {
  if (!opt.discriminant) throw UsageError("classgroup requires a discriminant");
  const long D = *opt.discriminant;
  try {
    require_discriminant(D);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
  const ClassGroupSummary s = group_structure(D);
  auto env = make_envelope("classgroup", {{"discriminant", D}});
  env.records.push_back(s);
  env.summary = {{"h", s.h}};
  write_report(opt, env, [&](std::ostream& os) {
    os << "D = " << D << "\nh = " << s.h << "\ncyclic orders = [";
    for (std::size_t i = 0; i < s.cyclic_orders.size(); ++i) {
      os << (i ? ", " : "") << s.cyclic_orders[i];
    }
    os << "]\nhas order-4 element = " << flag_str(s.has_order_4_element) << "\nforms:\n";
    for (const auto& f : s.forms) os << "  " << f.to_string() << '\n';
  }, out);
  return kOk;
}

int cmd_congruences(const Options& opt, const Config& cfg, std::ostream& out) {
  if (!opt.p) throw UsageError("congruences requires --p");
  check_exponent(*opt.p, cfg);
  const CongruencePrediction c = predict_congruences(*opt.p);
  auto env = make_envelope("congruences", {{"p", *opt.p}});
  env.records.push_back(c);
  env.summary = {{"holds", c.holds()}};
  write_report(opt, env, [&](std::ostream& os) {
    TextTable t({"modulus", "actual", "predicted", "applicable"});
    auto row = [&](const char* m, unsigned actual, const std::optional<unsigned>& pred) {
      t.add_row({m, std::to_string(actual), residue_str(pred), flag_str(pred.has_value())});
    };
    row("8", c.actual_mod8, c.mod8);
    row("16", c.actual_mod16, c.mod16);
    row("32", c.actual_mod32, c.mod32);
    row("7", c.actual_mod7, c.mod7);
    t.print(os);
  }, out);
  return c.holds() ? kOk : kRefuted;
}

}  // namespace

Config load_config(const std::string& path, Config base) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read config file " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw InvalidArgument(path + ":" + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const BigInt v = parse_integer(value);
    if (sgn(v) <= 0 || !v.fits_ulong_p()) {
      throw InvalidArgument(path + ":" + std::to_string(lineno) + ": bad value for " + key);
    }
    if (key == "p_cap") {
      base.p_cap = v.get_ui();
    } else if (key == "workers") {
      base.workers = static_cast<unsigned>(v.get_ui());
    } else {
      throw InvalidArgument(path + ":" + std::to_string(lineno) + ": unknown key " + key);
    }
  }
  return base;
}

std::optional<std::string> locate_config(const std::optional<std::string>& explicit_path) {
  if (explicit_path) return explicit_path;
  if (const char* env = std::getenv("GMFORMS_CONFIG"); env != nullptr && *env != '\0') {
    return std::string(env);
  }
  if (std::filesystem::exists("gmforms.conf")) return std::string("gmforms.conf");
  return std::nullopt;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gaussian Mersenne norms and x^2 + d y^2 audits", "gmforms"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--emit", opt.emit, "Output format")
        ->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--out", opt.out_path, "Write the report to FILE");
    sub->add_option("--workers", opt.workers, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--config", opt.config_path, "Configuration file");
  };

  auto* scan = app.add_subcommand("scan", "List Gaussian Mersenne probable primes");
  scan->add_option("--pmin", opt.p_min, "Smallest exponent (inclusive)");
  scan->add_option("--pmax", opt.p_max, "Largest exponent (inclusive)");
  add_common(scan);

  auto* represent = app.add_subcommand("represent", "Solve G_p = x^2 + d y^2");
  represent->add_option("--p", opt.p, "Exponent");
  represent->add_option("--d", opt.d_list, "Form parameter")->delimiter(',');
  add_common(represent);

  auto* verify = app.add_subcommand("verify", "Audit the x^2 + d y^2 congruences");
  verify->add_option("--pmax", opt.p_max, "Largest exponent (inclusive)");
  verify->add_option("--d", opt.d_list, "Comma-separated form parameters")->delimiter(',');
  verify->add_flag("--generalized", opt.generalized, "Allow d = 7 (mod 24)");
  verify->add_flag("--strict", opt.strict, "Fail on unexpected hypothesis failures");
  add_common(verify);

  auto* classgroup = app.add_subcommand("classgroup", "Form class group of a discriminant");
  classgroup->add_option("discriminant", opt.discriminant, "Negative discriminant");
  classgroup->add_option("--D", opt.discriminant, "Negative discriminant");
  add_common(classgroup);

  auto* congruences = app.add_subcommand("congruences", "Residues of G_p vs predictions");
  congruences->add_option("--p", opt.p, "Exponent");
  add_common(congruences);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    Config cfg;
    if (const auto path = locate_config(opt.config_path)) cfg = load_config(*path, cfg);
    if (opt.workers) cfg.workers = *opt.workers;

    if (scan->parsed()) return cmd_scan(opt, cfg, out, err);
    if (represent->parsed()) return cmd_represent(opt, cfg, out);
    if (verify->parsed()) return cmd_verify(opt, cfg, out, err);
    if (classgroup->parsed()) return cmd_classgroup(opt, out);
    if (congruences->parsed()) return cmd_congruences(opt, cfg, out);
  } catch (const UsageError& e) {
    err << "gmforms: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "gmforms: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace gmforms::cli
