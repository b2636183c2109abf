#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "htoda/free_energy.hpp"
#include "htoda/fock.hpp"
#include "htoda/hurwitz.hpp"
#include "htoda/schur.hpp"
#include "htoda/series_json.hpp"
#include "htoda/string_equations.hpp"
#include "htoda/verify.hpp"

namespace {

using htoda::CheckReport;
using htoda::Partition;
using htoda::Rat;
using htoda::TSeries;
using json = nlohmann::ordered_json;

enum ExitCode { kPass = 0, kVerifyFail = 1, kUsage = 2, kResource = 3 };

struct Config {
  int d = 0;
  int dmax = 8;
  int D = 0;
  int n_beta = 0;
  int n_genus = 1;
  long charge_lo = -3, charge_hi = 3;
  unsigned seed = 1;
  std::string profiles;
  std::string format = "text";
  std::string charges;
  std::string inject_fault;
  bool use_double = false;
  bool use_simple = false;
  bool case_i = false;
  bool t_zero = false;
  bool lambert = false;
  bool with_oracle = false;
  std::string lambda;
};

std::vector<Partition> parse_profiles(const std::string& text) {
  std::vector<Partition> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ';')) {
    if (piece.empty()) continue;
    out.push_back(Partition::parse(piece));
  }
  return out;
}

void parse_charges(const std::string& text, long& lo, long& hi) {
  if (text.empty()) return;
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    lo = hi = std::stol(text);
    return;
  }
  lo = std::stol(text.substr(0, dots));
  hi = std::stol(text.substr(dots + 2));
  if (lo > hi) throw std::invalid_argument("empty charge range: " + text);
}

json report_json(const CheckReport& rep) {
  json arr = json::array();
  for (const auto& line : rep.lines) {
    json row;
    row["check"] = line.name;
    row["range"] = line.detail;
    row["status"] = line.ok ? "pass" : "fail";
    arr.push_back(row);
  }
  return arr;
}

void print_report(const CheckReport& rep, const std::string& format) {
  if (format == "json") {
    json out;
    out["report"] = report_json(rep);
    out["status"] = rep.all_ok() ? "pass" : "fail";
    std::cout << out.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "check,status,detail\n";
    for (const auto& line : rep.lines)
      std::cout << line.name << "," << (line.ok ? "pass" : "fail") << ",\""
                << line.detail << "\"\n";
  } else {
    std::cout << rep.str();
  }
}

void print_series(const std::string& name, const TSeries& f,
                  const std::string& format) {
  if (format == "json") {
    json out;
    out["name"] = name;
    out["series"] = htoda::series_to_json(f);
    std::cout << out.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "name,monomial,coefficient\n";
    for (const auto& [m, c] : f.terms())
      std::cout << name << ",\"" << m.str() << "\",\"" << c.str() << "\"\n";
  } else {
    std::cout << name << " = " << f.str() << "\n";
  }
}

int cmd_hurwitz(const Config& cfg) {
  if (cfg.d < 1) throw std::invalid_argument("hurwitz needs --d >= 1");
  std::vector<Partition> profiles = parse_profiles(cfg.profiles);
  Rat value = htoda::hurwitz_burnside(cfg.d, profiles);
  bool checked = false;
  Rat oracle;
  if (cfg.with_oracle) {
    oracle = htoda::hurwitz_bruteforce(cfg.d, profiles);
    checked = true;
  }
  if (cfg.format == "json") {
    json out;
    out["d"] = cfg.d;
    json profs = json::array();
    for (const auto& mu : profiles) profs.push_back(mu.str());
    out["profiles"] = profs;
    out["value"] = htoda::rat_str(value);
    if (checked) out["enumeration"] = htoda::rat_str(oracle);
    std::cout << out.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    std::cout << "d,profiles,value" << (checked ? ",enumeration" : "") << "\n"
              << cfg.d << ",\"" << cfg.profiles << "\","
              << htoda::rat_str(value);
    if (checked) std::cout << "," << htoda::rat_str(oracle);
    std::cout << "\n";
  } else {
    std::cout << htoda::rat_str(value) << "\n";
    if (checked)
      std::cout << "enumeration: " << htoda::rat_str(oracle) << "\n";
  }
  if (checked && value != oracle) return kVerifyFail;
  return kPass;
}

int cmd_genfun(const Config& cfg) {
  int D = cfg.D > 0 ? cfg.D : 4;
  int nb = cfg.n_beta > 0 ? cfg.n_beta : 3;
  if (cfg.use_double && cfg.use_simple)
    throw std::invalid_argument("choose one of --simple / --double");
  TSeries z = cfg.use_double ? htoda::z_double(D, nb) : htoda::z_simple(D, nb);
  print_series(cfg.use_double ? "Z_double" : "Z_simple", z, cfg.format);
  return kPass;
}

int cmd_schur(const Config& cfg) {
  if (cfg.lambda.empty()) throw std::invalid_argument("schur needs --lambda");
  Partition lam = Partition::parse(cfg.lambda);
  int D = cfg.D > 0 ? cfg.D : std::max(1, lam.size());
  print_series("s_" + lam.str(), htoda::schur(lam, D), cfg.format);
  return kPass;
}

int cmd_fock_verify(const Config& cfg) {
  htoda::VerifyOptions opts;
  opts.d_max_fock = cfg.dmax;
  if (cfg.n_beta > 0) opts.n_beta = cfg.n_beta;
  parse_charges(cfg.charges, opts.charge_lo, opts.charge_hi);
  CheckReport rep = htoda::verify_fock(opts);
  print_report(rep, cfg.format == "text" ? "json" : cfg.format);
  return rep.all_ok() ? kPass : kVerifyFail;
}

int cmd_string_solve(const Config& cfg) {
  int D = cfg.D > 0 ? cfg.D : 5;
  if (cfg.lambert) {
    htoda::StringSolution sol =
        htoda::at_t_zero(htoda::solve_case_i(D));
    CheckReport rep = htoda::lambert_form(sol);
    print_report(rep, cfg.format);
    return rep.all_ok() ? kPass : kVerifyFail;
  }
  htoda::StringSolution sol =
      cfg.case_i ? htoda::solve_case_i(D) : htoda::solve(D);
  if (cfg.t_zero) sol = htoda::at_t_zero(sol);
  CheckReport rep = htoda::verify_string_equations(sol);
  if (cfg.format == "json") {
    json out;
    out["D"] = sol.D;
    out["tbar_max"] = sol.tbar_max;
    out["ubar0"] = htoda::series_to_json(sol.ubar0);
    auto dump_map = [](const std::map<int, TSeries>& m) {
      json obj;
      for (const auto& [n, f] : m)
        obj[std::to_string(n)] = htoda::series_to_json(f);
      return obj;
    };
    out["u"] = dump_map(sol.u);
    out["ubar"] = dump_map(sol.ubar);
    out["v"] = dump_map(sol.v);
    out["vbar"] = dump_map(sol.vbar);
    out["report"] = report_json(rep);
    out["status"] = rep.all_ok() ? "pass" : "fail";
    std::cout << out.dump(2) << "\n";
  } else {
    print_series("ubar0", sol.ubar0, cfg.format);
    for (const auto& [n, f] : sol.u)
      print_series("u_" + std::to_string(n), f, cfg.format);
    for (const auto& [n, f] : sol.ubar)
      print_series("ubar_" + std::to_string(n), f, cfg.format);
    for (const auto& [n, f] : sol.v)
      print_series("v_" + std::to_string(n), f, cfg.format);
    for (const auto& [n, f] : sol.vbar)
      print_series("vbar_" + std::to_string(n), f, cfg.format);
    print_report(rep, cfg.format);
  }
  return rep.all_ok() ? kPass : kVerifyFail;
}

int cmd_free_energy(const Config& cfg) {
  int D = cfg.D > 0 ? cfg.D : 4;
  int nb = cfg.n_beta > 0 ? cfg.n_beta : 3;
  int nmax = cfg.n_genus;
  htoda::FreeEnergyTower tower = htoda::solve_tower(nmax, D, nb);
  bool all_zero = true;
  std::vector<std::string> residuals;
  for (int n = 0; n <= nmax; ++n) {
    bool zero = htoda::tower_residual(tower, n).is_zero();
    all_zero = all_zero && zero;
    residuals.push_back(zero ? "0" : "nonzero");
  }
  if (cfg.format == "json") {
    json out;
    out["n_max"] = nmax;
    out["D"] = D;
    out["N_beta"] = nb;
    json fs = json::array();
    for (const TSeries& f : tower.F) fs.push_back(htoda::series_to_json(f));
    out["F"] = fs;
    out["residuals"] = residuals;
    if (cfg.use_simple) {
      json sp = json::array();
      for (const TSeries& f : htoda::simple_specialization(tower))
        sp.push_back(htoda::series_to_json(f));
      out["simple"] = sp;
    }
    out["status"] = all_zero ? "pass" : "fail";
    std::cout << out.dump(2) << "\n";
  } else {
    for (int n = 0; n <= nmax; ++n) {
      print_series("F_" + std::to_string(n), tower.F[n], cfg.format);
      std::cout << "residual_" << n << ": " << residuals[n] << "\n";
    }
    if (cfg.use_simple)
      for (int n = 0; n <= nmax; ++n)
        print_series("F_" + std::to_string(n) + "_simple",
                     htoda::simple_specialization(tower)[n], cfg.format);
  }
  return all_zero ? kPass : kVerifyFail;
}

int cmd_verify_all(const Config& cfg) {
  htoda::VerifyOptions opts;
  if (cfg.d > 0) opts.d_oracle = cfg.d;
  opts.d_max_fock = cfg.dmax;
  if (cfg.D > 0) {
    opts.D_series = cfg.D;
    opts.D_solver = cfg.D;
  }
  if (cfg.n_beta > 0) opts.n_beta = cfg.n_beta;
  opts.seed = cfg.seed;
  parse_charges(cfg.charges, opts.charge_lo, opts.charge_hi);
  if (!cfg.inject_fault.empty()) {
    if (cfg.inject_fault == "kappa-sign") {
      opts.fault_kappa_sign = true;
    } else {
      throw std::invalid_argument("unknown fault: " + cfg.inject_fault);
    }
  }
  CheckReport rep = htoda::verify_all(opts);
  print_report(rep, cfg.format);
  return rep.all_ok() ? kPass : kVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"Exact Hurwitz-number and Toda-lattice toolkit"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_flag_callback("--json", [&] { cfg.format = "json"; },
                           "shorthand for --format json");
  };

  CLI::App* hw = app.add_subcommand("hurwitz", "branched-cover counts");
  hw->add_option("--d", cfg.d, "sheet count")->required();
  hw->add_option("--profiles", cfg.profiles,
                 "semicolon-separated cycle types, e.g. \"[2];[2]\"");
  hw->add_flag("--oracle", cfg.with_oracle,
               "cross-check against direct enumeration");
  add_common(hw);

  CLI::App* gf = app.add_subcommand("genfun", "generating series");
  gf->add_option("--D", cfg.D, "weighted-degree truncation");
  gf->add_option("--beta-order", cfg.n_beta, "orders of beta kept");
  gf->add_flag("--double", cfg.use_double, "two-sided series");
  gf->add_flag("--simple", cfg.use_simple, "one-sided series (default)");
  add_common(gf);

  CLI::App* sc = app.add_subcommand("schur", "Schur polynomial in the times");
  sc->add_option("--lambda", cfg.lambda, "partition, e.g. \"[2,1]\"")
      ->required();
  sc->add_option("--D", cfg.D, "weighted-degree truncation");
  add_common(sc);

  CLI::App* fv = app.add_subcommand("fock-verify",
                                    "operator-level invariant suite");
  fv->add_option("--dmax", cfg.dmax, "largest partition size");
  fv->add_option("--charges,--charge", cfg.charges, "range lo..hi");
  fv->add_option("--beta-order", cfg.n_beta, "orders of beta kept");
  add_common(fv);

  CLI::App* ss = app.add_subcommand("string-solve",
                                    "power-series string-equation solution");
  ss->add_option("--D", cfg.D, "solution degree");
  ss->add_flag("--case-i", cfg.case_i, "reduced family, tbar_1 only");
  ss->add_flag("--t-zero", cfg.t_zero, "specialize all t_k = 0");
  ss->add_flag("--lambert", cfg.lambert, "check the plane-curve form");
  add_common(ss);

  CLI::App* fe = app.add_subcommand("free-energy", "genus tower of log Z");
  fe->add_option("--n", cfg.n_genus, "highest index computed");
  fe->add_option("--D", cfg.D, "weighted-degree truncation");
  fe->add_option("--beta-order", cfg.n_beta, "orders of beta kept");
  fe->add_flag("--simple", cfg.use_simple, "also print tbar_1 = -1 collapse");
  add_common(fe);

  CLI::App* va = app.add_subcommand("verify-all", "every invariant suite");
  va->add_option("--d", cfg.d, "enumeration oracle bound");
  va->add_option("--dmax", cfg.dmax, "operator matrix bound");
  va->add_option("--D", cfg.D, "series and solver degree");
  va->add_option("--beta-order", cfg.n_beta, "orders of beta kept");
  va->add_option("--charges,--charge", cfg.charges, "range lo..hi");
  va->add_option("--seed", cfg.seed, "randomized property seed");
  va->add_option("--inject-fault", cfg.inject_fault, "")->group("");
  add_common(va);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kUsage;
  }

  try {
    if (hw->parsed()) return cmd_hurwitz(cfg);
    if (gf->parsed()) return cmd_genfun(cfg);
    if (sc->parsed()) return cmd_schur(cfg);
    if (fv->parsed()) return cmd_fock_verify(cfg);
    if (ss->parsed()) return cmd_string_solve(cfg);
    if (fe->parsed()) return cmd_free_energy(cfg);
    if (va->parsed()) return cmd_verify_all(cfg);
  } catch (const htoda::resource_error& e) {
    std::cerr << "resource bound exceeded: " << e.what() << "\n";
    return kResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
