// Command-line front end: exact analysis of the products
//   ratio(t) = prod_{n<=t} a_{kn} / prod_{n<=t} a_n
// for multinomial sequences a_n = ((m_1+...+m_s)n)! / prod (m_i n)!.
//
// Subcommands:
//   ck            constant C(k) with prod ratio(t) in (1/C(k)) Z for all t
//   scan          CSV of den(ratio(t)) for t = 1..t_max
//   integral-plot CSV of the exact graph of I(u) = int_0^u (f(kx)-f(x)) dx
//   witness       a prime p and t with nu_p(ratio(t)) < 0 (needs gcd(m_i) > 1)
//   classify      divisibility regime of the parameter tuple
//
// Exit codes: 0 success, 2 argument error, 3 mathematical precondition
// violation (wrong gcd regime for the requested computation).

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "meandiv/ck.hpp"
#include "meandiv/errors.hpp"
#include "meandiv/integral.hpp"
#include "meandiv/oracle.hpp"
#include "meandiv/serialize.hpp"
#include "meandiv/witness.hpp"

namespace {

struct CliConfig {
  std::vector<std::int64_t> m_list;
  std::int64_t k = 2;
  std::int64_t t_max = 100;
  std::int64_t prime_cap = 1000000;
  std::string format;  // "json" or "csv"; per-command default when empty
  std::string out;     // output path; stdout when empty
};

void emit(const CliConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) {
    throw meandiv::Error("cannot open output file: " + cfg.out);
  }
  file << text;
}

void emit_json(const CliConfig& cfg, const nlohmann::ordered_json& j) {
  emit(cfg, j.dump(2) + "\n");
}

int run_ck(const CliConfig& cfg, const meandiv::Params& params) {
  auto report = meandiv::compute_constant(params, cfg.k);
  emit_json(cfg, meandiv::ck_report_json(report));
  return 0;
}

int run_scan(const CliConfig& cfg, const meandiv::Params& params) {
  auto scan = meandiv::scan_denominators(params, cfg.k, cfg.t_max);
  if (cfg.format == "json") {
    emit_json(cfg, meandiv::scan_json(params, cfg.k, scan));
  } else {
    emit(cfg, meandiv::scan_csv(scan));
  }
  return 0;
}

int run_integral_plot(const CliConfig& cfg, const meandiv::Params& params) {
  auto points = meandiv::integral_plot_points(params, cfg.k);
  if (cfg.format == "json") {
    emit_json(cfg, meandiv::integral_plot_json(params, cfg.k, points));
  } else {
    emit(cfg, meandiv::integral_plot_csv(points));
  }
  return 0;
}

int run_witness(const CliConfig& cfg, const meandiv::Params& params) {
  auto report = meandiv::find_witness(params, cfg.k, cfg.prime_cap);
  emit_json(cfg, meandiv::witness_report_json(report));
  return 0;
}

int run_classify(const CliConfig& cfg, const meandiv::Params& params) {
  emit_json(cfg, meandiv::classify_json(params));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CliConfig cfg;
  CLI::App app{
      "exact divisibility analysis of multinomial coefficient products"};
  app.require_subcommand(1);
  app.add_option("--m", cfg.m_list,
                 "comma-separated positive integers m_1,...,m_s")
      ->required()
      ->delimiter(',');
  app.add_option("--k", cfg.k, "index multiplier k");
  app.add_option("--t-max", cfg.t_max, "scan limit for t (default 100)");
  app.add_option("--prime-cap", cfg.prime_cap,
                 "witness prime search cap (default 1000000)");
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", cfg.out, "write output to this path");

  auto* ck = app.add_subcommand("ck", "compute the constant C(k)");
  auto* scan = app.add_subcommand("scan", "denominators of ratio(t)");
  auto* plot =
      app.add_subcommand("integral-plot", "exact graph data for I(u)");
  auto* witness =
      app.add_subcommand("witness", "find a non-divisibility witness prime");
  auto* classify =
      app.add_subcommand("classify", "divisibility regime of the parameters");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    for (std::int64_t m : cfg.m_list) {
      if (m < 1) {
        std::cerr << "error: every m_i must be >= 1\n";
        return 2;
      }
    }
    if (cfg.k < 1 || cfg.t_max < 0) {
      std::cerr << "error: need k >= 1 and t-max >= 0\n";
      return 2;
    }
    if ((ck->parsed() || witness->parsed()) && cfg.k < 2) {
      std::cerr << "error: this command needs k >= 2\n";
      return 2;
    }
    auto params = meandiv::Params::of(cfg.m_list);

    if (ck->parsed()) return run_ck(cfg, params);
    if (scan->parsed()) return run_scan(cfg, params);
    if (plot->parsed()) return run_integral_plot(cfg, params);
    if (witness->parsed()) return run_witness(cfg, params);
    if (classify->parsed()) return run_classify(cfg, params);
    return 2;
  } catch (const meandiv::NotAlmostMeanDivisible& e) {
    std::cerr << "not almost mean k-divisible: " << e.what() << "\n"
              << "denominator primes form an infinite set; use 'witness' to "
                 "produce one\n";
    return 3;
  } catch (const meandiv::AlmostMeanDivisibleRegime& e) {
    std::cerr << "witness search requires gcd(m_1,...,m_s) > 1: " << e.what()
              << "\n"
              << "use 'ck' to compute the finite constant C(k) instead\n";
    return 3;
  } catch (const meandiv::CapExceeded& e) {
    std::cerr << "search cap exceeded: " << e.what() << "\n"
              << "residue class " << e.residue
              << " is negative; raise --prime-cap to instantiate a prime\n";
    return 1;
  } catch (const meandiv::PreconditionViolated& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const meandiv::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
