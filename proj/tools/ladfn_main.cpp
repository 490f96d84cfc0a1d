#include <algorithm>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ladfn/ladfn.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;   // FAIL report or evaluation error
constexpr int kExitUsage = 2;  // usage or parse error

struct GlobalConfig {
  std::uint64_t sieve_limit = 1000000;
  std::string format = "tsv";
  std::uint64_t seed = 0;
};

// The sieve covers the largest value the command will factor, capped by the
// configured limit; factorization falls back to trial division and rho
// splitting above the sieve.
ladfn::PrimeSieve sieve_for(const ladfn::Int& largest_n, std::uint64_t cap) {
  ladfn::Int need = largest_n;
  if (need < 2) need = 2;
  if (need > cap) need = cap;
  return ladfn::PrimeSieve(static_cast<std::uint64_t>(need));
}

ladfn::Int parse_natural(const std::string& text, const std::string& flag) {
  if (text.empty() || !std::all_of(text.begin(), text.end(),
                                   [](unsigned char c) { return std::isdigit(c); }))
    throw CLI::ValidationError(flag, "expected a positive integer, got '" + text + "'");
  ladfn::Int n(text);
  if (n < 1)
    throw CLI::ValidationError(flag, "expected a positive integer, got '" + text + "'");
  return n;
}

void emit_row(std::ostream& os, const GlobalConfig& cfg, const ladfn::Int& n,
              const ladfn::Rational& value) {
  if (cfg.format == "jsonl")
    os << ladfn::jsonl_row(n, value) << '\n';
  else
    os << ladfn::tsv_row(n, value) << '\n';
}

int cmd_eval(const GlobalConfig& cfg, const std::string& fn_spec,
             const std::string& n_text) {
  ladfn::Int n = parse_natural(n_text, "--n");
  ladfn::ArithFunction f = ladfn::build(ladfn::parse(fn_spec));
  ladfn::PrimeSieve sieve = sieve_for(n, cfg.sieve_limit);
  std::cout << f.eval(n, sieve).str() << '\n';
  return kExitPass;
}

int cmd_table(const GlobalConfig& cfg, const std::string& fn_spec, std::uint64_t from,
              std::uint64_t to) {
  if (from < 1 || from > to)
    throw CLI::ValidationError("--from/--to", "need 1 <= from <= to");
  ladfn::ArithFunction f = ladfn::build(ladfn::parse(fn_spec));
  ladfn::PrimeSieve sieve = sieve_for(ladfn::Int(to), cfg.sieve_limit);
  if (cfg.format == "tsv") std::cout << ladfn::tsv_header() << '\n';
  for (std::uint64_t k = from; k <= to; ++k) {
    ladfn::Int n(k);
    emit_row(std::cout, cfg, n, f.eval(n, sieve));
  }
  return kExitPass;
}

int cmd_convolve(const GlobalConfig& cfg, const std::vector<std::string>& fn_specs,
                 std::uint64_t to) {
  if (to < 1) throw CLI::ValidationError("--to", "need to >= 1");
  ladfn::ArithFunction u = ladfn::build(ladfn::parse(fn_specs[0]));
  ladfn::ArithFunction v = ladfn::build(ladfn::parse(fn_specs[1]));
  ladfn::PrimeSieve sieve = sieve_for(ladfn::Int(to), cfg.sieve_limit);
  ladfn::ValueTable table = ladfn::convolve_prefix(ladfn::tabulate(u, to, sieve),
                                                   ladfn::tabulate(v, to, sieve));
  if (cfg.format == "tsv") std::cout << ladfn::tsv_header() << '\n';
  for (std::uint64_t k = 1; k <= to; ++k)
    emit_row(std::cout, cfg, ladfn::Int(k), table[k]);
  return kExitPass;
}

struct VerifyOptions {
  std::string identity;
  std::string fn_spec;
  std::string h_spec;
  std::string u_spec;
  std::string v_spec;
  std::uint64_t limit = 0;  // 0: use the identity's documented default
};

ladfn::ArithFunction need_fn(const std::string& spec, const char* flag,
                             const std::string& identity) {
  if (spec.empty())
    throw CLI::RequiredError(std::string(flag) + " (required by verify " + identity + ")");
  return ladfn::build(ladfn::parse(spec));
}

int cmd_verify(const GlobalConfig& cfg, const VerifyOptions& opt) {
  const std::string& id = opt.identity;
  bool pairwise = id == "leibniz";
  bool needs_tables = id == "schwab" || id == "gen-schwab" || id == "cor33" ||
                      id == "square-conv" || id == "distributivity";
  if (!pairwise && !needs_tables && id != "tau")
    throw CLI::ValidationError("identity", "unknown identity '" + id + "'");

  std::uint64_t limit = opt.limit ? opt.limit : (pairwise ? 200 : 500);
  ladfn::Int largest = pairwise ? ladfn::Int(limit) * limit : ladfn::Int(limit);
  ladfn::PrimeSieve sieve = sieve_for(largest, cfg.sieve_limit);

  bool used_seed = false;
  auto table_arg = [&](const std::string& spec, std::uint64_t seed) {
    if (spec.empty()) {
      used_seed = true;
      return ladfn::random_table(limit, seed);
    }
    return ladfn::tabulate(ladfn::build(ladfn::parse(spec)), limit, sieve);
  };

  ladfn::IdentityReport report;
  if (id == "leibniz") {
    report = ladfn::verify_leibniz(need_fn(opt.fn_spec, "--fn", id),
                                   need_fn(opt.h_spec, "--h", id), limit, sieve);
  } else if (id == "schwab") {
    ladfn::ArithFunction f = need_fn(opt.fn_spec, "--fn", id);
    report = ladfn::verify_schwab(f, table_arg(opt.u_spec, cfg.seed),
                                  table_arg(opt.v_spec, cfg.seed + 1), limit, sieve);
  } else if (id == "gen-schwab") {
    ladfn::ArithFunction f = need_fn(opt.fn_spec, "--fn", id);
    ladfn::ArithFunction h = need_fn(opt.h_spec, "--h", id);
    report = ladfn::verify_gen_schwab(f, h, table_arg(opt.u_spec, cfg.seed),
                                      table_arg(opt.v_spec, cfg.seed + 1), limit, sieve);
  } else if (id == "cor33") {
    report = ladfn::verify_cor33(table_arg(opt.u_spec, cfg.seed),
                                 table_arg(opt.v_spec, cfg.seed + 1), limit, sieve);
  } else if (id == "square-conv") {
    ladfn::ArithFunction f = need_fn(opt.fn_spec, "--fn", id);
    ladfn::ArithFunction h = need_fn(opt.h_spec, "--h", id);
    report = ladfn::verify_square_conv(f, h, table_arg(opt.u_spec, cfg.seed), limit, sieve);
  } else if (id == "tau") {
    report = ladfn::verify_tau_identity(need_fn(opt.fn_spec, "--fn", id),
                                        need_fn(opt.h_spec, "--h", id), limit, sieve);
  } else {  // distributivity
    ladfn::ArithFunction h = need_fn(opt.h_spec, "--h", id);
    report = ladfn::verify_distributivity(h, table_arg(opt.u_spec, cfg.seed),
                                          table_arg(opt.v_spec, cfg.seed + 1), limit, sieve);
  }

  if (used_seed) report.seed = cfg.seed;
  std::cout << report.line() << '\n';
  return report.passed() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);

  CLI::App app{"Exact arithmetic over the arithmetic derivative, Dirichlet "
               "convolution, and functions satisfying a Leibniz rule"};
  app.require_subcommand(1);

  GlobalConfig cfg;
  app.add_option("--sieve-limit", cfg.sieve_limit,
                 "Largest value the prime sieve may cover (factorization falls "
                 "back to direct splitting above it)")
      ->check(CLI::Range(std::uint64_t(2), std::uint64_t(0xFFFFFFFF)))
      ->capture_default_str();
  app.add_option("--format", cfg.format, "Table output format")
      ->check(CLI::IsMember({"tsv", "jsonl"}))
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for generated random tables")
      ->capture_default_str();

  std::string fn_spec, n_text;
  CLI::App* eval = app.add_subcommand("eval", "Evaluate a function at one point");
  eval->fallthrough();
  eval->add_option("--fn", fn_spec, "Function expression")->required();
  eval->add_option("--n", n_text, "Point of evaluation (>= 1)")->required();

  std::uint64_t from = 1, to = 0;
  std::string table_spec;
  CLI::App* table = app.add_subcommand("table", "Tabulate a function on a range");
  table->fallthrough();
  table->add_option("--fn", table_spec, "Function expression")->required();
  table->add_option("--from", from, "First n")->capture_default_str();
  table->add_option("--to", to, "Last n")->required();

  std::vector<std::string> conv_specs;
  std::uint64_t conv_to = 0;
  CLI::App* convolve =
      app.add_subcommand("convolve", "Tabulate the Dirichlet convolution of two functions");
  convolve->fallthrough();
  convolve->add_option("--fn", conv_specs, "The two function expressions")
      ->expected(2)
      ->required();
  convolve->add_option("--to", conv_to, "Last n")->required();

  VerifyOptions vopt;
  CLI::App* verify = app.add_subcommand(
      "verify", "Sweep an identity over a finite range and report the first "
                "counterexample, if any");
  verify->fallthrough();
  // long-form help only, so that --h stays available for the companion option
  verify->set_help_flag("--help", "Print this help message and exit");
  verify
      ->add_option("identity", vopt.identity,
                   "One of: leibniz, schwab, gen-schwab, cor33, square-conv, "
                   "tau, distributivity")
      ->required();
  verify->add_option("--fn", vopt.fn_spec, "Function under test");
  verify->add_option("--h", vopt.h_spec, "Its completely multiplicative companion");
  verify->add_option("--u", vopt.u_spec, "Left table (random when omitted)");
  verify->add_option("--v", vopt.v_spec, "Right table (random when omitted)");
  verify->add_option("--limit", vopt.limit,
                     "Range bound (default: 200 for leibniz, 500 otherwise)");

  try {
    app.parse(argc, argv);
    if (eval->parsed()) return cmd_eval(cfg, fn_spec, n_text);
    if (table->parsed()) return cmd_table(cfg, table_spec, from, to);
    if (convolve->parsed()) return cmd_convolve(cfg, conv_specs, conv_to);
    return cmd_verify(cfg, vopt);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const ladfn::parse_error& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
}
