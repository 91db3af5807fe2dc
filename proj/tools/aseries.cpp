#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>

namespace {

using namespace aseries::cli;

// Exit codes: 0 all ok, 1 any verification failure, 2 usage error.
int run(int argc, char** argv) {
  CLI::App app{"Exact and high-precision verification of arcsine-power series identities"};
  app.require_subcommand(1);

  VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "check an identity family over a grid of (n, x)");
  verify->add_option("--family", vopt.family, "family id, e.g. thm3.2, cor4.3, hyp8.8")->required();
  verify->add_option("--p", vopt.p, "arcsin power (families that need it)");
  verify->add_option("--n-range", vopt.n_range, "a..b");
  verify->add_option("--x", vopt.xs, "1, 1/2, sqrt2/2, sqrt3/2 or a decimal (repeatable)");
  verify->add_option("--digits", vopt.digits, "working precision in decimal digits");
  verify->add_option("--format", vopt.format, "json or csv");
  verify->add_option("--out", vopt.out, "output path (default stdout)");
  verify->add_option("--jobs", vopt.jobs, "worker threads")->check(CLI::Range(1u, 256u));

  int power = 1;
  long pi_n = 0;
  std::optional<int> pi_digits;
  auto* pi = app.add_subcommand("pi", "scaled x = 1 sum against pi^p");
  pi->add_option("--power", power, "1..4")->required();
  pi->add_option("--n", pi_n, "shift")->required();
  pi->add_option("--digits", pi_digits);

  std::string corollary, table_format = "json";
  std::optional<std::string> table_range, table_x;
  std::optional<int> table_digits;
  auto* table = app.add_subcommand("table", "exact constants for a corollary");
  table->add_option("--corollary", corollary, "3.3a, 4.4a, 4.3, 5.3 or 6.3")->required();
  table->add_option("--n-range", table_range);
  table->add_option("--x", table_x);
  table->add_option("--format", table_format, "json, csv or markdown");
  table->add_option("--digits", table_digits);

  std::string cf_family, cf_x = "1";
  long cf_n = 0;
  auto* closed = app.add_subcommand("closed-form", "exact value of one family member");
  closed->add_option("--family", cf_family)->required();
  closed->add_option("--n", cf_n)->required();
  closed->add_option("--x", cf_x);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*verify) {
      auto recs = run_verify(vopt);
      if (vopt.out.empty()) {
        write_records(std::cout, recs, vopt.format);
      } else {
        std::ofstream f(vopt.out);
        if (!f) throw UsageError("cannot open " + vopt.out);
        write_records(f, recs, vopt.format);
      }
      return all_ok(recs) ? 0 : 1;
    }
    if (*pi) {
      write_pi(std::cout, run_pi(power, pi_n, pi_digits));
      return 0;
    }
    if (*table) {
      write_table(std::cout, corollary, run_table(corollary, table_range, table_x, table_digits), table_format);
      return 0;
    }
    if (*closed) {
      std::cout << run_closed_form(cf_family, cf_n, cf_x) << '\n';
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
