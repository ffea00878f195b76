#include <CLI11.hpp>
#include <iostream>

#include "lderlab/suites.hpp"

using namespace lderlab;

int main(int argc, char** argv) {
  CLI::App app{"lder-lab: exact structure-constant algebra toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // accept global options after the subcommand

  Config config;
  app.add_option("--seed", config.seed, "PRNG seed for searches and random inputs");
  app.add_option("--trials", config.trials, "random trials per invertibility search");
  app.add_option("--max-order", config.max_order, "largest derivation order to scan");
  app.add_option("--coeff-box", config.coeff_box, "coefficient box for random combinations");
  app.add_option("--n-cap", config.n_cap, "longest product length the solver expands");
  app.add_option("--format", config.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string analyze_input;
  CLI::App* analyze = app.add_subcommand("analyze", "full structural analysis of one algebra");
  analyze->add_option("input", analyze_input, "@catalog-name or JSON document path")->required();

  std::string verify_suite;
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", verify_suite, "suite id, or 'all'")->required();

  std::string lder_input;
  int lder_order = 0;
  std::string lder_arrangement = "left";
  CLI::App* lder = app.add_subcommand("lder", "solve one derivation space");
  lder->add_option("input", lder_input, "@catalog-name or JSON document path")->required();
  lder->add_option("--order", lder_order, "product length n");
  lder->add_option("--arrangement", lder_arrangement, "left | all | serialized tree, e.g. (x(xx))");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    Report report;
    if (*analyze) {
      report = cmd_analyze(analyze_input, config);
    } else if (*verify) {
      report = cmd_verify(verify_suite, config);
    } else {
      if (lder_order == 0 && (lder_arrangement == "left" || lder_arrangement == "all")) {
        std::cerr << "lder: --order is required with arrangement '" << lder_arrangement << "'\n";
        return 2;
      }
      report = cmd_lder(lder_input, lder_order, lder_arrangement, config);
    }
    std::cout << report.render();
    return report.exit_code();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
