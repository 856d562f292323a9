// skewcat: runs the law-checking suites and writes a JSON report.
//
//   skewcat run --suite <name> [--action <name>] [--budget N] [--seed N]
//               [--load file.json] [--out report.json] [--max-order N] [--jobs N]
//   skewcat list
//
// Exit codes: 0 all checks pass, 1 some law fails, 2 configuration or IO error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <thread>

#include "skewcat/errors.hpp"
#include "skewcat/harness.hpp"
#include "skewcat/instances/actions.hpp"

namespace {

  constexpr int exit_pass   = 0;
  constexpr int exit_fail   = 1;
  constexpr int exit_config = 2;

  int list_catalog() {
    std::cout << "suites:\n";
    for (auto const& s : skewcat::suite_catalog()) {
      std::cout << "  " << s.name << "  " << s.summary << "\n";
    }
    std::cout << "actions:\n";
    for (auto const& a : skewcat::action_catalog()) {
      std::cout << "  " << a.name << (a.strong ? "  [strong]  " : "  [weak]  ") << a.summary << "\n";
    }
    return exit_pass;
  }

  int run(skewcat::suite_config cfg, std::string const& load, std::string const& out, bool summary) {
    if (!load.empty()) {
      cfg.input       = skewcat::load_input(load);
      cfg.input_label = load;
    }
    auto result = skewcat::run_suite(cfg);
    auto text   = result.to_json().dump(2) + "\n";
    if (!out.empty()) {
      std::ofstream os(out, std::ios::binary);
      if (!os || !(os << text) || !os.flush()) {
        throw skewcat::io_error("cannot write '" + out + "'");
      }
    }
    if (summary || !out.empty()) {
      for (auto const& s : result.suites) {
        for (auto const& r : s.reports) {
          std::cout << s.name << ": " << r.summary_line() << "\n";
        }
      }
      std::cout << (result.passed() ? "PASS" : "FAIL") << "\n";
    } else {
      std::cout << text;
    }
    return result.passed() ? exit_pass : exit_fail;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Law checker for semidirect products of skew monoidal categories"};
  app.require_subcommand(1);

  skewcat::suite_config cfg;
  cfg.suites.clear();
  cfg.jobs = std::max(1u, std::thread::hardware_concurrency());
  std::string load, out;
  bool        summary = false;

  auto* run_cmd = app.add_subcommand("run", "run one or more suites");
  run_cmd->add_option("--suite", cfg.suites, "suite name (repeatable; see `skewcat list`)")->required();
  run_cmd->add_option("--action", cfg.action, "restrict action-indexed suites to one action");
  run_cmd->add_option("--budget", cfg.budget, "maximum tuples per law before sampling")->check(CLI::PositiveNumber);
  run_cmd->add_option("--seed", cfg.seed, "seed for sampled laws");
  run_cmd->add_option("--load", load, "extra instance: category, monoid_action, gms or lattice JSON");
  run_cmd->add_option("--out", out, "write the JSON report here");
  run_cmd->add_option("--max-order", cfg.max_order, "largest monoid order for monoid-oracle");
  run_cmd->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  run_cmd->add_flag("--summary", summary, "print one line per report instead of the JSON");

  auto* list_cmd = app.add_subcommand("list", "list suites and actions");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    auto code = app.exit(e);
    return code == 0 ? exit_pass : exit_config;
  }

  try {
    if (list_cmd->parsed()) {
      return list_catalog();
    }
    return run(cfg, load, out, summary);
  } catch (skewcat::error const& e) {
    std::cerr << "skewcat: " << e.what() << "\n";
    return exit_config;
  } catch (std::exception const& e) {
    std::cerr << "skewcat: " << e.what() << "\n";
    return exit_config;
  }
}
