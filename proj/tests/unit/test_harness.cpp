#include <doctest.h>

#include "skewcat/errors.hpp"
#include "skewcat/harness.hpp"

using namespace skewcat;

namespace {
  suite_config config(std::vector<std::string> suites, std::size_t jobs = 1) {
    suite_config c;
    c.suites = std::move(suites);
    c.jobs   = jobs;
    return c;
  }
}  // namespace

TEST_CASE("harness: reports do not depend on the worker count") {
  auto cfg   = config({"weak-action", "duals", "counterexample-left", "left-closed"});
  cfg.seed   = 11;
  auto one   = run_suite(cfg).to_json().dump();
  cfg.jobs   = 4;
  auto four  = run_suite(cfg).to_json().dump();
  auto again = run_suite(cfg).to_json().dump();
  CHECK(one == four);
  CHECK(four == again);
}

TEST_CASE("harness: sampled laws depend only on the seed") {
  auto a = skew_laws_truncation(budget{200, 3}, false).to_json().dump();
  auto b = skew_laws_truncation(budget{200, 3}, false).to_json().dump();
  auto c = skew_laws_truncation(budget{200, 4}, false).to_json().dump();
  CHECK(a == b);
  CHECK(a != c);
}

TEST_CASE("harness: report header") {
  auto cfg    = config({"duals"});
  cfg.seed    = 5;
  auto result = run_suite(cfg);
  auto j      = result.to_json();
  CHECK(j["schema"] == 1);
  CHECK(j["tool"] == "skewcat");
  CHECK(j["config"]["seed"] == 5);
  CHECK(j["status"] == "pass");
  CHECK(j["suites"].size() == 1);
  CHECK(j["suites"][0]["name"] == "duals");
  CHECK(result.passed());
}

TEST_CASE("harness: configuration errors surface before any check runs") {
  CHECK_THROWS_AS(run_suite(config({"nope"})), unknown_suite);
  auto bad_action   = config({"skew-laws"});
  bad_action.action = "nope";
  CHECK_THROWS_AS(run_suite(bad_action), unknown_action);
  auto bad_order      = config({"monoid-oracle"});
  bad_order.max_order = 9;
  CHECK_THROWS_AS(run_suite(bad_order), param_out_of_bounds);
  auto degenerate  = config({"counterexample-left"});
  degenerate.input = parse_input(gms_to_json(d_space(ext_rat::infinity())));
  CHECK_THROWS_AS(run_suite(degenerate), degenerate_probe);
}

TEST_CASE("harness: action filter restricts the action suites") {
  auto cfg   = config({"skew-laws"});
  cfg.action = "kstar";
  auto r     = run_suite(cfg);
  REQUIRE(r.suites.size() == 1);
  CHECK(r.suites[0].reports.size() == 2);
  CHECK(r.passed());
}

TEST_CASE("harness: loaded instances join the families") {
  auto cfg  = config({"initial-preservation", "category-axioms"});
  cfg.input = parse_input(chain_lattice(3).to_json());
  auto r    = run_suite(cfg);
  CHECK(r.passed());
  CHECK(r.suites[0].reports.size() == 3);
}

TEST_CASE("harness: every catalog suite is runnable by name") {
  auto const& cat = suite_catalog();
  CHECK(cat.back().name == "all");
  CHECK(cat.size() == 14);
}
