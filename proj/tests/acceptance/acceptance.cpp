// Acceptance driver: one PASS/FAIL line per criterion.
//
//   acceptance [--criterion N]
//
// Every comparison is exact (rational arithmetic, zero tolerance). Exit 0
// iff every selected criterion passes.

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "skewcat/closedness.hpp"
#include "skewcat/harness.hpp"
#include "skewcat/instances/actions.hpp"
#include "skewcat/semidirect.hpp"

using namespace skewcat;

namespace {

  struct verdict {
    bool        pass = true;
    std::string detail;

    void require(bool ok, std::string const& what) {
      pass = pass && ok;
      detail += (detail.empty() ? "" : "; ") + what + (ok ? " ok" : " FAILED");
    }
    void require(check_report const& r) { require(r.passed(), r.summary_line()); }
  };

  verdict monoid_oracle_criterion() {
    verdict v;
    v.require(monoid_oracle(3, budget{}));
    return v;
  }

  verdict skew_law_criterion() {
    verdict v;
    v.require(skew_laws_truncation(budget{}, true));
    v.require(skew_laws_truncation(budget{}, false));
    v.require(skew_laws_truth_values(budget{}, true));
    v.require(skew_laws_truth_values(budget{}, false));
    v.require(skew_laws_corepresented(budget{}));
    return v;
  }

  verdict invertibility_criterion() {
    verdict v;
    v.require(invertibility_truth_values(budget{}));
    v.require(invertibility_kstar(1, budget{}));
    v.require(invertibility_kstar(2, budget{}));
    v.require(invertibility_finset_op(3, budget{}));
    v.require(invertibility_copower(diamond_lattice(), 2, budget{}));
    v.require(invertibility_copower(m3_lattice(), 2, budget{}));
    auto neg       = invertibility_truncation_trivial(budget{});
    bool witnessed = false;
    for (auto const& l : neg.laws()) {
      witnessed = witnessed || (l.failed > 0 && !l.witnesses.empty());
    }
    v.require(!neg.passed() && witnessed, "truncation with trivial inverses fails with a witness");
    return v;
  }

  // Expected payloads: eval deformed by x^-2k, coeval undeformed.
  verdict duals_criterion() {
    verdict            v;
    std::int64_t const k  = 1;
    auto               sa = kstar_action(k);
    auto               s  = semidirect_structure_of(sa.weak);
    auto               w  = semidirect_inverses(sa, identity_inverses(sa.weak.acting), identity_inverses(sa.weak.acted));
    std::size_t        snakes = 0, payloads = 0, total = 0;
    std::string        first_mismatch;
    for (auto x : {rational(1, 2), rational(1), rational(2), rational(3)}) {
      for (std::size_t n = 0; n <= 2; ++n) {
        ++total;
        object_t<semidirect_category<kstar_category, matcat>> p{x, n};
        auto d = left_dual_sd(sa, kstar_dual(x), matcat_dual(n), p);
        snakes += check_duality(s, w, p, d).passed() ? 1 : 0;
        auto want_eval   = mat::scaled(mat::evaluation(n), rational_pow(x, -2 * k));
        auto want_coeval = mat::coevaluation(n);
        if (d.eval.c == want_eval && d.coeval.c == want_coeval) {
          ++payloads;
        } else if (first_mismatch.empty()) {
          matcat m;
          first_mismatch = "x=" + to_string(x) + ", n=" + std::to_string(n) + ": eval " + m.describe_morphism(d.eval.c)
                           + " vs " + m.describe_morphism(want_eval) + ", coeval " + m.describe_morphism(d.coeval.c)
                           + " vs " + m.describe_morphism(want_coeval);
        }
      }
    }
    v.require(snakes == total, "snakes " + std::to_string(snakes) + "/" + std::to_string(total));
    v.require(payloads == total, "exponent payloads " + std::to_string(payloads) + "/" + std::to_string(total)
                                     + (first_mismatch.empty() ? "" : " (first mismatch " + first_mismatch + ")"));
    return v;
  }

  verdict right_closed_criterion() {
    verdict v;
    v.require(right_closed_scaling(3, budget{}));
    v.require(right_closed_agreement(3, budget{}));
    return v;
  }

  verdict left_closed_criterion() {
    verdict v;
    v.require(left_closed_copower(diamond_lattice(), 2, budget{}));
    v.require(left_closed_self_tensor(2, budget{}));
    return v;
  }

  verdict counterexample_criterion() {
    verdict v;
    v.require(counterexample_right_closed(5));
    v.require(counterexample_left_closed());
    v.require(initial_preservation(diamond_lattice(), 2));
    v.require(initial_preservation(m3_lattice(), 2));
    return v;
  }

  verdict mutation_criterion() {
    verdict v;
    for (auto const& m : {mutate_skew_laws(budget{}), mutate_invertibility(budget{}), mutate_right_closed(budget{}),
                          mutate_left_closed(budget{})}) {
      v.require(m.detected(), m.name + " detected");
    }
    return v;
  }

  verdict determinism_criterion() {
    verdict      v;
    suite_config cfg;
    cfg.suites = {"all"};
    cfg.seed   = 7;
    cfg.jobs   = 1;
    auto first  = run_suite(cfg).to_json().dump(2);
    auto second = run_suite(cfg).to_json().dump(2);
    cfg.jobs    = std::max(2u, std::thread::hardware_concurrency());
    auto third  = run_suite(cfg).to_json().dump(2);
    v.require(first == second, "two sequential runs byte-identical (" + std::to_string(first.size()) + " bytes)");
    v.require(first == third, "parallel run byte-identical");
    return v;
  }

  struct criterion {
    int                      id;
    std::string              name;
    std::function<verdict()> run;
  };

  std::vector<criterion> const& criteria() {
    static std::vector<criterion> const all{
        {1, "monoid oracle (|X|, |C| <= 3, every action table)", monoid_oracle_criterion},
        {2, "skew-law soundness (truncation, truth values, corepresented comonad)", skew_law_criterion},
        {3, "strong actions give monoidal products; truncation has no inverses", invertibility_criterion},
        {4, "left duals in K* |x MatCat: snakes and deformation exponents", duals_criterion},
        {5, "right-closedness and agreement of the two hom constructions", right_closed_criterion},
        {6, "left-closedness (diamond copower, self tensor)", left_closed_criterion},
        {7, "counterexamples and initial-object non-preservation", counterexample_criterion},
        {8, "mutation sensitivity of suites 2, 3, 5, 6", mutation_criterion},
        {9, "determinism of --suite all with seed 7", determinism_criterion},
    };
    return all;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int      only = 0;
  app.add_option("--criterion", only, "run a single criterion (1-9)")->check(CLI::Range(1, 9));
  CLI11_PARSE(app, argc, argv);

  bool all_pass = true;
  for (auto const& c : criteria()) {
    if (only != 0 && c.id != only) {
      continue;
    }
    verdict v;
    try {
      v = c.run();
    } catch (std::exception const& e) {
      v.pass   = false;
      v.detail = std::string("exception: ") + e.what();
    }
    all_pass = all_pass && v.pass;
    std::cout << (v.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << " [exact]  -- " << v.detail
              << std::endl;
  }
  return all_pass ? 0 : 1;
}
