#pragma once

#include <nlohmann/json.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skewcat/action.hpp"
#include "skewcat/finite_category.hpp"
#include "skewcat/instances/gms.hpp"
#include "skewcat/instances/lattice.hpp"
#include "skewcat/report.hpp"

namespace skewcat {

  inline constexpr int report_schema = 1;

  // Extra instance data supplied with --load.
  struct loaded_input {
    std::string                    kind;  // category | monoid_action | gms | lattice
    std::optional<finite_category> category;
    std::optional<monoid_action>   action;
    std::optional<gms>             space;
    std::optional<finite_lattice>  lattice;
  };

  // Throws io_error or parse_error.
  loaded_input   load_input(std::string const& path);
  loaded_input   parse_input(nlohmann::json const& doc);
  nlohmann::json monoid_action_to_json(monoid_action const& m);

  struct suite_config {
    std::vector<std::string> suites{"all"};
    std::string              action;  // empty: every action the suite covers
    std::uint64_t            budget    = 10'000;
    std::uint64_t            seed      = 0;
    std::size_t              max_order = 3;
    std::size_t              jobs      = 1;
    std::optional<loaded_input> input;
    std::string                 input_label;  // recorded in the report
  };

  struct suite_info {
    std::string name;
    std::string summary;
  };
  std::vector<suite_info> const& suite_catalog();

  struct suite_result {
    std::string               name;
    std::vector<check_report> reports;

    [[nodiscard]] bool passed() const;
  };

  struct run_result {
    suite_config              config;
    std::vector<suite_result> suites;

    [[nodiscard]] bool           passed() const;
    // Deterministic in the config; the worker count is not recorded.
    [[nodiscard]] nlohmann::json to_json() const;
  };

  // Throws unknown_suite / unknown_action before running anything.
  run_result run_suite(suite_config const& cfg);

  ////////////////////////////////////////////////////////////////////////
  // Individual checks, shared by the suites, the tests and the
  // acceptance driver
  ////////////////////////////////////////////////////////////////////////

  // Every monoid pair up to max_order and every action table between them:
  // the semidirect monoid's laws and the reduction of the categorical
  // construction to it.
  check_report monoid_oracle(std::size_t max_order, budget const& b);

  // Truncation and truth-values semidirect structures and the corepresented
  // structure of the flattening comonad. `core` is the family on which every
  // law is checked exhaustively; otherwise the wider family of spaces with at
  // most two points (plus an asymmetric three-point space), sampled under b.
  check_report skew_laws_truncation(budget const& b, bool core, std::vector<gms> const& extra = {});
  check_report skew_laws_truth_values(budget const& b, bool core, std::vector<gms> const& extra = {});
  check_report skew_laws_corepresented(budget const& b, std::vector<gms> const& extra = {});

  // Invertibility of the semidirect coherence data from the action's inverse
  // structure maps.
  check_report invertibility_truth_values(budget const& b);
  check_report invertibility_kstar(std::int64_t k, budget const& b);
  check_report invertibility_finset_op(std::size_t max_set, budget const& b);
  check_report invertibility_copower(finite_lattice const& l, std::size_t max_set, budget const& b);
  // Truncation with identity-on-points inverse candidates; expected to fail.
  check_report invertibility_truncation_trivial(budget const& b);

  // left_dual_sd on <x, K^n> and check_duality in the semidirect product.
  check_report duals_kstar(std::int64_t k, std::vector<rational> const& xs, std::size_t max_dim);

  // Scaling action: right adjoint, hom adjunctions of X, C and X |x C,
  // exponents 0..max_exp, spaces D_t for t in the grid.
  check_report right_closed_scaling(std::int64_t max_exp, budget const& b);
  // Integer exponents: the hom built from duals against the hom built from
  // the right adjoint, both adjunctions and their agreement.
  check_report right_closed_agreement(std::int64_t max_exp, budget const& b);

  check_report left_closed_copower(finite_lattice const& l, std::size_t max_set, budget const& b);
  check_report left_closed_self_tensor(std::size_t max_set, budget const& b);

  // <T, D_{1/n}> chain against its image under - (x) <F, 1>.
  check_report counterexample_right_closed(std::size_t chain_length = 5);
  // <x, M> (x) - on the coproduct of <F, 1> and <T, 0>. Throws
  // degenerate_probe when M has no pair at finite nonzero distance.
  check_report counterexample_left_closed(gms const& probe, bool x = true);
  check_report counterexample_left_closed();
  // <0, bot> (x) <Y, c> in FinSet |x L for every probe: fails to be initial
  // exactly when c is not bottom.
  check_report initial_preservation(finite_lattice const& l, std::size_t max_set = 2);

  // A single-component mutation of a passing instance, and the check that
  // must catch it.
  struct mutation_outcome {
    std::string  name;
    check_report original;
    check_report mutated;

    [[nodiscard]] bool detected() const { return original.passed() && !mutated.passed(); }
  };
  // psi2 of truncation replaced by the swap on symmetric two-point spaces.
  mutation_outcome mutate_skew_laws(budget const& b);
  // phi2 inverse of kstar(k=1) using x^k instead of x^-k.
  mutation_outcome mutate_invertibility(budget const& b);
  // Hom object of the scaling instance built at scale 1 instead of 0.
  mutation_outcome mutate_right_closed(budget const& b);
  // B |> C = 1 for every B, C in the copower instance.
  mutation_outcome mutate_left_closed(budget const& b);

}  // namespace skewcat
