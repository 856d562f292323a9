#include <doctest.h>

#include "skewcat/finite_category.hpp"
#include "skewcat/harness.hpp"

using namespace skewcat;

namespace {
  void require_detected(mutation_outcome const& m, std::string const& law) {
    INFO(m.name);
    CHECK(m.original.passed());
    CHECK_FALSE(m.mutated.passed());
    CHECK(m.detected());
    auto const* l = m.mutated.find(law);
    REQUIRE(l != nullptr);
    CHECK(l->failed > 0);
    CHECK_FALSE(l->witnesses.empty());
  }
}  // namespace

TEST_CASE("mutation: swapped psi2 breaks a triangle") {
  auto m = mutate_skew_laws(budget{});
  require_detected(m, "triangle:2");
}

TEST_CASE("mutation: wrong phi2 inverse") { require_detected(mutate_invertibility(budget{}), "alpha:invertible"); }

TEST_CASE("mutation: mis-scaled hom object") {
  auto m = mutate_right_closed(budget{});
  CHECK(m.detected());
}

TEST_CASE("mutation: constant left hom") { require_detected(mutate_left_closed(budget{}), "triangle-hom:count"); }

TEST_CASE("mutation: a single composition entry breaks associativity") {
  // Z3 as a one-object category; redirect a;a from a^2 to the identity.
  auto z3 = monoid_category({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, 0, "Z3");
  REQUIRE(check_category_axioms(z3, budget{}).passed());
  auto broken = z3.with_entry(1, 1, 0);
  CHECK_FALSE(check_category_axioms(broken, budget{}).passed());
}
