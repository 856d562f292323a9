#include <doctest.h>

#include "skewcat/errors.hpp"
#include "skewcat/harness.hpp"
#include "skewcat/instances/actions.hpp"
#include "skewcat/semidirect.hpp"

using namespace skewcat;

namespace {
  ext_rat const inf = ext_rat::infinity();
  using truth_object = object_t<semidirect_category<truth_category, gms_category>>;
}  // namespace

TEST_CASE("truth values: tensor evaluations") {
  auto s = semidirect_structure_of(truth_values_action().weak);
  // <x, B> (x) <y, C> = <x and y, B^y (x) C> with B^F the flattened space.
  CHECK(s.t({true, d_space(0)}, {false, point_space()}) == truth_object{false, d_space(0)});
  CHECK(s.t({true, d_space(ext_rat(1, 3))}, {false, point_space()}) == truth_object{false, d_space(inf)});
  CHECK(s.t({true, d_space(1)}, {true, point_space()}) == truth_object{true, d_space(1)});
  CHECK(s.t({true, d_space(1)}, {true, empty_space()}) == truth_object{true, empty_space()});
  CHECK(s.unit == truth_object{true, point_space()});
}

TEST_CASE("counterexample: right tensoring and a chain colimit") {
  for (std::size_t n : {3u, 5u, 8u}) {
    auto rep = counterexample_right_closed(n);
    CHECK(rep.passed());
    CHECK(rep.find("colimit:tensored")->checked == 1);
    CHECK(rep.find("chain:image")->checked == n);
  }
  CHECK_THROWS_AS(counterexample_right_closed(0), param_out_of_bounds);
  CHECK_THROWS_AS(counterexample_right_closed(2), param_out_of_bounds);
}

TEST_CASE("counterexample: left tensoring and a binary coproduct") {
  CHECK(counterexample_left_closed().passed());
  CHECK(counterexample_left_closed(d_space(1), false).passed());
  CHECK(counterexample_left_closed(t3_space(), true).passed());
  CHECK(counterexample_left_closed(gms::make(2, {0, ext_rat(1, 2), inf, 0}), true).passed());
}

TEST_CASE("counterexample: probes without a finite nonzero distance are degenerate") {
  CHECK_THROWS_AS(counterexample_left_closed(d_space(inf)), degenerate_probe);
  CHECK_THROWS_AS(counterexample_left_closed(d_space(0)), degenerate_probe);
  CHECK_THROWS_AS(counterexample_left_closed(point_space()), degenerate_probe);
  // Degenerate exactly when flattening is the identity.
  CHECK(gms_flatten(d_space(inf), false) == d_space(inf));
}

TEST_CASE("initial object: preserved only by bottom probes") {
  for (auto const& l : {diamond_lattice(), m3_lattice(), chain_lattice(3)}) {
    auto rep = initial_preservation(l, 2);
    CHECK(rep.passed());
    auto nontrivial = (l.size() - 1) * 3;
    CHECK(rep.find("initial:not-preserved")->checked == nontrivial);
    CHECK(rep.find("initial:bottom-probe")->checked == 3);
  }
}

TEST_CASE("initial object: the copower tensor") {
  auto l = diamond_lattice();
  auto s = semidirect_structure_of(copower_action(l).weak);
  // <0, bot> (x) <Y, c> = <0 x Y, bot^Y v c> = <0, c>
  for (auto c : l.elements()) {
    for (std::size_t y = 0; y <= 2; ++y) {
      auto t = s.t({0, l.bottom()}, {y, c});
      CHECK(t.x == 0);
      CHECK(t.c == c);
    }
  }
}
