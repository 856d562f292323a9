#include <doctest.h>

#include "skewcat/closedness.hpp"
#include "skewcat/harness.hpp"
#include "skewcat/instances/actions.hpp"
#include "skewcat/semidirect.hpp"

using namespace skewcat;

namespace {
  budget const full{1'000'000, 0};

  law_result const& law_of(check_report const& r, std::string const& name) {
    auto const* l = r.find(name);
    REQUIRE(l != nullptr);
    return *l;
  }
}  // namespace

TEST_CASE("skew laws: strict cartesian finite sets pass") {
  auto s = finset_cartesian();
  CHECK(check_skew_laws(s, finset_domain(2), full).passed());
  CHECK(check_skew_laws(finset_cocartesian(), finset_domain(2), full).passed());
}

TEST_CASE("skew laws: a non-natural associator is caught") {
  auto s  = finset_cartesian();
  s.assoc = [](std::size_t a, std::size_t b, std::size_t c) {
    std::size_t                n = a * b * c;
    std::vector<std::uint32_t> rev(n);
    for (std::size_t i = 0; i < n; ++i) {
      rev[i] = static_cast<std::uint32_t>(n - 1 - i);
    }
    return finset::fn{n, n, rev};
  };
  auto rep = check_skew_laws(s, finset_domain(2), full);
  CHECK_FALSE(rep.passed());
  CHECK(law_of(rep, "alpha:natural").failed > 0);
  CHECK_FALSE(law_of(rep, "alpha:natural").witnesses.empty());
}

TEST_CASE("skew laws: semidirect products of the metric actions") {
  CHECK(skew_laws_truncation(budget{}, true).passed());
  CHECK(skew_laws_truth_values(budget{}, true).passed());
  CHECK(skew_laws_corepresented(budget{}).passed());
}

TEST_CASE("truncation: the reverse of phi2 expands distances") {
  // min(1,1) + min(1,1) = 2 > min(1 + 1, 1) = 1
  auto         d1  = d_space(1);
  auto         lhs = gms_truncate(gms_tensor(d1, d1), 1);
  auto         rhs = gms_tensor(gms_truncate(d1, 1), gms_truncate(d1, 1));
  gms_category cat;
  CHECK(lhs.dist(0, 3) == ext_rat(1));
  CHECK(rhs.dist(0, 3) == ext_rat(2));
  CHECK(cat.is_valid(cat.same_points(rhs, lhs)));
  CHECK_FALSE(cat.is_valid(cat.same_points(lhs, rhs)));
}

TEST_CASE("truncation: trivial inverse candidates are rejected with a witness") {
  auto rep = invertibility_truncation_trivial(budget{});
  CHECK_FALSE(rep.passed());
  bool witnessed = false;
  for (auto const& l : rep.laws()) {
    witnessed = witnessed || (l.failed > 0 && !l.witnesses.empty());
  }
  CHECK(witnessed);
}

TEST_CASE("invertibility: strong actions give monoidal semidirect products") {
  CHECK(invertibility_truth_values(budget{}).passed());
  CHECK(invertibility_kstar(1, budget{}).passed());
  CHECK(invertibility_kstar(2, budget{}).passed());
  CHECK(invertibility_finset_op(2, budget{}).passed());
  CHECK(invertibility_copower(diamond_lattice(), 2, budget{}).passed());
  CHECK(invertibility_copower(m3_lattice(), 2, budget{}).passed());
}

TEST_CASE("duals: deformation exponents in K* |x MatCat") {
  for (std::int64_t k : {1, 2}) {
    auto sa = kstar_action(k);
    auto s  = semidirect_structure_of(sa.weak);
    auto w  = semidirect_inverses(sa, identity_inverses(sa.weak.acting), identity_inverses(sa.weak.acted));
    for (auto x : {rational(1, 2), rational(1), rational(2), rational(3)}) {
      rational x2k = 1;
      for (std::int64_t i = 0; i < 2 * k; ++i) {
        x2k *= x;
      }
      for (std::size_t n = 0; n <= 2; ++n) {
        object_t<semidirect_category<kstar_category, matcat>> p{x, n};
        auto d = left_dual_sd(sa, kstar_dual(x), matcat_dual(n), p);
        CHECK(d.dual.x == 1 / x);
        CHECK(d.dual.c == n);
        CHECK(d.eval.c == mat::evaluation(n));
        CHECK(d.coeval.c == mat::scaled(mat::coevaluation(n), x2k));
        CHECK(check_duality(s, w, p, d).passed());

        // Moving the whole deformation onto eval breaks the zig-zags
        // unless x^2k = 1 or the object is zero-dimensional.
        auto moved     = d;
        moved.eval.c   = mat::scaled(mat::evaluation(n), 1 / x2k);
        moved.coeval.c = mat::coevaluation(n);
        CHECK(check_duality(s, w, p, moved).passed() == (x2k == rational(1) || n == 0));
      }
    }
  }
}

TEST_CASE("duals: trace pairing on K^n") {
  auto ev = mat::evaluation(2);
  auto co = mat::coevaluation(2);
  CHECK(ev.source == 4);
  CHECK(ev.target == 1);
  CHECK(co.source == 1);
  CHECK(co.target == 4);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      CHECK(ev.at(0, i * 2 + j) == rational(i == j ? 1 : 0));
      CHECK(co.at(i * 2 + j, 0) == rational(i == j ? 1 : 0));
    }
  }
}

TEST_CASE("closedness: right homs of the scaling action") {
  CHECK(right_closed_scaling(3, budget{}).passed());
  CHECK(right_closed_agreement(2, budget{}).passed());
}

TEST_CASE("closedness: scaled metric right adjoint") {
  auto r = scaling_right_adjoint();
  CHECK(r.obj(d_space(4), 2) == d_space(1));
  CHECK(r.obj(d_space(ext_rat::infinity()), 3) == d_space(ext_rat::infinity()));
}

TEST_CASE("closedness: left homs over cocartesian acted categories") {
  CHECK(left_closed_copower(diamond_lattice(), 2, budget{}).passed());
  CHECK(left_closed_self_tensor(2, budget{}).passed());
}

TEST_CASE("actions: catalog entries resolve and unknown names throw") {
  for (auto const& a : action_catalog()) {
    CHECK(find_action(a.name).name == a.name);
  }
  CHECK_FALSE(find_action("truncation").strong);
  CHECK(find_action("truth_values").strong);
  CHECK_THROWS_AS(find_action("nope"), unknown_action);
  CHECK_THROWS_AS(finset_j_action(0), param_out_of_bounds);
  CHECK_THROWS_AS(finset_j_action(5), param_out_of_bounds);
}
