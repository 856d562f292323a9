#include <doctest.h>

#include <set>
#include <vector>

#include "skewcat/errors.hpp"
#include "skewcat/harness.hpp"
#include "skewcat/semidirect.hpp"

using namespace skewcat;

namespace {
  using table = std::vector<std::vector<std::size_t>>;

  // Every n^(n*n) table, filtered by the monoid axioms with unit 0.
  std::set<table> brute_force_monoids(std::size_t n) {
    std::set<table> out;
    std::size_t     cells = n * n, total = 1;
    for (std::size_t i = 0; i < cells; ++i) {
      total *= n;
    }
    for (std::size_t code = 0; code < total; ++code) {
      table       t(n, std::vector<std::size_t>(n));
      std::size_t c = code;
      for (auto& row : t) {
        for (auto& v : row) {
          v = c % n;
          c /= n;
        }
      }
      bool ok = true;
      for (std::size_t a = 0; a < n && ok; ++a) {
        ok = t[0][a] == a && t[a][0] == a;
        for (std::size_t b = 0; b < n && ok; ++b) {
          for (std::size_t d = 0; d < n && ok; ++d) {
            ok = t[t[a][b]][d] == t[a][t[b][d]];
          }
        }
      }
      if (ok) {
        out.insert(t);
      }
    }
    return out;
  }

  // Every table act[c][x], filtered by the right-action axioms.
  std::size_t brute_force_action_count(finite_monoid const& x, finite_monoid const& c) {
    std::size_t nx = x.order(), nc = c.order(), cells = nx * nc, total = 1, count = 0;
    for (std::size_t i = 0; i < cells; ++i) {
      total *= nc;
    }
    for (std::size_t code = 0; code < total; ++code) {
      table       act(nc, std::vector<std::size_t>(nx));
      std::size_t k = code;
      for (auto& row : act) {
        for (auto& v : row) {
          v = k % nc;
          k /= nc;
        }
      }
      bool ok = true;
      for (std::size_t y = 0; y < nx && ok; ++y) {
        ok = act[c.unit][y] == c.unit;
        for (std::size_t b = 0; b < nc && ok; ++b) {
          for (std::size_t d = 0; d < nc && ok; ++d) {
            ok = c(act[b][y], act[d][y]) == act[c(b, d)][y];
          }
        }
      }
      for (std::size_t b = 0; b < nc && ok; ++b) {
        ok = act[b][x.unit] == b;
        for (std::size_t y = 0; y < nx && ok; ++y) {
          for (std::size_t z = 0; z < nx && ok; ++z) {
            ok = act[b][x(y, z)] == act[act[b][y]][z];
          }
        }
      }
      count += ok ? 1 : 0;
    }
    return count;
  }
}  // namespace

TEST_CASE("monoids: enumeration agrees with brute force") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto            ms = enumerate_monoids(n);
    std::set<table> got;
    for (auto const& m : ms) {
      got.insert(m.mult);
    }
    CHECK(got.size() == ms.size());
    CHECK(got == brute_force_monoids(n));
  }
  CHECK(enumerate_monoids(2).size() == 2);
}

TEST_CASE("monoids: action enumeration agrees with brute force") {
  std::vector<finite_monoid> all;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& m : enumerate_monoids(n)) {
      all.push_back(m);
    }
  }
  for (auto const& x : all) {
    for (auto const& c : all) {
      CHECK(enumerate_actions(x, c).size() == brute_force_action_count(x, c));
    }
  }
}

TEST_CASE("monoids: semidirect product table") {
  for (auto const& x : enumerate_monoids(2)) {
    for (auto const& c : enumerate_monoids(3)) {
      for (auto const& m : enumerate_actions(x, c)) {
        auto t = monoid_semidirect(m);
        for (std::size_t a = 0; a < 2; ++a) {
          for (std::size_t b = 0; b < 3; ++b) {
            for (std::size_t y = 0; y < 2; ++y) {
              for (std::size_t d = 0; d < 3; ++d) {
                CHECK(t(a * 3 + b, y * 3 + d) == x(a, y) * 3 + c(m(b, y), d));
              }
            }
          }
        }
        CHECK(check_monoid_laws(t).passed());
        CHECK(check_monoid_reduction(m).passed());
      }
    }
  }
}

TEST_CASE("monoids: Z2 acting on Z3 by inversion gives the symmetric group S3") {
  auto          z2 = cyclic_group(2);
  auto          z3 = cyclic_group(3);
  monoid_action inv{z2, z3, {{0, 0}, {1, 2}, {2, 1}}};
  auto          s3 = monoid_semidirect(inv);
  CHECK(s3.order() == 6);
  bool commutative = true;
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = 0; b < 6; ++b) {
      commutative = commutative && s3(a, b) == s3(b, a);
    }
  }
  CHECK_FALSE(commutative);
  CHECK(check_monoid_laws(s3).passed());
}

TEST_CASE("monoids: invalid tables are rejected") {
  auto z2 = cyclic_group(2);
  CHECK_THROWS_AS(validate_monoid_action({z2, z2, {{0, 1}, {0, 1}}}), invalid_action);
  CHECK(monoid_action_violation({z2, z2, {{0, 0}, {1, 1}}}) == std::nullopt);
  CHECK_THROWS_AS(validate_monoid({{{0, 1}, {1, 1}}, 1}), invalid_action);
}

TEST_CASE("monoids: oracle suite covers every action table") {
  auto rep = monoid_oracle(3, budget{});
  CHECK(rep.passed());
  CHECK_THROWS_AS(monoid_oracle(0, budget{}), param_out_of_bounds);
}

TEST_CASE("monoids: JSON round trip of an action") {
  monoid_action m{cyclic_group(2), cyclic_group(3), {{0, 0}, {1, 2}, {2, 1}}};
  auto          in = parse_input(monoid_action_to_json(m));
  REQUIRE(in.action.has_value());
  CHECK(in.action->act == m.act);
  CHECK(in.action->x.mult == m.x.mult);
  auto bad      = monoid_action_to_json(m);
  bad["act"][1] = {0, 1};
  CHECK_THROWS_AS(parse_input(bad), invalid_action);
}
