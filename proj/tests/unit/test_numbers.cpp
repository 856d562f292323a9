#include <doctest.h>

#include "skewcat/errors.hpp"
#include "skewcat/ext_rat.hpp"

using skewcat::ext_rat;
using skewcat::rational;

TEST_CASE("extended rationals: infinity absorbs and tops the order") {
  auto const inf = ext_rat::infinity();
  CHECK(ext_rat(1, 2) + ext_rat(1, 3) == ext_rat(5, 6));
  CHECK(ext_rat(3) + inf == inf);
  CHECK(inf + inf == inf);
  CHECK(ext_rat(1'000'000) < inf);
  CHECK(min(ext_rat(2), inf) == ext_rat(2));
  CHECK(max(ext_rat(2), inf) == inf);
  CHECK(ext_rat(0).is_zero());
  CHECK_FALSE(inf.is_zero());
}

TEST_CASE("extended rationals: zero times infinity is zero") {
  auto const inf = ext_rat::infinity();
  CHECK(inf.scaled(rational(0)) == ext_rat(0));
  CHECK(ext_rat(0).scaled(rational(5)) == ext_rat(0));
  CHECK(inf.scaled(rational(1, 2)) == inf);
}

TEST_CASE("extended rationals: powers of two scale exactly") {
  CHECK(ext_rat(3, 4).scaled_pow2(2) == ext_rat(3));
  CHECK(ext_rat(3).scaled_pow2(-3) == ext_rat(3, 8));
  CHECK(ext_rat::infinity().scaled_pow2(-10) == ext_rat::infinity());
  CHECK(ext_rat(0).scaled_pow2(7) == ext_rat(0));
}

TEST_CASE("extended rationals: text round trip") {
  for (auto const& v : {ext_rat(0), ext_rat(7), ext_rat(1, 2), ext_rat(-3 * -5, 4), ext_rat::infinity()}) {
    CHECK(ext_rat::parse(v.to_string()) == v);
  }
  CHECK(ext_rat::parse("2/4") == ext_rat(1, 2));
  CHECK_THROWS_AS(ext_rat::parse("-1"), skewcat::error);
  CHECK_THROWS_AS(ext_rat::parse("1/0"), skewcat::error);
  CHECK_THROWS_AS(ext_rat::parse("x"), skewcat::error);
}

TEST_CASE("extended rationals: negative values are rejected") {
  CHECK_THROWS_AS(ext_rat(-1), skewcat::param_out_of_bounds);
  CHECK_THROWS_AS(static_cast<void>(ext_rat(1, 2).scaled(rational(-1))), skewcat::param_out_of_bounds);
}
