#include <doctest.h>

#include <cstdint>
#include <vector>

#include "skewcat/errors.hpp"
#include "skewcat/finite_category.hpp"
#include "skewcat/instances/finset.hpp"

using namespace skewcat;

namespace {
  // Index of a table among all |base|^n tables, most significant entry first.
  std::size_t index_of(std::vector<std::uint32_t> const& t, std::size_t base) {
    std::size_t v = 0;
    for (auto d : t) {
      v = v * base + d;
    }
    return v;
  }

  std::size_t ipow(std::size_t b, std::size_t e) {
    std::size_t r = 1;
    while (e-- > 0) {
      r *= b;
    }
    return r;
  }
}  // namespace

TEST_CASE("finset: hom sets have |B|^|A| elements in index order") {
  finset_category cat;
  for (std::size_t a = 0; a <= 3; ++a) {
    for (std::size_t b = 0; b <= 3; ++b) {
      auto hs = cat.hom(a, b);
      REQUIRE(hs.size() == ipow(b, a));
      for (std::size_t i = 0; i < hs.size(); ++i) {
        CHECK(index_of(hs[i].map, b) == i);
        CHECK(finset::encode(hs[i].map, b) == i);
        CHECK(finset::decode(i, a, b) == hs[i].map);
      }
    }
  }
}

TEST_CASE("finset: category axioms on all functions between sets of size <= 3") {
  auto rep = check_category_axioms(finset_category{}, finset_domain(3, 1000), budget{1'000'000, 0}, "finset");
  CHECK(rep.passed());
  CHECK(rep.count_failed() == 0);
}

TEST_CASE("finset: products are row-major pairs") {
  finset_category cat;
  auto            f = cat.make(2, 3, {2, 0});
  auto            g = cat.make(3, 2, {1, 1, 0});
  auto            h = finset::product_map(f, g);
  REQUIRE(h.source == 6);
  REQUIRE(h.target == 6);
  for (std::uint32_t i = 0; i < 2; ++i) {
    for (std::uint32_t j = 0; j < 3; ++j) {
      CHECK(h.map[i * 3 + j] == f.map[i] * 2 + g.map[j]);
    }
  }
  CHECK(finset::proj1(2, 3).map == std::vector<std::uint32_t>{0, 0, 0, 1, 1, 1});
  CHECK(finset::proj2(2, 3).map == std::vector<std::uint32_t>{0, 1, 2, 0, 1, 2});
}

TEST_CASE("finset: sums place the first summand first") {
  finset_category cat;
  auto            f = cat.make(2, 2, {1, 0});
  auto            g = cat.make(1, 3, {2});
  auto            s = finset::sum_map(f, g);
  CHECK(s.source == 3);
  CHECK(s.target == 5);
  CHECK(s.map == std::vector<std::uint32_t>{1, 0, 4});
  CHECK(finset::copair(cat.make(2, 4, {3, 1}), cat.make(1, 4, {0})).map == std::vector<std::uint32_t>{3, 1, 0});
}

TEST_CASE("finset: currying matches the table encoding and is invertible") {
  finset_category cat;
  for (std::size_t a = 0; a <= 2; ++a) {
    for (std::size_t b = 0; b <= 2; ++b) {
      for (std::size_t c = 0; c <= 2; ++c) {
        for (auto const& g : cat.hom(a * b, c)) {
          auto r = finset::curry_right(g, a, b);
          auto l = finset::curry_left(g, a, b);
          REQUIRE(r.target == ipow(c, b));
          REQUIRE(l.target == ipow(c, a));
          for (std::size_t i = 0; i < a; ++i) {
            std::vector<std::uint32_t> row;
            for (std::size_t j = 0; j < b; ++j) {
              row.push_back(g.map[i * b + j]);
            }
            CHECK(r.map[i] == index_of(row, c));
          }
          for (std::size_t j = 0; j < b; ++j) {
            std::vector<std::uint32_t> col;
            for (std::size_t i = 0; i < a; ++i) {
              col.push_back(g.map[i * b + j]);
            }
            CHECK(l.map[j] == index_of(col, c));
          }
          CHECK(finset::uncurry_right(r, a, b, c) == g);
          CHECK(finset::uncurry_left(l, a, b, c) == g);
        }
      }
    }
  }
}

TEST_CASE("finset: inverses of bijections") {
  finset_category cat;
  auto            p = cat.make(3, 3, {2, 0, 1});
  auto            q = finset::invert(p);
  CHECK(cat.compose(p, q) == cat.identity(3));
  CHECK(cat.compose(q, p) == cat.identity(3));
  CHECK(finset::is_injective(p));
  CHECK_FALSE(finset::is_injective(cat.make(2, 2, {0, 0})));
  CHECK_THROWS_AS(finset::invert(cat.make(2, 2, {0, 0})), shape_error);
}

TEST_CASE("finset: oversized carriers are refused") {
  CHECK(checked_pow(2, 22) == (std::size_t{1} << 22));
  CHECK_THROWS_AS(checked_pow(2, 23), param_out_of_bounds);
  CHECK_THROWS_AS(finset::exp(30, 3), param_out_of_bounds);
}
