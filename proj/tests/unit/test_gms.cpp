#include <doctest.h>

#include <vector>

#include "skewcat/errors.hpp"
#include "skewcat/finite_category.hpp"
#include "skewcat/instances/gms.hpp"

using namespace skewcat;

namespace {
  ext_rat const inf = ext_rat::infinity();

  bool satisfies_triangle(std::size_t n, std::vector<ext_rat> const& d) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          if (d[i * n + j] + d[j * n + k] < d[i * n + k]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // Brute-force count of distance tables with zero diagonal.
  std::size_t count_spaces(std::size_t n, std::vector<ext_rat> const& values) {
    std::size_t off = n * (n - 1), total = 1, count = 0;
    for (std::size_t i = 0; i < off; ++i) {
      total *= values.size();
    }
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<ext_rat> d(n * n, ext_rat(0));
      std::size_t          c = code;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (i != j) {
            d[i * n + j] = values[c % values.size()];
            c /= values.size();
          }
        }
      }
      count += satisfies_triangle(n, d) ? 1 : 0;
    }
    return count;
  }
}  // namespace

TEST_CASE("gms: construction validates the triangle inequality") {
  CHECK_NOTHROW(gms::make(2, {0, 1, inf, 0}));
  CHECK_THROWS_AS(gms::make(3, {0, 1, 3, 1, 0, 1, 3, 1, 0}), invalid_space);
  CHECK_THROWS_AS(gms::make(2, {1, 1, 1, 0}), invalid_space);
  CHECK_THROWS_AS(gms::make(2, {0, 1, 1}), invalid_space);
  CHECK(gms::make(2, {0, 1, inf, 0}) == gms::make(2, {0, 1, inf, 0}));
}

TEST_CASE("gms: enumeration agrees with brute force") {
  auto grid = default_grid();
  REQUIRE(grid == std::vector<ext_rat>{0, ext_rat(1, 2), 1, 2, inf});
  CHECK(enumerate_gms(2, grid).size() == count_spaces(2, grid));
  CHECK(enumerate_gms(2, grid).size() == 25);
  CHECK(enumerate_gms(3, grid).size() == count_spaces(3, grid));
}

TEST_CASE("gms: tensor adds distances coordinatewise") {
  auto m = t3_space();
  auto n = d_space(ext_rat(1, 2));
  auto t = gms_tensor(m, n);
  REQUIRE(t.size() == 6);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      for (std::size_t i2 = 0; i2 < 3; ++i2) {
        for (std::size_t j2 = 0; j2 < 2; ++j2) {
          CHECK(t.dist(i * 2 + j, i2 * 2 + j2) == m.dist(i, i2) + n.dist(j, j2));
        }
      }
    }
  }
  CHECK(gms_tensor(point_space(), m) == m);
  CHECK(gms_tensor(m, point_space()) == m);
  CHECK(gms_tensor(m, empty_space()).size() == 0);
}

TEST_CASE("gms: truncation, flattening and scaling act pointwise") {
  auto m = t3_space();
  auto t = gms_truncate(m, 1);
  auto f = gms_flatten(m, false);
  auto s = gms_scale(m, -1);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      auto d = m.dist(i, j);
      CHECK(t.dist(i, j) == (d < ext_rat(1) ? d : ext_rat(1)));
      CHECK(f.dist(i, j) == (i == j ? ext_rat(0) : inf));
      CHECK(s.dist(i, j) == (d.is_infinite() ? inf : ext_rat(d.value() / 2)));
    }
  }
  CHECK(gms_flatten(m, true) == m);
  CHECK(gms_flatten(d_space(0), false) == d_space(0));
  CHECK(gms_flatten(d_space(ext_rat(1, 2)), false) == d_space(inf));
  CHECK(gms_truncate(d_space(inf), 0) == d_space(0));
}

TEST_CASE("gms: non-expansive maps") {
  gms_category cat;
  auto         d1 = d_space(1);
  auto         d2 = d_space(2);
  CHECK(cat.is_valid(cat.same_points(d2, d1)));
  CHECK_FALSE(cat.is_valid(cat.same_points(d1, d2)));
  CHECK(cat.hom(d_space(inf), d_space(0)).size() == 4);
  CHECK(cat.hom(d_space(0), d_space(inf)).size() == 2);
  auto rep = check_category_axioms(cat, gms_domain({empty_space(), point_space(), d1, d2, t3_space()}),
                                   budget{1'000'000, 0}, "gms");
  CHECK(rep.passed());
}

TEST_CASE("gms: coproducts put the summands at infinite distance") {
  auto co = gms_coproduct(d_space(1), t3_space());
  REQUIRE(co.space.size() == 5);
  CHECK(co.space.dist(0, 1) == ext_rat(1));
  CHECK(co.space.dist(2, 3) == ext_rat(1));
  CHECK(co.space.dist(0, 2) == inf);
  CHECK(co.space.dist(4, 1) == inf);
  CHECK(check_coproduct_universal(d_space(1), point_space(), enumerate_gms(2, default_grid())).passed());
}

TEST_CASE("gms: isometries") {
  CHECK(gms_iso_exists(d_space(1), d_space(1)).has_value());
  CHECK_FALSE(gms_iso_exists(d_space(0), d_space(inf)).has_value());
  CHECK_FALSE(gms_iso_exists(d_space(1), t3_space()).has_value());
  auto swapped = gms::make(2, {0, 2, 1, 0});
  auto iso     = gms_iso_exists(gms::make(2, {0, 1, 2, 0}), swapped);
  REQUIRE(iso.has_value());
  CHECK(*iso == std::vector<std::uint32_t>{1, 0});
}

TEST_CASE("gms: internal hom carries the sup distance") {
  auto n = d_space(1);
  auto p = d_space(2);
  auto h = gms_internal_hom(n, p);
  gms_category cat;
  REQUIRE(h.maps.size() == cat.hom(n, p).size());
  for (std::size_t f = 0; f < h.maps.size(); ++f) {
    for (std::size_t g = 0; g < h.maps.size(); ++g) {
      ext_rat sup{0};
      for (std::size_t i = 0; i < 2; ++i) {
        sup = max(sup, p.dist(h.maps[f].map[i], h.maps[g].map[i]));
      }
      CHECK(h.space.dist(f, g) == sup);
      CHECK(gms_internal_hom(n, p, 1).space.dist(f, g) == sup.scaled_pow2(-1));
    }
  }
}

TEST_CASE("gms: chain colimits") {
  std::vector<gms> stages{d_space(1), d_space(ext_rat(1, 2)), d_space(ext_rat(1, 4))};
  auto             res = gms_chain_colimit(stages, {0, 0, 0, 0}, enumerate_gms(2, default_grid()));
  CHECK(res.colimit == d_space(0));
  CHECK(res.report.passed());
  CHECK_THROWS_AS(gms_chain_colimit({d_space(1), d_space(2)}, {0, 0, 0, 0}, {}), not_monotone);
  CHECK_THROWS_AS(gms_chain_colimit(stages, {0, 1, 1, 0}, {}), not_lower_bound);
}

TEST_CASE("gms: JSON round trip") {
  for (auto const& m : {empty_space(), point_space(), t3_space(), d_space(inf)}) {
    CHECK(gms_from_json(gms_to_json(m)) == m);
  }
  auto bad = gms_to_json(t3_space());
  bad["dist"][0][2] = "9";
  CHECK_THROWS_AS(gms_from_json(bad), invalid_space);
}
