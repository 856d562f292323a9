#include <doctest.h>

#include "skewcat/errors.hpp"
#include "skewcat/finite_category.hpp"
#include "skewcat/harness.hpp"
#include "skewcat/instances/lattice.hpp"

using namespace skewcat;

TEST_CASE("finite categories: JSON round trip preserves every table") {
  auto z2 = monoid_category({{0, 1}, {1, 0}}, 0, "Z2");
  auto po = preorder_category({"a", "b", "c"}, {{true, true, true}, {false, true, true}, {false, false, true}});
  for (auto const& c : {z2, po, terminal_category(), product_table(z2, po), opposite_table(po)}) {
    auto back = finite_category::from_json(c.to_json());
    CHECK(back == c);
    CHECK(back.to_json() == c.to_json());
    CHECK(check_category_axioms(back, budget{}).passed());
  }
}

TEST_CASE("finite categories: document layout") {
  auto doc = monoid_category({{0, 1}, {1, 0}}, 0, "Z2").to_json();
  CHECK(doc["kind"] == "category");
  CHECK(doc["objects"].size() == 1);
  CHECK(doc["morphisms"].size() == 2);
  CHECK(doc["morphisms"][1]["src"] == 0);
  CHECK(doc["morphisms"][1]["tgt"] == 0);
  CHECK(doc["compose"][1][1] == 0);
  CHECK(doc["identities"][0] == 0);
}

TEST_CASE("finite categories: inconsistent tables are rejected") {
  auto doc = preorder_category({"a", "b"}, {{true, true}, {false, true}}).to_json();
  auto bad = doc;
  bad["identities"][0] = 1;  // a -> b is not an endomorphism
  CHECK_THROWS_AS(finite_category::from_json(bad), ill_typed);
  auto missing = doc;
  missing.erase("compose");
  CHECK_THROWS_AS(finite_category::from_json(missing), parse_error);
}

TEST_CASE("finite categories: product and opposite sizes") {
  auto z2 = monoid_category({{0, 1}, {1, 0}}, 0, "Z2");
  auto z3 = monoid_category({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, 0, "Z3");
  auto p  = product_table(z2, z3);
  CHECK(p.object_count() == 1);
  CHECK(p.morphism_count() == 6);
  CHECK(opposite_table(opposite_table(z3)) == z3);
}

TEST_CASE("lattices: JSON round trip and validation") {
  for (auto const& l : {diamond_lattice(), m3_lattice(), chain_lattice(4)}) {
    auto back = finite_lattice::from_json(l.to_json());
    CHECK(back.size() == l.size());
    for (auto a : l.elements()) {
      for (auto b : l.elements()) {
        CHECK(back.le(a, b) == l.le(a, b));
        CHECK(back.join(a, b) == l.join(a, b));
      }
    }
  }
  // Two incomparable maximal elements: no top.
  CHECK_THROWS_AS(finite_lattice({"bot", "a", "b"}, {{true, true, true}, {false, true, false}, {false, false, true}}),
                  invalid_space);
  auto d = diamond_lattice();
  CHECK(d.join(1, 2) == d.top());
  CHECK(d.meet(1, 2) == d.bottom());
}

TEST_CASE("input documents dispatch on kind") {
  CHECK(parse_input(diamond_lattice().to_json()).lattice.has_value());
  CHECK(parse_input(gms_to_json(t3_space())).space.has_value());
  CHECK(parse_input(terminal_category().to_json()).category.has_value());
  CHECK_THROWS_AS(parse_input(nlohmann::json{{"kind", "graph"}}), parse_error);
  CHECK_THROWS_AS(parse_input(nlohmann::json::array()), parse_error);
  CHECK_THROWS_AS(load_input("/nonexistent/input.json"), io_error);
}

TEST_CASE("reports: JSON carries witnesses with digests") {
  check_report rep("subject", 7);
  auto&        l = rep.law("law", "a = b");
  l.record_pass();
  l.record_failure({{"X", "Y"}, "lhs", "rhs", "differ"});
  auto j = rep.to_json();
  CHECK(j["subject"] == "subject");
  CHECK(j["seed"] == 7);
  REQUIRE(j["laws"].size() == 1);
  auto const& w = j["laws"][0]["witnesses"][0];
  CHECK(w["instantiation"] == nlohmann::json::array({"X", "Y"}));
  CHECK(w["lhs_digest"].get<std::string>().size() == 16);
  CHECK(w["lhs_digest"] != w["rhs_digest"]);
  CHECK(j["laws"][0]["status"] == "fail");
  CHECK_FALSE(rep.passed());
}
