#pragma once

#include <nlohmann/json.hpp>

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "skewcat/category.hpp"

namespace skewcat {

  struct obj_id {
    std::size_t index = 0;
    bool        operator==(obj_id const&) const = default;
    auto        operator<=>(obj_id const&) const = default;
  };

  struct mor_id {
    std::size_t index = 0;
    bool        operator==(mor_id const&) const = default;
    auto        operator<=>(mor_id const&) const = default;
  };

  // Category given by explicit tables: dense object and morphism handles, a
  // composition table indexed [f][g] for "f then g", and an identity per
  // object. Structural data is immutable after construction.
  class finite_category {
   public:
    using object   = obj_id;
    using morphism = mor_id;

    static constexpr std::size_t undefined = static_cast<std::size_t>(-1);

    struct arrow_record {
      std::size_t source;
      std::size_t target;
      std::string name;
    };

    // compose[f][g] is the handle of f;g, or `undefined` when not composable.
    // Throws ill_typed when the tables are inconsistent with the declared
    // sources/targets (a composite with the wrong endpoints, a missing entry
    // on a composable pair, an identity that is not an endomorphism).
    finite_category(std::vector<std::string> objects, std::vector<arrow_record> arrows,
                    std::vector<std::vector<std::size_t>> compose, std::vector<std::size_t> identities);

    [[nodiscard]] std::size_t object_count() const noexcept { return objects_.size(); }
    [[nodiscard]] std::size_t morphism_count() const noexcept { return arrows_.size(); }
    [[nodiscard]] std::vector<object>   objects() const;
    [[nodiscard]] std::vector<morphism> morphisms() const;
    [[nodiscard]] arrow_record const&   record(morphism f) const { return arrows_.at(f.index); }
    [[nodiscard]] std::size_t compose_index(std::size_t f, std::size_t g) const {
      return table_.at(f).at(g);
    }

    object   source(morphism f) const { return {arrows_.at(f.index).source}; }
    object   target(morphism f) const { return {arrows_.at(f.index).target}; }
    morphism identity(object a) const { return {identities_.at(a.index)}; }
    morphism compose(morphism f, morphism g) const;
    bool     equal(morphism f, morphism g) const { return f == g; }
    bool     is_valid(morphism f) const { return f.index < arrows_.size(); }
    std::vector<morphism> hom(object a, object b) const;
    std::string describe_object(object a) const { return objects_.at(a.index); }
    std::string describe_morphism(morphism f) const;

    // Same data with one composition entry replaced; used by the
    // mutate-and-detect tests. The replacement must keep endpoints right.
    [[nodiscard]] finite_category with_entry(std::size_t f, std::size_t g, std::size_t h) const;

    bool operator==(finite_category const& other) const;

    [[nodiscard]] nlohmann::json  to_json() const;
    static finite_category        from_json(nlohmann::json const& doc);

   private:
    std::vector<std::string>              objects_;
    std::vector<arrow_record>             arrows_;
    std::vector<std::vector<std::size_t>> table_;
    std::vector<std::size_t>              identities_;
  };

  // One-object category of a monoid given by its multiplication table
  // (element 0 need not be the identity; `unit` names it).
  finite_category monoid_category(std::vector<std::vector<std::size_t>> const& mult, std::size_t unit,
                                  std::string const& name = "*");

  // Thin category of a preorder on named points.
  finite_category preorder_category(std::vector<std::string> const&      names,
                                    std::vector<std::vector<bool>> const& le);

  finite_category terminal_category();

  // Tables of the product/opposite of table categories, materialized so they
  // can be serialized and compared by handle.
  finite_category product_table(finite_category const& x, finite_category const& c);
  finite_category opposite_table(finite_category const& c);

  // Associativity over composable triples and both identity laws, plus the
  // typing of every composite. Exhaustive when the composable triples fit in
  // the budget.
  template <category C>
  check_report check_category_axioms(C const& cat, test_domain<C> const& dom, budget const& b,
                                     std::string const& name = "category") {
    check_report rep(name, b.seed);
    auto&        left  = rep.law("identity:left", "id;f = f");
    auto&        right = rep.law("identity:right", "f;id = f");
    for (auto const& f : dom.morphisms) {
      auto inst = [&] { return std::vector<std::string>{cat.describe_morphism(f)}; };
      check_parallel(cat, left, inst, [&] { return cat.compose(cat.identity(cat.source(f)), f); },
                     [&] { return f; });
      check_parallel(cat, right, inst, [&] { return cat.compose(f, cat.identity(cat.target(f))); },
                     [&] { return f; });
    }
    auto  pairs  = composable_pairs(cat, dom.morphisms);
    auto& typing = rep.law("composite:typing", "source(f;g)=source(f), target(f;g)=target(g)");
    for (auto const& [f, g] : pairs) {
      check_shape(
          typing,
          [&] { return std::vector<std::string>{cat.describe_morphism(f), cat.describe_morphism(g)}; },
          [&] { require_typed(cat, cat.compose(f, g), cat.source(f), cat.target(g), "f;g"); });
    }
    // Triples are enumerated as (pair, third) so the sampled space stays dense.
    auto& assoc = rep.law("associativity", "(f;g);h = f;(g;h)");
    assoc.sampled = for_each_tuple({pairs.size(), dom.morphisms.size()}, b, name + ":assoc", [&](auto idx) {
      auto const& [f, g] = pairs[idx[0]];
      auto const& h      = dom.morphisms[idx[1]];
      if (!(cat.target(g) == cat.source(h))) {
        return;
      }
      check_parallel(
          cat, assoc,
          [&] {
            return std::vector<std::string>{cat.describe_morphism(f), cat.describe_morphism(g),
                                            cat.describe_morphism(h)};
          },
          [&] { return cat.compose(cat.compose(f, g), h); },
          [&] { return cat.compose(f, cat.compose(g, h)); });
    });
    return rep;
  }

  // Every object and every morphism of a table category.
  inline test_domain<finite_category> full_domain(finite_category const& cat) {
    return {cat.objects(), cat.morphisms()};
  }

  inline check_report check_category_axioms(finite_category const& cat, budget const& b,
                                            std::string const& name = "category") {
    return check_category_axioms(cat, full_domain(cat), b, name);
  }

  // Complete, duplicate-free hom list; throws not_enumerable when the
  // category cannot enumerate this hom set.
  template <category C>
  std::vector<morphism_t<C>> enumerate_hom(C const& cat, object_t<C> const& a, object_t<C> const& b) {
    if constexpr (enumerable_category<C>) {
      auto                       raw = cat.hom(a, b);
      std::vector<morphism_t<C>> out;
      out.reserve(raw.size());
      for (auto& m : raw) {
        bool dup = false;
        for (auto const& seen : out) {
          if (cat.equal(seen, m)) {
            dup = true;
            break;
          }
        }
        if (!dup) {
          out.push_back(std::move(m));
        }
      }
      return out;
    } else {
      throw not_enumerable("hom(" + cat.describe_object(a) + ", " + cat.describe_object(b) + ")");
    }
  }

  // Closure of enumerate_hom under composition over the given objects.
  template <category C>
  check_report check_hom_closure(C const& cat, std::vector<object_t<C>> const& objs, budget const& b,
                                 std::string const& name = "hom-closure") {
    check_report rep(name, b.seed);
    auto&        law = rep.law("hom:closed-under-composition");
    for_each_tuple({objs.size(), objs.size(), objs.size()}, b, name, [&](auto idx) {
      auto const& a   = objs[idx[0]];
      auto const& m   = objs[idx[1]];
      auto const& z   = objs[idx[2]];
      auto        hac = enumerate_hom(cat, a, z);
      for (auto const& f : enumerate_hom(cat, a, m)) {
        for (auto const& g : enumerate_hom(cat, m, z)) {
          auto fg    = cat.compose(f, g);
          bool found = false;
          for (auto const& h : hac) {
            if (cat.equal(h, fg)) {
              found = true;
              break;
            }
          }
          if (found) {
            law.record_pass();
          } else {
            law.record_failure({{cat.describe_morphism(f), cat.describe_morphism(g)},
                                cat.describe_morphism(fg), "", "composite missing from hom list"});
          }
        }
      }
    });
    return rep;
  }

  // Projection functors of a product category.
  template <category X, category C>
  functor_data<product_category<X, C>, X> projection_x() {
    return {[](auto const& o) { return o.x; }, [](auto const& m) { return m.x; }};
  }
  template <category X, category C>
  functor_data<product_category<X, C>, C> projection_c() {
    return {[](auto const& o) { return o.c; }, [](auto const& m) { return m.c; }};
  }

}  // namespace skewcat
