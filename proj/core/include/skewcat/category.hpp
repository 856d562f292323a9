#pragma once

#include <concepts>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewcat/errors.hpp"
#include "skewcat/report.hpp"

namespace skewcat {

  // A category whose objects and morphisms are values. Composition is written
  // in diagrammatic order: compose(f, g) is "f then g" and throws ill_typed
  // unless target(f) == source(g). is_valid() decides whether a payload really
  // is a morphism between its declared endpoints (a GMS map must be
  // non-expansive, a table entry must be in range, ...).
  template <typename C>
  concept category = requires(C const&                       c,
                              typename C::object const&      a,
                              typename C::morphism const&    f) {
    { c.source(f) } -> std::convertible_to<typename C::object>;
    { c.target(f) } -> std::convertible_to<typename C::object>;
    { c.identity(a) } -> std::convertible_to<typename C::morphism>;
    { c.compose(f, f) } -> std::convertible_to<typename C::morphism>;
    { c.equal(f, f) } -> std::convertible_to<bool>;
    { c.is_valid(f) } -> std::convertible_to<bool>;
    { c.describe_object(a) } -> std::convertible_to<std::string>;
    { c.describe_morphism(f) } -> std::convertible_to<std::string>;
    { a == a } -> std::convertible_to<bool>;
  };

  template <typename C>
  concept enumerable_category
      = category<C>
        && requires(C const& c, typename C::object const& a) {
             { c.hom(a, a) } -> std::convertible_to<std::vector<typename C::morphism>>;
           };

  template <category C>
  using object_t = typename C::object;
  template <category C>
  using morphism_t = typename C::morphism;

  // Finite family of objects and generating morphisms over which a law suite
  // is instantiated.
  template <category C>
  struct test_domain {
    std::vector<object_t<C>>   objects;
    std::vector<morphism_t<C>> morphisms;
  };

  template <category C>
  morphism_t<C> compose_all(C const& cat, std::initializer_list<morphism_t<C>> path) {
    auto it = path.begin();
    if (it == path.end()) {
      throw ill_typed("empty composite");
    }
    morphism_t<C> acc = *it;
    for (++it; it != path.end(); ++it) {
      acc = cat.compose(acc, *it);
    }
    return acc;
  }

  // Throws shape_error when m is not a valid morphism src -> tgt.
  template <category C>
  morphism_t<C> const& require_typed(C const& cat, morphism_t<C> const& m,
                                     object_t<C> const& src, object_t<C> const& tgt,
                                     std::string_view what) {
    if (!cat.is_valid(m)) {
      throw shape_error(std::string(what) + " is not a valid morphism: "
                        + cat.describe_morphism(m));
    }
    if (!(cat.source(m) == src) || !(cat.target(m) == tgt)) {
      throw shape_error(std::string(what) + " has the wrong type: got "
                        + cat.describe_object(cat.source(m)) + " -> "
                        + cat.describe_object(cat.target(m)) + ", expected "
                        + cat.describe_object(src) + " -> " + cat.describe_object(tgt));
    }
    return m;
  }

  template <category C>
  morphism_t<C> const& require_valid(C const& cat, morphism_t<C> const& m, std::string_view what) {
    if (!cat.is_valid(m)) {
      throw shape_error(std::string(what) + " is not a valid morphism: "
                        + cat.describe_morphism(m));
    }
    return m;
  }

  // Evaluates both sides of one law instantiation and records the outcome.
  // Typing problems (ill_typed/shape_error) while building either side are
  // recorded as shape errors, distinct from a commuting failure.
  template <category C, typename Inst, typename Lhs, typename Rhs>
  void check_parallel(C const& cat, law_result& r, Inst&& inst, Lhs&& lhs_fn, Rhs&& rhs_fn) {
    std::optional<morphism_t<C>> lhs;
    std::optional<morphism_t<C>> rhs;
    try {
      lhs.emplace(lhs_fn());
      rhs.emplace(rhs_fn());
      require_valid(cat, *lhs, "lhs");
      require_valid(cat, *rhs, "rhs");
    } catch (ill_typed const& e) {
      r.record_shape_error({inst(), lhs ? cat.describe_morphism(*lhs) : "", "", e.what()});
      return;
    } catch (shape_error const& e) {
      r.record_shape_error({inst(), lhs ? cat.describe_morphism(*lhs) : "", "", e.what()});
      return;
    }
    if (!(cat.source(*lhs) == cat.source(*rhs)) || !(cat.target(*lhs) == cat.target(*rhs))) {
      r.record_shape_error({inst(), cat.describe_morphism(*lhs), cat.describe_morphism(*rhs),
                            "sides are not parallel"});
      return;
    }
    if (cat.equal(*lhs, *rhs)) {
      r.record_pass();
    } else {
      r.record_failure({inst(), cat.describe_morphism(*lhs), cat.describe_morphism(*rhs), ""});
    }
  }

  // inv must be a morphism and a two-sided inverse of fwd. A candidate that
  // is not a morphism at all is a law failure (non-invertibility witness),
  // not a construction bug.
  template <category C, typename Inst, typename Fwd, typename Inv>
  void check_inverse(C const& cat, law_result& r, Inst&& inst, Fwd&& fwd_fn, Inv&& inv_fn) {
    std::optional<morphism_t<C>> fwd;
    std::optional<morphism_t<C>> inv;
    try {
      fwd.emplace(fwd_fn());
      inv.emplace(inv_fn());
      require_valid(cat, *fwd, "component");
    } catch (ill_typed const& e) {
      r.record_shape_error({inst(), fwd ? cat.describe_morphism(*fwd) : "", "", e.what()});
      return;
    } catch (shape_error const& e) {
      r.record_shape_error({inst(), fwd ? cat.describe_morphism(*fwd) : "", "", e.what()});
      return;
    }
    if (!cat.is_valid(*inv)) {
      r.record_failure({inst(), cat.describe_morphism(*fwd), cat.describe_morphism(*inv),
                        "candidate inverse is not a morphism"});
      return;
    }
    check_parallel(cat, r, inst, [&] { return cat.compose(*fwd, *inv); },
                   [&] { return cat.identity(cat.source(*fwd)); });
    check_parallel(cat, r, inst, [&] { return cat.compose(*inv, *fwd); },
                   [&] { return cat.identity(cat.target(*fwd)); });
  }

  // Records a typing check: fn() must return without throwing.
  template <typename Inst, typename Fn>
  void check_shape(law_result& r, Inst&& inst, Fn&& fn) {
    try {
      fn();
      r.record_pass();
    } catch (ill_typed const& e) {
      r.record_shape_error({inst(), "", "", e.what()});
    } catch (shape_error const& e) {
      r.record_shape_error({inst(), "", "", e.what()});
    }
  }

  template <category C>
  std::vector<std::string> describe_objects(C const& cat, std::initializer_list<object_t<C>> objs) {
    std::vector<std::string> out;
    out.reserve(objs.size());
    for (auto const& o : objs) {
      out.push_back(cat.describe_object(o));
    }
    return out;
  }

  // All composable pairs (f, g) drawn from gens, identities included.
  template <category C>
  std::vector<std::pair<morphism_t<C>, morphism_t<C>>> composable_pairs(
      C const& cat, std::vector<morphism_t<C>> const& gens) {
    std::vector<std::pair<morphism_t<C>, morphism_t<C>>> out;
    for (auto const& f : gens) {
      for (auto const& g : gens) {
        if (cat.target(f) == cat.source(g)) {
          out.emplace_back(f, g);
        }
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Adaptors
  ////////////////////////////////////////////////////////////////////////

  template <typename T>
  struct thin_arrow {
    T    source;
    T    target;
    bool operator==(thin_arrow const&) const = default;
  };

  // Preorder as a category: a unique morphism a -> b iff arrow_exists(a, b).
  template <typename T>
  class thin_category {
   public:
    using object   = T;
    using morphism = thin_arrow<T>;

    thin_category(std::function<bool(T const&, T const&)> arrow_exists,
                  std::function<std::string(T const&)>    show)
        : exists_(std::move(arrow_exists)), show_(std::move(show)) {}

    object   source(morphism const& f) const { return f.source; }
    object   target(morphism const& f) const { return f.target; }
    morphism identity(object const& a) const { return {a, a}; }
    morphism compose(morphism const& f, morphism const& g) const {
      if (!(f.target == g.source)) {
        throw ill_typed("thin compose " + describe_morphism(f) + " ; " + describe_morphism(g));
      }
      return {f.source, g.target};
    }
    bool equal(morphism const& f, morphism const& g) const { return f == g; }
    bool is_valid(morphism const& f) const { return exists_(f.source, f.target); }
    bool has_arrow(object const& a, object const& b) const { return exists_(a, b); }
    morphism arrow(object const& a, object const& b) const { return {a, b}; }
    std::vector<morphism> hom(object const& a, object const& b) const {
      if (exists_(a, b)) {
        return {morphism{a, b}};
      }
      return {};
    }
    std::string describe_object(object const& a) const { return show_(a); }
    std::string describe_morphism(morphism const& f) const {
      return "(" + show_(f.source) + " -> " + show_(f.target) + ")";
    }

   private:
    std::function<bool(T const&, T const&)> exists_;
    std::function<std::string(T const&)>    show_;
  };

  // Discrete category: identities only. A "morphism" with distinct endpoints
  // is representable but invalid, which is how mis-typed structure maps of
  // discrete instances surface as shape errors.
  template <typename T>
  class discrete_category {
   public:
    using object   = T;
    using morphism = thin_arrow<T>;

    explicit discrete_category(std::function<std::string(T const&)> show)
        : show_(std::move(show)) {}

    object   source(morphism const& f) const { return f.source; }
    object   target(morphism const& f) const { return f.target; }
    morphism identity(object const& a) const { return {a, a}; }
    morphism compose(morphism const& f, morphism const& g) const {
      if (!(f.target == g.source)) {
        throw ill_typed("discrete compose " + describe_morphism(f) + " ; "
                        + describe_morphism(g));
      }
      return {f.source, g.target};
    }
    bool equal(morphism const& f, morphism const& g) const { return f == g; }
    bool is_valid(morphism const& f) const { return f.source == f.target; }
    std::vector<morphism> hom(object const& a, object const& b) const {
      if (a == b) {
        return {morphism{a, a}};
      }
      return {};
    }
    // The would-be identity a -> b; valid only when a == b.
    morphism arrow(object const& a, object const& b) const { return {a, b}; }
    std::string describe_object(object const& a) const { return show_(a); }
    std::string describe_morphism(morphism const& f) const {
      return f.source == f.target ? "id[" + show_(f.source) + "]"
                                  : "(" + show_(f.source) + " => " + show_(f.target) + ")";
    }

   private:
    std::function<std::string(T const&)> show_;
  };

  template <typename M>
  struct op_morphism {
    M    arrow;  // the underlying morphism, reversed
    bool operator==(op_morphism const&) const = default;
  };

  template <category C>
  class opposite_category {
   public:
    using object   = object_t<C>;
    using morphism = op_morphism<morphism_t<C>>;

    explicit opposite_category(C base) : base_(std::move(base)) {}

    C const& base() const noexcept { return base_; }

    object   source(morphism const& f) const { return base_.target(f.arrow); }
    object   target(morphism const& f) const { return base_.source(f.arrow); }
    morphism identity(object const& a) const { return {base_.identity(a)}; }
    morphism compose(morphism const& f, morphism const& g) const {
      return {base_.compose(g.arrow, f.arrow)};
    }
    bool equal(morphism const& f, morphism const& g) const { return base_.equal(f.arrow, g.arrow); }
    bool is_valid(morphism const& f) const { return base_.is_valid(f.arrow); }
    std::vector<morphism> hom(object const& a, object const& b) const
      requires enumerable_category<C>
    {
      std::vector<morphism> out;
      for (auto& m : base_.hom(b, a)) {
        out.push_back({std::move(m)});
      }
      return out;
    }
    std::string describe_object(object const& a) const { return base_.describe_object(a); }
    std::string describe_morphism(morphism const& f) const {
      return "op" + base_.describe_morphism(f.arrow);
    }

   private:
    C base_;
  };

  template <typename XO, typename CO>
  struct pair_object {
    XO   x;
    CO   c;
    bool operator==(pair_object const&) const = default;
  };

  template <typename XM, typename CM>
  struct pair_morphism {
    XM   x;
    CM   c;
    bool operator==(pair_morphism const&) const = default;
  };

  // X x C with componentwise structure. Objects are written <X, C>.
  template <category X, category C>
  class product_category {
   public:
    using object   = pair_object<object_t<X>, object_t<C>>;
    using morphism = pair_morphism<morphism_t<X>, morphism_t<C>>;

    product_category(X x, C c) : x_(std::move(x)), c_(std::move(c)) {}

    X const& left() const noexcept { return x_; }
    C const& right() const noexcept { return c_; }

    object source(morphism const& f) const { return {x_.source(f.x), c_.source(f.c)}; }
    object target(morphism const& f) const { return {x_.target(f.x), c_.target(f.c)}; }
    morphism identity(object const& a) const { return {x_.identity(a.x), c_.identity(a.c)}; }
    morphism compose(morphism const& f, morphism const& g) const {
      return {x_.compose(f.x, g.x), c_.compose(f.c, g.c)};
    }
    bool equal(morphism const& f, morphism const& g) const {
      return x_.equal(f.x, g.x) && c_.equal(f.c, g.c);
    }
    bool is_valid(morphism const& f) const { return x_.is_valid(f.x) && c_.is_valid(f.c); }
    std::vector<morphism> hom(object const& a, object const& b) const
      requires enumerable_category<X> && enumerable_category<C>
    {
      std::vector<morphism> out;
      auto                  hx = x_.hom(a.x, b.x);
      if (hx.empty()) {
        return out;
      }
      auto hc = c_.hom(a.c, b.c);
      out.reserve(hx.size() * hc.size());
      for (auto const& f : hx) {
        for (auto const& g : hc) {
          out.push_back({f, g});
        }
      }
      return out;
    }
    std::string describe_object(object const& a) const {
      return "<" + x_.describe_object(a.x) + ", " + c_.describe_object(a.c) + ">";
    }
    std::string describe_morphism(morphism const& f) const {
      return "<" + x_.describe_morphism(f.x) + ", " + c_.describe_morphism(f.c) + ">";
    }

   private:
    X x_;
    C c_;
  };

  // Every pairing of the factor domains' objects; generators are <f, id> and
  // <id, g> for each generator plus <f, g> for each pair.
  template <category X, category C>
  test_domain<product_category<X, C>> product_domain(product_category<X, C> const& cat,
                                                     test_domain<X> const&         dx,
                                                     test_domain<C> const&         dc,
                                                     bool mixed_generators = true) {
    test_domain<product_category<X, C>> out;
    for (auto const& x : dx.objects) {
      for (auto const& c : dc.objects) {
        out.objects.push_back({x, c});
      }
    }
    for (auto const& f : dx.morphisms) {
      for (auto const& c : dc.objects) {
        out.morphisms.push_back({f, cat.right().identity(c)});
      }
    }
    for (auto const& g : dc.morphisms) {
      for (auto const& x : dx.objects) {
        out.morphisms.push_back({cat.left().identity(x), g});
      }
    }
    if (mixed_generators) {
      for (auto const& f : dx.morphisms) {
        for (auto const& g : dc.morphisms) {
          out.morphisms.push_back({f, g});
        }
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Functors and natural transformations as component data
  ////////////////////////////////////////////////////////////////////////

  template <category C, category D>
  struct functor_data {
    std::function<object_t<D>(object_t<C> const&)>     on_object;
    std::function<morphism_t<D>(morphism_t<C> const&)> on_morphism;
  };

  template <category C, category D>
  struct nat_trans_data {
    std::function<morphism_t<D>(object_t<C> const&)> component;
  };

  // Preservation of sources/targets, identities and composition over the
  // domain's objects and composable generator pairs.
  template <category C, category D>
  check_report check_functor(C const& src, D const& tgt, functor_data<C, D> const& f,
                             test_domain<C> const& dom, budget const& b,
                             std::string const& name = "functor") {
    check_report rep(name, b.seed);
    auto&        ident = rep.law("functor:identity");
    for (auto const& a : dom.objects) {
      check_parallel(
          tgt, ident, [&] { return describe_objects(src, {a}); },
          [&] { return f.on_morphism(src.identity(a)); },
          [&] { return tgt.identity(f.on_object(a)); });
    }
    auto& typing = rep.law("functor:typing");
    for (auto const& m : dom.morphisms) {
      check_shape(
          typing, [&] { return std::vector<std::string>{src.describe_morphism(m)}; },
          [&] {
            require_typed(tgt, f.on_morphism(m), f.on_object(src.source(m)),
                          f.on_object(src.target(m)), "F(f)");
          });
    }
    auto  pairs = composable_pairs(src, dom.morphisms);
    auto& comp  = rep.law("functor:composition");
    comp.sampled
        = for_each_tuple({pairs.size()}, b, name + ":composition", [&](auto idx) {
            auto const& [g, h] = pairs[idx[0]];
            check_parallel(
                tgt, comp,
                [&] {
                  return std::vector<std::string>{src.describe_morphism(g),
                                                  src.describe_morphism(h)};
                },
                [&] { return f.on_morphism(src.compose(g, h)); },
                [&] { return tgt.compose(f.on_morphism(g), f.on_morphism(h)); });
          });
    return rep;
  }

  // F(m) ; t_B == t_A ; G(m) for every generator m : A -> B.
  template <category C, category D>
  check_report check_naturality(C const& src, D const& tgt, functor_data<C, D> const& f,
                                functor_data<C, D> const& g, nat_trans_data<C, D> const& t,
                                test_domain<C> const& dom, budget const& b,
                                std::string const& name = "natural") {
    check_report rep(name, b.seed);
    auto&        typing = rep.law(name + ":typing");
    for (auto const& a : dom.objects) {
      check_shape(
          typing, [&] { return describe_objects(src, {a}); },
          [&] { require_typed(tgt, t.component(a), f.on_object(a), g.on_object(a), "t_A"); });
    }
    auto& sq = rep.law(name + ":square");
    sq.sampled = for_each_tuple({dom.morphisms.size()}, b, name, [&](auto idx) {
      auto const& m = dom.morphisms[idx[0]];
      check_parallel(
          tgt, sq, [&] { return std::vector<std::string>{src.describe_morphism(m)}; },
          [&] { return tgt.compose(f.on_morphism(m), t.component(src.target(m))); },
          [&] { return tgt.compose(t.component(src.source(m)), g.on_morphism(m)); });
    });
    return rep;
  }

}  // namespace skewcat
