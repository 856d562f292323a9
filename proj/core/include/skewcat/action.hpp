#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "skewcat/category.hpp"
#include "skewcat/skew_monoidal.hpp"

namespace skewcat {

  // Weak action of X on C, stored as component data:
  //   act(C, X)          = C^X
  //   act_x(f, C)        = C^f      : C^X -> C^Y        for f : X -> Y
  //   act_c(g, X)        = g^X      : B^X -> C^X        for g : B -> C
  //   phi2(X, B, C)      : B^X (x) C^X -> (B (x) C)^X
  //   phi0(X)            : I -> I^X
  //   psi2(X, Y, C)      : C^(X (x) Y) -> (C^X)^Y
  //   psi0(C)            : C^I -> C
  template <category X, category C>
  struct weak_action {
    using xo = object_t<X>;
    using xm = morphism_t<X>;
    using co = object_t<C>;
    using cm = morphism_t<C>;

    std::string                                           name;
    skew_monoidal<X>                                      acting;
    skew_monoidal<C>                                      acted;
    std::function<co(co const&, xo const&)>               act;
    std::function<cm(xm const&, co const&)>               act_x;
    std::function<cm(cm const&, xo const&)>               act_c;
    std::function<cm(xo const&, co const&, co const&)>    phi2;
    std::function<cm(xo const&)>                          phi0;
    std::function<cm(xo const&, xo const&, co const&)>    psi2;
    std::function<cm(co const&)>                          psi0;

    // (-)^X as a lax monoidal endofunctor of C
    lax_monoidal_functor_data<C, C> power(xo const& x) const {
      auto self = *this;
      return {{[self, x](co const& c) { return self.act(c, x); },
               [self, x](cm const& g) { return self.act_c(g, x); }},
              [self, x](co const& b, co const& c) { return self.phi2(x, b, c); },
              [self, x] { return self.phi0(x); }};
    }
  };

  // Candidate inverses of the four families of structure maps.
  template <category X, category C>
  struct action_inverses {
    std::function<morphism_t<C>(object_t<X> const&, object_t<C> const&, object_t<C> const&)> phi2_inv;
    std::function<morphism_t<C>(object_t<X> const&)>                                         phi0_inv;
    std::function<morphism_t<C>(object_t<X> const&, object_t<X> const&, object_t<C> const&)> psi2_inv;
    std::function<morphism_t<C>(object_t<C> const&)>                                         psi0_inv;

    [[nodiscard]] bool complete() const { return phi2_inv && phi0_inv && psi2_inv && psi0_inv; }
  };

  template <category X, category C>
  struct strong_action {
    weak_action<X, C>     weak;
    action_inverses<X, C> inv;
  };

  template <category X, category C>
  struct action_domain {
    test_domain<X> x;
    test_domain<C> c;
  };

  // All twelve diagram families, plus functoriality of each (-)^X and of
  // f |-> (-)^f, naturality of (-)^f, psi^{X,Y} and psi, and the typing of
  // every structure map.
  template <category X, category C>
  check_report check_weak_action(weak_action<X, C> const& a, action_domain<X, C> const& dom,
                                 budget const& b) {
    auto const&  xc  = a.acting.base;
    auto const&  cc  = a.acted.base;
    auto const&  xs  = dom.x.objects;
    auto const&  cs  = dom.c.objects;
    auto const&  fs  = dom.x.morphisms;
    auto const&  gs  = dom.c.morphisms;
    auto const&  S   = a.acted;
    std::size_t  nx  = xs.size();
    std::size_t  nc  = cs.size();
    check_report rep(a.name + ":weak-action", b.seed);

    auto inst = [&](std::vector<object_t<X>> xv, std::vector<object_t<C>> cv) {
      return [&xc, &cc, xv, cv] {
        std::vector<std::string> out;
        for (auto const& o : xv) {
          out.push_back(xc.describe_object(o));
        }
        for (auto const& o : cv) {
          out.push_back(cc.describe_object(o));
        }
        return out;
      };
    };

    // Families 1-3: each (-)^X is lax monoidal.
    for (std::size_t i = 0; i < nx; ++i) {
      auto sub = check_lax_monoidal_functor(S, S, a.power(xs[i]), dom.c, b, "power");
      rep.merge(sub);
    }

    // Families 4-5: each (-)^f is a monoidal natural transformation.
    for (auto const& f : fs) {
      auto const x = xc.source(f);
      auto const y = xc.target(f);
      nat_trans_data<C, C> t{[a, f](auto const& c) { return a.act_x(f, c); }};
      rep.merge(check_monoidal_nat(S, S, {a.power(x), a.power(y), t}, dom.c, b, "power-of-morphism"));
    }

    // Gamma is a functor: C^id = id, C^(f;g) = C^f;C^g.
    auto& gid = rep.law("gamma:identity", "C^id = id");
    for (std::size_t i = 0; i < nx; ++i) {
      for (auto const& c : cs) {
        check_parallel(cc, gid, inst({xs[i]}, {c}), [&] { return a.act_x(xc.identity(xs[i]), c); },
                       [&] { return cc.identity(a.act(c, xs[i])); });
      }
    }
    auto  xpairs = composable_pairs(xc, fs);
    auto& gcomp  = rep.law("gamma:composition", "C^(f;g) = C^f;C^g");
    gcomp.sampled = for_each_tuple({xpairs.size(), nc}, b, a.name + ":gamma-comp", [&](auto i) {
      auto const& [f, g] = xpairs[i[0]];
      auto const& c      = cs[i[1]];
      check_parallel(
          cc, gcomp, [&] { return std::vector<std::string>{xc.describe_morphism(f), xc.describe_morphism(g), cc.describe_object(c)}; },
          [&] { return a.act_x(xc.compose(f, g), c); },
          [&] { return cc.compose(a.act_x(f, c), a.act_x(g, c)); });
    });

    // Typing of psi, then its naturality in C, X and Y.
    auto& ptyping = rep.law("psi:typing", "psi2: C^(XY) -> (C^X)^Y, psi0: C^I -> C");
    for (auto const& c : cs) {
      check_shape(ptyping, inst({}, {c}), [&] {
        require_typed(cc, a.psi0(c), a.act(c, a.acting.unit), c, "psi0");
      });
    }
    for_each_tuple({nx, nx, nc}, b, a.name + ":psi-typing", [&](auto i) {
      auto const &x = xs[i[0]], &y = xs[i[1]];
      auto const& c = cs[i[2]];
      check_shape(ptyping, inst({x, y}, {c}), [&] {
        require_typed(cc, a.psi2(x, y, c), a.act(c, a.acting.t(x, y)), a.act(a.act(c, x), y), "psi2");
      });
    });
    auto& pnat_x = rep.law("psi2:natural-x", "C^(f (x) Y);psi^{X',Y} = psi^{X,Y};(C^f)^Y");
    auto& pnat_y = rep.law("psi2:natural-y", "C^(X (x) g);psi^{X,Y'} = psi^{X,Y};(C^X)^g");
    for_each_tuple({fs.size(), nx, nc}, b, a.name + ":psi-nat-xy", [&](auto i) {
      auto const& f = fs[i[0]];
      auto const& o = xs[i[1]];
      auto const& c = cs[i[2]];
      auto        mi = [&] { return std::vector<std::string>{xc.describe_morphism(f), xc.describe_object(o), cc.describe_object(c)}; };
      check_parallel(
          cc, pnat_x, mi,
          [&] { return cc.compose(a.act_x(a.acting.right_whisker(f, o), c), a.psi2(xc.target(f), o, c)); },
          [&] { return cc.compose(a.psi2(xc.source(f), o, c), a.act_c(a.act_x(f, c), o)); });
      check_parallel(
          cc, pnat_y, mi,
          [&] { return cc.compose(a.act_x(a.acting.left_whisker(o, f), c), a.psi2(o, xc.target(f), c)); },
          [&] { return cc.compose(a.psi2(o, xc.source(f), c), a.act_x(f, a.act(c, o))); });
    });
    auto& p0nat = rep.law("psi0:natural", "g^I;psi = psi;g");
    for (auto const& g : gs) {
      check_parallel(
          cc, p0nat, [&] { return std::vector<std::string>{cc.describe_morphism(g)}; },
          [&] { return cc.compose(a.act_c(g, a.acting.unit), a.psi0(cc.target(g))); },
          [&] { return cc.compose(a.psi0(cc.source(g)), g); });
    }

    // Families 6-8: oplax coherence of Gamma.
    auto& passoc = rep.law("psi:assoc", "C^alpha;psi^{XY,Z};(psi^{X,Y})^Z = psi^{X,YZ};psi^{Y,Z}_{C^X}");
    passoc.sampled = for_each_tuple({nx, nx, nx, nc}, b, a.name + ":psi-assoc", [&](auto i) {
      auto const &x = xs[i[0]], &y = xs[i[1]], &z = xs[i[2]];
      auto const& c = cs[i[3]];
      auto const& T = a.acting;
      check_parallel(
          cc, passoc, inst({x, y, z}, {c}),
          [&] {
            return compose_all(cc, {a.act_x(T.assoc(x, y, z), c), a.psi2(T.t(x, y), z, c),
                                    a.act_c(a.psi2(x, y, c), z)});
          },
          [&] { return cc.compose(a.psi2(x, T.t(y, z), c), a.psi2(y, z, a.act(c, x))); });
    });
    auto& pleft  = rep.law("psi:left", "C^lambda;psi^{I,X};(psi_C)^X = id");
    auto& pright = rep.law("psi:right", "psi^{X,I};psi_{C^X} = C^rho");
    for_each_tuple({nx, nc}, b, a.name + ":psi-unit", [&](auto i) {
      auto const& x = xs[i[0]];
      auto const& c = cs[i[1]];
      auto const& T = a.acting;
      check_parallel(
          cc, pleft, inst({x}, {c}),
          [&] { return compose_all(cc, {a.act_x(T.lunit(x), c), a.psi2(T.unit, x, c), a.act_c(a.psi0(c), x)}); },
          [&] { return cc.identity(a.act(c, x)); });
      check_parallel(
          cc, pright, inst({x}, {c}),
          [&] { return cc.compose(a.psi2(x, T.unit, c), a.psi0(a.act(c, x))); },
          [&] { return a.act_x(T.runit(x), c); });
    });

    // Families 9-10: psi^{X,Y} is monoidal (-)^(XY) => ((-)^X)^Y.
    for_each_tuple({nx, nx}, b, a.name + ":psi2-monoidal", [&](auto i) {
      auto const &x = xs[i[0]], &y = xs[i[1]];
      auto        from = a.power(a.acting.t(x, y));
      auto        to   = compose_lax(a.power(x), a.power(y), cc);
      nat_trans_data<C, C> t{[a, x, y](auto const& c) { return a.psi2(x, y, c); }};
      rep.merge(check_monoidal_nat(S, S, {from, to, t}, dom.c, b, "psi2-monoidal"));
    });
    // Families 11-12: psi is monoidal (-)^I => Id.
    {
      nat_trans_data<C, C> t{[a](auto const& c) { return a.psi0(c); }};
      rep.merge(check_monoidal_nat(S, S, {a.power(a.acting.unit), identity_lax(S), t}, dom.c, b, "psi0-monoidal"));
    }
    return rep;
  }

  template <category X, category C>
  check_report check_strong_action(strong_action<X, C> const& a, action_domain<X, C> const& dom,
                                   budget const& b) {
    if (!a.inv.complete()) {
      throw missing_witness("action '" + a.weak.name + "' lacks inverse candidates");
    }
    auto const&  w  = a.weak;
    auto const&  cc = w.acted.base;
    auto const&  xc = w.acting.base;
    auto const&  xs = dom.x.objects;
    auto const&  cs = dom.c.objects;
    check_report rep(w.name + ":strong-action", b.seed);
    rep.merge(check_weak_action(w, dom, b));
    auto two_sided = [&](law_result& r, auto make_inst, auto const& fwd, auto const& inv) {
      check_inverse(cc, r, make_inst, fwd, inv);
    };
    auto names = [&](std::vector<object_t<X>> xv, std::vector<object_t<C>> cv) {
      return [&, xv, cv] {
        std::vector<std::string> out;
        for (auto const& o : xv) {
          out.push_back(xc.describe_object(o));
        }
        for (auto const& o : cv) {
          out.push_back(cc.describe_object(o));
        }
        return out;
      };
    };
    auto& l2 = rep.law("phi2:invertible");
    l2.sampled = for_each_tuple({xs.size(), cs.size(), cs.size()}, b, w.name + ":phi2-inv", [&](auto i) {
      auto const& x = xs[i[0]];
      auto const &p = cs[i[1]], &q = cs[i[2]];
      two_sided(l2, names({x}, {p, q}), [&] { return w.phi2(x, p, q); }, [&] { return a.inv.phi2_inv(x, p, q); });
    });
    auto& l0 = rep.law("phi0:invertible");
    for (auto const& x : xs) {
      two_sided(l0, names({x}, {}), [&] { return w.phi0(x); }, [&] { return a.inv.phi0_inv(x); });
    }
    auto& p2 = rep.law("psi2:invertible");
    p2.sampled = for_each_tuple({xs.size(), xs.size(), cs.size()}, b, w.name + ":psi2-inv", [&](auto i) {
      auto const &x = xs[i[0]], &y = xs[i[1]];
      auto const& c = cs[i[2]];
      two_sided(p2, names({x, y}, {c}), [&] { return w.psi2(x, y, c); }, [&] { return a.inv.psi2_inv(x, y, c); });
    });
    auto& p0 = rep.law("psi0:invertible");
    for (auto const& c : cs) {
      two_sided(p0, names({}, {c}), [&] { return w.psi0(c); }, [&] { return a.inv.psi0_inv(c); });
    }
    return rep;
  }

  ////////////////////////////////////////////////////////////////////////
  // Monoid actions
  ////////////////////////////////////////////////////////////////////////

  using cayley_table = std::vector<std::vector<std::size_t>>;

  struct finite_monoid {
    cayley_table mult;
    std::size_t  unit = 0;

    [[nodiscard]] std::size_t order() const noexcept { return mult.size(); }
    [[nodiscard]] std::size_t operator()(std::size_t a, std::size_t b) const { return mult[a][b]; }
  };

  // Throws invalid_action unless mult is associative with two-sided unit.
  void validate_monoid(finite_monoid const& m, std::string const& what = "monoid");

  // Right action, act[c][x] = c^x.
  struct monoid_action {
    finite_monoid x;
    finite_monoid c;
    cayley_table  act;

    [[nodiscard]] std::size_t operator()(std::size_t elem, std::size_t by) const { return act[elem][by]; }
  };

  // First violated condition among b^x c^x = (bc)^x, 1^x = 1, c^(xy) =
  // (c^x)^y, c^1 = c, or nullopt.
  std::optional<std::string> monoid_action_violation(monoid_action const& m);
  void                       validate_monoid_action(monoid_action const& m);

  // Every monoid of the given order on {0..n-1} with 0 as unit (labelled
  // tables, not up to isomorphism).
  std::vector<finite_monoid> enumerate_monoids(std::size_t order);
  // Every valid action table between two monoids.
  std::vector<monoid_action> enumerate_actions(finite_monoid const& x, finite_monoid const& c);

  finite_monoid cyclic_group(std::size_t n);
  finite_monoid trivial_monoid();

  using element_category = discrete_category<std::size_t>;

  element_category                  element_category_of(std::string const& label);
  skew_monoidal<element_category>   discrete_monoidal(finite_monoid const& m, std::string const& label);

  // Discrete strict monoidal categories on the element sets, with every
  // structure map an identity. Throws invalid_action on a bad table.
  weak_action<element_category, element_category> lift_monoid_action(monoid_action const& m);

  action_domain<element_category, element_category> monoid_action_domain(monoid_action const& m);

}  // namespace skewcat
