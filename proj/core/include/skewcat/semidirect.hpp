#pragma once

#include <string>

#include "skewcat/action.hpp"
#include "skewcat/category.hpp"
#include "skewcat/skew_monoidal.hpp"

namespace skewcat {

  template <category X, category C>
  using semidirect_category = product_category<X, C>;

  template <category X, category C>
  struct semidirect_structure {
    skew_monoidal<semidirect_category<X, C>> structure;
    weak_action<X, C>                        action;
  };

  // <X,B> (x) <Y,C> = <X (x) Y, B^Y (x) C> with
  //   pi_C alpha  = (psi_A^{Y,Z} (x) (B^Z (x) C)) ; alpha ; (phi^Z_{A^Y,B} (x) C)
  //   pi_C lambda = lambda_C ; (phi^X (x) C)
  //   pi_C rho    = (psi_C (x) I) ; rho_C
  // and the X-parts the coherence data of X. Morphisms tensor as
  //   <f,g> (x) <h,k> = <f (x) h, (g^Y ; B'^h) (x) k>.
  template <category X, category C>
  skew_monoidal<semidirect_category<X, C>> semidirect_structure_of(weak_action<X, C> const& a) {
    using P  = semidirect_category<X, C>;
    using po = object_t<P>;
    using pm = morphism_t<P>;
    P    cat(a.acting.base, a.acted.base);
    auto S = a.acted;
    auto T = a.acting;
    skew_monoidal<P> s{"(" + a.name + ")-semidirect", cat, {}, {}, po{T.unit, S.unit}, {}, {}, {}};
    s.tensor = [a, S, T](po const& p, po const& q) {
      return po{T.t(p.x, q.x), S.t(a.act(p.c, q.x), q.c)};
    };
    s.tensor_mor = [a, S, T](pm const& l, pm const& r) {
      auto const& xc = T.base;
      auto const& cc = S.base;
      auto        y  = xc.source(r.x);
      auto        b2 = cc.target(l.c);
      auto        g  = cc.compose(a.act_c(l.c, y), a.act_x(r.x, b2));
      return pm{T.tm(l.x, r.x), S.tm(g, r.c)};
    };
    s.assoc = [a, S, T](po const& p, po const& q, po const& r) {
      auto const& cc = S.base;
      auto        A = p.c, B = q.c, Cc = r.c;
      auto        Y = q.x, Z = r.x;
      auto        c = compose_all(cc, {S.right_whisker(a.psi2(Y, Z, A), S.t(a.act(B, Z), Cc)),
                                       S.assoc(a.act(a.act(A, Y), Z), a.act(B, Z), Cc),
                                       S.right_whisker(a.phi2(Z, a.act(A, Y), B), Cc)});
      return pm{T.assoc(p.x, Y, Z), c};
    };
    s.lunit = [a, S, T](po const& p) {
      auto c = S.base.compose(S.lunit(p.c), S.right_whisker(a.phi0(p.x), p.c));
      return pm{T.lunit(p.x), c};
    };
    s.runit = [a, S, T](po const& p) {
      auto c = S.base.compose(S.right_whisker(a.psi0(p.c), S.unit), S.runit(p.c));
      return pm{T.runit(p.x), c};
    };
    return s;
  }

  // Validates the action on dom first unless validate is false (negative
  // tests build from deliberately broken actions).
  template <category X, category C>
  semidirect_structure<X, C> build_semidirect(weak_action<X, C> const& a, action_domain<X, C> const& dom,
                                              budget const& b, bool validate = true) {
    if (validate) {
      auto rep = check_weak_action(a, dom, b);
      if (!rep.passed()) {
        throw invalid_action("'" + a.name + "' fails the weak-action laws: " + rep.summary_line());
      }
    }
    return {semidirect_structure_of(a), a};
  }

  // Inverses of the semidirect coherence data, assembled from the inverses of
  // X's and C's coherence data and of the action's structure maps.
  template <category X, category C>
  invertibility_witness<semidirect_category<X, C>> semidirect_inverses(strong_action<X, C> const&      sa,
                                                                       invertibility_witness<X> const& wx,
                                                                       invertibility_witness<C> const& wc) {
    using po = object_t<semidirect_category<X, C>>;
    using pm = morphism_t<semidirect_category<X, C>>;
    if (!sa.inv.complete()) {
      throw not_strong("action '" + sa.weak.name + "' has no inverse structure maps");
    }
    auto const& a = sa.weak;
    auto const& S = a.acted;
    auto const  I = sa.inv;
    return {[a, S, I, wx, wc](po const& p, po const& q, po const& r) {
              auto A = p.c, B = q.c, Cc = r.c;
              auto Y = q.x, Z = r.x;
              auto c = compose_all(S.base, {S.right_whisker(I.phi2_inv(Z, a.act(A, Y), B), Cc),
                                            wc.assoc_inv(a.act(a.act(A, Y), Z), a.act(B, Z), Cc),
                                            S.right_whisker(I.psi2_inv(Y, Z, A), S.t(a.act(B, Z), Cc))});
              return pm{wx.assoc_inv(p.x, Y, Z), c};
            },
            [a, S, I, wx, wc](po const& p) {
              auto c = S.base.compose(S.right_whisker(I.phi0_inv(p.x), p.c), wc.lunit_inv(p.c));
              return pm{wx.lunit_inv(p.x), c};
            },
            [a, S, I, wx, wc](po const& p) {
              auto c = S.base.compose(wc.runit_inv(p.c), S.right_whisker(I.psi0_inv(p.c), S.unit));
              return pm{wx.runit_inv(p.x), c};
            }};
  }

  // Every component's X-part equals X's own coherence morphism.
  template <category X, category C>
  check_report check_projection_invariant(semidirect_structure<X, C> const& sd,
                                          test_domain<semidirect_category<X, C>> const& dom,
                                          budget const& b) {
    auto const&  s   = sd.structure;
    auto const&  T   = sd.action.acting;
    auto const&  xc  = T.base;
    auto const&  obs = dom.objects;
    std::size_t  n   = obs.size();
    check_report rep(s.name + ":projection", b.seed);
    auto&        la = rep.law("pi_X:alpha");
    la.sampled = for_each_tuple({n, n, n}, b, s.name + ":pi-alpha", [&](auto i) {
      auto const &p = obs[i[0]], &q = obs[i[1]], &r = obs[i[2]];
      check_parallel(xc, la, detail::inst_of(s.base, {p, q, r}), [&] { return s.assoc(p, q, r).x; },
                     [&] { return T.assoc(p.x, q.x, r.x); });
    });
    auto& ll = rep.law("pi_X:lambda");
    auto& lr = rep.law("pi_X:rho");
    for (auto const& p : obs) {
      check_parallel(xc, ll, detail::inst_of(s.base, {p}), [&] { return s.lunit(p).x; },
                     [&] { return T.lunit(p.x); });
      check_parallel(xc, lr, detail::inst_of(s.base, {p}), [&] { return s.runit(p).x; },
                     [&] { return T.runit(p.x); });
    }
    return rep;
  }

  ////////////////////////////////////////////////////////////////////////
  // Corepresented structure of a lax monoidal comonad
  ////////////////////////////////////////////////////////////////////////

  using point_category = discrete_category<std::size_t>;

  point_category                 point_category_of();
  skew_monoidal<point_category>  point_monoidal();

  // One-object action: C^* = T C, psi^{*,*} = comultiplication, psi = counit.
  template <category C>
  weak_action<point_category, C> comonad_action(skew_monoidal<C> const& s, lax_monoidal_comonad<C> const& T,
                                                std::string const& name = "comonad") {
    using co = object_t<C>;
    using cm = morphism_t<C>;
    auto F   = T.functor;
    return {name,
            point_monoidal(),
            s,
            [F](co const& c, std::size_t) { return F.functor.on_object(c); },
            [s, F](thin_arrow<std::size_t> const&, co const& c) { return s.id(F.functor.on_object(c)); },
            [F](cm const& g, std::size_t) { return F.functor.on_morphism(g); },
            [F](std::size_t, co const& b, co const& c) { return F.mult(b, c); },
            [F](std::size_t) { return F.unit_map(); },
            [T](std::size_t, std::size_t, co const& c) { return T.comult.component(c); },
            [T](co const& c) { return T.counit.component(c); }};
  }

  // A (x^) B = T(A) (x) B on C itself. Throws comonad_law_violation when the
  // comonad laws fail on dom.
  template <category C>
  skew_monoidal<C> corepresented_skew(skew_monoidal<C> const& s, lax_monoidal_comonad<C> const& T,
                                      test_domain<C> const& dom, budget const& b) {
    auto rep = check_lax_monoidal_comonad(s, T, dom, b);
    if (!rep.passed()) {
      throw comonad_law_violation(rep.summary_line());
    }
    using co = object_t<C>;
    using cm = morphism_t<C>;
    auto const&      To = T.functor.functor.on_object;
    skew_monoidal<C> out{s.name + "-corepresented", s.base, {}, {}, s.unit, {}, {}, {}};
    out.tensor     = [s, To](co const& a, co const& c) { return s.t(To(a), c); };
    out.tensor_mor = [s, T](cm const& f, cm const& g) { return s.tm(T.functor.functor.on_morphism(f), g); };
    out.assoc      = [s, T, To](co const& a, co const& bb, co const& c) {
      return compose_all(s.base, {s.right_whisker(T.comult.component(a), s.t(To(bb), c)),
                                  s.assoc(To(To(a)), To(bb), c),
                                  s.right_whisker(T.functor.mult(To(a), bb), c)});
    };
    out.lunit = [s, T](co const& a) {
      return s.base.compose(s.lunit(a), s.right_whisker(T.functor.unit_map(), a));
    };
    out.runit = [s, T](co const& a) {
      return s.base.compose(s.right_whisker(T.counit.component(a), s.unit), s.runit(a));
    };
    return out;
  }

  // Componentwise payload equality of the corepresented structure with the
  // semidirect product of the one-object action, under {*} x C = C.
  template <category C>
  check_report check_corepresented_agreement(skew_monoidal<C> const&                    direct,
                                             skew_monoidal<semidirect_category<point_category, C>> const& sd,
                                             test_domain<C> const& dom, budget const& b) {
    using po           = object_t<semidirect_category<point_category, C>>;
    auto const&  cat   = direct.base;
    auto const&  obs   = dom.objects;
    std::size_t  n     = obs.size();
    check_report rep(direct.name + ":agreement", b.seed);
    auto         lift  = [](object_t<C> const& c) { return po{0, c}; };
    auto&        ten   = rep.law("agree:tensor");
    auto&        alpha = rep.law("agree:alpha");
    auto&        lam   = rep.law("agree:lambda");
    auto&        rho   = rep.law("agree:rho");
    for_each_tuple({n, n}, b, "agree-tensor", [&](auto i) {
      auto const &x = obs[i[0]], &y = obs[i[1]];
      if (sd.t(lift(x), lift(y)).c == direct.t(x, y)) {
        ten.record_pass();
      } else {
        ten.record_failure({detail::inst_of(cat, {x, y})(), "", "", "tensor objects differ"});
      }
    });
    alpha.sampled = for_each_tuple({n, n, n}, b, "agree-alpha", [&](auto i) {
      auto const &x = obs[i[0]], &y = obs[i[1]], &z = obs[i[2]];
      check_parallel(cat, alpha, detail::inst_of(cat, {x, y, z}),
                     [&] { return sd.assoc(lift(x), lift(y), lift(z)).c; },
                     [&] { return direct.assoc(x, y, z); });
    });
    for (auto const& x : obs) {
      check_parallel(cat, lam, detail::inst_of(cat, {x}), [&] { return sd.lunit(lift(x)).c; },
                     [&] { return direct.lunit(x); });
      check_parallel(cat, rho, detail::inst_of(cat, {x}), [&] { return sd.runit(lift(x)).c; },
                     [&] { return direct.runit(x); });
    }
    return rep;
  }

  ////////////////////////////////////////////////////////////////////////
  // Monoid level
  ////////////////////////////////////////////////////////////////////////

  // <x,b><y,c> = <xy, b^y c>; element <x,c> is encoded x*|C| + c.
  finite_monoid monoid_semidirect(monoid_action const& m);

  // Associativity and two-sided unitality over every element tuple.
  check_report check_monoid_laws(finite_monoid const& m, std::string const& name = "monoid");

  // Object-level tensor of the categorical construction equals the monoid
  // table, and every coherence component is an identity.
  check_report check_monoid_reduction(monoid_action const& m);

}  // namespace skewcat
