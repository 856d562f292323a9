#pragma once

#include <functional>
#include <string>
#include <vector>

#include "skewcat/action.hpp"
#include "skewcat/category.hpp"
#include "skewcat/finite_category.hpp"
#include "skewcat/semidirect.hpp"
#include "skewcat/skew_monoidal.hpp"

namespace skewcat {

  ////////////////////////////////////////////////////////////////////////
  // Duals
  ////////////////////////////////////////////////////////////////////////

  // Left dual: eval : dual (x) A -> I, coeval : I -> A (x) dual.
  template <category C>
  struct dual_data {
    object_t<C>   dual;
    morphism_t<C> eval;
    morphism_t<C> coeval;
  };

  // Both zig-zags, with the ambient coherence inserted:
  //   A -> IA -> (A dA)A -> A(dA A) -> AI -> A            = id
  //   dA -> dA I -> dA(A dA) -> (dA A)dA -> I dA -> dA    = id
  template <category C>
  check_report check_duality(skew_monoidal<C> const& s, invertibility_witness<C> const& w, object_t<C> const& a,
                             dual_data<C> const& d, std::string const& name = "duality") {
    auto const&  cat = s.base;
    check_report rep(name);
    auto         inst = [&] { return std::vector<std::string>{cat.describe_object(a), cat.describe_object(d.dual)}; };
    auto&        typing = rep.law("dual:typing", "eval : dA (x) A -> I, coeval : I -> A (x) dA");
    check_shape(typing, inst, [&] {
      require_typed(cat, d.eval, s.t(d.dual, a), s.unit, "eval");
      require_typed(cat, d.coeval, s.unit, s.t(a, d.dual), "coeval");
    });
    auto& snake1 = rep.law("snake:1", "lambda ; (coeval (x) A) ; alpha^-1 ; (A (x) eval) ; rho = id");
    check_parallel(
        cat, snake1, inst,
        [&] {
          return compose_all(cat, {s.lunit(a), s.right_whisker(d.coeval, a), w.assoc_inv(a, d.dual, a),
                                   s.left_whisker(a, d.eval), s.runit(a)});
        },
        [&] { return s.id(a); });
    auto& snake2 = rep.law("snake:2", "rho^-1 ; (dA (x) coeval) ; alpha ; (eval (x) dA) ; lambda^-1 = id");
    check_parallel(
        cat, snake2, inst,
        [&] {
          return compose_all(cat, {w.runit_inv(d.dual), s.left_whisker(d.dual, d.coeval), s.assoc(d.dual, a, d.dual),
                                   s.right_whisker(d.eval, d.dual), w.lunit_inv(d.dual)});
        },
        [&] { return s.id(d.dual); });
    return rep;
  }

  // Dual of <X, A> in the semidirect product of a strong action:
  //   dual   = <dX, (dA)^dX>
  //   eval   = <eval_X, ([psi^{dX,X}]^-1 ; (dA)^{eval_X} ; psi_dA) (x) A ; eval_A>
  //   coeval = <coeval_X, phi^dX ; (coeval_A)^dX ; [phi^dX_{A,dA}]^-1>
  template <category X, category C>
  dual_data<semidirect_category<X, C>> left_dual_sd(strong_action<X, C> const& sa, dual_data<X> const& xd,
                                                    dual_data<C> const& cd, object_t<semidirect_category<X, C>> const& p) {
    if (!sa.inv.complete()) {
      throw not_strong("action '" + sa.weak.name + "' has no inverse structure maps");
    }
    using po      = object_t<semidirect_category<X, C>>;
    using pm      = morphism_t<semidirect_category<X, C>>;
    auto const& a = sa.weak;
    auto const& S = a.acted;
    auto const& cc = S.base;
    auto        dX = xd.dual;
    auto        dA = cd.dual;
    auto        X0 = p.x;
    auto        A  = p.c;
    auto        e_c = compose_all(cc, {sa.inv.psi2_inv(dX, X0, dA), a.act_x(xd.eval, dA), a.psi0(dA)});
    auto        ev  = cc.compose(S.right_whisker(e_c, A), cd.eval);
    auto        co  = compose_all(cc, {a.phi0(dX), a.act_c(cd.coeval, dX), sa.inv.phi2_inv(dX, A, dA)});
    return {po{dX, a.act(dA, dX)}, pm{xd.eval, ev}, pm{xd.coeval, co}};
  }

  ////////////////////////////////////////////////////////////////////////
  // Right adjoints of the action functors
  ////////////////////////////////////////////////////////////////////////

  // (-)^X -| (-)_X with unit A -> (A^X)_X and counit (C_X)^X -> C.
  template <category X, category C>
  struct right_adjoint_data {
    std::function<object_t<C>(object_t<C> const&, object_t<X> const&)>   obj;
    std::function<morphism_t<C>(morphism_t<C> const&, object_t<X> const&)> mor;
    std::function<morphism_t<C>(object_t<C> const&, object_t<X> const&)> unit;
    std::function<morphism_t<C>(object_t<C> const&, object_t<X> const&)> counit;
  };

  // Triangle identities of each adjunction and naturality of unit/counit.
  template <category X, category C>
  check_report check_right_adjoint(weak_action<X, C> const& a, right_adjoint_data<X, C> const& r,
                                   action_domain<X, C> const& dom, budget const& b) {
    auto const&  cc = a.acted.base;
    auto const&  xc = a.acting.base;
    check_report rep(a.name + ":right-adjoint", b.seed);
    auto&        t1 = rep.law("adjoint:triangle-1", "(unit_A)^X ; counit_{A^X} = id");
    auto&        t2 = rep.law("adjoint:triangle-2", "unit_{C_X} ; (counit_C)_X = id");
    auto&        nu = rep.law("adjoint:unit-natural");
    auto&        nc = rep.law("adjoint:counit-natural");
    for (auto const& x : dom.x.objects) {
      auto inst1 = [&](object_t<C> const& c) {
        return [&, c] { return std::vector<std::string>{xc.describe_object(x), cc.describe_object(c)}; };
      };
      for (auto const& c : dom.c.objects) {
        check_parallel(cc, t1, inst1(c), [&] { return cc.compose(a.act_c(r.unit(c, x), x), r.counit(a.act(c, x), x)); },
                       [&] { return cc.identity(a.act(c, x)); });
        check_parallel(cc, t2, inst1(c), [&] { return cc.compose(r.unit(r.obj(c, x), x), r.mor(r.counit(c, x), x)); },
                       [&] { return cc.identity(r.obj(c, x)); });
      }
      for (auto const& g : dom.c.morphisms) {
        auto inst = [&] { return std::vector<std::string>{xc.describe_object(x), cc.describe_morphism(g)}; };
        auto s    = cc.source(g);
        auto t    = cc.target(g);
        check_parallel(cc, nu, inst, [&] { return cc.compose(g, r.unit(t, x)); },
                       [&] { return cc.compose(r.unit(s, x), r.mor(a.act_c(g, x), x)); });
        check_parallel(cc, nc, inst, [&] { return cc.compose(a.act_c(r.mor(g, x), x), r.counit(t, x)); },
                       [&] { return cc.compose(r.counit(s, x), g); });
      }
    }
    return rep;
  }

  // (-)_X = (-)^dX for a strong action, with
  //   unit   A --psi^-1--> A^I --A^{coeval}--> A^{X dX} --psi^{X,dX}--> (A^X)^dX
  //   counit (C^dX)^X --(psi^{dX,X})^-1--> C^{dX X} --C^{eval}--> C^I --psi--> C
  template <category X, category C>
  right_adjoint_data<X, C> right_adjoint_from_duals(strong_action<X, C> const&                      sa,
                                                    std::function<dual_data<X>(object_t<X> const&)> xdual) {
    if (!sa.inv.complete()) {
      throw not_strong("action '" + sa.weak.name + "' has no inverse structure maps");
    }
    using co = object_t<C>;
    using cm = morphism_t<C>;
    using xo = object_t<X>;
    auto a   = sa.weak;
    auto inv = sa.inv;
    return {[a, xdual](co const& c, xo const& x) { return a.act(c, xdual(x).dual); },
            [a, xdual](cm const& g, xo const& x) { return a.act_c(g, xdual(x).dual); },
            [a, inv, xdual](co const& c, xo const& x) {
              auto d = xdual(x);
              return compose_all(a.acted.base, {inv.psi0_inv(c), a.act_x(d.coeval, c), a.psi2(x, d.dual, c)});
            },
            [a, inv, xdual](co const& c, xo const& x) {
              auto d = xdual(x);
              return compose_all(a.acted.base, {inv.psi2_inv(d.dual, x, c), a.act_x(d.eval, c), a.psi0(c)});
            }};
  }

  ////////////////////////////////////////////////////////////////////////
  // Internal homs
  ////////////////////////////////////////////////////////////////////////

  enum class hom_side { left, right };

  // right: C(A (x) B, C) = C(A, [B, C]);  left: C(A (x) B, C) = C(B, [A, C]).
  // curry(g, A, B) and uncurry(h, A, B, C) are the two directions.
  template <category C>
  struct internal_hom_data {
    std::function<object_t<C>(object_t<C> const&, object_t<C> const&)>                              hom;
    std::function<morphism_t<C>(morphism_t<C> const&, object_t<C> const&, object_t<C> const&)>       curry;
    std::function<morphism_t<C>(morphism_t<C> const&, object_t<C> const&, object_t<C> const&,
                                object_t<C> const&)>                                                uncurry;
  };

  // For every object triple: both hom sets enumerated, the two maps mutually
  // inverse and well-typed; plus naturality in the variable being curried
  // away, for every generating morphism.
  template <category C>
  check_report check_hom_adjunction(skew_monoidal<C> const& s, internal_hom_data<C> const& h, hom_side side,
                                    test_domain<C> const& dom, budget const& b, std::string const& name = "") {
    auto const&  cat   = s.base;
    auto const&  obs   = dom.objects;
    std::size_t  n     = obs.size();
    bool const   right = side == hom_side::right;
    std::string  label = name.empty() ? s.name + (right ? ":right-hom" : ":left-hom") : name;
    check_report rep(label, b.seed);
    auto&        count = rep.law("hom:count", right ? "|C(A(x)B, C)| = |C(A, [B,C])|" : "|C(A(x)B, C)| = |C(B, [A,C])|");
    auto&        fwd   = rep.law("hom:uncurry-curry", "uncurry(curry(g)) = g");
    auto&        bwd   = rep.law("hom:curry-uncurry", "curry(uncurry(h)) = h");
    auto&        nat   = rep.law("hom:natural", right ? "curry((a (x) B) ; g) = a ; curry(g)" : "curry((A (x) a) ; g) = a ; curry(g)");
    auto         inst3 = [&](auto const& A, auto const& B, auto const& Cc) {
      return [&cat, A, B, Cc] {
        return std::vector<std::string>{cat.describe_object(A), cat.describe_object(B), cat.describe_object(Cc)};
      };
    };
    count.sampled = for_each_tuple({n, n, n}, b, label + ":bijection", [&](auto i) {
      auto const &A = obs[i[0]], &B = obs[i[1]], &Cc = obs[i[2]];
      auto        inst = inst3(A, B, Cc);
      auto        H    = right ? h.hom(B, Cc) : h.hom(A, Cc);
      auto        outer = right ? A : B;
      auto        lhs  = enumerate_hom(cat, s.t(A, B), Cc);
      auto        rhs  = enumerate_hom(cat, outer, H);
      if (lhs.size() == rhs.size()) {
        count.record_pass();
      } else {
        count.record_failure({inst(), std::to_string(lhs.size()), std::to_string(rhs.size()), "hom sets differ in size"});
      }
      for (auto const& g : lhs) {
        check_parallel(
            cat, fwd, [&] { auto v = inst(); v.push_back(cat.describe_morphism(g)); return v; },
            [&] {
              auto c = h.curry(g, A, B);
              require_typed(cat, c, outer, H, "curry(g)");
              return h.uncurry(c, A, B, Cc);
            },
            [&] { return g; });
      }
      for (auto const& k : rhs) {
        check_parallel(
            cat, bwd, [&] { auto v = inst(); v.push_back(cat.describe_morphism(k)); return v; },
            [&] {
              auto u = h.uncurry(k, A, B, Cc);
              require_typed(cat, u, s.t(A, B), Cc, "uncurry(h)");
              return h.curry(u, A, B);
            },
            [&] { return k; });
      }
    });
    auto const& gens = dom.morphisms;
    nat.sampled = for_each_tuple({gens.size(), n, n}, b, label + ":natural", [&](auto i) {
      auto const& a  = gens[i[0]];
      auto const& O  = obs[i[1]];  // the fixed tensor factor
      auto const& Cc = obs[i[2]];
      auto        s0 = cat.source(a);
      auto        t0 = cat.target(a);
      auto        A  = right ? t0 : O;
      auto        B  = right ? O : t0;
      auto        A2 = right ? s0 : O;
      auto        B2 = right ? O : s0;
      auto        inst = [&] {
        return std::vector<std::string>{cat.describe_morphism(a), cat.describe_object(O), cat.describe_object(Cc)};
      };
      for (auto const& g : enumerate_hom(cat, s.t(A, B), Cc)) {
        check_parallel(
            cat, nat, inst,
            [&] {
              auto pre = right ? s.right_whisker(a, O) : s.left_whisker(O, a);
              return h.curry(cat.compose(pre, g), A2, B2);
            },
            [&] { return cat.compose(a, h.curry(g, A, B)); });
      }
    });
    return rep;
  }

  // Right hom of the semidirect product:
  //   [<Y,B>, <Z,C>] = <[Y,Z], [B,C]_Y>
  //   curry <f, g>   = <curry_X f, unit_A ; (curry_C g)_Y>
  //   uncurry <f, h> = <uncurry_X f, uncurry_C(h^Y ; counit)>
  template <category X, category C>
  internal_hom_data<semidirect_category<X, C>> right_closed_hom(weak_action<X, C> const& a, internal_hom_data<X> const& xh,
                                                                internal_hom_data<C> const& ch,
                                                                right_adjoint_data<X, C> const& r) {
    if (!xh.hom || !xh.curry || !xh.uncurry || !ch.hom || !ch.curry || !ch.uncurry) {
      throw missing_hom_data("right-closed structure of '" + a.name + "' needs internal homs in both categories");
    }
    if (!r.obj || !r.mor || !r.unit || !r.counit) {
      throw missing_hom_data("right-closed structure of '" + a.name + "' needs right adjoints (-)_X");
    }
    using po = object_t<semidirect_category<X, C>>;
    using pm = morphism_t<semidirect_category<X, C>>;
    internal_hom_data<semidirect_category<X, C>> out;
    out.hom   = [xh, ch, r](po const& q, po const& z) { return po{xh.hom(q.x, z.x), r.obj(ch.hom(q.c, z.c), q.x)}; };
    out.curry = [a, xh, ch, r](pm const& g, po const& p, po const& q) {
      auto c = a.acted.base.compose(r.unit(p.c, q.x), r.mor(ch.curry(g.c, a.act(p.c, q.x), q.c), q.x));
      return pm{xh.curry(g.x, p.x, q.x), c};
    };
    out.uncurry = [a, xh, ch, r](pm const& h, po const& p, po const& q, po const& z) {
      auto hom_c = ch.hom(q.c, z.c);
      auto c     = a.acted.base.compose(a.act_c(h.c, q.x), r.counit(hom_c, q.x));
      return pm{xh.uncurry(h.x, p.x, q.x, z.x), ch.uncurry(c, a.act(p.c, q.x), q.c, z.c)};
    };
    return out;
  }

  // Internal hom of X from left duals: [Y, Z] = Z (x) dY.
  //   curry f   = rho^-1 ; (X (x) coeval_Y) ; alpha ; (f (x) dY)
  //   uncurry h = (h (x) Y) ; alpha^-1 ; (Z (x) eval_Y) ; rho
  template <category X>
  internal_hom_data<X> hom_from_duals(skew_monoidal<X> const& s, invertibility_witness<X> const& w,
                                      std::function<dual_data<X>(object_t<X> const&)> xdual) {
    using xo = object_t<X>;
    using xm = morphism_t<X>;
    return {[s, xdual](xo const& y, xo const& z) { return s.t(z, xdual(y).dual); },
            [s, w, xdual](xm const& f, xo const& x, xo const& y) {
              auto d = xdual(y);
              return compose_all(s.base, {w.runit_inv(x), s.left_whisker(x, d.coeval), s.assoc(x, y, d.dual),
                                          s.right_whisker(f, d.dual)});
            },
            [s, w, xdual](xm const& h, xo const&, xo const& y, xo const& z) {
              auto d = xdual(y);
              return compose_all(s.base, {s.right_whisker(h, y), w.assoc_inv(z, d.dual, y), s.left_whisker(z, d.eval),
                                          s.runit(z)});
            }};
  }

  // [<Y,B>, <Z,C>] = <Z (x) dY, [B,C]^dY>: the right-closed hom with X's
  // hom and the right adjoints both derived from the duals of X.
  template <category X, category C>
  internal_hom_data<semidirect_category<X, C>> right_closed_hom_via_dual(
      strong_action<X, C> const& sa, invertibility_witness<X> const& wx, internal_hom_data<C> const& ch,
      std::function<dual_data<X>(object_t<X> const&)> xdual) {
    if (!xdual) {
      throw no_dual("action '" + sa.weak.name + "': no left duals supplied for the acting category");
    }
    return right_closed_hom(sa.weak, hom_from_duals(sa.weak.acting, wx, xdual), ch, right_adjoint_from_duals(sa, xdual));
  }

  // Two right homs H1, H2 represent the same functor iff
  //   theta = curry2(uncurry1(id_H1)) : H1 -> H2
  // is invertible (inverse curry1(uncurry2(id_H2))) and curry2(g) = curry1(g) ; theta.
  template <category C>
  check_report check_hom_agreement(skew_monoidal<C> const& s, internal_hom_data<C> const& h1,
                                   internal_hom_data<C> const& h2, test_domain<C> const& dom, budget const& b,
                                   std::string const& name = "hom-agreement") {
    auto const&  cat = s.base;
    auto const&  obs = dom.objects;
    std::size_t  n   = obs.size();
    check_report rep(name, b.seed);
    auto&        inv  = rep.law("agree:theta-invertible", "theta ; theta' = id, theta' ; theta = id");
    auto&        fact = rep.law("agree:factorization", "curry2(g) = curry1(g) ; theta");
    inv.sampled = for_each_tuple({n, n}, b, name + ":theta", [&](auto i) {
      auto const &B = obs[i[0]], &Cc = obs[i[1]];
      auto inst = [&] { return std::vector<std::string>{cat.describe_object(B), cat.describe_object(Cc)}; };
      auto H1   = h1.hom(B, Cc);
      auto H2   = h2.hom(B, Cc);
      check_inverse(
          cat, inv, inst, [&] { return h2.curry(h1.uncurry(cat.identity(H1), H1, B, Cc), H1, B); },
          [&] { return h1.curry(h2.uncurry(cat.identity(H2), H2, B, Cc), H2, B); });
    });
    fact.sampled = for_each_tuple({n, n, n}, b, name + ":factor", [&](auto i) {
      auto const &A = obs[i[0]], &B = obs[i[1]], &Cc = obs[i[2]];
      auto inst  = [&] {
        return std::vector<std::string>{cat.describe_object(A), cat.describe_object(B), cat.describe_object(Cc)};
      };
      auto H1    = h1.hom(B, Cc);
      auto theta = h2.curry(h1.uncurry(cat.identity(H1), H1, B, Cc), H1, B);
      for (auto const& g : enumerate_hom(cat, s.t(A, B), Cc)) {
        check_parallel(cat, fact, inst, [&] { return h2.curry(g, A, B); },
                       [&] { return cat.compose(h1.curry(g, A, B), theta); });
      }
    });
    return rep;
  }

  ////////////////////////////////////////////////////////////////////////
  // Left-closed structure for a cocartesian acted category
  ////////////////////////////////////////////////////////////////////////

  // Binary products with pairing.
  template <category X>
  struct product_data {
    std::function<object_t<X>(object_t<X> const&, object_t<X> const&)>     product;
    std::function<morphism_t<X>(object_t<X> const&, object_t<X> const&)>   proj1;
    std::function<morphism_t<X>(object_t<X> const&, object_t<X> const&)>   proj2;
    std::function<morphism_t<X>(morphism_t<X> const&, morphism_t<X> const&)> pair;
  };

  // Binary coproducts; the tensor of a cocartesian category must be this sum.
  template <category C>
  struct coproduct_data {
    std::function<morphism_t<C>(object_t<C> const&, object_t<C> const&)>   inj1;
    std::function<morphism_t<C>(object_t<C> const&, object_t<C> const&)>   inj2;
    std::function<morphism_t<C>(morphism_t<C> const&, morphism_t<C> const&)> copair;
  };

  // B |> C with C(B^X, C) = X(X, B |> C).
  template <category X, category C>
  struct triangle_hom_data {
    std::function<object_t<X>(object_t<C> const&, object_t<C> const&)> obj;
    // g : B^X -> C  |->  X -> B |> C
    std::function<morphism_t<X>(morphism_t<C> const&, object_t<C> const&, object_t<X> const&, object_t<C> const&)> fwd;
    // h : X -> B |> C  |->  B^X -> C
    std::function<morphism_t<C>(morphism_t<X> const&, object_t<C> const&, object_t<X> const&, object_t<C> const&)> bwd;
  };

  // Both directions of the bijection mutually inverse, for all (B, X, C).
  template <category X, category C>
  check_report check_triangle_hom(weak_action<X, C> const& a, triangle_hom_data<X, C> const& t,
                                  action_domain<X, C> const& dom, budget const& b) {
    auto const&  xc = a.acting.base;
    auto const&  cc = a.acted.base;
    auto const&  xs = dom.x.objects;
    auto const&  cs = dom.c.objects;
    check_report rep(a.name + ":triangle-hom", b.seed);
    auto&        count = rep.law("triangle-hom:count", "|C(B^X, C)| = |X(X, B |> C)|");
    auto&        f     = rep.law("triangle-hom:bwd-fwd", "bwd(fwd(g)) = g");
    auto&        g2    = rep.law("triangle-hom:fwd-bwd", "fwd(bwd(h)) = h");
    count.sampled = for_each_tuple({cs.size(), xs.size(), cs.size()}, b, a.name + ":triangle-hom", [&](auto i) {
      auto const &B = cs[i[0]], &Cc = cs[i[2]];
      auto const& X0   = xs[i[1]];
      auto        BX   = a.act(B, X0);
      auto        T    = t.obj(B, Cc);
      auto        inst = [&] {
        return std::vector<std::string>{cc.describe_object(B), xc.describe_object(X0), cc.describe_object(Cc)};
      };
      auto lhs = enumerate_hom(cc, BX, Cc);
      auto rhs = enumerate_hom(xc, X0, T);
      if (lhs.size() == rhs.size()) {
        count.record_pass();
      } else {
        count.record_failure({inst(), std::to_string(lhs.size()), std::to_string(rhs.size()), "hom sets differ in size"});
      }
      for (auto const& g : lhs) {
        check_parallel(cc, f, inst, [&] {
          auto h = t.fwd(g, B, X0, Cc);
          require_typed(xc, h, X0, T, "fwd(g)");
          return t.bwd(h, B, X0, Cc);
        }, [&] { return g; });
      }
      for (auto const& h : rhs) {
        check_parallel(xc, g2, inst, [&] {
          auto g = t.bwd(h, B, X0, Cc);
          require_typed(cc, g, BX, Cc, "bwd(h)");
          return t.fwd(g, B, X0, Cc);
        }, [&] { return h; });
      }
    });
    f.sampled = g2.sampled = count.sampled;
    return rep;
  }

  // Left hom of the semidirect product over a cocartesian C:
  //   [<X,A>, <Z,C>] = <[X,Z] x (A |> C), C>
  //   curry <f, g>   = <pair(curry_X f, fwd(inj1 ; g)), inj2 ; g>
  //   uncurry <h, k> = <uncurry_X(h ; p1), copair(bwd(h ; p2), k)>
  template <category X, category C>
  internal_hom_data<semidirect_category<X, C>> left_closed_hom(weak_action<X, C> const& a, internal_hom_data<X> const& xh,
                                                               product_data<X> const& xp, coproduct_data<C> const& cp,
                                                               triangle_hom_data<X, C> const& t) {
    if (!xh.hom || !xh.curry || !xh.uncurry || !xp.product || !xp.pair || !cp.inj1 || !cp.copair || !t.obj || !t.fwd
        || !t.bwd) {
      throw missing_hom_data("left-closed structure of '" + a.name + "' needs a left hom in X, products, coproducts and |>");
    }
    using po = object_t<semidirect_category<X, C>>;
    using pm = morphism_t<semidirect_category<X, C>>;
    internal_hom_data<semidirect_category<X, C>> out;
    out.hom   = [xh, xp, t](po const& p, po const& z) { return po{xp.product(xh.hom(p.x, z.x), t.obj(p.c, z.c)), z.c}; };
    out.curry = [a, xh, xp, cp, t](pm const& g, po const& p, po const& q) {
      auto const& cc = a.acted.base;
      auto        ay = a.act(p.c, q.x);
      auto        z  = cc.target(g.c);
      auto        x  = xp.pair(xh.curry(g.x, p.x, q.x), t.fwd(cc.compose(cp.inj1(ay, q.c), g.c), p.c, q.x, z));
      return pm{x, cc.compose(cp.inj2(ay, q.c), g.c)};
    };
    out.uncurry = [a, xh, xp, cp, t](pm const& h, po const& p, po const& q, po const& z) {
      auto const& xc  = a.acting.base;
      auto        hzx = xh.hom(p.x, z.x);
      auto        tr  = t.obj(p.c, z.c);
      auto        x   = xh.uncurry(xc.compose(h.x, xp.proj1(hzx, tr)), p.x, q.x, z.x);
      auto        c   = cp.copair(t.bwd(xc.compose(h.x, xp.proj2(hzx, tr)), p.c, q.x, z.c), h.c);
      return pm{x, c};
    };
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Initial objects
  ////////////////////////////////////////////////////////////////////////

  template <category C>
  bool is_initial_among(C const& cat, object_t<C> const& o, std::vector<object_t<C>> const& objs) {
    for (auto const& t : objs) {
      if (enumerate_hom(cat, o, t).size() != 1) {
        return false;
      }
    }
    return true;
  }

  // Whether initial (x) probe is again initial, tested against `objs`.
  // Throws not_initial if `initial` is not initial among them.
  template <category C>
  check_report check_initial_preservation(skew_monoidal<C> const& s, object_t<C> const& initial,
                                          object_t<C> const& probe, std::vector<object_t<C>> const& objs) {
    auto const& cat = s.base;
    if (!is_initial_among(cat, initial, objs)) {
      throw not_initial(cat.describe_object(initial) + " is not initial among the test objects");
    }
    check_report rep(s.name + ":initial-preservation");
    auto&        law  = rep.law("initial:preserved", "0 (x) P is initial");
    auto         prod = s.t(initial, probe);
    for (auto const& t : objs) {
      auto n = enumerate_hom(cat, prod, t).size();
      if (n == 1) {
        law.record_pass();
      } else {
        law.record_failure({{cat.describe_object(probe), cat.describe_object(t)}, cat.describe_object(prod), "",
                            std::to_string(n) + " maps from 0 (x) P"});
      }
    }
    return rep;
  }

}  // namespace skewcat
