#pragma once

#include <functional>
#include <string>
#include <vector>

#include "skewcat/category.hpp"

namespace skewcat {

  // Skew monoidal structure as explicit component data:
  //   assoc(A,B,C) : A(BC) -> (AB)C
  //   lunit(A)     : A -> IA
  //   runit(A)     : AI -> A
  // None of them need be invertible.
  template <category C>
  struct skew_monoidal {
    using object   = object_t<C>;
    using morphism = morphism_t<C>;

    std::string                                                                name;
    C                                                                          base;
    std::function<object(object const&, object const&)>                        tensor;
    std::function<morphism(morphism const&, morphism const&)>                  tensor_mor;
    object                                                                     unit;
    std::function<morphism(object const&, object const&, object const&)>       assoc;
    std::function<morphism(object const&)>                                     lunit;
    std::function<morphism(object const&)>                                     runit;

    object   t(object const& a, object const& b) const { return tensor(a, b); }
    morphism tm(morphism const& f, morphism const& g) const { return tensor_mor(f, g); }
    morphism id(object const& a) const { return base.identity(a); }
    // f (x) B and A (x) g
    morphism right_whisker(morphism const& f, object const& b) const { return tensor_mor(f, id(b)); }
    morphism left_whisker(object const& a, morphism const& g) const { return tensor_mor(id(a), g); }
  };

  // Structure whose coherence components are identities. Whether that is
  // well-typed (A(BC) literally equal to (AB)C) is for check_skew_laws to
  // decide.
  template <category C>
  skew_monoidal<C> strict_monoidal(std::string name, C base,
                                   std::function<object_t<C>(object_t<C> const&, object_t<C> const&)> tensor,
                                   std::function<morphism_t<C>(morphism_t<C> const&, morphism_t<C> const&)> tensor_mor,
                                   object_t<C> unit) {
    skew_monoidal<C> s{std::move(name), base, std::move(tensor), std::move(tensor_mor), std::move(unit), {}, {}, {}};
    s.assoc = [base, t = s.tensor](auto const& a, auto const& b, auto const& c) {
      return base.identity(t(a, t(b, c)));
    };
    s.lunit = [base](auto const& a) { return base.identity(a); };
    s.runit = [base, t = s.tensor, u = s.unit](auto const& a) { return base.identity(t(a, u)); };
    return s;
  }

  // Candidate two-sided inverses of the coherence components. An empty
  // function means the witness is missing.
  template <category C>
  struct invertibility_witness {
    std::function<morphism_t<C>(object_t<C> const&, object_t<C> const&, object_t<C> const&)> assoc_inv;
    std::function<morphism_t<C>(object_t<C> const&)>                                         lunit_inv;
    std::function<morphism_t<C>(object_t<C> const&)>                                         runit_inv;
  };

  template <category C>
  invertibility_witness<C> identity_inverses(skew_monoidal<C> const& s) {
    return {[s](auto const& a, auto const& b, auto const& c) { return s.id(s.t(s.t(a, b), c)); },
            [s](auto const& a) { return s.id(s.t(s.unit, a)); },
            [s](auto const& a) { return s.id(a); }};
  }

  namespace detail {
    template <category C>
    auto inst_of(C const& cat, std::vector<object_t<C>> const& objs) {
      return [&cat, objs] {
        std::vector<std::string> out;
        for (auto const& o : objs) {
          out.push_back(cat.describe_object(o));
        }
        return out;
      };
    }
  }  // namespace detail

  // Component typing, bifunctoriality, naturality of the coherence data, the
  // pentagon, the three triangles and the unitor identity.
  template <category C>
  check_report check_skew_laws(skew_monoidal<C> const& s, test_domain<C> const& dom, budget const& b) {
    auto const&  cat = s.base;
    auto const&  obs = dom.objects;
    std::size_t  n   = obs.size();
    check_report rep(s.name + ":skew-laws", b.seed);
    auto         inst = [&](std::vector<object_t<C>> v) { return detail::inst_of(cat, v); };

    auto& typing = rep.law("components:typing", "alpha: A(BC)->(AB)C, lambda: A->IA, rho: AI->A");
    check_shape(typing, inst({s.unit}), [&] { require_typed(cat, s.id(s.unit), s.unit, s.unit, "id_I"); });
    for (auto const& a : obs) {
      check_shape(typing, inst({a}), [&] { require_typed(cat, s.lunit(a), a, s.t(s.unit, a), "lambda"); });
      check_shape(typing, inst({a}), [&] { require_typed(cat, s.runit(a), s.t(a, s.unit), a, "rho"); });
    }
    typing.sampled |= for_each_tuple({n, n, n}, b, s.name + ":alpha-typing", [&](auto i) {
      auto const &x = obs[i[0]], &y = obs[i[1]], &z = obs[i[2]];
      check_shape(typing, inst({x, y, z}), [&] {
        require_typed(cat, s.assoc(x, y, z), s.t(x, s.t(y, z)), s.t(s.t(x, y), z), "alpha");
      });
    });

    auto& bif_id = rep.law("tensor:identities", "id (x) id = id");
    bif_id.sampled = for_each_tuple({n, n}, b, s.name + ":bif-id", [&](auto i) {
      auto const &x = obs[i[0]], &y = obs[i[1]];
      check_parallel(cat, bif_id, inst({x, y}), [&] { return s.tm(s.id(x), s.id(y)); },
                     [&] { return s.id(s.t(x, y)); });
    });
    auto  pairs = composable_pairs(cat, dom.morphisms);
    auto& inter = rep.law("tensor:interchange", "(f;g) (x) (h;k) = (f (x) h);(g (x) k)");
    inter.sampled = for_each_tuple({pairs.size(), pairs.size()}, b, s.name + ":interchange", [&](auto i) {
      auto const& [f, g] = pairs[i[0]];
      auto const& [h, k] = pairs[i[1]];
      check_parallel(
          cat, inter,
          [&] {
            return std::vector<std::string>{cat.describe_morphism(f), cat.describe_morphism(g),
                                            cat.describe_morphism(h), cat.describe_morphism(k)};
          },
          [&] { return s.tm(cat.compose(f, g), cat.compose(h, k)); },
          [&] { return cat.compose(s.tm(f, h), s.tm(g, k)); });
    });

    auto const& gens = dom.morphisms;
    auto        mors = [&](std::initializer_list<morphism_t<C>> ms) {
      return [&cat, v = std::vector<morphism_t<C>>(ms)] {
        std::vector<std::string> out;
        for (auto const& m : v) {
          out.push_back(cat.describe_morphism(m));
        }
        return out;
      };
    };
    auto& nat_l = rep.law("lambda:natural", "f;lambda = lambda;(I (x) f)");
    auto& nat_r = rep.law("rho:natural", "(f (x) I);rho = rho;f");
    for (auto const& f : gens) {
      check_parallel(cat, nat_l, mors({f}), [&] { return cat.compose(f, s.lunit(cat.target(f))); },
                     [&] { return cat.compose(s.lunit(cat.source(f)), s.left_whisker(s.unit, f)); });
      check_parallel(cat, nat_r, mors({f}),
                     [&] { return cat.compose(s.right_whisker(f, s.unit), s.runit(cat.target(f))); },
                     [&] { return cat.compose(s.runit(cat.source(f)), f); });
    }
    // Naturality of alpha in each variable separately, other two ranging over
    // the domain objects.
    auto& nat_a = rep.law("alpha:natural", "(f (x) (g (x) h));alpha = alpha;((f (x) g) (x) h)");
    std::size_t const m = gens.size();
    nat_a.sampled = for_each_tuple({3, m, n, n}, b, s.name + ":alpha-nat", [&](auto i) {
      auto const& f = gens[i[1]];
      auto const &p = obs[i[2]], &q = obs[i[3]];
      morphism_t<C> f1 = f, f2 = s.id(p), f3 = s.id(q);
      if (i[0] == 1) {
        f1 = s.id(p);
        f2 = f;
      } else if (i[0] == 2) {
        f1 = s.id(p);
        f2 = s.id(q);
        f3 = f;
      }
      check_parallel(
          cat, nat_a, mors({f1, f2, f3}),
          [&] {
            return cat.compose(s.tm(f1, s.tm(f2, f3)),
                               s.assoc(cat.target(f1), cat.target(f2), cat.target(f3)));
          },
          [&] {
            return cat.compose(s.assoc(cat.source(f1), cat.source(f2), cat.source(f3)),
                               s.tm(s.tm(f1, f2), f3));
          });
    });

    auto& pent = rep.law("pentagon", "A(B(CD)) -> ((AB)C)D");
    pent.sampled = for_each_tuple({n, n, n, n}, b, s.name + ":pentagon", [&](auto i) {
      auto const &A = obs[i[0]], &B = obs[i[1]], &Cc = obs[i[2]], &D = obs[i[3]];
      check_parallel(
          cat, pent, inst({A, B, Cc, D}),
          [&] { return cat.compose(s.assoc(A, B, s.t(Cc, D)), s.assoc(s.t(A, B), Cc, D)); },
          [&] {
            return compose_all(cat, {s.left_whisker(A, s.assoc(B, Cc, D)), s.assoc(A, s.t(B, Cc), D),
                                     s.right_whisker(s.assoc(A, B, Cc), D)});
          });
    });

    auto& tri1 = rep.law("triangle:1", "lambda_AB;alpha_IAB = lambda_A (x) B");
    auto& tri2 = rep.law("triangle:2", "(A (x) lambda_B);alpha_AIB;(rho_A (x) B) = id");
    auto& tri3 = rep.law("triangle:3", "alpha_ABI;rho_AB = A (x) rho_B");
    bool  sampled = for_each_tuple({n, n}, b, s.name + ":triangles", [&](auto i) {
      auto const &A = obs[i[0]], &B = obs[i[1]];
      check_parallel(cat, tri1, inst({A, B}),
                     [&] { return cat.compose(s.lunit(s.t(A, B)), s.assoc(s.unit, A, B)); },
                     [&] { return s.right_whisker(s.lunit(A), B); });
      check_parallel(cat, tri2, inst({A, B}),
                     [&] {
                       return compose_all(cat, {s.left_whisker(A, s.lunit(B)), s.assoc(A, s.unit, B),
                                                s.right_whisker(s.runit(A), B)});
                     },
                     [&] { return s.id(s.t(A, B)); });
      check_parallel(cat, tri3, inst({A, B}),
                     [&] { return cat.compose(s.assoc(A, B, s.unit), s.runit(s.t(A, B))); },
                     [&] { return s.left_whisker(A, s.runit(B)); });
    });
    tri1.sampled = tri2.sampled = tri3.sampled = sampled;

    auto& unitor = rep.law("unitor", "lambda_I;rho_I = id_I");
    check_parallel(cat, unitor, inst({s.unit}),
                   [&] { return cat.compose(s.lunit(s.unit), s.runit(s.unit)); },
                   [&] { return s.id(s.unit); });
    return rep;
  }

  // Each component composed with its candidate gives identities on both sides.
  template <category C>
  check_report check_monoidal_invertibility(skew_monoidal<C> const&         s,
                                            invertibility_witness<C> const& w,
                                            test_domain<C> const& dom, budget const& b) {
    auto const&  cat = s.base;
    auto const&  obs = dom.objects;
    std::size_t  n   = obs.size();
    check_report rep(s.name + ":invertibility", b.seed);
    if (!w.assoc_inv || !w.lunit_inv || !w.runit_inv) {
      throw missing_witness("no inverse candidate for "
                            + std::string(!w.assoc_inv ? "alpha" : (!w.lunit_inv ? "lambda" : "rho"))
                            + " of " + s.name);
    }
    auto inst = [&](std::vector<object_t<C>> v) { return detail::inst_of(cat, v); };
    auto two_sided = [&](law_result& r, auto make_inst, auto const& fwd, auto const& inv) {
      check_inverse(cat, r, make_inst, fwd, inv);
    };
    auto& la = rep.law("alpha:invertible");
    la.sampled = for_each_tuple({n, n, n}, b, s.name + ":alpha-inv", [&](auto i) {
      auto const &x = obs[i[0]], &y = obs[i[1]], &z = obs[i[2]];
      two_sided(la, inst({x, y, z}), [&] { return s.assoc(x, y, z); },
                [&] { return w.assoc_inv(x, y, z); });
    });
    auto& ll = rep.law("lambda:invertible");
    auto& lr = rep.law("rho:invertible");
    for (auto const& a : obs) {
      two_sided(ll, inst({a}), [&] { return s.lunit(a); }, [&] { return w.lunit_inv(a); });
      two_sided(lr, inst({a}), [&] { return s.runit(a); }, [&] { return w.runit_inv(a); });
    }
    return rep;
  }

  ////////////////////////////////////////////////////////////////////////
  // Lax monoidal functors and monoidal natural transformations
  ////////////////////////////////////////////////////////////////////////

  template <category C, category D>
  struct lax_monoidal_functor_data {
    functor_data<C, D>                                                      functor;
    std::function<morphism_t<D>(object_t<C> const&, object_t<C> const&)> mult;      // FB (x) FC -> F(BC)
    std::function<morphism_t<D>()>                                          unit_map;  // I -> FI
  };

  // Hexagon and both unit squares, plus functoriality on the generators.
  template <category C, category D>
  check_report check_lax_monoidal_functor(skew_monoidal<C> const& src, skew_monoidal<D> const& tgt,
                                          lax_monoidal_functor_data<C, D> const& F,
                                          test_domain<C> const& dom, budget const& b,
                                          std::string const& name = "lax") {
    auto const&  cat = tgt.base;
    auto const&  obs = dom.objects;
    std::size_t  n   = obs.size();
    auto const&  Fo  = F.functor.on_object;
    auto const&  Fm  = F.functor.on_morphism;
    check_report rep(name, b.seed);
    rep.merge(check_functor(src.base, tgt.base, F.functor, dom, b, name));
    auto inst = [&](std::vector<object_t<C>> v) { return detail::inst_of(src.base, v); };

    auto& typing = rep.law(name + ":typing", "phi: FB (x) FC -> F(BC), phi0: I -> FI");
    check_shape(typing, inst({src.unit}),
                [&] { require_typed(cat, F.unit_map(), tgt.unit, Fo(src.unit), "phi0"); });
    for_each_tuple({n, n}, b, name + ":phi-typing", [&](auto i) {
      auto const &x = obs[i[0]], &y = obs[i[1]];
      check_shape(typing, inst({x, y}), [&] {
        require_typed(cat, F.mult(x, y), tgt.t(Fo(x), Fo(y)), Fo(src.t(x, y)), "phi");
      });
    });

    auto& nat = rep.law(name + ":phi-natural", "(Ff (x) FC);phi = phi;F(f (x) C)");
    auto const& gens = dom.morphisms;
    nat.sampled = for_each_tuple({gens.size(), n, 2}, b, name + ":phi-nat", [&](auto i) {
      auto const& f = gens[i[0]];
      auto const& c = obs[i[1]];
      bool const  left = i[2] == 0;
      auto g = left ? src.tm(f, src.id(c)) : src.tm(src.id(c), f);
      auto Fs = [&](auto const& o) { return left ? F.mult(o, c) : F.mult(c, o); };
      check_parallel(
          cat, nat, [&] { return std::vector<std::string>{src.base.describe_morphism(g)}; },
          [&] {
            auto side = left ? tgt.tm(Fm(f), tgt.id(Fo(c))) : tgt.tm(tgt.id(Fo(c)), Fm(f));
            return cat.compose(side, Fs(src.base.target(f)));
          },
          [&] { return cat.compose(Fs(src.base.source(f)), Fm(g)); });
    });

    auto& hex = rep.law(name + ":hexagon", "alpha;(phi (x) FC);phi = (FA (x) phi);phi;F(alpha)");
    hex.sampled = for_each_tuple({n, n, n}, b, name + ":hexagon", [&](auto i) {
      auto const &A = obs[i[0]], &B = obs[i[1]], &Cc = obs[i[2]];
      check_parallel(
          cat, hex, inst({A, B, Cc}),
          [&] {
            return compose_all(cat, {tgt.assoc(Fo(A), Fo(B), Fo(Cc)), tgt.right_whisker(F.mult(A, B), Fo(Cc)),
                                     F.mult(src.t(A, B), Cc)});
          },
          [&] {
            return compose_all(cat, {tgt.left_whisker(Fo(A), F.mult(B, Cc)), F.mult(A, src.t(B, Cc)),
                                     Fm(src.assoc(A, B, Cc))});
          });
    });
    auto& lu = rep.law(name + ":left-unit", "lambda_FC;(phi0 (x) FC);phi_IC = F(lambda_C)");
    auto& ru = rep.law(name + ":right-unit", "(FC (x) phi0);phi_CI;F(rho_C) = rho_FC");
    for (auto const& c : obs) {
      check_parallel(
          cat, lu, inst({c}),
          [&] {
            return compose_all(cat, {tgt.lunit(Fo(c)), tgt.right_whisker(F.unit_map(), Fo(c)),
                                     F.mult(src.unit, c)});
          },
          [&] { return Fm(src.lunit(c)); });
      check_parallel(
          cat, ru, inst({c}),
          [&] {
            return compose_all(cat, {tgt.left_whisker(Fo(c), F.unit_map()), F.mult(c, src.unit),
                                     Fm(src.runit(c))});
          },
          [&] { return tgt.runit(Fo(c)); });
    }
    return rep;
  }

  template <category C, category D>
  struct monoidal_nat_data {
    lax_monoidal_functor_data<C, D> from;
    lax_monoidal_functor_data<C, D> to;
    nat_trans_data<C, D>            t;
  };

  // Naturality plus (t_B (x) t_C);phi^G = phi^F;t_BC and phi^F_0;t_I = phi^G_0.
  template <category C, category D>
  check_report check_monoidal_nat(skew_monoidal<C> const& src, skew_monoidal<D> const& tgt,
                                  monoidal_nat_data<C, D> const& m, test_domain<C> const& dom,
                                  budget const& b, std::string const& name = "monoidal-nat") {
    auto const&  cat = tgt.base;
    auto const&  obs = dom.objects;
    std::size_t  n   = obs.size();
    check_report rep(name, b.seed);
    rep.merge(check_naturality(src.base, tgt.base, m.from.functor, m.to.functor, m.t, dom, b, name));
    auto  inst = [&](std::vector<object_t<C>> v) { return detail::inst_of(src.base, v); };
    auto& mult = rep.law(name + ":mult", "(t (x) t);phi^G = phi^F;t");
    mult.sampled = for_each_tuple({n, n}, b, name + ":mult", [&](auto i) {
      auto const &x = obs[i[0]], &y = obs[i[1]];
      check_parallel(
          cat, mult, inst({x, y}),
          [&] { return cat.compose(tgt.tm(m.t.component(x), m.t.component(y)), m.to.mult(x, y)); },
          [&] { return cat.compose(m.from.mult(x, y), m.t.component(src.t(x, y))); });
    });
    auto& unit = rep.law(name + ":unit", "phi^F_0;t_I = phi^G_0");
    check_parallel(cat, unit, inst({src.unit}),
                   [&] { return cat.compose(m.from.unit_map(), m.t.component(src.unit)); },
                   [&] { return m.to.unit_map(); });
    return rep;
  }

  // Lax monoidal comonad on a structure: T with counit T => Id and
  // comultiplication T => TT, both monoidal.
  template <category C>
  struct lax_monoidal_comonad {
    lax_monoidal_functor_data<C, C> functor;
    nat_trans_data<C, C>            counit;
    nat_trans_data<C, C>            comult;
  };

  template <category C>
  lax_monoidal_functor_data<C, C> identity_lax(skew_monoidal<C> const& s) {
    return {{[](auto const& o) { return o; }, [](auto const& f) { return f; }},
            [s](auto const& x, auto const& y) { return s.id(s.t(x, y)); },
            [s] { return s.id(s.unit); }};
  }

  // Composite "F then G" with structure (G phi^F-free form)
  //   phi = phi^G_{FB,FC} ; G(phi^F_{B,C}),  phi0 = phi^G_0 ; G(phi^F_0).
  template <category C>
  lax_monoidal_functor_data<C, C> compose_lax(lax_monoidal_functor_data<C, C> const& F,
                                              lax_monoidal_functor_data<C, C> const& G,
                                              C const&                               cat) {
    return {{[F, G](auto const& o) { return G.functor.on_object(F.functor.on_object(o)); },
             [F, G](auto const& f) { return G.functor.on_morphism(F.functor.on_morphism(f)); }},
            [F, G, cat](auto const& x, auto const& y) {
              return cat.compose(G.mult(F.functor.on_object(x), F.functor.on_object(y)),
                                 G.functor.on_morphism(F.mult(x, y)));
            },
            [F, G, cat] { return cat.compose(G.unit_map(), G.functor.on_morphism(F.unit_map())); }};
  }

  // Comonad laws (counit on both sides, coassociativity) and monoidality of
  // counit and comultiplication.
  template <category C>
  check_report check_lax_monoidal_comonad(skew_monoidal<C> const& s, lax_monoidal_comonad<C> const& T,
                                          test_domain<C> const& dom, budget const& b,
                                          std::string const& name = "comonad") {
    auto const&  cat = s.base;
    auto const&  To  = T.functor.functor.on_object;
    auto const&  Tm  = T.functor.functor.on_morphism;
    check_report rep(name, b.seed);
    rep.merge(check_lax_monoidal_functor(s, s, T.functor, dom, b, name + ":T"));
    auto id_lax = identity_lax(s);
    auto tt     = compose_lax(T.functor, T.functor, cat);
    rep.merge(check_monoidal_nat(s, s, {T.functor, id_lax, T.counit}, dom, b, name + ":counit"));
    rep.merge(check_monoidal_nat(s, s, {T.functor, tt, T.comult}, dom, b, name + ":comult"));
    auto& cl = rep.law(name + ":counit-left", "delta;eps_T = id");
    auto& cr = rep.law(name + ":counit-right", "delta;T(eps) = id");
    auto& ca = rep.law(name + ":coassoc", "delta;delta_T = delta;T(delta)");
    for (auto const& a : dom.objects) {
      auto inst = [&] { return std::vector<std::string>{cat.describe_object(a)}; };
      check_parallel(cat, cl, inst, [&] { return cat.compose(T.comult.component(a), T.counit.component(To(a))); },
                     [&] { return cat.identity(To(a)); });
      check_parallel(cat, cr, inst, [&] { return cat.compose(T.comult.component(a), Tm(T.counit.component(a))); },
                     [&] { return cat.identity(To(a)); });
      check_parallel(cat, ca, inst,
                     [&] { return cat.compose(T.comult.component(a), T.comult.component(To(a))); },
                     [&] { return cat.compose(T.comult.component(a), Tm(T.comult.component(a))); });
    }
    return rep;
  }

}  // namespace skewcat
