#include "skewcat/instances/actions.hpp"

#include <algorithm>

#include "skewcat/errors.hpp"

namespace skewcat {

  namespace {
    using gmap = gms_map;

    gmap same_points(gms const& a, gms const& b) { return gms_category{}.same_points(a, b); }

    gmap retarget(gmap const& g, gms const& src, gms const& tgt) { return {src, tgt, g.map}; }

    template <typename A>
    A reverse_same_points_inverses(A inv);
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Truncation
  ////////////////////////////////////////////////////////////////////////

  weak_action<grid_category, gms_category> truncation_action() {
    auto S = gms_monoidal();
    return {"truncation",
            grid_monoidal(),
            S,
            [](gms const& m, ext_rat const& x) { return gms_truncate(m, x); },
            [](thin_arrow<ext_rat> const& f, gms const& m) {
              return same_points(gms_truncate(m, f.source), gms_truncate(m, f.target));
            },
            [](gmap const& g, ext_rat const& x) {
              return retarget(g, gms_truncate(g.source, x), gms_truncate(g.target, x));
            },
            [](ext_rat const& x, gms const& m, gms const& n) {
              return same_points(gms_tensor(gms_truncate(m, x), gms_truncate(n, x)), gms_truncate(gms_tensor(m, n), x));
            },
            [](ext_rat const& x) { return same_points(point_space(), gms_truncate(point_space(), x)); },
            [](ext_rat const& x, ext_rat const& y, gms const& m) {
              return same_points(gms_truncate(m, min(x, y)), gms_truncate(gms_truncate(m, x), y));
            },
            [](gms const& m) { return same_points(gms_truncate(m, ext_rat::infinity()), m); }};
  }

  action_inverses<grid_category, gms_category> truncation_trivial_inverses() {
    auto a = truncation_action();
    return {[a](ext_rat const& x, gms const& m, gms const& n) {
              auto f = a.phi2(x, m, n);
              return gmap{f.target, f.source, f.map};
            },
            [a](ext_rat const& x) {
              auto f = a.phi0(x);
              return gmap{f.target, f.source, f.map};
            },
            [a](ext_rat const& x, ext_rat const& y, gms const& m) {
              auto f = a.psi2(x, y, m);
              return gmap{f.target, f.source, f.map};
            },
            [a](gms const& m) {
              auto f = a.psi0(m);
              return gmap{f.target, f.source, f.map};
            }};
  }

  ////////////////////////////////////////////////////////////////////////
  // Truth values
  ////////////////////////////////////////////////////////////////////////

  strong_action<truth_category, gms_category> truth_values_action() {
    weak_action<truth_category, gms_category> w{
        "truth_values",
        truth_monoidal(),
        gms_monoidal(),
        [](gms const& m, bool b) { return gms_flatten(m, b); },
        [](thin_arrow<bool> const& f, gms const& m) {
          return same_points(gms_flatten(m, f.source), gms_flatten(m, f.target));
        },
        [](gmap const& g, bool b) { return retarget(g, gms_flatten(g.source, b), gms_flatten(g.target, b)); },
        [](bool b, gms const& m, gms const& n) {
          return same_points(gms_tensor(gms_flatten(m, b), gms_flatten(n, b)), gms_flatten(gms_tensor(m, n), b));
        },
        [](bool b) { return same_points(point_space(), gms_flatten(point_space(), b)); },
        [](bool x, bool y, gms const& m) { return same_points(gms_flatten(m, x && y), gms_flatten(gms_flatten(m, x), y)); },
        [](gms const& m) { return same_points(gms_flatten(m, true), m); }};
    auto flip = [](gmap const& f) { return gmap{f.target, f.source, f.map}; };
    action_inverses<truth_category, gms_category> inv{
        [w, flip](bool b, gms const& m, gms const& n) { return flip(w.phi2(b, m, n)); },
        [w, flip](bool b) { return flip(w.phi0(b)); },
        [w, flip](bool x, bool y, gms const& m) { return flip(w.psi2(x, y, m)); },
        [w, flip](gms const& m) { return flip(w.psi0(m)); }};
    return {w, inv};
  }

  lax_monoidal_comonad<gms_category> flatten_comonad() {
    lax_monoidal_functor_data<gms_category, gms_category> F{
        {[](gms const& m) { return gms_flatten(m, false); },
         [](gmap const& g) { return retarget(g, gms_flatten(g.source, false), gms_flatten(g.target, false)); }},
        [](gms const& m, gms const& n) {
          return same_points(gms_tensor(gms_flatten(m, false), gms_flatten(n, false)), gms_flatten(gms_tensor(m, n), false));
        },
        [] { return same_points(point_space(), gms_flatten(point_space(), false)); }};
    return {F,
            {[](gms const& m) { return same_points(gms_flatten(m, false), m); }},
            {[](gms const& m) { return same_points(gms_flatten(m, false), gms_flatten(gms_flatten(m, false), false)); }}};
  }

  ////////////////////////////////////////////////////////////////////////
  // Scaling
  ////////////////////////////////////////////////////////////////////////

  strong_action<order_category, gms_category> scaling_action(bool naturals) {
    weak_action<order_category, gms_category> w{
        naturals ? "scaling" : "scaling_z",
        addition_monoidal(naturals),
        gms_monoidal(),
        [](gms const& m, std::int64_t k) { return gms_scale(m, k); },
        [](thin_arrow<std::int64_t> const& f, gms const& m) {
          return same_points(gms_scale(m, f.source), gms_scale(m, f.target));
        },
        [](gmap const& g, std::int64_t k) { return retarget(g, gms_scale(g.source, k), gms_scale(g.target, k)); },
        [](std::int64_t k, gms const& m, gms const& n) {
          return same_points(gms_tensor(gms_scale(m, k), gms_scale(n, k)), gms_scale(gms_tensor(m, n), k));
        },
        [](std::int64_t k) { return same_points(point_space(), gms_scale(point_space(), k)); },
        [](std::int64_t x, std::int64_t y, gms const& m) {
          return same_points(gms_scale(m, x + y), gms_scale(gms_scale(m, x), y));
        },
        [](gms const& m) { return same_points(gms_scale(m, 0), m); }};
    auto flip = [](gmap const& f) { return gmap{f.target, f.source, f.map}; };
    action_inverses<order_category, gms_category> inv{
        [w, flip](std::int64_t k, gms const& m, gms const& n) { return flip(w.phi2(k, m, n)); },
        [w, flip](std::int64_t k) { return flip(w.phi0(k)); },
        [w, flip](std::int64_t x, std::int64_t y, gms const& m) { return flip(w.psi2(x, y, m)); },
        [w, flip](gms const& m) { return flip(w.psi0(m)); }};
    return {w, inv};
  }

  right_adjoint_data<order_category, gms_category> scaling_right_adjoint() {
    return {[](gms const& c, std::int64_t k) { return gms_scale(c, -k); },
            [](gmap const& g, std::int64_t k) { return retarget(g, gms_scale(g.source, -k), gms_scale(g.target, -k)); },
            [](gms const& a, std::int64_t k) { return same_points(a, gms_scale(gms_scale(a, k), -k)); },
            [](gms const& c, std::int64_t k) { return same_points(gms_scale(gms_scale(c, -k), k), c); }};
  }

  internal_hom_data<order_category> order_hom(bool naturals) {
    auto hom = [naturals](std::int64_t y, std::int64_t z) { return naturals ? std::max<std::int64_t>(z - y, 0) : z - y; };
    return {hom,
            [hom](thin_arrow<std::int64_t> const& f, std::int64_t x, std::int64_t y) {
              return thin_arrow<std::int64_t>{x, hom(y, f.target)};
            },
            [](thin_arrow<std::int64_t> const&, std::int64_t x, std::int64_t y, std::int64_t z) {
              return thin_arrow<std::int64_t>{x + y, z};
            }};
  }

  dual_data<order_category> order_dual(std::int64_t y) {
    return {-y, thin_arrow<std::int64_t>{0, 0}, thin_arrow<std::int64_t>{0, 0}};
  }

  invertibility_witness<order_category> order_inverses() { return identity_inverses(addition_monoidal(false)); }

  internal_hom_data<gms_category> gms_hom_data() {
    return {[](gms const& n, gms const& p) { return gms_internal_hom(n, p, 0).space; },
            [](gmap const& g, gms const& m, gms const& n) {
              auto       h = gms_internal_hom(n, g.target, 0);
              gmap       out{m, h.space, {}};
              gmap       row{n, g.target, std::vector<std::uint32_t>(n.size())};
              for (std::size_t i = 0; i < m.size(); ++i) {
                for (std::size_t j = 0; j < n.size(); ++j) {
                  row.map[j] = g.map.at(i * n.size() + j);
                }
                out.map.push_back(h.index_of(row));
              }
              return out;
            },
            [](gmap const& h, gms const& m, gms const& n, gms const& p) {
              auto hs = gms_internal_hom(n, p, 0);
              gmap out{gms_tensor(m, n), p, {}};
              for (std::size_t i = 0; i < m.size(); ++i) {
                auto const& f = hs.maps.at(h.map.at(i));
                out.map.insert(out.map.end(), f.map.begin(), f.map.end());
              }
              return out;
            }};
  }

  ////////////////////////////////////////////////////////////////////////
  // Scalar deformation
  ////////////////////////////////////////////////////////////////////////

  rational rational_pow(rational const& x, std::int64_t k) {
    if (x.numerator() == 0) {
      throw param_out_of_bounds("zero is not a unit");
    }
    rational base = k < 0 ? rational(1) / x : x;
    rational out(1);
    for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) {
      out *= base;
    }
    return out;
  }

  kstar_category kstar_category_of() {
    return kstar_category([](rational const& q) { return to_string(q); });
  }

  skew_monoidal<kstar_category> kstar_monoidal() {
    return strict_monoidal<kstar_category>(
        "kstar", kstar_category_of(), [](rational const& a, rational const& b) { return a * b; },
        [](thin_arrow<rational> const& f, thin_arrow<rational> const& g) {
          return thin_arrow<rational>{f.source * g.source, f.target * g.target};
        },
        rational(1));
  }

  strong_action<kstar_category, matcat> kstar_action(std::int64_t k) {
    matcat                                cat;
    weak_action<kstar_category, matcat> w{
        "kstar(k=" + std::to_string(k) + ")",
        kstar_monoidal(),
        matcat_monoidal(),
        [](std::size_t c, rational const&) { return c; },
        [cat](thin_arrow<rational> const& f, std::size_t c) {
          if (f.source != f.target) {
            throw ill_typed("kstar has identities only");
          }
          return cat.identity(c);
        },
        [](matrix const& g, rational const&) { return g; },
        [k](rational const& x, std::size_t b, std::size_t c) { return mat::scalar(rational_pow(x, k), b * c); },
        [k](rational const& x) { return mat::scalar(rational_pow(x, -k), 1); },
        [cat](rational const&, rational const&, std::size_t c) { return cat.identity(c); },
        [cat](std::size_t c) { return cat.identity(c); }};
    action_inverses<kstar_category, matcat> inv{
        [k](rational const& x, std::size_t b, std::size_t c) { return mat::scalar(rational_pow(x, -k), b * c); },
        [k](rational const& x) { return mat::scalar(rational_pow(x, k), 1); },
        [cat](rational const&, rational const&, std::size_t c) { return cat.identity(c); },
        [cat](std::size_t c) { return cat.identity(c); }};
    return {w, inv};
  }

  dual_data<kstar_category> kstar_dual(rational const& x) {
    return {rational(1) / x, thin_arrow<rational>{rational(1), rational(1)}, thin_arrow<rational>{rational(1), rational(1)}};
  }

  dual_data<matcat> matcat_dual(std::size_t n) { return {n, mat::evaluation(n), mat::coevaluation(n)}; }

  ////////////////////////////////////////////////////////////////////////
  // Finite sets
  ////////////////////////////////////////////////////////////////////////

  namespace {
    template <typename X>
    action_inverses<X, finset_category> bijection_inverses(weak_action<X, finset_category> const& w) {
      using xo = object_t<X>;
      return {[w](xo const& x, std::size_t b, std::size_t c) { return finset::invert(w.phi2(x, b, c)); },
              [w](xo const& x) { return finset::invert(w.phi0(x)); },
              [w](xo const& x, xo const& y, std::size_t c) { return finset::invert(w.psi2(x, y, c)); },
              [w](std::size_t c) { return finset::invert(w.psi0(c)); }};
    }
  }  // namespace

  skew_monoidal<finset_op_category> finset_op_cartesian() {
    auto base = finset_cartesian();
    return strict_monoidal<finset_op_category>(
        "finset-op-product", finset_op_category(finset_category{}), base.tensor,
        [](op_morphism<finset::fn> const& f, op_morphism<finset::fn> const& g) {
          return op_morphism<finset::fn>{finset::product_map(f.arrow, g.arrow)};
        },
        std::size_t{1});
  }

  strong_action<finset_op_category, finset_category> finset_op_action() {
    finset_category                                  cat;
    weak_action<finset_op_category, finset_category> w{
        "finset_op",
        finset_op_cartesian(),
        finset_cartesian(),
        [](std::size_t c, std::size_t x) { return finset::exp(x, c); },
        // op f : X -> Y is f : Y -> X; [X, C] -> [Y, C] precomposes with f
        [](op_morphism<finset::fn> const& f, std::size_t c) { return finset::precompose(f.arrow, c); },
        [](finset::fn const& g, std::size_t x) { return finset::postcompose(g, x); },
        [](std::size_t x, std::size_t b, std::size_t c) { return finset::pairing(x, b, c); },
        [cat](std::size_t x) { return cat.identity(finset::exp(x, 1)); },
        [](std::size_t x, std::size_t y, std::size_t c) { return finset::curry_xy(x, y, c); },
        [](std::size_t c) { return finset::eval_point(c); }};
    return {w, bijection_inverses(w)};
  }

  strong_action<finset_category, finset_category> finset_j_action(std::size_t j) {
    if (j == 0 || j > 4) {
      throw param_out_of_bounds("J must have between 1 and 4 elements, got " + std::to_string(j));
    }
    finset_category                               cat;
    weak_action<finset_category, finset_category> w{
        "finset_j(J=" + std::to_string(j) + ")",
        finset_cocartesian(),
        finset_cartesian(),
        [j](std::size_t c, std::size_t x) { return finset::exp(finset::exp(x, j), c); },
        // f : X -> Y gives [Y, J] -> [X, J], and [[X,J],C] -> [[Y,J],C] by
        // precomposition with it
        [j](finset::fn const& f, std::size_t c) { return finset::precompose(finset::precompose(f, j), c); },
        [j](finset::fn const& g, std::size_t x) { return finset::postcompose(g, finset::exp(x, j)); },
        [j](std::size_t x, std::size_t b, std::size_t c) { return finset::pairing(finset::exp(x, j), b, c); },
        [cat](std::size_t) { return cat.identity(1); },
        // [X+Y, J] = [X, J] x [Y, J] with index u * |J|^|Y| + v
        [j](std::size_t x, std::size_t y, std::size_t c) {
          return finset::curry_xy(finset::exp(x, j), finset::exp(y, j), c);
        },
        [](std::size_t c) { return finset::eval_point(c); }};
    return {w, bijection_inverses(w)};
  }

  strong_action<finset_category, finset_category> self_tensor_action() {
    finset_category                               cat;
    weak_action<finset_category, finset_category> w{
        "self_tensor",
        finset_cartesian(),
        finset_cocartesian(),
        [](std::size_t b, std::size_t x) { return b * x; },
        [cat](finset::fn const& f, std::size_t b) { return finset::product_map(cat.identity(b), f); },
        [cat](finset::fn const& g, std::size_t x) { return finset::product_map(g, cat.identity(x)); },
        // B x X + C x X = (B + C) x X and the rest are literal equalities
        // under the row-major encodings
        [cat](std::size_t x, std::size_t b, std::size_t c) { return cat.identity((b + c) * x); },
        [cat](std::size_t) { return cat.identity(0); },
        [cat](std::size_t x, std::size_t y, std::size_t c) { return cat.identity(c * x * y); },
        [cat](std::size_t c) { return cat.identity(c); }};
    return {w, bijection_inverses(w)};
  }

  triangle_hom_data<finset_category, finset_category> self_tensor_triangle() {
    return {[](std::size_t b, std::size_t c) { return finset::exp(b, c); },
            [](finset::fn const& g, std::size_t b, std::size_t x, std::size_t) { return finset::curry_left(g, b, x); },
            [](finset::fn const& h, std::size_t b, std::size_t x, std::size_t c) {
              return finset::uncurry_left(h, b, x, c);
            }};
  }

  internal_hom_data<finset_category> finset_left_hom() {
    return {[](std::size_t a, std::size_t c) { return finset::exp(a, c); },
            [](finset::fn const& g, std::size_t a, std::size_t b) { return finset::curry_left(g, a, b); },
            [](finset::fn const& h, std::size_t a, std::size_t b, std::size_t c) { return finset::uncurry_left(h, a, b, c); }};
  }

  product_data<finset_category> finset_products() {
    return {[](std::size_t a, std::size_t b) { return finset_cartesian().t(a, b); },
            [](std::size_t a, std::size_t b) { return finset::proj1(a, b); },
            [](std::size_t a, std::size_t b) { return finset::proj2(a, b); },
            [](finset::fn const& f, finset::fn const& g) { return finset::pair(f, g); }};
  }

  coproduct_data<finset_category> finset_coproducts() {
    return {[](std::size_t a, std::size_t b) { return finset::inj1(a, b); },
            [](std::size_t a, std::size_t b) { return finset::inj2(a, b); },
            [](finset::fn const& f, finset::fn const& g) { return finset::copair(f, g); }};
  }

  ////////////////////////////////////////////////////////////////////////
  // Precomposition
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // (f o g)(j) = f(g(j))
    monotone_map after(monotone_map const& f, monotone_map const& g) {
      monotone_map out(g.size());
      for (std::size_t j = 0; j < g.size(); ++j) {
        out[j] = f.at(static_cast<std::size_t>(g[j]));
      }
      return out;
    }

    monotone_map pointwise_min(monotone_map const& a, monotone_map const& b) {
      if (a.size() != b.size()) {
        throw ill_typed("pointwise meet of maps with different domains");
      }
      monotone_map out(a.size());
      for (std::size_t j = 0; j < a.size(); ++j) {
        out[j] = std::min(a[j], b[j]);
      }
      return out;
    }

    using mono_arrow = thin_arrow<monotone_map>;
  }  // namespace

  skew_monoidal<monotone_category> precompose_acting() {
    return strict_monoidal<monotone_category>(
        "monotone-composition", monotone_category_of(), [](monotone_map const& x, monotone_map const& y) { return after(x, y); },
        [](mono_arrow const& f, mono_arrow const& g) {
          return mono_arrow{after(f.source, g.source), after(f.target, g.target)};
        },
        monotone_map{0, 1, 2});
  }

  skew_monoidal<monotone_category> precompose_acted() {
    return strict_monoidal<monotone_category>(
        "monotone-meet", monotone_category_of(), pointwise_min,
        [](mono_arrow const& f, mono_arrow const& g) {
          return mono_arrow{pointwise_min(f.source, g.source), pointwise_min(f.target, g.target)};
        },
        monotone_map{1, 1, 1});
  }

  strong_action<monotone_category, monotone_category> precompose_action() {
    weak_action<monotone_category, monotone_category> w{
        "precompose",
        precompose_acting(),
        precompose_acted(),
        [](monotone_map const& c, monotone_map const& x) { return after(c, x); },
        [](mono_arrow const& f, monotone_map const& c) { return mono_arrow{after(c, f.source), after(c, f.target)}; },
        [](mono_arrow const& g, monotone_map const& x) { return mono_arrow{after(g.source, x), after(g.target, x)}; },
        [](monotone_map const& x, monotone_map const& b, monotone_map const& c) {
          return mono_arrow{pointwise_min(after(b, x), after(c, x)), after(pointwise_min(b, c), x)};
        },
        [](monotone_map const& x) { return mono_arrow{monotone_map{1, 1, 1}, after(monotone_map{1, 1, 1}, x)}; },
        [](monotone_map const& x, monotone_map const& y, monotone_map const& c) {
          return mono_arrow{after(c, after(x, y)), after(after(c, x), y)};
        },
        [](monotone_map const& c) { return mono_arrow{after(c, monotone_map{0, 1, 2}), c}; }};
    auto flip = [](mono_arrow const& f) { return mono_arrow{f.target, f.source}; };
    action_inverses<monotone_category, monotone_category> inv{
        [w, flip](monotone_map const& x, monotone_map const& b, monotone_map const& c) { return flip(w.phi2(x, b, c)); },
        [w, flip](monotone_map const& x) { return flip(w.phi0(x)); },
        [w, flip](monotone_map const& x, monotone_map const& y, monotone_map const& c) { return flip(w.psi2(x, y, c)); },
        [w, flip](monotone_map const& c) { return flip(w.psi0(c)); }};
    return {w, inv};
  }

  ////////////////////////////////////////////////////////////////////////
  // Copowers in a lattice
  ////////////////////////////////////////////////////////////////////////

  strong_action<finset_category, thin_category<std::size_t>> copower_action(finite_lattice const& l) {
    using arrow = thin_arrow<std::size_t>;
    auto bot    = l.bottom();
    auto act    = [bot](std::size_t c, std::size_t x) { return x > 0 ? c : bot; };
    auto S      = l.join_monoidal();
    weak_action<finset_category, thin_category<std::size_t>> w{
        "copower",
        finset_cartesian(),
        S,
        act,
        [act](finset::fn const& f, std::size_t c) { return arrow{act(c, f.source), act(c, f.target)}; },
        [act](arrow const& g, std::size_t x) { return arrow{act(g.source, x), act(g.target, x)}; },
        [act, S](std::size_t x, std::size_t b, std::size_t c) { return arrow{S.t(act(b, x), act(c, x)), act(S.t(b, c), x)}; },
        [act, bot](std::size_t x) { return arrow{bot, act(bot, x)}; },
        [act](std::size_t x, std::size_t y, std::size_t c) { return arrow{act(c, x * y), act(act(c, x), y)}; },
        [act](std::size_t c) { return arrow{act(c, 1), c}; }};
    auto flip = [](arrow const& f) { return arrow{f.target, f.source}; };
    action_inverses<finset_category, thin_category<std::size_t>> inv{
        [w, flip](std::size_t x, std::size_t b, std::size_t c) { return flip(w.phi2(x, b, c)); },
        [w, flip](std::size_t x) { return flip(w.phi0(x)); },
        [w, flip](std::size_t x, std::size_t y, std::size_t c) { return flip(w.psi2(x, y, c)); },
        [w, flip](std::size_t c) { return flip(w.psi0(c)); }};
    return {w, inv};
  }

  triangle_hom_data<finset_category, thin_category<std::size_t>> copower_triangle(finite_lattice const& l) {
    auto bot = l.bottom();
    return {[l](std::size_t b, std::size_t c) { return std::size_t{l.le(b, c) ? 1U : 0U}; },
            [l](thin_arrow<std::size_t> const&, std::size_t b, std::size_t x, std::size_t c) {
              return finset::fn{x, std::size_t{l.le(b, c) ? 1U : 0U}, std::vector<std::uint32_t>(x, 0)};
            },
            [bot](finset::fn const& h, std::size_t b, std::size_t x, std::size_t c) {
              (void)h;
              return thin_arrow<std::size_t>{x > 0 ? b : bot, c};
            }};
  }

  coproduct_data<thin_category<std::size_t>> lattice_coproducts(finite_lattice const& l) {
    using arrow = thin_arrow<std::size_t>;
    return {[l](std::size_t a, std::size_t b) { return arrow{a, l.join(a, b)}; },
            [l](std::size_t a, std::size_t b) { return arrow{b, l.join(a, b)}; },
            [l](arrow const& f, arrow const& g) { return arrow{l.join(f.source, g.source), f.target}; }};
  }

  ////////////////////////////////////////////////////////////////////////
  // Registry
  ////////////////////////////////////////////////////////////////////////

  std::vector<action_info> action_catalog() {
    return {
        {"truncation", false, "grid [0,inf] under min acting on metric spaces by M^x = min(M, x)"},
        {"truth_values", true, "{F -> T} acting on metric spaces; M^F flattens positive distances to inf"},
        {"finset_op", true, "FinSet^op (product) acting on FinSet by C^X = [X, C]"},
        {"finset_j", true, "(FinSet, +) acting on FinSet by C^X = [[X, J], C], J = 2"},
        {"precompose", true, "monotone J -> J acting on monotone J -> 2 by C^X = C o X, J = 3-chain"},
        {"kstar", true, "nonzero rationals deforming rational matrices, phi^x = x^k id (k = 1)"},
        {"scaling", true, "(N, +) acting on metric spaces by M^k = 2^k M; right adjoint 2^-k"},
        {"copower", true, "(FinSet, x) acting on the diamond lattice by copowers"},
        {"self_tensor", true, "(FinSet, x) acting on (FinSet, +) by B^X = B x X"},
    };
  }

  action_info const& find_action(std::string const& name) {
    static auto const catalog = action_catalog();
    auto              it = std::find_if(catalog.begin(), catalog.end(), [&](auto const& a) { return a.name == name; });
    if (it == catalog.end()) {
      throw unknown_action("'" + name + "' (see `skewcat list`)");
    }
    return *it;
  }

}  // namespace skewcat
