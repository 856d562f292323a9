#include "skewcat/harness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>
#include <type_traits>

#include "skewcat/closedness.hpp"
#include "skewcat/errors.hpp"
#include "skewcat/instances/actions.hpp"
#include "skewcat/semidirect.hpp"

namespace skewcat {

  ////////////////////////////////////////////////////////////////////////
  // Input documents
  ////////////////////////////////////////////////////////////////////////

  namespace {
    finite_monoid monoid_from_json(nlohmann::json const& doc) {
      finite_monoid m;
      m.mult = doc.at("mult").get<cayley_table>();
      m.unit = doc.value("unit", std::size_t{0});
      return m;
    }

    nlohmann::json monoid_to_json(finite_monoid const& m) { return {{"mult", m.mult}, {"unit", m.unit}}; }
  }  // namespace

  nlohmann::json monoid_action_to_json(monoid_action const& m) {
    return {{"kind", "monoid_action"}, {"x", monoid_to_json(m.x)}, {"c", monoid_to_json(m.c)}, {"act", m.act}};
  }

  loaded_input parse_input(nlohmann::json const& doc) {
    if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string()) {
      throw parse_error("input document needs a string field \"kind\"");
    }
    loaded_input in;
    in.kind = doc["kind"].get<std::string>();
    if (in.kind == "category") {
      in.category = finite_category::from_json(doc);
    } else if (in.kind == "gms") {
      in.space = gms_from_json(doc);
    } else if (in.kind == "lattice") {
      in.lattice = finite_lattice::from_json(doc);
    } else if (in.kind == "monoid_action") {
      try {
        monoid_action m{monoid_from_json(doc.at("x")), monoid_from_json(doc.at("c")), doc.at("act").get<cayley_table>()};
        validate_monoid_action(m);
        in.action = std::move(m);
      } catch (nlohmann::json::exception const& e) {
        throw parse_error(std::string("monoid_action document: ") + e.what());
      }
    } else {
      throw parse_error("unknown kind '" + in.kind + "' (expected category, monoid_action, gms or lattice)");
    }
    return in;
  }

  loaded_input load_input(std::string const& path) {
    std::ifstream is(path);
    if (!is) {
      throw io_error("cannot open '" + path + "'");
    }
    nlohmann::json doc;
    try {
      is >> doc;
    } catch (nlohmann::json::exception const& e) {
      throw parse_error("'" + path + "': " + e.what());
    }
    return parse_input(doc);
  }

  ////////////////////////////////////////////////////////////////////////
  // Families
  ////////////////////////////////////////////////////////////////////////

  namespace {
    ext_rat const inf = ext_rat::infinity();

    std::vector<gms> with_extra(std::vector<gms> base, std::vector<gms> const& extra) {
      for (auto const& e : extra) {
        if (std::find(base.begin(), base.end(), e) == base.end()) {
          base.push_back(e);
        }
      }
      return base;
    }

    // Pentagon family: every law exhaustively.
    std::vector<gms> core_spaces(std::vector<gms> const& extra) { return with_extra({d_space(1), t3_space()}, extra); }

    // Action-level family.
    std::vector<gms> action_spaces(std::vector<gms> const& extra) {
      return with_extra({empty_space(), point_space(), d_space(0), d_space(ext_rat(1, 2)), d_space(1), d_space(inf),
                         t3_space()},
                        extra);
    }

    // Every space with at most two points and grid distances, plus T3.
    std::vector<gms> wide_spaces(std::vector<gms> const& extra) {
      std::vector<gms> out{empty_space(), point_space()};
      for (auto const& m : enumerate_gms(2, default_grid())) {
        out.push_back(m);
      }
      out.push_back(t3_space());
      return with_extra(out, extra);
    }

    std::vector<gms> d_spaces() {
      std::vector<gms> out;
      for (auto const& t : default_grid()) {
        out.push_back(d_space(t));
      }
      return out;
    }

    test_domain<grid_category>  grid_domain() { return thin_domain(grid_category_of(), default_grid()); }
    test_domain<truth_category> truth_domain() { return thin_domain(truth_category_of(), {false, true}); }

    test_domain<order_category> order_domain(bool naturals, std::int64_t lo, std::int64_t hi) {
      std::vector<std::int64_t> xs;
      for (auto v = lo; v <= hi; ++v) {
        xs.push_back(v);
      }
      return thin_domain(order_category_of(naturals), xs);
    }

    test_domain<finset_op_category> op_domain(std::size_t max_set) {
      auto                            d = finset_domain(max_set);
      test_domain<finset_op_category> out{d.objects, {}};
      for (auto const& f : d.morphisms) {
        out.morphisms.push_back({f});
      }
      return out;
    }

    test_domain<finset_category> sets_in(std::vector<std::size_t> const& sizes) {
      finset_category              cat;
      test_domain<finset_category> out{sizes, {}};
      for (auto a : sizes) {
        for (auto b : sizes) {
          auto hs = cat.hom(a, b);
          out.morphisms.insert(out.morphisms.end(), hs.begin(), hs.end());
        }
      }
      return out;
    }

    test_domain<kstar_category> kstar_domain(std::vector<rational> const& xs) {
      test_domain<kstar_category> out{xs, {}};
      for (auto const& x : xs) {
        out.morphisms.push_back({x, x});
      }
      return out;
    }

    std::vector<rational> kstar_scalars() { return {rational(1, 2), rational(1), rational(2), rational(3), rational(-1)}; }

    template <category X, category C>
    std::string describe_pair(semidirect_category<X, C> const& cat, object_t<semidirect_category<X, C>> const& p) {
      return cat.describe_object(p);
    }

    void require_probe(gms const& probe) {
      for (std::size_t i = 0; i < probe.size(); ++i) {
        for (std::size_t j = 0; j < probe.size(); ++j) {
          auto const& d = probe.dist(i, j);
          if (i != j && !d.is_zero() && !d.is_infinite()) {
            return;
          }
        }
      }
      throw degenerate_probe(probe.describe() + " has no pair at finite nonzero distance");
    }

    // Action plus the families its laws are instantiated over.
    template <category X, category C>
    struct bundle {
      std::string                         key;
      weak_action<X, C>                   weak;
      std::optional<action_inverses<X, C>> inv;
      action_domain<X, C>                 dom;
      test_domain<X>                      sd_x;
      test_domain<C>                      sd_c;
      invertibility_witness<X>            wx;
      invertibility_witness<C>            wc;
    };

    struct family_options {
      std::vector<gms>            extra_spaces;
      std::vector<finite_lattice> lattices;
    };

    bundle<grid_category, gms_category> make_truncation(family_options const& o) {
      auto a = truncation_action();
      return {"truncation",
              a,
              std::nullopt,
              {grid_domain(), gms_domain(action_spaces(o.extra_spaces))},
              grid_domain(),
              gms_domain(core_spaces(o.extra_spaces)),
              identity_inverses(a.acting),
              identity_inverses(a.acted)};
    }

    bundle<truth_category, gms_category> make_truth_values(family_options const& o) {
      auto sa = truth_values_action();
      return {"truth_values",
              sa.weak,
              sa.inv,
              {truth_domain(), gms_domain(action_spaces(o.extra_spaces))},
              truth_domain(),
              gms_domain(action_spaces(o.extra_spaces)),
              identity_inverses(sa.weak.acting),
              identity_inverses(sa.weak.acted)};
    }

    bundle<finset_op_category, finset_category> make_finset_op(std::size_t max_x, std::size_t max_c) {
      auto sa = finset_op_action();
      return {"finset_op",
              sa.weak,
              sa.inv,
              {op_domain(2), finset_domain(2)},
              op_domain(max_x),
              finset_domain(max_c),
              identity_inverses(sa.weak.acting),
              identity_inverses(sa.weak.acted)};
    }

    bundle<finset_category, finset_category> make_finset_j() {
      auto sa = finset_j_action(2);
      // X + Y + Z must stay small: C^X = C^(2^X).
      return {"finset_j",
              sa.weak,
              sa.inv,
              {sets_in({0, 1}), finset_domain(2)},
              sets_in({0, 1}),
              finset_domain(2),
              identity_inverses(sa.weak.acting),
              identity_inverses(sa.weak.acted)};
    }

    bundle<monotone_category, monotone_category> make_precompose() {
      auto sa = precompose_action();
      auto dx = thin_domain(monotone_category_of(), monotone_maps(3, 3));
      auto dc = thin_domain(monotone_category_of(), monotone_maps(3, 2));
      return {"precompose", sa.weak, sa.inv, {dx, dc}, dx, dc, identity_inverses(sa.weak.acting),
              identity_inverses(sa.weak.acted)};
    }

    bundle<kstar_category, matcat> make_kstar(std::int64_t k) {
      auto sa = kstar_action(k);
      auto dx = kstar_domain(kstar_scalars());
      auto dc = matcat_domain(2);
      return {"kstar", sa.weak, sa.inv, {dx, dc}, dx, dc, identity_inverses(sa.weak.acting),
              identity_inverses(sa.weak.acted)};
    }

    bundle<order_category, gms_category> make_scaling(family_options const& o) {
      auto sa = scaling_action(true);
      return {"scaling",
              sa.weak,
              sa.inv,
              {order_domain(true, 0, 3), gms_domain(action_spaces(o.extra_spaces))},
              order_domain(true, 0, 2),
              gms_domain(core_spaces(o.extra_spaces)),
              identity_inverses(sa.weak.acting),
              identity_inverses(sa.weak.acted)};
    }

    bundle<finset_category, thin_category<std::size_t>> make_copower(finite_lattice const& l) {
      auto sa = copower_action(l);
      auto dx = finset_domain(2);
      auto dc = lattice_domain(l);
      return {"copower", sa.weak, sa.inv, {dx, dc}, dx, dc, identity_inverses(sa.weak.acting),
              identity_inverses(sa.weak.acted)};
    }

    bundle<finset_category, finset_category> make_self_tensor() {
      auto sa = self_tensor_action();
      auto dx = finset_domain(2);
      auto dc = finset_domain(2);
      return {"self_tensor", sa.weak, sa.inv, {dx, dc}, dx, dc, identity_inverses(sa.weak.acting),
              identity_inverses(sa.weak.acted)};
    }

    template <typename Fn>
    void for_each_bundle(std::string const& filter, family_options const& o, Fn&& fn) {
      auto want = [&](char const* n) { return filter.empty() || filter == n; };
      if (want("truncation")) {
        fn(make_truncation(o));
      }
      if (want("truth_values")) {
        fn(make_truth_values(o));
      }
      if (want("finset_op")) {
        fn(make_finset_op(2, 2));
      }
      if (want("finset_j")) {
        fn(make_finset_j());
      }
      if (want("precompose")) {
        fn(make_precompose());
      }
      if (want("kstar")) {
        fn(make_kstar(1));
        fn(make_kstar(2));
      }
      if (want("scaling")) {
        fn(make_scaling(o));
      }
      if (want("copower")) {
        for (auto const& l : o.lattices) {
          fn(make_copower(l));
        }
      }
      if (want("self_tensor")) {
        fn(make_self_tensor());
      }
    }

    // Wraps a check whose failure is the expected outcome: the law passes
    // when the inner report fails with a concrete witness.
    check_report expect_failure(check_report const& inner, std::string const& subject, std::string const& law,
                                std::string const& anchor) {
      check_report out(subject, inner.seed());
      auto&        r = out.law(law, anchor);
      for (auto const& l : inner.laws()) {
        if (l.failed > 0 && !l.witnesses.empty()) {
          auto const& w    = l.witnesses.front();
          std::string inst;
          for (auto const& s : w.instantiation) {
            inst += (inst.empty() ? "" : ", ") + s;
          }
          out.note("reproduced by " + l.law + " at (" + inst + ")" + (w.note.empty() ? "" : ": " + w.note));
          r.record_pass();
          return out;
        }
      }
      r.record_failure({{inner.subject()}, inner.summary_line(), "", "expected a law failure with a witness"});
      return out;
    }

    template <category C>
    bool same_object(C const& cat, object_t<C> const& a, object_t<C> const& b) {
      (void)cat;
      return a == b;
    }

    // Records an object-level claim.
    template <category C>
    void expect_object(C const& cat, law_result& r, std::vector<std::string> inst, object_t<C> const& got,
                       object_t<C> const& want) {
      if (same_object(cat, got, want)) {
        r.record_pass();
      } else {
        r.record_failure({std::move(inst), cat.describe_object(got), cat.describe_object(want), "objects differ"});
      }
    }

    void expect_true(law_result& r, std::vector<std::string> inst, bool ok, std::string const& note) {
      if (ok) {
        r.record_pass();
      } else {
        r.record_failure({std::move(inst), "", "", note});
      }
    }

    template <category X, category C>
    check_report skew_laws_of(bundle<X, C> const& bd, budget const& b) {
      auto s = semidirect_structure_of(bd.weak);
      return check_skew_laws(s, product_domain(s.base, bd.sd_x, bd.sd_c), b);
    }

    template <category X, category C>
    check_report invertibility_of(bundle<X, C> const& bd, action_inverses<X, C> const& inv, budget const& b) {
      auto s = semidirect_structure_of(bd.weak);
      auto w = semidirect_inverses(strong_action<X, C>{bd.weak, inv}, bd.wx, bd.wc);
      return check_monoidal_invertibility(s, w, product_domain(s.base, bd.sd_x, bd.sd_c, false), b);
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Monoid oracle
  ////////////////////////////////////////////////////////////////////////

  check_report monoid_oracle(std::size_t max_order, budget const& b) {
    if (max_order == 0 || max_order > 4) {
      throw param_out_of_bounds("monoid order must be between 1 and 4, got " + std::to_string(max_order));
    }
    check_report               rep("monoid-oracle(order<=" + std::to_string(max_order) + ")", b.seed);
    auto&                      count = rep.law("oracle:enumeration", "every action table between the enumerated monoids");
    std::vector<finite_monoid> all;
    for (std::size_t n = 1; n <= max_order; ++n) {
      auto ms = enumerate_monoids(n);
      all.insert(all.end(), ms.begin(), ms.end());
    }
    std::size_t actions = 0;
    for (auto const& x : all) {
      for (auto const& c : all) {
        for (auto const& m : enumerate_actions(x, c)) {
          rep.merge(check_monoid_laws(monoid_semidirect(m), "semidirect-monoid"));
          rep.merge(check_monoid_reduction(m));
          count.record_pass();
          ++actions;
        }
      }
    }
    rep.note(std::to_string(all.size()) + " monoids, " + std::to_string(actions) + " action tables");
    return rep;
  }

  ////////////////////////////////////////////////////////////////////////
  // Skew laws and invertibility
  ////////////////////////////////////////////////////////////////////////

  check_report skew_laws_truncation(budget const& b, bool core, std::vector<gms> const& extra) {
    auto a  = truncation_action();
    auto sd = build_semidirect(a, {grid_domain(), gms_domain(action_spaces(extra))}, b);
    auto s  = sd.structure;
    if (!core) {
      s.name += " [wide]";
    }
    auto spaces = core ? core_spaces(extra) : wide_spaces(extra);
    return check_skew_laws(s, product_domain(s.base, grid_domain(), gms_domain(spaces), core), b);
  }

  check_report skew_laws_truth_values(budget const& b, bool core, std::vector<gms> const& extra) {
    auto a  = truth_values_action().weak;
    auto sd = build_semidirect(a, {truth_domain(), gms_domain(action_spaces(extra))}, b);
    auto s  = sd.structure;
    if (!core) {
      s.name += " [wide]";
    }
    auto spaces = core ? action_spaces(extra) : wide_spaces(extra);
    return check_skew_laws(s, product_domain(s.base, truth_domain(), gms_domain(spaces), core), b);
  }

  check_report skew_laws_corepresented(budget const& b, std::vector<gms> const& extra) {
    auto         base = gms_monoidal();
    auto         T    = flatten_comonad();
    auto         dom  = gms_domain(action_spaces(extra));
    auto         direct = corepresented_skew(base, T, dom, b);
    check_report rep("flatten-comonad:corepresented", b.seed);
    rep.merge(check_skew_laws(direct, dom, b));
    auto one = comonad_action(base, T, "flatten");
    auto sd  = semidirect_structure_of(one);
    rep.merge(check_corepresented_agreement(direct, sd, dom, b));
    return rep;
  }

  check_report invertibility_truth_values(budget const& b) {
    auto bd = make_truth_values({});
    return invertibility_of(bd, *bd.inv, b);
  }

  check_report invertibility_kstar(std::int64_t k, budget const& b) {
    auto bd = make_kstar(k);
    return invertibility_of(bd, *bd.inv, b);
  }

  check_report invertibility_finset_op(std::size_t max_set, budget const& b) {
    auto bd = make_finset_op(max_set, max_set);
    return invertibility_of(bd, *bd.inv, b);
  }

  check_report invertibility_copower(finite_lattice const& l, std::size_t max_set, budget const& b) {
    auto bd = make_copower(l);
    bd.sd_x = finset_domain(max_set);
    return invertibility_of(bd, *bd.inv, b);
  }

  check_report invertibility_truncation_trivial(budget const& b) {
    auto bd = make_truncation({});
    return invertibility_of(bd, truncation_trivial_inverses(), b);
  }

  ////////////////////////////////////////////////////////////////////////
  // Duals
  ////////////////////////////////////////////////////////////////////////

  check_report duals_kstar(std::int64_t k, std::vector<rational> const& xs, std::size_t max_dim) {
    auto         sa = kstar_action(k);
    auto         s  = semidirect_structure_of(sa.weak);
    auto         w  = semidirect_inverses(sa, identity_inverses(sa.weak.acting), identity_inverses(sa.weak.acted));
    check_report rep("kstar(k=" + std::to_string(k) + "):duals");
    for (auto const& x : xs) {
      for (std::size_t n = 0; n <= max_dim; ++n) {
        object_t<semidirect_category<kstar_category, matcat>> p{x, n};
        auto d = left_dual_sd(sa, kstar_dual(x), matcat_dual(n), p);
        rep.merge(check_duality(s, w, p, d, "dual"));
      }
    }
    return rep;
  }

  ////////////////////////////////////////////////////////////////////////
  // Right-closedness
  ////////////////////////////////////////////////////////////////////////

  check_report right_closed_scaling(std::int64_t max_exp, budget const& b) {
    auto         sa = scaling_action(true);
    auto const&  a  = sa.weak;
    auto         s  = semidirect_structure_of(a);
    auto         dx = order_domain(true, 0, max_exp);
    auto         dc = gms_domain(d_spaces());
    check_report rep("scaling:right-closed", b.seed);
    rep.merge(check_right_adjoint(a, scaling_right_adjoint(), {dx, dc}, b));
    rep.merge(check_hom_adjunction(a.acting, order_hom(true), hom_side::right, dx, b, "exponents:right-hom"));
    rep.merge(check_hom_adjunction(a.acted, gms_hom_data(), hom_side::right, dc, b, "gms:right-hom"));
    auto h = right_closed_hom(a, order_hom(true), gms_hom_data(), scaling_right_adjoint());
    rep.merge(check_hom_adjunction(s, h, hom_side::right, product_domain(s.base, dx, dc, false), b, "semidirect:right-hom"));
    return rep;
  }

  check_report right_closed_agreement(std::int64_t max_exp, budget const& b) {
    auto         sa = scaling_action(false);
    auto const&  a  = sa.weak;
    auto         s  = semidirect_structure_of(a);
    auto         dx = order_domain(false, -max_exp, max_exp);
    auto         dc = gms_domain(d_spaces());
    auto         wx = identity_inverses(a.acting);
    std::function<dual_data<order_category>(std::int64_t const&)> xdual = [](std::int64_t const& y) {
      return order_dual(y);
    };
    check_report rep("scaling_z:hom-agreement", b.seed);
    for (auto const& y : dx.objects) {
      rep.merge(check_duality(a.acting, wx, y, order_dual(y), "exponent-dual"));
    }
    rep.merge(check_right_adjoint(a, right_adjoint_from_duals(sa, xdual), {dx, dc}, b));
    auto h1 = right_closed_hom(a, order_hom(false), gms_hom_data(), scaling_right_adjoint());
    auto h2 = right_closed_hom_via_dual(sa, wx, gms_hom_data(), xdual);
    auto sd = product_domain(s.base, dx, dc, false);
    rep.merge(check_hom_adjunction(s, h1, hom_side::right, sd, b, "adjoint-hom"));
    rep.merge(check_hom_adjunction(s, h2, hom_side::right, sd, b, "dual-hom"));
    rep.merge(check_hom_agreement(s, h1, h2, sd, b));
    return rep;
  }

  ////////////////////////////////////////////////////////////////////////
  // Left-closedness
  ////////////////////////////////////////////////////////////////////////

  namespace {
    template <category C>
    check_report left_closed_of(strong_action<finset_category, C> const& sa, coproduct_data<C> const& cp,
                                triangle_hom_data<finset_category, C> const& t, test_domain<C> const& dc,
                                std::size_t max_set, budget const& b, std::string const& label) {
      auto const&  a  = sa.weak;
      auto         s  = semidirect_structure_of(a);
      auto         dx = finset_domain(max_set);
      check_report rep(label + ":left-closed", b.seed);
      rep.merge(check_triangle_hom(a, t, {dx, dc}, b));
      rep.merge(check_hom_adjunction(a.acting, finset_left_hom(), hom_side::left, dx, b, "finset:left-hom"));
      auto h = left_closed_hom(a, finset_left_hom(), finset_products(), cp, t);
      rep.merge(check_hom_adjunction(s, h, hom_side::left, product_domain(s.base, dx, dc, false), b, "semidirect:left-hom"));
      return rep;
    }
  }  // namespace

  check_report left_closed_copower(finite_lattice const& l, std::size_t max_set, budget const& b) {
    return left_closed_of(copower_action(l), lattice_coproducts(l), copower_triangle(l), lattice_domain(l), max_set, b,
                          "copower");
  }

  check_report left_closed_self_tensor(std::size_t max_set, budget const& b) {
    return left_closed_of(self_tensor_action(), finset_coproducts(), self_tensor_triangle(), finset_domain(max_set),
                          max_set, b, "self_tensor");
  }

  ////////////////////////////////////////////////////////////////////////
  // Counterexamples
  ////////////////////////////////////////////////////////////////////////

  namespace {
    using truth_sd = semidirect_category<truth_category, gms_category>;
    using truth_po = object_t<truth_sd>;

    std::vector<ext_rat> distances_of(gms const& m) { return m.distances(); }

    std::vector<gms> colimit_targets() {
      auto out = enumerate_gms(2, default_grid());
      out.push_back(point_space());
      return out;
    }
  }  // namespace

  check_report counterexample_right_closed(std::size_t chain_length) {
    // A finite prefix stands in for the omega-chain only if its last stage is
    // closer than every positive distance the probe targets can see.
    if (chain_length < 3) {
      throw param_out_of_bounds("chain length must be at least 3 (1/n below the smallest positive grid distance 1/2)");
    }
    auto         s   = semidirect_structure_of(truth_values_action().weak);
    auto const&  cat = s.base;
    check_report rep("truth_values:counterexample-right");
    auto&        chain   = rep.law("chain:colimit", "colim <T, D_1/n> = <T, D_0>");
    auto&        image   = rep.law("chain:image", "<T, D_1/n> (x) <F, 1> = <F, D_inf>");
    auto&        icolim  = rep.law("chain:image-colimit", "colim of the image chain = <F, D_inf>");
    auto&        tensor  = rep.law("colimit:tensored", "<T, D_0> (x) <F, 1> = <F, D_0>");
    auto&        noniso  = rep.law("comparison:not-iso", "<F, D_inf> and <F, D_0> are not isomorphic");
    auto&        verdict = rep.law("right-tensor:not-cocontinuous", "- (x) <F, 1> does not preserve this colimit");

    truth_po const unit_f{false, point_space()};
    std::vector<gms> stages;
    for (std::size_t n = 1; n <= chain_length; ++n) {
      stages.push_back(d_space(ext_rat(1, static_cast<std::int64_t>(n))));
    }
    auto targets = colimit_targets();
    auto col     = gms_chain_colimit(stages, distances_of(d_space(0)), targets);
    rep.merge(col.report);
    expect_object(cat, chain, {"stages 1.." + std::to_string(chain_length)}, truth_po{true, col.colimit},
                  truth_po{true, d_space(0)});

    std::vector<gms> images;
    for (auto const& st : stages) {
      auto img = s.t(truth_po{true, st}, unit_f);
      expect_object(cat, image, {cat.describe_object({true, st})}, img, truth_po{false, d_space(inf)});
      images.push_back(img.c);
    }
    auto icol = gms_chain_colimit(images, distances_of(d_space(inf)), targets);
    rep.merge(icol.report);
    expect_object(cat, icolim, {"image chain"}, truth_po{false, icol.colimit}, truth_po{false, d_space(inf)});

    auto tensored = s.t(truth_po{true, d_space(0)}, unit_f);
    expect_object(cat, tensor, {cat.describe_object({true, d_space(0)})}, tensored, truth_po{false, d_space(0)});

    bool const iso = gms_iso_exists(icol.colimit, tensored.c).has_value();
    expect_true(noniso, {icol.colimit.describe(), tensored.c.describe()}, !iso, "an isometry exists");
    // The comparison map colim F(D) -> F(colim D) exists but is not invertible.
    gms_category gc;
    auto         cmp = gc.same_points(icol.colimit, tensored.c);
    expect_true(noniso, {"comparison map"}, gc.is_valid(cmp) && !gc.is_valid(gc.same_points(tensored.c, icol.colimit)),
                "comparison map missing or invertible");
    expect_true(verdict, {"summary"}, rep.passed(), "some step of the counterexample did not reproduce");
    return rep;
  }

  check_report counterexample_left_closed(gms const& probe, bool x) {
    require_probe(probe);
    auto         s   = semidirect_structure_of(truth_values_action().weak);
    auto const&  cat = s.base;
    truth_po     P{x, probe};
    std::string  pname = cat.describe_object(P);
    check_report rep("truth_values:counterexample-left" + pname);
    auto&        co      = rep.law("coproduct:base", "<F, 1> + <T, 0> = <T, 1>");
    auto&        images  = rep.law("coproduct:images", "P (x) <F, 1> = <F, M^F>, P (x) <T, 0> = <x, 0>");
    auto&        icop    = rep.law("coproduct:image-colimit", "<F, M^F> + <x, 0> = <x, M^F>");
    auto&        tensor  = rep.law("colimit:tensored", "P (x) <T, 1> = <x, M^T>");
    auto&        noniso  = rep.law("comparison:not-iso", "M^T and M^F are not isomorphic");
    auto&        verdict = rep.law("left-tensor:not-cocontinuous", "P (x) - does not preserve this coproduct");

    // Coproducts in {F -> T} x GMS are componentwise: join, disjoint union.
    auto base_co = gms_coproduct(point_space(), empty_space());
    rep.merge(check_coproduct_universal(point_space(), empty_space(), colimit_targets()));
    expect_true(co, {"<F, 1> + <T, 0>"}, gms_iso_exists(base_co.space, point_space()).has_value(),
                "1 + 0 is not 1");

    auto l = s.t(P, truth_po{false, point_space()});
    auto r = s.t(P, truth_po{true, empty_space()});
    expect_object(cat, images, {pname, "<F, 1>"}, l, truth_po{false, gms_flatten(probe, false)});
    expect_object(cat, images, {pname, "<T, 0>"}, r, truth_po{x, empty_space()});

    auto img_co = gms_coproduct(l.c, r.c);
    rep.merge(check_coproduct_universal(l.c, r.c, colimit_targets()));
    truth_po const joined{l.x || r.x, img_co.space};
    expect_true(icop, {pname}, joined.x == x && gms_iso_exists(joined.c, gms_flatten(probe, false)).has_value(),
                "coproduct of the images is not <x, M^F>: got " + cat.describe_object(joined));

    auto tensored = s.t(P, truth_po{true, point_space()});
    expect_object(cat, tensor, {pname, "<T, 1>"}, tensored, truth_po{x, gms_flatten(probe, true)});

    expect_true(noniso, {gms_flatten(probe, true).describe(), gms_flatten(probe, false).describe()},
                !gms_iso_exists(gms_flatten(probe, true), gms_flatten(probe, false)).has_value(), "an isometry exists");
    expect_true(verdict, {"summary"}, rep.passed(), "some step of the counterexample did not reproduce");
    return rep;
  }

  check_report counterexample_left_closed() { return counterexample_left_closed(d_space(1), true); }

  check_report initial_preservation(finite_lattice const& l, std::size_t max_set) {
    auto         s   = semidirect_structure_of(copower_action(l).weak);
    auto const&  cat = s.base;
    using po         = object_t<decltype(s.base)>;
    std::vector<po> objs;
    for (std::size_t n = 0; n <= max_set; ++n) {
      for (auto c : l.elements()) {
        objs.push_back({n, c});
      }
    }
    po const     initial{0, l.bottom()};
    check_report rep("copower(" + std::to_string(l.size()) + "-element lattice):initial-preservation");
    auto&        fails = rep.law("initial:not-preserved", "<0, bot> (x) <Y, c> is not initial for c != bot");
    auto&        keeps = rep.law("initial:bottom-probe", "<0, bot> (x) <Y, bot> is initial");
    for (auto const& p : objs) {
      auto inner = check_initial_preservation(s, initial, p, objs);
      auto inst  = std::vector<std::string>{cat.describe_object(p), cat.describe_object(s.t(initial, p))};
      if (p.c == l.bottom()) {
        expect_true(keeps, inst, inner.passed(), "initial object not preserved by a bottom probe");
      } else {
        expect_true(fails, inst, !inner.passed(), "initial object preserved by a nontrivial probe");
      }
    }
    return rep;
  }

  ////////////////////////////////////////////////////////////////////////
  // Mutations
  ////////////////////////////////////////////////////////////////////////

  mutation_outcome mutate_skew_laws(budget const& b) {
    mutation_outcome out{"truncation psi2 swapped on symmetric two-point spaces", skew_laws_truncation(b, true), {}};
    auto             a    = truncation_action();
    auto             psi2 = a.psi2;
    a.name += "[psi2-swap]";
    a.psi2 = [psi2](ext_rat const& x, ext_rat const& y, gms const& m) {
      auto f = psi2(x, y, m);
      if (m.size() == 2 && m.dist(0, 1) == m.dist(1, 0)) {
        f.map = {1, 0};
      }
      return f;
    };
    auto sd     = build_semidirect(a, {grid_domain(), gms_domain(core_spaces({}))}, b, false);
    out.mutated = check_skew_laws(sd.structure, product_domain(sd.structure.base, grid_domain(), gms_domain(core_spaces({}))), b);
    return out;
  }

  mutation_outcome mutate_invertibility(budget const& b) {
    mutation_outcome out{"kstar(k=1) phi2 inverse scaled by x instead of 1/x", invertibility_kstar(1, b), {}};
    auto             bd  = make_kstar(1);
    auto             inv = *bd.inv;
    inv.phi2_inv = [](rational const& x, std::size_t p, std::size_t q) { return mat::scalar(x, p * q); };
    bd.weak.name += "[phi2-inverse]";
    out.mutated = invertibility_of(bd, inv, b);
    return out;
  }

  namespace {
    check_report scaling_semidirect_hom(internal_hom_data<gms_category> const& ch, budget const& b, std::string const& tag) {
      auto a  = scaling_action(true).weak;
      a.name += tag;
      auto s  = semidirect_structure_of(a);
      auto dx = order_domain(true, 0, 2);
      auto dc = gms_domain(d_spaces());
      auto h  = right_closed_hom(a, order_hom(true), ch, scaling_right_adjoint());
      return check_hom_adjunction(s, h, hom_side::right, product_domain(s.base, dx, dc, false), b);
    }
  }  // namespace

  mutation_outcome mutate_right_closed(budget const& b) {
    mutation_outcome out{"scaling hom object built at scale 1", scaling_semidirect_hom(gms_hom_data(), b, ""), {}};
    auto             ch    = gms_hom_data();
    auto             curry = ch.curry;
    ch.hom                 = [](gms const& n, gms const& p) { return gms_internal_hom(n, p, 1).space; };
    ch.curry               = [curry](gms_map const& g, gms const& m, gms const& n) {
      auto f   = curry(g, m, n);
      f.target = gms_internal_hom(n, g.target, 1).space;
      return f;
    };
    out.mutated = scaling_semidirect_hom(ch, b, "[hom-scale]");
    return out;
  }

  mutation_outcome mutate_left_closed(budget const& b) {
    auto             l = diamond_lattice();
    mutation_outcome out{"copower B |> C constant 1", left_closed_copower(l, 2, b), {}};
    auto             t = copower_triangle(l);
    t.obj              = [](std::size_t, std::size_t) { return std::size_t{1}; };
    t.fwd              = [](thin_arrow<std::size_t> const&, std::size_t, std::size_t x, std::size_t) {
      return finset::fn{x, 1, std::vector<std::uint32_t>(x, 0)};
    };
    auto sa = copower_action(l);
    sa.weak.name += "[triangle-const]";
    out.mutated = left_closed_of(sa, lattice_coproducts(l), t, lattice_domain(l), 2, b, sa.weak.name);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Suites
  ////////////////////////////////////////////////////////////////////////

  std::vector<suite_info> const& suite_catalog() {
    static std::vector<suite_info> const catalog{
        {"category-axioms", "identity and associativity laws and hom closure of every instance category"},
        {"skew-laws", "skew monoidal laws of every semidirect product and base structure"},
        {"weak-action", "weak action laws of every action"},
        {"strong-action", "inverses of the action structure maps"},
        {"invertibility", "invertible coherence of semidirect products of strong actions"},
        {"monoid-oracle", "semidirect products of finite monoids against the categorical construction"},
        {"duals", "left duals in semidirect products and their snake identities"},
        {"right-closed", "right internal homs: scaling instance and the dual construction"},
        {"left-closed", "left internal homs over cocartesian acted categories"},
        {"counterexample-right", "right tensoring does not preserve a chain colimit"},
        {"counterexample-left", "left tensoring does not preserve a binary coproduct"},
        {"initial-preservation", "tensoring does not preserve the initial object"},
        {"mutation", "single-component mutations are caught by the corresponding checks"},
        {"all", "every suite above"},
    };
    return catalog;
  }

  bool suite_result::passed() const {
    return std::all_of(reports.begin(), reports.end(), [](check_report const& r) { return r.passed(); });
  }

  bool run_result::passed() const {
    return std::all_of(suites.begin(), suites.end(), [](suite_result const& s) { return s.passed(); });
  }

  nlohmann::json run_result::to_json() const {
    nlohmann::json ss = nlohmann::json::array();
    std::uint64_t  n_reports = 0, n_laws = 0, n_checked = 0, n_failed = 0;
    for (auto const& s : suites) {
      nlohmann::json rs = nlohmann::json::array();
      for (auto const& r : s.reports) {
        rs.push_back(r.to_json());
        ++n_reports;
        n_laws += r.laws().size();
        n_checked += r.count_checked();
        n_failed += r.count_failed();
      }
      ss.push_back({{"name", s.name}, {"status", s.passed() ? "pass" : "fail"}, {"reports", rs}});
    }
    return {{"schema", report_schema},
            {"tool", "skewcat"},
            {"config",
             {{"suites", config.suites},
              {"action", config.action},
              {"budget", config.budget},
              {"seed", config.seed},
              {"max_order", config.max_order},
              {"load", config.input_label}}},
            {"status", passed() ? "pass" : "fail"},
            {"summary",
             {{"suites", suites.size()}, {"reports", n_reports}, {"laws", n_laws}, {"checked", n_checked}, {"failed", n_failed}}},
            {"suites", ss}};
  }

  namespace {
    struct task {
      std::string                   label;
      std::function<check_report()> run;
    };

    struct suite_plan {
      std::string       name;
      std::vector<task> tasks;
    };

    template <category C>
    void add_category(std::vector<task>& ts, std::string const& label, C cat, test_domain<C> dom, budget const& b) {
      ts.push_back({label, [=] { return check_category_axioms(cat, dom, b, label); }});
      if constexpr (enumerable_category<C>) {
        ts.push_back({label + ":hom-closure", [=] { return check_hom_closure(cat, dom.objects, b, label + ":hom-closure"); }});
      }
    }

    template <category C>
    void add_base_skew(std::vector<task>& ts, skew_monoidal<C> s, test_domain<C> dom, budget const& b) {
      ts.push_back({s.name, [=] { return check_skew_laws(s, dom, b); }});
    }

    std::vector<task> category_tasks(suite_config const& cfg, family_options const& o, budget const& b) {
      std::vector<task> ts;
      add_category(ts, "finset", finset_category{}, finset_domain(3), b);
      add_category(ts, "finset-op", finset_op_category(finset_category{}), op_domain(2), b);
      add_category(ts, "gms", gms_category{}, gms_domain(action_spaces(o.extra_spaces)), b);
      add_category(ts, "matcat", matcat{}, matcat_domain(2), b);
      add_category(ts, "grid", grid_category_of(), grid_domain(), b);
      add_category(ts, "truth", truth_category_of(), truth_domain(), b);
      add_category(ts, "exponents", order_category_of(true), order_domain(true, 0, 3), b);
      add_category(ts, "monotone", monotone_category_of(), thin_domain(monotone_category_of(), monotone_maps(3, 3)), b);
      add_category(ts, "kstar", kstar_category_of(), kstar_domain(kstar_scalars()), b);
      for (auto const& l : o.lattices) {
        add_category(ts, "lattice(" + std::to_string(l.size()) + ")", l.category(), lattice_domain(l), b);
      }
      auto tables = std::vector<std::pair<std::string, finite_category>>{
          {"table:Z3", monoid_category(cyclic_group(3).mult, 0, "Z3")},
          {"table:Z2xZ3", product_table(monoid_category(cyclic_group(2).mult, 0, "Z2"),
                                        monoid_category(cyclic_group(3).mult, 0, "Z3"))},
          {"table:terminal-op", opposite_table(terminal_category())},
      };
      if (cfg.input && cfg.input->category) {
        tables.emplace_back("table:loaded", *cfg.input->category);
      }
      for (auto const& [name, c] : tables) {
        add_category(ts, name, c, full_domain(c), b);
      }
      return ts;
    }

    std::vector<task> skew_tasks(suite_config const& cfg, family_options const& o, budget const& b) {
      std::vector<task> ts;
      auto const&       extra = o.extra_spaces;
      for_each_bundle(cfg.action, o, [&](auto bd) {
        if (bd.key == "truncation") {
          ts.push_back({"truncation", [=] { return skew_laws_truncation(b, true, extra); }});
          ts.push_back({"truncation[wide]", [=] { return skew_laws_truncation(b, false, extra); }});
        } else if (bd.key == "truth_values") {
          ts.push_back({"truth_values", [=] { return skew_laws_truth_values(b, true, extra); }});
          ts.push_back({"truth_values[wide]", [=] { return skew_laws_truth_values(b, false, extra); }});
          ts.push_back({"flatten-comonad", [=] { return skew_laws_corepresented(b, extra); }});
        } else {
          ts.push_back({bd.weak.name, [=] { return skew_laws_of(bd, b); }});
        }
      });
      if (cfg.action.empty()) {
        add_base_skew(ts, gms_monoidal(), gms_domain(action_spaces(extra)), b);
        add_base_skew(ts, finset_cartesian(), finset_domain(2), b);
        add_base_skew(ts, finset_cocartesian(), finset_domain(2), b);
        add_base_skew(ts, finset_op_cartesian(), op_domain(2), b);
        add_base_skew(ts, matcat_monoidal(), matcat_domain(2), b);
        add_base_skew(ts, grid_monoidal(), grid_domain(), b);
        add_base_skew(ts, truth_monoidal(), truth_domain(), b);
        add_base_skew(ts, addition_monoidal(true), order_domain(true, 0, 3), b);
        add_base_skew(ts, addition_monoidal(false), order_domain(false, -2, 2), b);
        add_base_skew(ts, kstar_monoidal(), kstar_domain(kstar_scalars()), b);
        add_base_skew(ts, precompose_acting(), thin_domain(monotone_category_of(), monotone_maps(3, 3)), b);
        add_base_skew(ts, precompose_acted(), thin_domain(monotone_category_of(), monotone_maps(3, 2)), b);
        for (auto const& l : o.lattices) {
          add_base_skew(ts, l.join_monoidal(), lattice_domain(l), b);
        }
      }
      return ts;
    }

    std::vector<task> weak_tasks(suite_config const& cfg, family_options const& o, budget const& b) {
      std::vector<task> ts;
      for_each_bundle(cfg.action, o, [&](auto bd) {
        ts.push_back({bd.weak.name, [=] { return check_weak_action(bd.weak, bd.dom, b); }});
      });
      if (cfg.action.empty() || cfg.action == "truth_values") {
        auto extra = o.extra_spaces;
        ts.push_back({"flatten-comonad", [=] {
                        auto         dom = gms_domain(action_spaces(extra));
                        auto         s   = gms_monoidal();
                        auto         T   = flatten_comonad();
                        check_report rep("flatten-comonad:weak-action", b.seed);
                        rep.merge(check_lax_monoidal_comonad(s, T, dom, b, "flatten"));
                        auto one = comonad_action(s, T, "flatten");
                        rep.merge(check_weak_action(one, {{{0}, {point_category_of().identity(0)}}, dom}, b));
                        return rep;
                      }});
      }
      return ts;
    }

    template <category X, category C>
    check_report strong_of(bundle<X, C> const& bd, budget const& b) {
      return check_strong_action(strong_action<X, C>{bd.weak, *bd.inv}, bd.dom, b);
    }

    std::vector<task> strong_tasks(suite_config const& cfg, family_options const& o, budget const& b) {
      std::vector<task> ts;
      for_each_bundle(cfg.action, o, [&](auto bd) {
        if (bd.inv) {
          ts.push_back({bd.weak.name, [=] { return strong_of(bd, b); }});
        }
        if constexpr (std::is_same_v<decltype(bd), bundle<grid_category, gms_category>>) {
          ts.push_back({"truncation:trivial-inverses", [=] {
                          auto inner = check_strong_action(
                              strong_action<grid_category, gms_category>{bd.weak, truncation_trivial_inverses()}, bd.dom, b);
                          return expect_failure(inner, "truncation:not-strong", "strong:trivial-inverses-fail",
                                                "identity-on-points candidates are not inverse to phi2");
                        }});
        }
      });
      return ts;
    }

    std::vector<task> invertibility_tasks(suite_config const& cfg, family_options const& o, budget const& b) {
      std::vector<task> ts;
      for_each_bundle(cfg.action, o, [&](auto bd) {
        if (bd.inv) {
          ts.push_back({bd.weak.name, [=] { return invertibility_of(bd, *bd.inv, b); }});
        }
        if (bd.key == "finset_op") {
          ts.push_back({"finset_op(sets<=3)", [=] { return invertibility_finset_op(3, b); }});
        } else if (bd.key == "truncation") {
          ts.push_back({"truncation:not-monoidal", [=] {
                          return expect_failure(invertibility_truncation_trivial(b), "truncation:not-monoidal",
                                                "invertibility:trivial-inverses-fail",
                                                "the coherence maps of the truncation product are not invertible");
                        }});
        }
      });
      return ts;
    }

    std::vector<task> monoid_tasks(suite_config const& cfg, budget const& b) {
      std::vector<task> ts;
      auto              order = cfg.max_order;
      ts.push_back({"monoid-oracle", [=] { return monoid_oracle(order, b); }});
      if (cfg.input && cfg.input->action) {
        auto m = *cfg.input->action;
        ts.push_back({"monoid-oracle:loaded", [=] {
                        check_report rep("monoid-oracle:loaded", b.seed);
                        rep.merge(check_monoid_laws(monoid_semidirect(m), "semidirect-monoid"));
                        rep.merge(check_monoid_reduction(m));
                        return rep;
                      }});
      }
      return ts;
    }

    std::vector<task> dual_tasks() {
      std::vector<task>     ts;
      std::vector<rational> xs{rational(1, 2), rational(1), rational(2), rational(3)};
      for (std::int64_t k : {1, 2}) {
        ts.push_back({"kstar-duals", [=] { return duals_kstar(k, xs, 2); }});
      }
      ts.push_back({"matcat-duals", [] {
                      auto         s = matcat_monoidal();
                      auto         w = identity_inverses(s);
                      check_report rep("matcat:duals");
                      for (std::size_t n = 0; n <= 3; ++n) {
                        rep.merge(check_duality(s, w, n, matcat_dual(n), "dual"));
                      }
                      return rep;
                    }});
      ts.push_back({"exponent-duals", [] {
                      auto         s = addition_monoidal(false);
                      auto         w = order_inverses();
                      check_report rep("exponents_z:duals");
                      for (std::int64_t y = -3; y <= 3; ++y) {
                        rep.merge(check_duality(s, w, y, order_dual(y), "dual"));
                      }
                      return rep;
                    }});
      return ts;
    }

    check_report mutation_report(mutation_outcome const& m) {
      check_report rep("mutation:" + m.mutated.subject());
      auto&        r = rep.law("mutation:detected", m.name);
      rep.note("original: " + m.original.summary_line());
      rep.note("mutated: " + m.mutated.summary_line());
      if (m.detected()) {
        r.record_pass();
      } else {
        r.record_failure({{m.name}, m.original.summary_line(), m.mutated.summary_line(),
                          m.original.passed() ? "mutation not detected" : "unmutated instance fails"});
      }
      return rep;
    }

    std::vector<std::string> const& leaf_suites() {
      static std::vector<std::string> const names = [] {
        std::vector<std::string> out;
        for (auto const& s : suite_catalog()) {
          if (s.name != "all") {
            out.push_back(s.name);
          }
        }
        return out;
      }();
      return names;
    }

    suite_plan plan_suite(std::string const& name, suite_config const& cfg, family_options const& o, budget const& b) {
      suite_plan p{name, {}};
      auto&      ts = p.tasks;
      if (name == "category-axioms") {
        ts = category_tasks(cfg, o, b);
      } else if (name == "skew-laws") {
        ts = skew_tasks(cfg, o, b);
      } else if (name == "weak-action") {
        ts = weak_tasks(cfg, o, b);
      } else if (name == "strong-action") {
        ts = strong_tasks(cfg, o, b);
      } else if (name == "invertibility") {
        ts = invertibility_tasks(cfg, o, b);
      } else if (name == "monoid-oracle") {
        ts = monoid_tasks(cfg, b);
      } else if (name == "duals") {
        ts = dual_tasks();
      } else if (name == "right-closed") {
        ts.push_back({"scaling", [=] { return right_closed_scaling(3, b); }});
        ts.push_back({"scaling_z", [=] { return right_closed_agreement(2, b); }});
      } else if (name == "left-closed") {
        for (auto const& l : o.lattices) {
          ts.push_back({"copower", [=] { return left_closed_copower(l, 2, b); }});
        }
        ts.push_back({"self_tensor", [=] { return left_closed_self_tensor(2, b); }});
      } else if (name == "counterexample-right") {
        ts.push_back({"counterexample-right", [] { return counterexample_right_closed(5); }});
      } else if (name == "counterexample-left") {
        std::vector<gms> probes{d_space(1)};
        if (cfg.input && cfg.input->space) {
          require_probe(*cfg.input->space);
          probes.push_back(*cfg.input->space);
        }
        for (auto const& m : probes) {
          for (bool x : {false, true}) {
            ts.push_back({"counterexample-left", [=] { return counterexample_left_closed(m, x); }});
          }
        }
      } else if (name == "initial-preservation") {
        for (auto const& l : o.lattices) {
          ts.push_back({"initial", [=] { return initial_preservation(l, 2); }});
        }
      } else if (name == "mutation") {
        ts.push_back({"mutation:skew", [=] { return mutation_report(mutate_skew_laws(b)); }});
        ts.push_back({"mutation:invertibility", [=] { return mutation_report(mutate_invertibility(b)); }});
        ts.push_back({"mutation:right-closed", [=] { return mutation_report(mutate_right_closed(b)); }});
        ts.push_back({"mutation:left-closed", [=] { return mutation_report(mutate_left_closed(b)); }});
      } else {
        throw unknown_suite("unknown suite '" + name + "' (see `skewcat list`)");
      }
      return p;
    }

    check_report run_task(task const& t) {
      try {
        return t.run();
      } catch (std::exception const& e) {
        check_report rep(t.label);
        rep.law("construction", "the instance could be built").record_shape_error({{t.label}, "", "", e.what()});
        return rep;
      }
    }
  }  // namespace

  run_result run_suite(suite_config const& cfg) {
    if (!cfg.action.empty()) {
      find_action(cfg.action);
    }
    if (cfg.max_order == 0 || cfg.max_order > 4) {
      throw param_out_of_bounds("--max-order must be between 1 and 4, got " + std::to_string(cfg.max_order));
    }
    budget         b{cfg.budget, cfg.seed};
    family_options o;
    o.lattices = {diamond_lattice(), m3_lattice()};
    if (cfg.input && cfg.input->lattice) {
      o.lattices.push_back(*cfg.input->lattice);
    }
    if (cfg.input && cfg.input->space) {
      o.extra_spaces.push_back(*cfg.input->space);
    }

    std::vector<std::string> names;
    for (auto const& n : cfg.suites) {
      auto const& add = n == "all" ? leaf_suites() : std::vector<std::string>{n};
      for (auto const& a : add) {
        if (std::find(names.begin(), names.end(), a) == names.end()) {
          names.push_back(a);
        }
      }
    }
    // Every plan is built before anything runs, so configuration errors
    // surface without partial output.
    std::vector<suite_plan> plans;
    for (auto const& n : names) {
      plans.push_back(plan_suite(n, cfg, o, b));
    }

    std::vector<task const*> flat;
    for (auto const& p : plans) {
      for (auto const& t : p.tasks) {
        flat.push_back(&t);
      }
    }
    std::vector<check_report> results(flat.size());
    std::atomic<std::size_t>  next{0};
    auto                      worker = [&] {
      for (auto i = next++; i < flat.size(); i = next++) {
        results[i] = run_task(*flat[i]);
      }
    };
    auto                     jobs = std::max<std::size_t>(1, std::min(cfg.jobs, flat.size()));
    std::vector<std::thread> pool;
    for (std::size_t j = 1; j < jobs; ++j) {
      pool.emplace_back(worker);
    }
    worker();
    for (auto& t : pool) {
      t.join();
    }

    run_result out{cfg, {}};
    std::size_t k = 0;
    for (auto const& p : plans) {
      suite_result sr{p.name, {}};
      for (std::size_t i = 0; i < p.tasks.size(); ++i) {
        sr.reports.push_back(std::move(results[k++]));
      }
      out.suites.push_back(std::move(sr));
    }
    return out;
  }

}  // namespace skewcat
