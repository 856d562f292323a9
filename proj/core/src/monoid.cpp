#include <string>
#include <vector>

#include "skewcat/action.hpp"
#include "skewcat/semidirect.hpp"

namespace skewcat {

  namespace {
    std::string triple(std::size_t a, std::size_t b, std::size_t c) {
      return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
    }

    // Odometer over the free cells of a table; fn(table) for each filling.
    template <typename Fn>
    void fill_cells(cayley_table& t, std::vector<std::pair<std::size_t, std::size_t>> const& cells,
                    std::size_t range, Fn&& fn) {
      for (auto const& [r, c] : cells) {
        t[r][c] = 0;
      }
      while (true) {
        fn(t);
        std::size_t k = cells.size();
        while (k > 0) {
          auto& v = t[cells[k - 1].first][cells[k - 1].second];
          if (++v < range) {
            break;
          }
          v = 0;
          --k;
        }
        if (k == 0) {
          return;
        }
      }
    }

    bool is_monoid(finite_monoid const& m) {
      std::size_t n = m.order();
      for (std::size_t a = 0; a < n; ++a) {
        if (m(m.unit, a) != a || m(a, m.unit) != a) {
          return false;
        }
        for (std::size_t b = 0; b < n; ++b) {
          for (std::size_t c = 0; c < n; ++c) {
            if (m(m(a, b), c) != m(a, m(b, c))) {
              return false;
            }
          }
        }
      }
      return true;
    }
  }  // namespace

  void validate_monoid(finite_monoid const& m, std::string const& what) {
    std::size_t n = m.order();
    if (n == 0 || m.unit >= n) {
      throw invalid_action(what + ": empty table or unit out of range");
    }
    for (auto const& row : m.mult) {
      if (row.size() != n) {
        throw invalid_action(what + ": table is not square");
      }
      for (auto v : row) {
        if (v >= n) {
          throw invalid_action(what + ": entry out of range");
        }
      }
    }
    if (!is_monoid(m)) {
      throw invalid_action(what + ": not associative and unital");
    }
  }

  std::optional<std::string> monoid_action_violation(monoid_action const& m) {
    auto const& X  = m.x;
    auto const& C  = m.c;
    std::size_t nx = X.order();
    std::size_t nc = C.order();
    if (m.act.size() != nc) {
      return "action table has the wrong number of rows";
    }
    for (auto const& row : m.act) {
      if (row.size() != nx) {
        return "action table row has the wrong length";
      }
      for (auto v : row) {
        if (v >= nc) {
          return "action entry out of range";
        }
      }
    }
    for (std::size_t x = 0; x < nx; ++x) {
      for (std::size_t b = 0; b < nc; ++b) {
        for (std::size_t c = 0; c < nc; ++c) {
          if (C(m(b, x), m(c, x)) != m(C(b, c), x)) {
            return "b^x c^x != (bc)^x at (b,c,x)=" + triple(b, c, x);
          }
        }
      }
      if (m(C.unit, x) != C.unit) {
        return "1^x != 1 at x=" + std::to_string(x);
      }
    }
    for (std::size_t c = 0; c < nc; ++c) {
      for (std::size_t x = 0; x < nx; ++x) {
        for (std::size_t y = 0; y < nx; ++y) {
          if (m(c, X(x, y)) != m(m(c, x), y)) {
            return "c^(xy) != (c^x)^y at (c,x,y)=" + triple(c, x, y);
          }
        }
      }
      if (m(c, X.unit) != c) {
        return "c^1 != c at c=" + std::to_string(c);
      }
    }
    return std::nullopt;
  }

  void validate_monoid_action(monoid_action const& m) {
    validate_monoid(m.x, "acting monoid");
    validate_monoid(m.c, "acted monoid");
    if (auto v = monoid_action_violation(m)) {
      throw invalid_action(*v);
    }
  }

  std::vector<finite_monoid> enumerate_monoids(std::size_t order) {
    std::vector<finite_monoid> out;
    if (order == 0) {
      return out;
    }
    cayley_table t(order, std::vector<std::size_t>(order, 0));
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t a = 0; a < order; ++a) {
      t[0][a] = a;
      t[a][0] = a;
    }
    for (std::size_t a = 1; a < order; ++a) {
      for (std::size_t b = 1; b < order; ++b) {
        cells.emplace_back(a, b);
      }
    }
    if (cells.empty()) {
      out.push_back({t, 0});
      return out;
    }
    fill_cells(t, cells, order, [&](cayley_table const& tab) {
      finite_monoid m{tab, 0};
      if (is_monoid(m)) {
        out.push_back(std::move(m));
      }
    });
    return out;
  }

  std::vector<monoid_action> enumerate_actions(finite_monoid const& x, finite_monoid const& c) {
    std::vector<monoid_action> out;
    std::size_t                nx = x.order();
    std::size_t                nc = c.order();
    cayley_table               t(nc, std::vector<std::size_t>(nx, 0));
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t e = 0; e < nc; ++e) {
      for (std::size_t g = 0; g < nx; ++g) {
        if (g == x.unit) {
          t[e][g] = e;
        } else if (e == c.unit) {
          t[e][g] = c.unit;
        } else {
          cells.emplace_back(e, g);
        }
      }
    }
    auto consider = [&](cayley_table const& tab) {
      monoid_action m{x, c, tab};
      if (!monoid_action_violation(m)) {
        out.push_back(std::move(m));
      }
    };
    if (cells.empty()) {
      consider(t);
    } else {
      fill_cells(t, cells, nc, consider);
    }
    return out;
  }

  finite_monoid cyclic_group(std::size_t n) {
    cayley_table t(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        t[a][b] = (a + b) % n;
      }
    }
    return {t, 0};
  }

  finite_monoid trivial_monoid() { return {{{0}}, 0}; }

  element_category element_category_of(std::string const& label) {
    return element_category([label](std::size_t const& e) { return label + std::to_string(e); });
  }

  skew_monoidal<element_category> discrete_monoidal(finite_monoid const& m, std::string const& label) {
    auto cat = element_category_of(label);
    return strict_monoidal<element_category>(
        label + "-discrete", cat, [m](std::size_t const& a, std::size_t const& b) { return m(a, b); },
        [m, cat](thin_arrow<std::size_t> const& f, thin_arrow<std::size_t> const& g) {
          return cat.arrow(m(f.source, g.source), m(f.target, g.target));
        },
        m.unit);
  }

  weak_action<element_category, element_category> lift_monoid_action(monoid_action const& m) {
    validate_monoid_action(m);
    auto X  = discrete_monoidal(m.x, "x");
    auto C  = discrete_monoidal(m.c, "c");
    auto cc = C.base;
    return {"monoid-action",
            X,
            C,
            [m](std::size_t const& c, std::size_t const& x) { return m(c, x); },
            [m, cc](thin_arrow<std::size_t> const& f, std::size_t const& c) {
              return cc.arrow(m(c, f.source), m(c, f.target));
            },
            [m, cc](thin_arrow<std::size_t> const& g, std::size_t const& x) {
              return cc.arrow(m(g.source, x), m(g.target, x));
            },
            [m, cc](std::size_t const& x, std::size_t const& b, std::size_t const& c) {
              return cc.arrow(m.c(m(b, x), m(c, x)), m(m.c(b, c), x));
            },
            [m, cc](std::size_t const& x) { return cc.arrow(m.c.unit, m(m.c.unit, x)); },
            [m, cc](std::size_t const& x, std::size_t const& y, std::size_t const& c) {
              return cc.arrow(m(c, m.x(x, y)), m(m(c, x), y));
            },
            [m, cc](std::size_t const& c) { return cc.arrow(m(c, m.x.unit), c); }};
  }

  action_domain<element_category, element_category> monoid_action_domain(monoid_action const& m) {
    action_domain<element_category, element_category> d;
    auto xc = element_category_of("x");
    auto cc = element_category_of("c");
    for (std::size_t i = 0; i < m.x.order(); ++i) {
      d.x.objects.push_back(i);
      d.x.morphisms.push_back(xc.identity(i));
    }
    for (std::size_t i = 0; i < m.c.order(); ++i) {
      d.c.objects.push_back(i);
      d.c.morphisms.push_back(cc.identity(i));
    }
    return d;
  }

  point_category point_category_of() {
    return point_category([](std::size_t const&) { return std::string("*"); });
  }

  skew_monoidal<point_category> point_monoidal() {
    auto cat = point_category_of();
    return strict_monoidal<point_category>(
        "point", cat, [](std::size_t const&, std::size_t const&) { return std::size_t{0}; },
        [cat](thin_arrow<std::size_t> const&, thin_arrow<std::size_t> const&) { return cat.identity(0); },
        0);
  }

  finite_monoid monoid_semidirect(monoid_action const& m) {
    validate_monoid_action(m);
    std::size_t  nx = m.x.order();
    std::size_t  nc = m.c.order();
    cayley_table t(nx * nc, std::vector<std::size_t>(nx * nc));
    for (std::size_t x = 0; x < nx; ++x) {
      for (std::size_t b = 0; b < nc; ++b) {
        for (std::size_t y = 0; y < nx; ++y) {
          for (std::size_t c = 0; c < nc; ++c) {
            t[x * nc + b][y * nc + c] = m.x(x, y) * nc + m.c(m(b, y), c);
          }
        }
      }
    }
    return {t, m.x.unit * nc + m.c.unit};
  }

  check_report check_monoid_laws(finite_monoid const& m, std::string const& name) {
    check_report rep(name + ":monoid-laws");
    auto&        assoc = rep.law("associativity", "(ab)c = a(bc)");
    auto&        unit  = rep.law("unitality", "1a = a = a1");
    std::size_t  n     = m.order();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          auto l = m(m(a, b), c);
          auto r = m(a, m(b, c));
          if (l == r) {
            assoc.record_pass();
          } else {
            assoc.record_failure({{std::to_string(a), std::to_string(b), std::to_string(c)},
                                  std::to_string(l), std::to_string(r), ""});
          }
        }
      }
      if (m(m.unit, a) == a && m(a, m.unit) == a) {
        unit.record_pass();
      } else {
        unit.record_failure({{std::to_string(a)}, std::to_string(m(m.unit, a)), std::to_string(m(a, m.unit)), ""});
      }
    }
    return rep;
  }

  check_report check_monoid_reduction(monoid_action const& m) {
    auto         a     = lift_monoid_action(m);
    auto         dom   = monoid_action_domain(m);
    auto         sd    = build_semidirect(a, dom, budget{});
    auto         table = monoid_semidirect(m);
    auto const&  s     = sd.structure;
    auto const&  cat   = s.base;
    std::size_t  nx    = m.x.order();
    std::size_t  nc    = m.c.order();
    check_report rep("monoid-reduction");
    using po       = object_t<semidirect_category<element_category, element_category>>;
    auto  decode   = [&](std::size_t e) { return po{e / nc, e % nc}; };
    auto  encode   = [&](po const& p) { return p.x * nc + p.c; };
    auto  name_of  = [&](po const& p) { return cat.describe_object(p); };
    auto& ten      = rep.law("tensor=table", "<x,b>(x)<y,c> = <xy, b^y c>");
    auto& unit     = rep.law("unit=table");
    auto& coh      = rep.law("coherence:identities", "alpha, lambda, rho are identities");
    std::size_t const n = nx * nc;
    if (encode(s.unit) == table.unit) {
      unit.record_pass();
    } else {
      unit.record_failure({{name_of(s.unit)}, std::to_string(encode(s.unit)), std::to_string(table.unit), ""});
    }
    auto is_identity = [&](morphism_t<semidirect_category<element_category, element_category>> const& f) {
      return cat.is_valid(f) && cat.equal(f, cat.identity(cat.source(f)));
    };
    for (std::size_t p = 0; p < n; ++p) {
      auto P = decode(p);
      for (std::size_t q = 0; q < n; ++q) {
        auto Q   = decode(q);
        auto got = encode(s.t(P, Q));
        if (got == table(p, q)) {
          ten.record_pass();
        } else {
          ten.record_failure({{name_of(P), name_of(Q)}, std::to_string(got), std::to_string(table(p, q)), ""});
        }
        for (std::size_t r = 0; r < n; ++r) {
          auto R = decode(r);
          auto f = s.assoc(P, Q, R);
          if (is_identity(f)) {
            coh.record_pass();
          } else {
            coh.record_failure({{name_of(P), name_of(Q), name_of(R)}, cat.describe_morphism(f), "identity", "alpha"});
          }
        }
      }
      for (auto const& f : {s.lunit(P), s.runit(P)}) {
        if (is_identity(f)) {
          coh.record_pass();
        } else {
          coh.record_failure({{name_of(P)}, cat.describe_morphism(f), "identity", "unitor"});
        }
      }
    }
    return rep;
  }

}  // namespace skewcat
