#include "skewcat/instances/gms.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>
#include <utility>

#include "skewcat/errors.hpp"

namespace skewcat {

  struct gms::record {
    std::size_t          id;
    std::size_t          n;
    std::vector<ext_rat> d;
  };

  namespace {

    struct registry {
      std::mutex                                                                   mu;
      std::deque<gms::record>                                                      store;
      std::map<std::pair<std::size_t, std::vector<ext_rat>>, gms::record const*>   index;
    };

    registry& reg() {
      static registry r;
      return r;
    }

    // Memo table guarded by its own mutex.
    template <typename K, typename V>
    class memo {
     public:
      template <typename Fn>
      V get(K const& key, Fn&& make) {
        {
          std::lock_guard lock(mu_);
          if (auto it = table_.find(key); it != table_.end()) {
            return it->second;
          }
        }
        V value = make();
        std::lock_guard lock(mu_);
        return table_.emplace(key, std::move(value)).first->second;
      }

     private:
      std::mutex     mu_;
      std::map<K, V> table_;
    };

    ext_rat const zero{0};

  }  // namespace

  std::optional<std::vector<std::size_t>> triangle_violation(std::size_t n, std::vector<ext_rat> const& d) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          if (d[i * n + k] > d[i * n + j] + d[j * n + k]) {
            return std::vector<std::size_t>{i, j, k};
          }
        }
      }
    }
    return std::nullopt;
  }

  gms::gms() : gms(point_space()) {}

  gms gms::make(std::size_t points, std::vector<ext_rat> const& dist) {
    if (dist.size() != points * points) {
      throw invalid_space("distance table has " + std::to_string(dist.size()) + " entries for "
                          + std::to_string(points) + " points");
    }
    for (std::size_t i = 0; i < points; ++i) {
      if (!dist[i * points + i].is_zero()) {
        throw invalid_space("d(" + std::to_string(i) + "," + std::to_string(i) + ") = " + dist[i * points + i].to_string());
      }
    }
    if (auto v = triangle_violation(points, dist)) {
      auto [i, j, k] = std::tuple((*v)[0], (*v)[1], (*v)[2]);
      throw invalid_space("triangle inequality fails: d(" + std::to_string(i) + "," + std::to_string(k) + ") = "
                          + dist[i * points + k].to_string() + " > d(" + std::to_string(i) + "," + std::to_string(j)
                          + ") + d(" + std::to_string(j) + "," + std::to_string(k) + ")");
    }
    auto&           r = reg();
    std::lock_guard lock(r.mu);
    auto            key = std::pair(points, dist);
    if (auto it = r.index.find(key); it != r.index.end()) {
      return gms(it->second);
    }
    r.store.push_back({r.store.size(), points, dist});
    auto const* rec = &r.store.back();
    r.index.emplace(std::move(key), rec);
    return gms(rec);
  }

  std::size_t                 gms::size() const noexcept { return rec_->n; }
  ext_rat const&              gms::dist(std::size_t i, std::size_t j) const { return rec_->d.at(i * rec_->n + j); }
  std::vector<ext_rat> const& gms::distances() const noexcept { return rec_->d; }
  std::size_t                 gms::id() const noexcept { return rec_->id; }

  std::string gms::describe() const {
    std::string out = "[" + std::to_string(rec_->n) + "|";
    bool        first = true;
    for (std::size_t i = 0; i < rec_->n; ++i) {
      for (std::size_t j = 0; j < rec_->n; ++j) {
        if (i == j) {
          continue;
        }
        if (!first) {
          out += ",";
        }
        first = false;
        out += rec_->d[i * rec_->n + j].to_string();
      }
    }
    return out + "]";
  }

  // ---- category -----------------------------------------------------------

  gms_map gms_category::identity(object const& a) const {
    return {a, a, finset_category{}.identity(a.size()).map};
  }

  gms_map gms_category::compose(morphism const& f, morphism const& g) const {
    if (!(f.target == g.source)) {
      throw ill_typed("gms compose " + describe_morphism(f) + " ; " + describe_morphism(g));
    }
    std::vector<std::uint32_t> m(f.map.size());
    for (std::size_t i = 0; i < f.map.size(); ++i) {
      m[i] = g.map.at(f.map[i]);
    }
    return {f.source, g.target, std::move(m)};
  }

  bool gms_category::is_valid(morphism const& f) const {
    std::size_t n = f.source.size();
    if (f.map.size() != n) {
      return false;
    }
    for (auto v : f.map) {
      if (v >= f.target.size()) {
        return false;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (f.target.dist(f.map[i], f.map[j]) > f.source.dist(i, j)) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<gms_map> gms_category::hom(object const& a, object const& b) const {
    std::size_t n = a.size();
    std::size_t k = b.size();
    std::size_t total;
    try {
      total = checked_pow(k, n);
    } catch (param_out_of_bounds const&) {
      throw not_enumerable("hom(" + a.describe() + ", " + b.describe() + ") has more than "
                           + std::to_string(max_carrier) + " candidate maps");
    }
    std::vector<gms_map>       out;
    std::vector<std::uint32_t> digits(n, 0);
    for (std::size_t c = 0; c < total; ++c) {
      gms_map f{a, b, digits};
      if (is_valid(f)) {
        out.push_back(std::move(f));
      }
      for (std::size_t p = n; p-- > 0;) {
        if (++digits[p] < k) {
          break;
        }
        digits[p] = 0;
      }
    }
    return out;
  }

  std::string gms_category::describe_morphism(morphism const& f) const {
    return f.source.describe() + "->" + f.target.describe() + describe_table(f.map);
  }

  gms_map gms_category::same_points(object const& a, object const& b) const {
    if (a.size() != b.size()) {
      throw shape_error("identity-on-points between spaces of size " + std::to_string(a.size()) + " and "
                        + std::to_string(b.size()));
    }
    return {a, b, finset_category{}.identity(a.size()).map};
  }

  gms_map gms_category::make(object const& a, object const& b, std::vector<std::uint32_t> map) const {
    gms_map f{a, b, std::move(map)};
    if (!is_valid(f)) {
      throw shape_error("not a non-expansive map " + describe_morphism(f));
    }
    return f;
  }

  // ---- spaces and operations ----------------------------------------------

  gms point_space() {
    static gms const p = gms::make(1, {zero});
    return p;
  }

  gms empty_space() {
    static gms const e = gms::make(0, {});
    return e;
  }

  gms d_space(ext_rat const& t) { return gms::make(2, {zero, t, t, zero}); }

  gms gms_tensor(gms const& m, gms const& n) {
    static memo<std::pair<std::size_t, std::size_t>, gms> cache;
    return cache.get({m.id(), n.id()}, [&] {
      std::size_t a = m.size();
      std::size_t b = n.size();
      if (a != 0 && b > max_carrier / a) {
        throw param_out_of_bounds("tensor of " + std::to_string(a) + " and " + std::to_string(b) + " points");
      }
      std::size_t          s = a * b;
      std::vector<ext_rat> d(s * s);
      for (std::size_t i = 0; i < a; ++i) {
        for (std::size_t j = 0; j < b; ++j) {
          for (std::size_t i2 = 0; i2 < a; ++i2) {
            for (std::size_t j2 = 0; j2 < b; ++j2) {
              d[(i * b + j) * s + (i2 * b + j2)] = m.dist(i, i2) + n.dist(j, j2);
            }
          }
        }
      }
      return gms::make(s, d);
    });
  }

  gms_map gms_tensor_map(gms_map const& f, gms_map const& g) {
    auto const    src = gms_tensor(f.source, g.source);
    auto const    tgt = gms_tensor(f.target, g.target);
    std::uint32_t gt  = static_cast<std::uint32_t>(g.target.size());
    gms_map       out{src, tgt, {}};
    out.map.reserve(src.size());
    for (auto fi : f.map) {
      for (auto gj : g.map) {
        out.map.push_back(fi * gt + gj);
      }
    }
    return out;
  }

  skew_monoidal<gms_category> gms_monoidal() {
    return strict_monoidal<gms_category>(
        "gms", gms_category{}, [](gms const& a, gms const& b) { return gms_tensor(a, b); },
        [](gms_map const& f, gms_map const& g) { return gms_tensor_map(f, g); }, point_space());
  }

  namespace {
    template <typename Fn>
    gms pointwise(gms const& m, Fn&& fn) {
      std::vector<ext_rat> d = m.distances();
      for (auto& v : d) {
        v = fn(v);
      }
      return gms::make(m.size(), d);
    }
  }  // namespace

  gms gms_truncate(gms const& m, ext_rat const& x) {
    static memo<std::pair<std::size_t, std::string>, gms> cache;
    return cache.get({m.id(), x.to_string()}, [&] { return pointwise(m, [&](ext_rat const& v) { return min(v, x); }); });
  }

  gms gms_flatten(gms const& m, bool b) {
    if (b) {
      return m;
    }
    static memo<std::size_t, gms> cache;
    return cache.get(m.id(), [&] {
      return pointwise(m, [](ext_rat const& v) { return v.is_zero() ? v : ext_rat::infinity(); });
    });
  }

  gms gms_scale(gms const& m, std::int64_t k) {
    if (k == 0) {
      return m;
    }
    static memo<std::pair<std::size_t, std::int64_t>, gms> cache;
    return cache.get({m.id(), k}, [&] { return pointwise(m, [&](ext_rat const& v) { return v.scaled_pow2(k); }); });
  }

  gms_coproduct_data gms_coproduct(gms const& m, gms const& n) {
    std::size_t          a = m.size();
    std::size_t          b = n.size();
    std::size_t          s = a + b;
    std::vector<ext_rat> d(s * s, ext_rat::infinity());
    for (std::size_t i = 0; i < a; ++i) {
      for (std::size_t j = 0; j < a; ++j) {
        d[i * s + j] = m.dist(i, j);
      }
    }
    for (std::size_t i = 0; i < b; ++i) {
      for (std::size_t j = 0; j < b; ++j) {
        d[(a + i) * s + (a + j)] = n.dist(i, j);
      }
    }
    auto space = gms::make(s, d);
    return {space, {m, space, finset::inj1(a, b).map}, {n, space, finset::inj2(a, b).map}};
  }

  gms_map gms_copair(gms_coproduct_data const& co, gms_map const& f, gms_map const& g) {
    if (!(f.target == g.target) || !(f.source == co.inj1.source) || !(g.source == co.inj2.source)) {
      throw ill_typed("copair: maps do not form a cocone on the coproduct");
    }
    gms_map out{co.space, f.target, f.map};
    out.map.insert(out.map.end(), g.map.begin(), g.map.end());
    return out;
  }

  check_report check_coproduct_universal(gms const& m, gms const& n, std::vector<gms> const& targets) {
    gms_category cat;
    check_report rep("coproduct " + m.describe() + " + " + n.describe());
    auto         co   = gms_coproduct(m, n);
    auto&        inj  = rep.law("coproduct:injections", "inj1, inj2 are non-expansive");
    auto&        univ = rep.law("coproduct:universal", "exactly one h with inj1;h = f and inj2;h = g");
    for (auto const* i : {&co.inj1, &co.inj2}) {
      if (cat.is_valid(*i)) {
        inj.record_pass();
      } else {
        inj.record_failure({{cat.describe_morphism(*i)}, "", "", "injection is not non-expansive"});
      }
    }
    for (auto const& t : targets) {
      auto hs = cat.hom(co.space, t);
      for (auto const& f : cat.hom(m, t)) {
        for (auto const& g : cat.hom(n, t)) {
          std::size_t count = 0;
          for (auto const& h : hs) {
            if (cat.compose(co.inj1, h) == f && cat.compose(co.inj2, h) == g) {
              ++count;
            }
          }
          auto copair = gms_copair(co, f, g);
          if (count == 1 && cat.is_valid(copair)) {
            univ.record_pass();
          } else {
            univ.record_failure({{cat.describe_morphism(f), cat.describe_morphism(g)}, cat.describe_morphism(copair), "",
                                 std::to_string(count) + " mediating maps"});
          }
        }
      }
    }
    return rep;
  }

  chain_colimit_result gms_chain_colimit(std::vector<gms> const& stages, std::vector<ext_rat> const& limit_dist,
                                         std::vector<gms> const& targets) {
    if (stages.empty()) {
      throw not_monotone("empty chain");
    }
    std::size_t n = stages.front().size();
    for (std::size_t s = 0; s < stages.size(); ++s) {
      if (stages[s].size() != n) {
        throw not_monotone("stage " + std::to_string(s) + " has a different point set");
      }
      if (s > 0) {
        for (std::size_t e = 0; e < n * n; ++e) {
          if (stages[s].distances()[e] > stages[s - 1].distances()[e]) {
            throw not_monotone("distance " + std::to_string(e / n) + "->" + std::to_string(e % n) + " increases at stage "
                               + std::to_string(s));
          }
        }
      }
    }
    if (limit_dist.size() != n * n) {
      throw not_lower_bound("declared limit has the wrong number of entries");
    }
    for (std::size_t s = 0; s < stages.size(); ++s) {
      for (std::size_t e = 0; e < n * n; ++e) {
        if (limit_dist[e] > stages[s].distances()[e]) {
          throw not_lower_bound("declared limit exceeds stage " + std::to_string(s) + " at " + std::to_string(e / n) + "->"
                                + std::to_string(e % n));
        }
      }
    }
    chain_colimit_result res{gms::make(n, limit_dist), check_report("chain colimit")};
    auto&                tri    = res.report.law("colimit:triangle", "limit distances satisfy the triangle inequality");
    tri.record_pass();  // gms::make throws otherwise
    gms_category cat;
    auto&        cocone = res.report.law("colimit:cocone", "stage -> colimit identity-on-points is non-expansive");
    for (auto const& st : stages) {
      auto f = cat.same_points(st, res.colimit);
      if (cat.is_valid(f)) {
        cocone.record_pass();
      } else {
        cocone.record_failure({{st.describe()}, cat.describe_morphism(f), "", "cocone leg expands"});
      }
    }
    // Chain maps are identity on points, so a cocone into T is one point
    // function non-expansive from every stage; it must factor (uniquely, by
    // the same function) through the colimit.
    auto& univ = res.report.law("colimit:universal", "cocones into T correspond to maps colimit -> T");
    for (auto const& t : targets) {
      finset_category sets;
      for (auto const& h : sets.hom(n, t.size())) {
        bool is_cocone = std::all_of(stages.begin(), stages.end(),
                                     [&](gms const& st) { return cat.is_valid(gms_map{st, t, h.map}); });
        bool factors   = cat.is_valid(gms_map{res.colimit, t, h.map});
        if (is_cocone == factors) {
          univ.record_pass();
        } else {
          univ.record_failure({{t.describe(), describe_table(h.map)}, is_cocone ? "cocone" : "not a cocone",
                               factors ? "factors" : "does not factor", "colimit mismatch"});
        }
      }
    }
    return res;
  }

  std::optional<std::vector<std::uint32_t>> gms_iso_exists(gms const& m, gms const& n) {
    if (m.size() != n.size()) {
      return std::nullopt;
    }
    std::vector<std::uint32_t> perm(m.size());
    std::iota(perm.begin(), perm.end(), 0U);
    do {
      bool ok = true;
      for (std::size_t i = 0; i < m.size() && ok; ++i) {
        for (std::size_t j = 0; j < m.size() && ok; ++j) {
          ok = m.dist(i, j) == n.dist(perm[i], perm[j]);
        }
      }
      if (ok) {
        return perm;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
  }

  std::uint32_t gms_hom_space::index_of(gms_map const& f) const {
    auto it = std::lower_bound(maps.begin(), maps.end(), f.map,
                               [](gms_map const& a, std::vector<std::uint32_t> const& b) { return a.map < b; });
    if (it == maps.end() || it->map != f.map) {
      throw shape_error("map " + describe_table(f.map) + " is not a point of the hom space");
    }
    return static_cast<std::uint32_t>(it - maps.begin());
  }

  gms_hom_space gms_internal_hom(gms const& n, gms const& p, std::int64_t scale_k) {
    static memo<std::tuple<std::size_t, std::size_t, std::int64_t>, gms_hom_space> cache;
    return cache.get({n.id(), p.id(), scale_k}, [&] {
      gms_hom_space h{point_space(), gms_category{}.hom(n, p)};
      std::size_t   s = h.maps.size();
      std::vector<ext_rat> d(s * s);
      for (std::size_t f = 0; f < s; ++f) {
        for (std::size_t g = 0; g < s; ++g) {
          ext_rat sup{0};
          for (std::size_t i = 0; i < n.size(); ++i) {
            sup = max(sup, p.dist(h.maps[f].map[i], h.maps[g].map[i]));
          }
          d[f * s + g] = sup.scaled_pow2(-scale_k);
        }
      }
      h.space = gms::make(s, d);
      return h;
    });
  }

  std::vector<gms> enumerate_gms(std::size_t points, std::vector<ext_rat> const& values) {
    std::size_t      off = points * (points > 0 ? points - 1 : 0);
    std::size_t      total = checked_pow(values.size(), off);
    std::vector<gms> out;
    std::vector<std::size_t> digits(off, 0);
    for (std::size_t c = 0; c < total; ++c) {
      std::vector<ext_rat> d(points * points, zero);
      std::size_t          k = 0;
      for (std::size_t i = 0; i < points; ++i) {
        for (std::size_t j = 0; j < points; ++j) {
          if (i != j) {
            d[i * points + j] = values[digits[k++]];
          }
        }
      }
      if (!triangle_violation(points, d)) {
        out.push_back(gms::make(points, d));
      }
      for (std::size_t p = off; p-- > 0;) {
        if (++digits[p] < values.size()) {
          break;
        }
        digits[p] = 0;
      }
    }
    return out;
  }

  std::vector<ext_rat> default_grid() { return {ext_rat(0), ext_rat(1, 2), ext_rat(1), ext_rat(2), ext_rat::infinity()}; }

  gms t3_space() {
    auto inf = ext_rat::infinity();
    return gms::make(3, {zero, ext_rat(1), ext_rat(2), inf, zero, ext_rat(1), inf, ext_rat(1, 2), zero});
  }

  test_domain<gms_category> gms_domain(std::vector<gms> const& spaces, std::size_t max_hom) {
    gms_category              cat;
    test_domain<gms_category> dom{spaces, {}};
    for (auto const& a : spaces) {
      for (auto const& b : spaces) {
        std::vector<gms_map> hs;
        bool                 full = false;
        if (checked_pow(std::max<std::size_t>(b.size(), 1), a.size()) <= 4096) {
          hs   = cat.hom(a, b);
          full = hs.size() <= max_hom;
        }
        if (full) {
          dom.morphisms.insert(dom.morphisms.end(), hs.begin(), hs.end());
          continue;
        }
        if (a == b) {
          dom.morphisms.push_back(cat.identity(a));
        }
        for (std::uint32_t v = 0; v < b.size(); ++v) {
          dom.morphisms.push_back({a, b, std::vector<std::uint32_t>(a.size(), v)});
        }
      }
    }
    return dom;
  }

  nlohmann::json gms_to_json(gms const& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t j = 0; j < m.size(); ++j) {
        row.push_back(m.dist(i, j).to_string());
      }
      rows.push_back(row);
    }
    return {{"kind", "gms"}, {"points", m.size()}, {"dist", rows}};
  }

  gms gms_from_json(nlohmann::json const& doc) {
    try {
      std::size_t n = doc.at("points").get<std::size_t>();
      auto const& rows = doc.at("dist");
      if (rows.size() != n) {
        throw parse_error("dist must have " + std::to_string(n) + " rows");
      }
      std::vector<ext_rat> d;
      for (auto const& row : rows) {
        if (row.size() != n) {
          throw parse_error("dist rows must have " + std::to_string(n) + " entries");
        }
        for (auto const& v : row) {
          if (v.is_string()) {
            d.push_back(ext_rat::parse(v.get<std::string>()));
          } else if (v.is_number_integer()) {
            d.push_back(ext_rat(v.get<std::int64_t>()));
          } else {
            throw parse_error("distance entries must be \"p/q\", \"inf\" or integers");
          }
        }
      }
      return gms::make(n, d);
    } catch (nlohmann::json::exception const& e) {
      throw parse_error(std::string("gms document: ") + e.what());
    }
  }

}  // namespace skewcat
