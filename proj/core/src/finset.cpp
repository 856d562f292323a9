#include "skewcat/instances/finset.hpp"

#include <limits>

#include "skewcat/errors.hpp"

namespace skewcat {

  std::string describe_table(std::vector<std::uint32_t> const& map) {
    std::string out = "[";
    for (std::size_t i = 0; i < map.size(); ++i) {
      if (i != 0) {
        out += ",";
      }
      out += std::to_string(map[i]);
    }
    return out + "]";
  }

  std::size_t checked_pow(std::size_t n, std::size_t k) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < k; ++i) {
      if (n != 0 && r > max_carrier / n) {
        throw param_out_of_bounds("carrier " + std::to_string(n) + "^" + std::to_string(k) + " exceeds "
                                  + std::to_string(max_carrier));
      }
      r *= n;
    }
    return r;
  }

  namespace {
    std::size_t checked_mul(std::size_t a, std::size_t b) {
      if (a != 0 && b > max_carrier / a) {
        throw param_out_of_bounds("carrier " + std::to_string(a) + "*" + std::to_string(b) + " exceeds "
                                  + std::to_string(max_carrier));
      }
      return a * b;
    }
  }  // namespace

  finset_category::morphism finset_category::identity(object const& a) const {
    std::vector<std::uint32_t> m(a);
    for (std::size_t i = 0; i < a; ++i) {
      m[i] = static_cast<std::uint32_t>(i);
    }
    return {a, a, std::move(m)};
  }

  finset_category::morphism finset_category::compose(morphism const& f, morphism const& g) const {
    if (f.target != g.source) {
      throw ill_typed("finset compose " + describe_morphism(f) + " ; " + describe_morphism(g));
    }
    std::vector<std::uint32_t> m(f.map.size());
    for (std::size_t i = 0; i < f.map.size(); ++i) {
      m[i] = g.map.at(f.map[i]);
    }
    return {f.source, g.target, std::move(m)};
  }

  bool finset_category::is_valid(morphism const& f) const {
    if (f.map.size() != f.source) {
      return false;
    }
    for (auto v : f.map) {
      if (v >= f.target) {
        return false;
      }
    }
    return true;
  }

  std::vector<finset_category::morphism> finset_category::hom(object const& a, object const& b) const {
    std::size_t                              n = checked_pow(b, a);
    std::vector<morphism>                    out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back({a, b, finset::decode(i, a, b)});
    }
    return out;
  }

  std::string finset_category::describe_morphism(morphism const& f) const {
    return std::to_string(f.source) + "->" + std::to_string(f.target) + describe_table(f.map);
  }

  finset_category::morphism finset_category::make(object a, object b, std::vector<std::uint32_t> map) const {
    morphism f{a, b, std::move(map)};
    if (!is_valid(f)) {
      throw shape_error("not a function " + describe_morphism(f));
    }
    return f;
  }

  namespace finset {

    std::size_t encode(std::vector<std::uint32_t> const& digits, std::size_t base) {
      std::size_t r = 0;
      for (auto d : digits) {
        r = r * base + d;
      }
      return r;
    }

    std::vector<std::uint32_t> decode(std::size_t index, std::size_t length, std::size_t base) {
      std::vector<std::uint32_t> out(length);
      for (std::size_t i = length; i-- > 0;) {
        out[i] = static_cast<std::uint32_t>(index % base);
        index /= base;
      }
      return out;
    }

    fn product_map(fn const& f, fn const& g) {
      fn out{checked_mul(f.source, g.source), checked_mul(f.target, g.target), {}};
      out.map.reserve(out.source);
      for (std::size_t i = 0; i < f.source; ++i) {
        for (std::size_t j = 0; j < g.source; ++j) {
          out.map.push_back(static_cast<std::uint32_t>(f.map[i] * g.target + g.map[j]));
        }
      }
      return out;
    }

    fn sum_map(fn const& f, fn const& g) {
      fn out{f.source + g.source, f.target + g.target, f.map};
      for (auto v : g.map) {
        out.map.push_back(static_cast<std::uint32_t>(v + f.target));
      }
      return out;
    }

    fn pair(fn const& f, fn const& g) {
      if (f.source != g.source) {
        throw ill_typed("pair of maps with different sources");
      }
      fn out{f.source, checked_mul(f.target, g.target), {}};
      for (std::size_t i = 0; i < f.source; ++i) {
        out.map.push_back(static_cast<std::uint32_t>(f.map[i] * g.target + g.map[i]));
      }
      return out;
    }

    fn proj1(std::size_t a, std::size_t b) {
      fn out{checked_mul(a, b), a, {}};
      for (std::size_t i = 0; i < out.source; ++i) {
        out.map.push_back(static_cast<std::uint32_t>(i / b));
      }
      return out;
    }

    fn proj2(std::size_t a, std::size_t b) {
      fn out{checked_mul(a, b), b, {}};
      for (std::size_t i = 0; i < out.source; ++i) {
        out.map.push_back(static_cast<std::uint32_t>(i % b));
      }
      return out;
    }

    fn inj1(std::size_t a, std::size_t b) {
      fn out{a, a + b, {}};
      for (std::size_t i = 0; i < a; ++i) {
        out.map.push_back(static_cast<std::uint32_t>(i));
      }
      return out;
    }

    fn inj2(std::size_t a, std::size_t b) {
      fn out{b, a + b, {}};
      for (std::size_t i = 0; i < b; ++i) {
        out.map.push_back(static_cast<std::uint32_t>(a + i));
      }
      return out;
    }

    fn copair(fn const& f, fn const& g) {
      if (f.target != g.target) {
        throw ill_typed("copair of maps with different targets");
      }
      fn out{f.source + g.source, f.target, f.map};
      out.map.insert(out.map.end(), g.map.begin(), g.map.end());
      return out;
    }

    fn unique_from_empty(std::size_t b) { return {0, b, {}}; }

    fn to_point(std::size_t a) { return {a, 1, std::vector<std::uint32_t>(a, 0)}; }

    std::size_t exp(std::size_t x, std::size_t c) { return checked_pow(c, x); }

    fn precompose(fn const& u, std::size_t b) {
      std::size_t x = u.target;
      std::size_t y = u.source;
      fn          out{exp(x, b), exp(y, b), {}};
      out.map.reserve(out.source);
      std::vector<std::uint32_t> img(y);
      for (std::size_t h = 0; h < out.source; ++h) {
        auto digits = decode(h, x, b);
        for (std::size_t i = 0; i < y; ++i) {
          img[i] = digits[u.map[i]];
        }
        out.map.push_back(static_cast<std::uint32_t>(encode(img, b)));
      }
      return out;
    }

    fn postcompose(fn const& g, std::size_t x) {
      fn out{exp(x, g.source), exp(x, g.target), {}};
      out.map.reserve(out.source);
      for (std::size_t h = 0; h < out.source; ++h) {
        auto digits = decode(h, x, g.source);
        for (auto& d : digits) {
          d = g.map[d];
        }
        out.map.push_back(static_cast<std::uint32_t>(encode(digits, g.target)));
      }
      return out;
    }

    fn pairing(std::size_t x, std::size_t b, std::size_t c) {
      std::size_t nb = exp(x, b);
      std::size_t nc = exp(x, c);
      fn          out{checked_mul(nb, nc), exp(x, checked_mul(b, c)), {}};
      out.map.reserve(out.source);
      std::vector<std::uint32_t> img(x);
      for (std::size_t p = 0; p < nb; ++p) {
        auto hb = decode(p, x, b);
        for (std::size_t q = 0; q < nc; ++q) {
          auto hc = decode(q, x, c);
          for (std::size_t i = 0; i < x; ++i) {
            img[i] = static_cast<std::uint32_t>(hb[i] * c + hc[i]);
          }
          out.map.push_back(static_cast<std::uint32_t>(encode(img, b * c)));
        }
      }
      return out;
    }

    fn curry_xy(std::size_t x, std::size_t y, std::size_t c) {
      std::size_t inner = exp(x, c);
      fn          out{exp(checked_mul(x, y), c), exp(y, inner), {}};
      out.map.reserve(out.source);
      std::vector<std::uint32_t> col(x);
      std::vector<std::uint32_t> outer(y);
      for (std::size_t h = 0; h < out.source; ++h) {
        auto digits = decode(h, x * y, c);
        for (std::size_t j = 0; j < y; ++j) {
          for (std::size_t i = 0; i < x; ++i) {
            col[i] = digits[i * y + j];
          }
          outer[j] = static_cast<std::uint32_t>(encode(col, c));
        }
        out.map.push_back(static_cast<std::uint32_t>(encode(outer, inner)));
      }
      return out;
    }

    fn eval_point(std::size_t c) { return finset_category{}.identity(c); }

    fn curry_right(fn const& g, std::size_t a, std::size_t b) {
      std::size_t c = g.target;
      fn          out{a, exp(b, c), {}};
      std::vector<std::uint32_t> row(b);
      for (std::size_t i = 0; i < a; ++i) {
        for (std::size_t j = 0; j < b; ++j) {
          row[j] = g.map.at(i * b + j);
        }
        out.map.push_back(static_cast<std::uint32_t>(encode(row, c)));
      }
      return out;
    }

    fn uncurry_right(fn const& h, std::size_t a, std::size_t b, std::size_t c) {
      fn out{checked_mul(a, b), c, {}};
      for (std::size_t i = 0; i < a; ++i) {
        auto row = decode(h.map.at(i), b, c);
        out.map.insert(out.map.end(), row.begin(), row.end());
      }
      return out;
    }

    fn curry_left(fn const& g, std::size_t a, std::size_t b) {
      std::size_t c = g.target;
      fn          out{b, exp(a, c), {}};
      std::vector<std::uint32_t> col(a);
      for (std::size_t j = 0; j < b; ++j) {
        for (std::size_t i = 0; i < a; ++i) {
          col[i] = g.map.at(i * b + j);
        }
        out.map.push_back(static_cast<std::uint32_t>(encode(col, c)));
      }
      return out;
    }

    fn uncurry_left(fn const& h, std::size_t a, std::size_t b, std::size_t c) {
      fn out{checked_mul(a, b), c, std::vector<std::uint32_t>(a * b)};
      for (std::size_t j = 0; j < b; ++j) {
        auto col = decode(h.map.at(j), a, c);
        for (std::size_t i = 0; i < a; ++i) {
          out.map[i * b + j] = col[i];
        }
      }
      return out;
    }

    fn invert(fn const& f) {
      if (f.source != f.target) {
        throw shape_error("not a bijection: sizes " + std::to_string(f.source) + " and " + std::to_string(f.target));
      }
      fn   out{f.target, f.source, std::vector<std::uint32_t>(f.target, std::numeric_limits<std::uint32_t>::max())};
      for (std::size_t i = 0; i < f.source; ++i) {
        auto& slot = out.map.at(f.map[i]);
        if (slot != std::numeric_limits<std::uint32_t>::max()) {
          throw shape_error("not a bijection: repeated value " + std::to_string(f.map[i]));
        }
        slot = static_cast<std::uint32_t>(i);
      }
      return out;
    }

    bool is_injective(fn const& f) {
      std::vector<bool> seen(f.target, false);
      for (auto v : f.map) {
        if (seen[v]) {
          return false;
        }
        seen[v] = true;
      }
      return true;
    }

  }  // namespace finset

  skew_monoidal<finset_category> finset_cartesian() {
    return strict_monoidal<finset_category>(
        "finset-product", finset_category{}, [](std::size_t a, std::size_t b) { return checked_mul(a, b); },
        [](auto const& f, auto const& g) { return finset::product_map(f, g); }, std::size_t{1});
  }

  skew_monoidal<finset_category> finset_cocartesian() {
    return strict_monoidal<finset_category>(
        "finset-sum", finset_category{}, [](std::size_t a, std::size_t b) { return a + b; },
        [](auto const& f, auto const& g) { return finset::sum_map(f, g); }, std::size_t{0});
  }

  test_domain<finset_category> finset_domain(std::size_t max_size, std::size_t max_hom) {
    finset_category              cat;
    test_domain<finset_category> dom;
    for (std::size_t a = 0; a <= max_size; ++a) {
      dom.objects.push_back(a);
    }
    for (std::size_t a = 0; a <= max_size; ++a) {
      for (std::size_t b = 0; b <= max_size; ++b) {
        std::size_t n = checked_pow(b, a);
        if (n <= max_hom) {
          for (auto& f : cat.hom(a, b)) {
            dom.morphisms.push_back(std::move(f));
          }
        } else {
          // constant maps and, when possible, one injection
          for (std::uint32_t v = 0; v < b; ++v) {
            dom.morphisms.push_back({a, b, std::vector<std::uint32_t>(a, v)});
          }
          if (a <= b && a > 1) {
            dom.morphisms.push_back({a, b, finset::inj1(a, b - a).map});
          }
        }
      }
    }
    return dom;
  }

}  // namespace skewcat
