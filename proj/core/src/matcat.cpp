#include "skewcat/instances/matcat.hpp"

#include "skewcat/errors.hpp"
#include "skewcat/instances/finset.hpp"

namespace skewcat {

  matrix matcat::identity(object const& a) const { return mat::scalar(rational(1), a); }

  matrix matcat::compose(morphism const& f, morphism const& g) const {
    if (f.target != g.source) {
      throw ill_typed("matrix compose " + describe_morphism(f) + " ; " + describe_morphism(g));
    }
    matrix out = mat::zero(f.source, g.target);
    for (std::size_t r = 0; r < g.target; ++r) {
      for (std::size_t c = 0; c < f.source; ++c) {
        rational s(0);
        for (std::size_t k = 0; k < f.target; ++k) {
          s += g.at(r, k) * f.at(k, c);
        }
        out.at(r, c) = s;
      }
    }
    return out;
  }

  std::string matcat::describe_morphism(morphism const& f) const {
    std::string out = std::to_string(f.source) + "->" + std::to_string(f.target) + "[";
    for (std::size_t r = 0; r < f.target; ++r) {
      if (r != 0) {
        out += ";";
      }
      for (std::size_t c = 0; c < f.source; ++c) {
        if (c != 0) {
          out += ",";
        }
        out += to_string(f.at(r, c));
      }
    }
    return out + "]";
  }

  namespace mat {
    matrix zero(std::size_t src, std::size_t tgt) { return {src, tgt, std::vector<rational>(src * tgt, rational(0))}; }

    matrix scalar(rational const& q, std::size_t n) {
      matrix m = zero(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        m.at(i, i) = q;
      }
      return m;
    }

    matrix scaled(matrix f, rational const& q) {
      for (auto& e : f.entries) {
        e *= q;
      }
      return f;
    }

    matrix kronecker(matrix const& f, matrix const& g) {
      matrix out = zero(f.source * g.source, f.target * g.target);
      for (std::size_t i = 0; i < f.target; ++i) {
        for (std::size_t j = 0; j < g.target; ++j) {
          for (std::size_t k = 0; k < f.source; ++k) {
            for (std::size_t l = 0; l < g.source; ++l) {
              out.at(i * g.target + j, k * g.source + l) = f.at(i, k) * g.at(j, l);
            }
          }
        }
      }
      return out;
    }

    matrix evaluation(std::size_t n) {
      matrix e = zero(n * n, 1);
      for (std::size_t i = 0; i < n; ++i) {
        e.at(0, i * n + i) = rational(1);
      }
      return e;
    }

    matrix coevaluation(std::size_t n) {
      matrix e = zero(1, n * n);
      for (std::size_t i = 0; i < n; ++i) {
        e.at(i * n + i, 0) = rational(1);
      }
      return e;
    }
  }  // namespace mat

  skew_monoidal<matcat> matcat_monoidal() {
    return strict_monoidal<matcat>(
        "matrices", matcat{}, [](std::size_t a, std::size_t b) { return a * b; },
        [](matrix const& f, matrix const& g) { return mat::kronecker(f, g); }, std::size_t{1});
  }

  std::vector<matrix> matrix_samples(std::size_t src, std::size_t tgt, std::vector<rational> const& coefficients) {
    std::size_t         cells = src * tgt;
    std::size_t         total = checked_pow(coefficients.size(), cells);
    std::vector<matrix> out;
    out.reserve(total);
    for (std::size_t i = 0; i < total; ++i) {
      auto   digits = finset::decode(i, cells, coefficients.size());
      matrix m{src, tgt, {}};
      for (auto d : digits) {
        m.entries.push_back(coefficients[d]);
      }
      out.push_back(std::move(m));
    }
    return out;
  }

  test_domain<matcat> matcat_domain(std::size_t max_dim, std::size_t max_per_hom) {
    std::vector<rational> coeffs{rational(-1), rational(0), rational(1)};
    test_domain<matcat>   dom;
    matcat                cat;
    for (std::size_t a = 0; a <= max_dim; ++a) {
      dom.objects.push_back(a);
    }
    for (std::size_t a = 0; a <= max_dim; ++a) {
      for (std::size_t b = 0; b <= max_dim; ++b) {
        if (checked_pow(coeffs.size(), a * b) <= max_per_hom) {
          auto ms = matrix_samples(a, b, coeffs);
          dom.morphisms.insert(dom.morphisms.end(), ms.begin(), ms.end());
          continue;
        }
        dom.morphisms.push_back(mat::zero(a, b));
        matrix ones = mat::zero(a, b);
        for (auto& e : ones.entries) {
          e = rational(1);
        }
        dom.morphisms.push_back(ones);
        matrix ramp = mat::zero(a, b);
        for (std::size_t i = 0; i < ramp.entries.size(); ++i) {
          ramp.entries[i] = rational(static_cast<std::int64_t>(i % 3) - 1, 2);
        }
        dom.morphisms.push_back(ramp);
        if (a == b) {
          dom.morphisms.push_back(cat.identity(a));
        }
      }
    }
    return dom;
  }

}  // namespace skewcat
