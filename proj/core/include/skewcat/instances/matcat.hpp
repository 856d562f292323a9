#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "skewcat/category.hpp"
#include "skewcat/ext_rat.hpp"
#include "skewcat/skew_monoidal.hpp"

namespace skewcat {

  // A morphism n -> m is an m x n rational matrix, stored row-major.
  struct matrix {
    std::size_t           source = 0;
    std::size_t           target = 0;
    std::vector<rational> entries;

    rational const& at(std::size_t row, std::size_t col) const { return entries.at(row * source + col); }
    rational&       at(std::size_t row, std::size_t col) { return entries.at(row * source + col); }
    bool            operator==(matrix const&) const = default;
  };

  // Finite-dimensional rational vector spaces, skeletal: objects are
  // dimensions, f;g is M_g * M_f. Hom sets are infinite, so there is no
  // hom(); use matrix_samples for finite test families.
  class matcat {
   public:
    using object   = std::size_t;
    using morphism = matrix;

    object   source(morphism const& f) const { return f.source; }
    object   target(morphism const& f) const { return f.target; }
    morphism identity(object const& a) const;
    morphism compose(morphism const& f, morphism const& g) const;
    bool     equal(morphism const& f, morphism const& g) const { return f == g; }
    bool     is_valid(morphism const& f) const { return f.entries.size() == f.source * f.target; }
    std::string describe_object(object const& a) const { return "K^" + std::to_string(a); }
    std::string describe_morphism(morphism const& f) const;
  };

  namespace mat {
    matrix zero(std::size_t src, std::size_t tgt);
    matrix scalar(rational const& q, std::size_t n);
    matrix scaled(matrix f, rational const& q);
    matrix kronecker(matrix const& f, matrix const& g);
    // ev : n (x) n -> 1 and coev : 1 -> n (x) n (trace pairing), so n is its
    // own left dual.
    matrix evaluation(std::size_t n);
    matrix coevaluation(std::size_t n);
  }  // namespace mat

  // Strict Kronecker structure with unit 1.
  skew_monoidal<matcat> matcat_monoidal();

  // Every matrix src -> tgt with entries drawn from `coefficients`.
  std::vector<matrix> matrix_samples(std::size_t src, std::size_t tgt, std::vector<rational> const& coefficients);

  // Dimensions 0..max_dim; morphisms are all {-1,0,1}-matrices when there are
  // at most max_per_hom of them, otherwise identities, zeros and a few fixed
  // samples.
  test_domain<matcat> matcat_domain(std::size_t max_dim, std::size_t max_per_hom = 81);

}  // namespace skewcat
