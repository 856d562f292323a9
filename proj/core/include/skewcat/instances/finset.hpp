#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "skewcat/category.hpp"
#include "skewcat/skew_monoidal.hpp"

namespace skewcat {

  // A function between finite carriers, stored as its table.
  template <typename O>
  struct fn_arrow {
    O                          source;
    O                          target;
    std::vector<std::uint32_t> map;
    bool                       operator==(fn_arrow const&) const = default;
  };

  std::string describe_table(std::vector<std::uint32_t> const& map);

  // Carriers larger than this are refused rather than silently exhausting
  // memory.
  inline constexpr std::size_t max_carrier = std::size_t{1} << 22;

  // n^k with overflow/size guard (throws param_out_of_bounds).
  std::size_t checked_pow(std::size_t n, std::size_t k);

  // Finite sets as their cardinalities {0, .., n-1}. Products are encoded
  // row-major (i, j) -> i*|B| + j and sums as the first summand followed by
  // the second, so both are strictly associative and unital.
  class finset_category {
   public:
    using object   = std::size_t;
    using morphism = fn_arrow<std::size_t>;

    object   source(morphism const& f) const { return f.source; }
    object   target(morphism const& f) const { return f.target; }
    morphism identity(object const& a) const;
    morphism compose(morphism const& f, morphism const& g) const;
    bool     equal(morphism const& f, morphism const& g) const { return f == g; }
    bool     is_valid(morphism const& f) const;
    // All |b|^|a| functions in index order (function index = sum f(i)|b|^(n-1-i)).
    std::vector<morphism> hom(object const& a, object const& b) const;
    std::string describe_object(object const& a) const { return std::to_string(a); }
    std::string describe_morphism(morphism const& f) const;

    morphism make(object a, object b, std::vector<std::uint32_t> map) const;
  };

  namespace finset {
    using fn = fn_arrow<std::size_t>;

    // Function tables <-> indices in the hom enumeration order.
    std::size_t                encode(std::vector<std::uint32_t> const& digits, std::size_t base);
    std::vector<std::uint32_t> decode(std::size_t index, std::size_t length, std::size_t base);

    fn product_map(fn const& f, fn const& g);  // f x g
    fn sum_map(fn const& f, fn const& g);      // f + g
    fn pair(fn const& f, fn const& g);         // <f, g> : A -> B x C
    fn proj1(std::size_t a, std::size_t b);    // A x B -> A
    fn proj2(std::size_t a, std::size_t b);    // A x B -> B
    fn inj1(std::size_t a, std::size_t b);     // A -> A + B
    fn inj2(std::size_t a, std::size_t b);     // B -> A + B
    fn copair(fn const& f, fn const& g);       // [f, g] : A + B -> C
    fn unique_from_empty(std::size_t b);
    fn to_point(std::size_t a);

    // [X, C] has |C|^|X| elements.
    std::size_t exp(std::size_t x, std::size_t c);
    // [X,B] -> [Y,B] by precomposition with u : Y -> X.
    fn precompose(fn const& u, std::size_t b);
    // [X,B] -> [X,C] by postcomposition with g : B -> C.
    fn postcompose(fn const& g, std::size_t x);
    // [X,B] x [X,C] -> [X, B x C]
    fn pairing(std::size_t x, std::size_t b, std::size_t c);
    // [X x Y, C] -> [Y, [X, C]]
    fn curry_xy(std::size_t x, std::size_t y, std::size_t c);
    // ev : [1, C] -> C
    fn eval_point(std::size_t c);

    // Curry g : A x B -> C into A -> [B, C] and back.
    fn curry_right(fn const& g, std::size_t a, std::size_t b);
    fn uncurry_right(fn const& h, std::size_t a, std::size_t b, std::size_t c);
    // Curry g : A x B -> C into B -> [A, C] and back.
    fn curry_left(fn const& g, std::size_t a, std::size_t b);
    fn uncurry_left(fn const& h, std::size_t a, std::size_t b, std::size_t c);

    // Inverse of a bijection; throws shape_error otherwise.
    fn invert(fn const& f);

    bool is_injective(fn const& f);
  }  // namespace finset

  skew_monoidal<finset_category> finset_cartesian();
  skew_monoidal<finset_category> finset_cocartesian();

  // {0..max} with every function between them when the hom fits under
  // max_generators, otherwise only identities and the maps into/out of the
  // extremes.
  test_domain<finset_category> finset_domain(std::size_t max_size, std::size_t max_hom = 64);

}  // namespace skewcat
