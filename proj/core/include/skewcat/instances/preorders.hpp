#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skewcat/category.hpp"
#include "skewcat/ext_rat.hpp"
#include "skewcat/skew_monoidal.hpp"

namespace skewcat {

  // {F -> T}
  using truth_category = thin_category<bool>;
  truth_category                truth_category_of();
  skew_monoidal<truth_category> truth_monoidal();  // conjunction, unit T
  std::string                   truth_name(bool b);

  // [0, inf] with x -> y iff x >= y.
  using grid_category = thin_category<ext_rat>;
  grid_category                grid_category_of();
  skew_monoidal<grid_category> grid_monoidal();  // min, unit inf

  // Integers with x -> y iff x >= y, under addition. The internal hom is
  // [y, z] = z - y, or max(z - y, 0) when restricted to the naturals.
  using order_category = thin_category<std::int64_t>;
  order_category                order_category_of(bool naturals);
  skew_monoidal<order_category> addition_monoidal(bool naturals);

  // Monotone maps of finite chains, as value tables, ordered pointwise.
  using monotone_map      = std::vector<int>;
  using monotone_category = thin_category<monotone_map>;
  // All monotone maps {0 < .. < n-1} -> {0 < .. < m-1}.
  std::vector<monotone_map> monotone_maps(int n, int m);
  monotone_category         monotone_category_of();
  std::string               describe_monotone(monotone_map const& f);

  template <typename T>
  test_domain<thin_category<T>> thin_domain(thin_category<T> const& cat, std::vector<T> const& objs) {
    test_domain<thin_category<T>> dom{objs, {}};
    for (auto const& a : objs) {
      for (auto const& b : objs) {
        if (cat.has_arrow(a, b)) {
          dom.morphisms.push_back(cat.arrow(a, b));
        }
      }
    }
    return dom;
  }

}  // namespace skewcat
