#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "skewcat/action.hpp"
#include "skewcat/closedness.hpp"
#include "skewcat/instances/finset.hpp"
#include "skewcat/instances/gms.hpp"
#include "skewcat/instances/lattice.hpp"
#include "skewcat/instances/matcat.hpp"
#include "skewcat/instances/preorders.hpp"
#include "skewcat/semidirect.hpp"

namespace skewcat {

  ////////////////////////////////////////////////////////////////////////
  // Actions on generalized metric spaces
  ////////////////////////////////////////////////////////////////////////

  // M^x = min(M, x) for x in the grid. All phi/psi components are
  // identity-on-points: phi^x_{M,N} is non-expansive because
  // min(d,x) + min(d',x) >= min(d+d',x), and the acting category is thin,
  // so there is no other choice.
  weak_action<grid_category, gms_category> truncation_action();
  // Identity-on-points candidates in the reverse direction; they are not
  // morphisms whenever truncation is strict, which is the point.
  action_inverses<grid_category, gms_category> truncation_trivial_inverses();

  // M^T = M, M^F = M flattened to {0, inf}; all structure maps identity.
  strong_action<truth_category, gms_category> truth_values_action();
  // (-)^F as a lax monoidal comonad (counit and comultiplication identity
  // on points).
  lax_monoidal_comonad<gms_category> flatten_comonad();

  // M^k = M * 2^k under addition of exponents; (-)_k = (-)^{-k}.
  // naturals = true: exponents in N with [y, z] = max(z - y, 0);
  // otherwise exponents in Z, where every y has the dual -y.
  strong_action<order_category, gms_category> scaling_action(bool naturals);
  right_adjoint_data<order_category, gms_category> scaling_right_adjoint();
  internal_hom_data<order_category>               order_hom(bool naturals);
  dual_data<order_category>                       order_dual(std::int64_t y);
  internal_hom_data<gms_category>                 gms_hom_data();
  invertibility_witness<order_category>           order_inverses();

  ////////////////////////////////////////////////////////////////////////
  // Deformation of matrices by nonzero scalars
  ////////////////////////////////////////////////////////////////////////

  using kstar_category = discrete_category<rational>;
  kstar_category                kstar_category_of();
  skew_monoidal<kstar_category> kstar_monoidal();
  // Identity functors, phi^x_{B,C} = x^k id, phi^x = x^-k id, psi = id.
  strong_action<kstar_category, matcat> kstar_action(std::int64_t k);
  dual_data<kstar_category>             kstar_dual(rational const& x);
  dual_data<matcat>                     matcat_dual(std::size_t n);
  rational                              rational_pow(rational const& x, std::int64_t k);

  ////////////////////////////////////////////////////////////////////////
  // Actions on finite sets
  ////////////////////////////////////////////////////////////////////////

  using finset_op_category = opposite_category<finset_category>;
  skew_monoidal<finset_op_category> finset_op_cartesian();
  // X = FinSet^op acting on FinSet by C^X = [X, C].
  strong_action<finset_op_category, finset_category> finset_op_action();
  // X = (FinSet, +) acting on FinSet by C^X = [[X, J], C].
  strong_action<finset_category, finset_category> finset_j_action(std::size_t j);
  // X = (FinSet, x) acting on (FinSet, +) by B^X = B x X, with B |> C = [B, C].
  strong_action<finset_category, finset_category> self_tensor_action();
  triangle_hom_data<finset_category, finset_category> self_tensor_triangle();

  // Left hom, products and coproducts of finite sets.
  internal_hom_data<finset_category> finset_left_hom();
  product_data<finset_category>      finset_products();
  coproduct_data<finset_category>    finset_coproducts();

  ////////////////////////////////////////////////////////////////////////
  // Precomposition and copowers
  ////////////////////////////////////////////////////////////////////////

  // J = {0 < 1 < 2}; X = monotone J -> J under composition (X (x) Y = X o Y,
  // apply Y first), C = monotone J -> {F < T} under pointwise conjunction;
  // C^X = C o X, psi is the identity.
  skew_monoidal<monotone_category>                    precompose_acting();
  skew_monoidal<monotone_category>                    precompose_acted();
  strong_action<monotone_category, monotone_category> precompose_action();

  // X = (FinSet, x) acting on a lattice under join by copowers:
  // c^X = c if X is non-empty, else bottom; B |> C = 1 if B <= C else 0.
  strong_action<finset_category, thin_category<std::size_t>>     copower_action(finite_lattice const& l);
  triangle_hom_data<finset_category, thin_category<std::size_t>> copower_triangle(finite_lattice const& l);
  coproduct_data<thin_category<std::size_t>>                     lattice_coproducts(finite_lattice const& l);

  ////////////////////////////////////////////////////////////////////////
  // Registry
  ////////////////////////////////////////////////////////////////////////

  struct action_info {
    std::string name;
    bool        strong;
    std::string summary;
  };

  std::vector<action_info> action_catalog();
  // Throws unknown_action.
  action_info const& find_action(std::string const& name);

}  // namespace skewcat
