#pragma once

#include <nlohmann/json.hpp>

#include <cstddef>
#include <string>
#include <vector>

#include "skewcat/category.hpp"
#include "skewcat/skew_monoidal.hpp"

namespace skewcat {

  // Finite bounded lattice given by its order; joins and meets are derived
  // and the lattice axioms verified at construction (invalid_space
  // otherwise).
  class finite_lattice {
   public:
    finite_lattice(std::vector<std::string> names, std::vector<std::vector<bool>> le);

    [[nodiscard]] std::size_t size() const noexcept { return names_.size(); }
    [[nodiscard]] bool        le(std::size_t a, std::size_t b) const { return le_.at(a).at(b); }
    [[nodiscard]] std::size_t join(std::size_t a, std::size_t b) const { return join_.at(a).at(b); }
    [[nodiscard]] std::size_t meet(std::size_t a, std::size_t b) const { return meet_.at(a).at(b); }
    [[nodiscard]] std::size_t bottom() const noexcept { return bottom_; }
    [[nodiscard]] std::size_t top() const noexcept { return top_; }
    [[nodiscard]] std::string const& name(std::size_t a) const { return names_.at(a); }
    [[nodiscard]] std::vector<std::size_t> elements() const;

    // Thin category a -> b iff a <= b.
    [[nodiscard]] thin_category<std::size_t> category() const;
    // Join-semilattice monoidal structure (unit bottom); strict.
    [[nodiscard]] skew_monoidal<thin_category<std::size_t>> join_monoidal() const;

    [[nodiscard]] nlohmann::json to_json() const;
    static finite_lattice        from_json(nlohmann::json const& doc);

   private:
    std::vector<std::string>              names_;
    std::vector<std::vector<bool>>        le_;
    std::vector<std::vector<std::size_t>> join_;
    std::vector<std::vector<std::size_t>> meet_;
    std::size_t                           bottom_ = 0;
    std::size_t                           top_    = 0;
  };

  // bot < a, b < top with a, b incomparable.
  finite_lattice diamond_lattice();
  // 0 < 1 < ... < n-1
  finite_lattice chain_lattice(std::size_t n);
  // bot < a, b, c < top (the five-element M3).
  finite_lattice m3_lattice();

  test_domain<thin_category<std::size_t>> lattice_domain(finite_lattice const& l);

}  // namespace skewcat
