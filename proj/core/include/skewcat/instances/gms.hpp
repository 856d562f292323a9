#pragma once

#include <nlohmann/json.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skewcat/category.hpp"
#include "skewcat/ext_rat.hpp"
#include "skewcat/instances/finset.hpp"
#include "skewcat/report.hpp"
#include "skewcat/skew_monoidal.hpp"

namespace skewcat {

  // Finite generalized metric space: d(m,m) = 0 and the triangle inequality,
  // nothing else. Spaces are interned, so two handles are equal iff their
  // distance tables are equal; this makes strict associativity of the
  // row-major tensor a literal equality.
  class gms {
   public:
    // The one-point space.
    gms();

    // Throws invalid_space on a bad diagonal or a triangle violation.
    static gms make(std::size_t points, std::vector<ext_rat> const& dist);

    [[nodiscard]] std::size_t                 size() const noexcept;
    [[nodiscard]] ext_rat const&              dist(std::size_t i, std::size_t j) const;
    [[nodiscard]] std::vector<ext_rat> const& distances() const noexcept;
    [[nodiscard]] std::size_t                 id() const noexcept;
    // Structural rendering "[n|d01,d02,..]" (off-diagonal, row-major), so
    // reports never depend on construction order.
    [[nodiscard]] std::string                 describe() const;

    friend bool operator==(gms const& a, gms const& b) noexcept { return a.rec_ == b.rec_; }
    friend std::strong_ordering operator<=>(gms const& a, gms const& b) noexcept {
      return a.id() <=> b.id();
    }

    struct record;

   private:
    explicit gms(record const* r) : rec_(r) {}
    record const* rec_;
  };

  // Exhaustive triangle-inequality check; returns a violating (i, j, k).
  std::optional<std::vector<std::size_t>> triangle_violation(std::size_t points, std::vector<ext_rat> const& dist);

  using gms_map = fn_arrow<gms>;

  // Non-expansive maps.
  class gms_category {
   public:
    using object   = gms;
    using morphism = gms_map;

    object   source(morphism const& f) const { return f.source; }
    object   target(morphism const& f) const { return f.target; }
    morphism identity(object const& a) const;
    morphism compose(morphism const& f, morphism const& g) const;
    bool     equal(morphism const& f, morphism const& g) const { return f == g; }
    bool     is_valid(morphism const& f) const;
    // Every set map filtered by non-expansiveness; not_enumerable beyond
    // max_carrier candidate maps.
    std::vector<morphism> hom(object const& a, object const& b) const;
    std::string describe_object(object const& a) const { return a.describe(); }
    std::string describe_morphism(morphism const& f) const;

    // Same points, identity function; valid iff the target is pointwise
    // below the source.
    morphism same_points(object const& a, object const& b) const;
    morphism make(object const& a, object const& b, std::vector<std::uint32_t> map) const;
  };

  gms point_space();
  gms empty_space();
  // Two points at distance t in each direction.
  gms d_space(ext_rat const& t);

  gms     gms_tensor(gms const& m, gms const& n);
  gms_map gms_tensor_map(gms_map const& f, gms_map const& g);
  // Strict symmetric-free monoidal structure (product, summed distances).
  skew_monoidal<gms_category> gms_monoidal();

  gms gms_truncate(gms const& m, ext_rat const& x);
  gms gms_flatten(gms const& m, bool b);
  gms gms_scale(gms const& m, std::int64_t k);

  struct gms_coproduct_data {
    gms     space;
    gms_map inj1;
    gms_map inj2;
  };
  gms_coproduct_data gms_coproduct(gms const& m, gms const& n);
  gms_map            gms_copair(gms_coproduct_data const& co, gms_map const& f, gms_map const& g);
  // For each target T and each pair of maps m -> T, n -> T: exactly one
  // mediating map through the coproduct.
  check_report check_coproduct_universal(gms const& m, gms const& n, std::vector<gms> const& targets);

  // Chain of spaces on a fixed point set with non-increasing distances and a
  // declared pointwise infimum. Verifies the cocone, the triangle inequality
  // of the limit and the universal property against the test targets; throws
  // not_monotone / not_lower_bound on bad input.
  struct chain_colimit_result {
    gms          colimit;
    check_report report;
  };
  chain_colimit_result gms_chain_colimit(std::vector<gms> const& stages, std::vector<ext_rat> const& limit_dist,
                                         std::vector<gms> const& targets);

  // A distance-preserving bijection, if one exists.
  std::optional<std::vector<std::uint32_t>> gms_iso_exists(gms const& m, gms const& n);

  // [N, P] scaled by 2^-k: points are the maps N -> P in hom() order,
  // distance sup_n P(f n, g n) * 2^-k.
  struct gms_hom_space {
    gms                  space;
    std::vector<gms_map> maps;
    std::uint32_t        index_of(gms_map const& f) const;
  };
  gms_hom_space gms_internal_hom(gms const& n, gms const& p, std::int64_t scale_k = 0);

  // Every space on `points` points with off-diagonal distances from `values`
  // satisfying the triangle inequality, in lexicographic order.
  std::vector<gms> enumerate_gms(std::size_t points, std::vector<ext_rat> const& values);

  std::vector<ext_rat> default_grid();

  // A fixed asymmetric three-point space used as a representative in the
  // law families.
  gms t3_space();

  // Objects plus every map between them.
  test_domain<gms_category> gms_domain(std::vector<gms> const& spaces, std::size_t max_hom = 64);

  nlohmann::json gms_to_json(gms const& m);
  gms            gms_from_json(nlohmann::json const& doc);

}  // namespace skewcat
