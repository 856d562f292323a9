#pragma once

#include <nlohmann/json.hpp>

#include <cstddef>
#include <cstdint>
#include <deque>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace skewcat {

  enum class check_status { pass, fail, shape_error };

  std::string_view to_string(check_status s) noexcept;

  // One failing instantiation of a law. Object and morphism descriptions are
  // complete payload dumps so the diagram can be rebuilt offline; the digests
  // are what the JSON report keys on.
  struct witness {
    std::vector<std::string> instantiation;
    std::string              lhs;
    std::string              rhs;
    std::string              note;
  };

  struct law_result {
    std::string          law;
    std::string          anchor;
    std::uint64_t        checked      = 0;
    std::uint64_t        failed       = 0;
    std::uint64_t        shape_errors = 0;
    bool                 sampled      = false;
    std::vector<witness> witnesses;

    static constexpr std::size_t max_witnesses = 8;

    [[nodiscard]] check_status status() const noexcept {
      if (shape_errors > 0) {
        return check_status::shape_error;
      }
      return failed > 0 ? check_status::fail : check_status::pass;
    }
    [[nodiscard]] bool passed() const noexcept { return status() == check_status::pass; }

    void record_pass() noexcept { ++checked; }
    void record_failure(witness w);
    void record_shape_error(witness w);
    void absorb(law_result const& other);
  };

  // Structured outcome of a law suite. Law order is insertion order, which is
  // deterministic for every checker in the library. References returned by
  // law() stay valid while further laws are added.
  class check_report {
   public:
    check_report() = default;
    explicit check_report(std::string subject, std::uint64_t seed = 0)
        : subject_(std::move(subject)), seed_(seed) {}

    // Finds the law by name, creating it (with the anchor) on first use.
    law_result& law(std::string_view name, std::string_view anchor = {});
    [[nodiscard]] law_result const* find(std::string_view name) const;

    void               note(std::string text) { notes_.push_back(std::move(text)); }
    void               merge(check_report const& other);
    [[nodiscard]] bool passed() const noexcept;

    [[nodiscard]] std::string const&             subject() const noexcept { return subject_; }
    [[nodiscard]] std::uint64_t                  seed() const noexcept { return seed_; }
    [[nodiscard]] std::deque<law_result> const&  laws() const noexcept { return laws_; }
    [[nodiscard]] std::vector<std::string> const& notes() const noexcept { return notes_; }

    [[nodiscard]] std::uint64_t count_checked() const noexcept;
    [[nodiscard]] std::uint64_t count_failed() const noexcept;

    [[nodiscard]] nlohmann::json to_json() const;
    [[nodiscard]] std::string    summary_line() const;

   private:
    std::string              subject_;
    std::uint64_t            seed_ = 0;
    std::deque<law_result>   laws_;  // stable references across law()
    std::vector<std::string> notes_;
  };

  // FNV-1a 64, rendered as 16 hex digits. Stable across platforms, unlike
  // std::hash.
  std::string digest(std::string_view text);

  // Caps how many instantiations a checker visits. Exhaustive when the tuple
  // space fits under max_tuples, otherwise a seeded pseudorandom sample of
  // exactly max_tuples tuples.
  struct budget {
    std::uint64_t max_tuples = 10'000;
    std::uint64_t seed       = 0;
  };

  namespace detail {
    std::uint64_t saturating_product(std::span<std::size_t const> extents) noexcept;
    std::uint64_t salted_seed(std::uint64_t seed, std::string_view salt) noexcept;
  }  // namespace detail

  // Calls fn(indices) for every index tuple in [0,extents[0]) x ... (row-major),
  // or for a sample of budget.max_tuples tuples drawn with a generator seeded
  // from (budget.seed, salt). Returns true when the visit was sampled.
  template <typename Fn>
  bool for_each_tuple(std::span<std::size_t const> extents, budget const& b,
                      std::string_view salt, Fn&& fn) {
    std::vector<std::size_t> idx(extents.size(), 0);
    for (auto e : extents) {
      if (e == 0) {
        return false;
      }
    }
    std::uint64_t const total = detail::saturating_product(extents);
    if (total <= b.max_tuples) {
      for (std::uint64_t n = 0; n < total; ++n) {
        fn(std::span<std::size_t const>(idx));
        for (std::size_t k = extents.size(); k-- > 0;) {
          if (++idx[k] < extents[k]) {
            break;
          }
          idx[k] = 0;
        }
      }
      return false;
    }
    // std::uniform_int_distribution is implementation-defined; reduce the raw
    // 64-bit output instead so samples are identical on every platform.
    std::mt19937_64 rng(detail::salted_seed(b.seed, salt));
    for (std::uint64_t n = 0; n < b.max_tuples; ++n) {
      for (std::size_t k = 0; k < extents.size(); ++k) {
        idx[k] = static_cast<std::size_t>(rng() % extents[k]);
      }
      fn(std::span<std::size_t const>(idx));
    }
    return true;
  }

  template <typename Fn>
  bool for_each_tuple(std::initializer_list<std::size_t> extents, budget const& b,
                      std::string_view salt, Fn&& fn) {
    std::vector<std::size_t> e(extents);
    return for_each_tuple(std::span<std::size_t const>(e), b, salt, std::forward<Fn>(fn));
  }

}  // namespace skewcat
