#pragma once

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace skewcat {

  using rational = boost::rational<std::int64_t>;

  std::string to_string(rational const& q);
  rational    parse_rational(std::string_view text);

  // Extended non-negative rational: [0, inf] restricted to Q.
  //
  // Every operation is exact. inf absorbs addition, is the top of the order,
  // and 0 * inf = 0 (the Lawvere convention, so that scaling a zero distance
  // never produces a non-zero one).
  class ext_rat {
   public:
    ext_rat() = default;
    ext_rat(std::int64_t n) : ext_rat(rational(n)) {}  // NOLINT(runtime/explicit)
    ext_rat(std::int64_t n, std::int64_t d) : ext_rat(rational(n, d)) {}
    explicit ext_rat(rational q);

    static ext_rat infinity() noexcept {
      ext_rat r;
      r.infinite_ = true;
      return r;
    }

    [[nodiscard]] bool     is_infinite() const noexcept { return infinite_; }
    [[nodiscard]] bool     is_zero() const noexcept { return !infinite_ && value_.numerator() == 0; }
    [[nodiscard]] rational value() const;  // throws on inf

    friend ext_rat operator+(ext_rat const& a, ext_rat const& b);
    ext_rat&       operator+=(ext_rat const& b) { return *this = *this + b; }

    // a * 2^k for any integer k
    [[nodiscard]] ext_rat scaled_pow2(std::int64_t k) const;
    // a * q for a non-negative rational q
    [[nodiscard]] ext_rat scaled(rational const& q) const;

    friend bool operator==(ext_rat const& a, ext_rat const& b) noexcept {
      return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }
    friend std::strong_ordering operator<=>(ext_rat const& a, ext_rat const& b) noexcept;

    [[nodiscard]] std::string to_string() const;
    static ext_rat            parse(std::string_view text);

   private:
    rational value_{0};
    bool     infinite_ = false;
  };

  inline ext_rat min(ext_rat const& a, ext_rat const& b) { return b < a ? b : a; }
  inline ext_rat max(ext_rat const& a, ext_rat const& b) { return a < b ? b : a; }

  std::ostream& operator<<(std::ostream& os, ext_rat const& x);

}  // namespace skewcat
