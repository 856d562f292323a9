#include "skewcat/ext_rat.hpp"

#include <charconv>
#include <limits>
#include <ostream>

#include "skewcat/errors.hpp"

namespace skewcat {

  namespace {
    std::int64_t parse_int(std::string_view s) {
      std::int64_t v   = 0;
      auto         res = std::from_chars(s.data(), s.data() + s.size(), v);
      if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
        throw parse_error("not an integer: '" + std::string(s) + "'");
      }
      return v;
    }

    std::int64_t pow2(std::int64_t k) {
      if (k >= 62) {
        throw param_out_of_bounds("2^" + std::to_string(k) + " overflows");
      }
      return std::int64_t{1} << k;
    }
  }  // namespace

  std::string to_string(rational const& q) {
    if (q.denominator() == 1) {
      return std::to_string(q.numerator());
    }
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
  }

  rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
      return rational(parse_int(text));
    }
    auto den = parse_int(text.substr(slash + 1));
    if (den == 0) {
      throw parse_error("zero denominator in '" + std::string(text) + "'");
    }
    return rational(parse_int(text.substr(0, slash)), den);
  }

  ext_rat::ext_rat(rational q) : value_(q) {
    if (q < 0) {
      throw param_out_of_bounds("negative distance " + skewcat::to_string(q));
    }
  }

  rational ext_rat::value() const {
    if (infinite_) {
      throw param_out_of_bounds("value() of inf");
    }
    return value_;
  }

  ext_rat operator+(ext_rat const& a, ext_rat const& b) {
    if (a.infinite_ || b.infinite_) {
      return ext_rat::infinity();
    }
    return ext_rat(a.value_ + b.value_);
  }

  ext_rat ext_rat::scaled_pow2(std::int64_t k) const {
    if (infinite_ || value_.numerator() == 0 || k == 0) {
      return *this;
    }
    return k > 0 ? ext_rat(value_ * pow2(k)) : ext_rat(value_ / pow2(-k));
  }

  ext_rat ext_rat::scaled(rational const& q) const {
    if (q < 0) {
      throw param_out_of_bounds("negative scale factor");
    }
    if (value_.numerator() == 0 && !infinite_) {
      return *this;
    }
    if (infinite_) {
      return q.numerator() == 0 ? ext_rat() : *this;
    }
    return ext_rat(value_ * q);
  }

  std::strong_ordering operator<=>(ext_rat const& a, ext_rat const& b) noexcept {
    if (a.infinite_ || b.infinite_) {
      return a.infinite_ <=> b.infinite_;
    }
    if (a.value_ < b.value_) {
      return std::strong_ordering::less;
    }
    return a.value_ == b.value_ ? std::strong_ordering::equal : std::strong_ordering::greater;
  }

  std::string ext_rat::to_string() const {
    return infinite_ ? "inf" : skewcat::to_string(value_);
  }

  ext_rat ext_rat::parse(std::string_view text) {
    if (text == "inf" || text == "Infinity" || text == "infinity") {
      return infinity();
    }
    return ext_rat(parse_rational(text));
  }

  std::ostream& operator<<(std::ostream& os, ext_rat const& x) {
    return os << x.to_string();
  }

}  // namespace skewcat
