#include "skewcat/report.hpp"

#include <algorithm>
#include <limits>

namespace skewcat {

  std::string_view to_string(check_status s) noexcept {
    switch (s) {
      case check_status::pass:
        return "pass";
      case check_status::fail:
        return "fail";
      case check_status::shape_error:
        return "shape_error";
    }
    return "unknown";
  }

  void law_result::record_failure(witness w) {
    ++checked;
    ++failed;
    if (witnesses.size() < max_witnesses) {
      witnesses.push_back(std::move(w));
    }
  }

  void law_result::record_shape_error(witness w) {
    ++checked;
    ++shape_errors;
    if (witnesses.size() < max_witnesses) {
      witnesses.push_back(std::move(w));
    }
  }

  void law_result::absorb(law_result const& other) {
    checked += other.checked;
    failed += other.failed;
    shape_errors += other.shape_errors;
    sampled = sampled || other.sampled;
    for (auto const& w : other.witnesses) {
      if (witnesses.size() >= max_witnesses) {
        break;
      }
      witnesses.push_back(w);
    }
    if (anchor.empty()) {
      anchor = other.anchor;
    }
  }

  law_result& check_report::law(std::string_view name, std::string_view anchor) {
    auto it = std::find_if(laws_.begin(), laws_.end(),
                           [&](law_result const& r) { return r.law == name; });
    if (it != laws_.end()) {
      if (it->anchor.empty()) {
        it->anchor = std::string(anchor);
      }
      return *it;
    }
    laws_.push_back(law_result{std::string(name), std::string(anchor), 0, 0, 0, false, {}});
    return laws_.back();
  }

  law_result const* check_report::find(std::string_view name) const {
    auto it = std::find_if(laws_.begin(), laws_.end(),
                           [&](law_result const& r) { return r.law == name; });
    return it == laws_.end() ? nullptr : &*it;
  }

  void check_report::merge(check_report const& other) {
    for (auto const& r : other.laws_) {
      law(r.law, r.anchor).absorb(r);
    }
    notes_.insert(notes_.end(), other.notes_.begin(), other.notes_.end());
  }

  bool check_report::passed() const noexcept {
    return std::all_of(laws_.begin(), laws_.end(),
                       [](law_result const& r) { return r.passed(); });
  }

  std::uint64_t check_report::count_checked() const noexcept {
    std::uint64_t n = 0;
    for (auto const& r : laws_) {
      n += r.checked;
    }
    return n;
  }

  std::uint64_t check_report::count_failed() const noexcept {
    std::uint64_t n = 0;
    for (auto const& r : laws_) {
      n += r.failed + r.shape_errors;
    }
    return n;
  }

  nlohmann::json check_report::to_json() const {
    nlohmann::json laws = nlohmann::json::array();
    for (auto const& r : laws_) {
      nlohmann::json failures = nlohmann::json::array();
      for (auto const& w : r.witnesses) {
        failures.push_back({{"instantiation", w.instantiation},
                            {"lhs", w.lhs},
                            {"rhs", w.rhs},
                            {"lhs_digest", digest(w.lhs)},
                            {"rhs_digest", digest(w.rhs)},
                            {"note", w.note}});
      }
      laws.push_back({{"law", r.law},
                      {"anchor", r.anchor},
                      {"status", std::string(to_string(r.status()))},
                      {"checked", r.checked},
                      {"failed", r.failed},
                      {"shape_errors", r.shape_errors},
                      {"sampled", r.sampled},
                      {"witnesses", failures}});
    }
    return {{"subject", subject_},
            {"seed", seed_},
            {"status", passed() ? "pass" : "fail"},
            {"summary", {{"laws", laws_.size()}, {"checked", count_checked()}, {"failed", count_failed()}}},
            {"laws", laws},
            {"notes", notes_}};
  }

  std::string check_report::summary_line() const {
    return subject_ + ": " + (passed() ? "PASS" : "FAIL") + " (" + std::to_string(laws_.size())
           + " laws, " + std::to_string(count_checked()) + " instantiations, "
           + std::to_string(count_failed()) + " failures)";
  }

  std::string digest(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : text) {
      h ^= ch;
      h *= 0x100000001b3ULL;
    }
    static constexpr char hex[] = "0123456789abcdef";
    std::string           out(16, '0');
    for (int i = 15; i >= 0; --i) {
      out[static_cast<std::size_t>(i)] = hex[h & 0xF];
      h >>= 4;
    }
    return out;
  }

  namespace detail {
    std::uint64_t saturating_product(std::span<std::size_t const> extents) noexcept {
      std::uint64_t total = 1;
      for (auto e : extents) {
        if (e != 0 && total > std::numeric_limits<std::uint64_t>::max() / e) {
          return std::numeric_limits<std::uint64_t>::max();
        }
        total *= e;
      }
      return total;
    }

    std::uint64_t salted_seed(std::uint64_t seed, std::string_view salt) noexcept {
      std::uint64_t h = 0xcbf29ce484222325ULL ^ seed;
      for (unsigned char ch : salt) {
        h ^= ch;
        h *= 0x100000001b3ULL;
      }
      return h;
    }
  }  // namespace detail

}  // namespace skewcat
