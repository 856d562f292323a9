#include "skewcat/instances/preorders.hpp"

#include <functional>

#include "skewcat/errors.hpp"

namespace skewcat {

  std::string truth_name(bool b) { return b ? "T" : "F"; }

  truth_category truth_category_of() {
    return truth_category([](bool a, bool b) { return !a || b; }, truth_name);
  }

  skew_monoidal<truth_category> truth_monoidal() {
    return strict_monoidal<truth_category>(
        "truth", truth_category_of(), [](bool a, bool b) { return a && b; },
        [](thin_arrow<bool> const& f, thin_arrow<bool> const& g) {
          return thin_arrow<bool>{f.source && g.source, f.target && g.target};
        },
        true);
  }

  grid_category grid_category_of() {
    return grid_category([](ext_rat const& a, ext_rat const& b) { return a >= b; },
                         [](ext_rat const& a) { return a.to_string(); });
  }

  skew_monoidal<grid_category> grid_monoidal() {
    return strict_monoidal<grid_category>(
        "grid-min", grid_category_of(), [](ext_rat const& a, ext_rat const& b) { return min(a, b); },
        [](thin_arrow<ext_rat> const& f, thin_arrow<ext_rat> const& g) {
          return thin_arrow<ext_rat>{min(f.source, g.source), min(f.target, g.target)};
        },
        ext_rat::infinity());
  }

  order_category order_category_of(bool naturals) {
    return order_category(
        [naturals](std::int64_t a, std::int64_t b) { return a >= b && (!naturals || b >= 0); },
        [](std::int64_t a) { return std::to_string(a); });
  }

  skew_monoidal<order_category> addition_monoidal(bool naturals) {
    return strict_monoidal<order_category>(
        naturals ? "naturals-add" : "integers-add", order_category_of(naturals),
        [](std::int64_t a, std::int64_t b) { return a + b; },
        [](thin_arrow<std::int64_t> const& f, thin_arrow<std::int64_t> const& g) {
          return thin_arrow<std::int64_t>{f.source + g.source, f.target + g.target};
        },
        std::int64_t{0});
  }

  std::vector<monotone_map> monotone_maps(int n, int m) {
    std::vector<monotone_map>          out;
    monotone_map                       cur;
    std::function<void(int)>           rec = [&](int lo) {
      if (static_cast<int>(cur.size()) == n) {
        out.push_back(cur);
        return;
      }
      for (int v = lo; v < m; ++v) {
        cur.push_back(v);
        rec(v);
        cur.pop_back();
      }
    };
    rec(0);
    return out;
  }

  std::string describe_monotone(monotone_map const& f) {
    std::string out = "<";
    for (auto v : f) {
      out += std::to_string(v);
    }
    return out + ">";
  }

  monotone_category monotone_category_of() {
    return monotone_category(
        [](monotone_map const& a, monotone_map const& b) {
          if (a.size() != b.size()) {
            return false;
          }
          for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] > b[i]) {
              return false;
            }
          }
          return true;
        },
        describe_monotone);
  }

}  // namespace skewcat
