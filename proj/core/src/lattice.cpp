#include "skewcat/instances/lattice.hpp"

#include "skewcat/errors.hpp"

namespace skewcat {

  namespace {
    constexpr std::size_t none = static_cast<std::size_t>(-1);
  }

  finite_lattice::finite_lattice(std::vector<std::string> names, std::vector<std::vector<bool>> le)
      : names_(std::move(names)), le_(std::move(le)) {
    std::size_t n = names_.size();
    if (n == 0) {
      throw invalid_space("lattice must be non-empty");
    }
    if (le_.size() != n) {
      throw invalid_space("order table must have " + std::to_string(n) + " rows");
    }
    for (auto const& row : le_) {
      if (row.size() != n) {
        throw invalid_space("order rows must have " + std::to_string(n) + " entries");
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (!le_[a][a]) {
        throw invalid_space("order is not reflexive at " + names_[a]);
      }
      for (std::size_t b = 0; b < n; ++b) {
        if (a != b && le_[a][b] && le_[b][a]) {
          throw invalid_space("order is not antisymmetric at " + names_[a] + ", " + names_[b]);
        }
        for (std::size_t c = 0; c < n; ++c) {
          if (le_[a][b] && le_[b][c] && !le_[a][c]) {
            throw invalid_space("order is not transitive at " + names_[a] + ", " + names_[b] + ", " + names_[c]);
          }
        }
      }
    }
    auto bound = [&](std::size_t a, std::size_t b, bool upper) {
      std::size_t best = none;
      for (std::size_t c = 0; c < n; ++c) {
        bool is_bound = upper ? (le_[a][c] && le_[b][c]) : (le_[c][a] && le_[c][b]);
        if (!is_bound) {
          continue;
        }
        if (best == none || (upper ? le_[c][best] : le_[best][c])) {
          best = c;
        }
      }
      // best must be below (above) every other bound
      for (std::size_t c = 0; c < n && best != none; ++c) {
        bool is_bound = upper ? (le_[a][c] && le_[b][c]) : (le_[c][a] && le_[c][b]);
        if (is_bound && !(upper ? le_[best][c] : le_[c][best])) {
          best = none;
        }
      }
      if (best == none) {
        throw invalid_space(std::string(upper ? "no join" : "no meet") + " of " + names_[a] + " and " + names_[b]);
      }
      return best;
    };
    join_.assign(n, std::vector<std::size_t>(n));
    meet_.assign(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        join_[a][b] = bound(a, b, true);
        meet_[a][b] = bound(a, b, false);
      }
    }
    bottom_ = 0;
    top_    = 0;
    for (std::size_t a = 1; a < n; ++a) {
      bottom_ = meet_[bottom_][a];
      top_    = join_[top_][a];
    }
  }

  std::vector<std::size_t> finite_lattice::elements() const {
    std::vector<std::size_t> out(size());
    for (std::size_t i = 0; i < size(); ++i) {
      out[i] = i;
    }
    return out;
  }

  thin_category<std::size_t> finite_lattice::category() const {
    return thin_category<std::size_t>([le = le_](std::size_t a, std::size_t b) { return le.at(a).at(b); },
                                      [names = names_](std::size_t a) { return names.at(a); });
  }

  skew_monoidal<thin_category<std::size_t>> finite_lattice::join_monoidal() const {
    auto cat = category();
    return strict_monoidal<thin_category<std::size_t>>(
        "lattice-join", cat, [j = join_](std::size_t a, std::size_t b) { return j.at(a).at(b); },
        [j = join_](thin_arrow<std::size_t> const& f, thin_arrow<std::size_t> const& g) {
          return thin_arrow<std::size_t>{j.at(f.source).at(g.source), j.at(f.target).at(g.target)};
        },
        bottom_);
  }

  nlohmann::json finite_lattice::to_json() const {
    return {{"kind", "lattice"}, {"elements", names_}, {"le", le_}};
  }

  finite_lattice finite_lattice::from_json(nlohmann::json const& doc) {
    try {
      auto names = doc.at("elements").get<std::vector<std::string>>();
      auto le    = doc.at("le").get<std::vector<std::vector<bool>>>();
      return {names, le};
    } catch (nlohmann::json::exception const& e) {
      throw parse_error(std::string("lattice document: ") + e.what());
    }
  }

  finite_lattice diamond_lattice() {
    // bot, a, b, top
    return {{"bot", "a", "b", "top"},
            {{true, true, true, true}, {false, true, false, true}, {false, false, true, true}, {false, false, false, true}}};
  }

  finite_lattice chain_lattice(std::size_t n) {
    std::vector<std::string>       names;
    std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back(std::to_string(i));
      for (std::size_t j = i; j < n; ++j) {
        le[i][j] = true;
      }
    }
    return {names, le};
  }

  finite_lattice m3_lattice() {
    std::vector<std::vector<bool>> le(5, std::vector<bool>(5, false));
    for (std::size_t i = 0; i < 5; ++i) {
      le[0][i] = true;
      le[i][4] = true;
      le[i][i] = true;
    }
    return {{"bot", "a", "b", "c", "top"}, le};
  }

  test_domain<thin_category<std::size_t>> lattice_domain(finite_lattice const& l) {
    test_domain<thin_category<std::size_t>> dom{l.elements(), {}};
    for (std::size_t a = 0; a < l.size(); ++a) {
      for (std::size_t b = 0; b < l.size(); ++b) {
        if (l.le(a, b)) {
          dom.morphisms.push_back({a, b});
        }
      }
    }
    return dom;
  }

}  // namespace skewcat
