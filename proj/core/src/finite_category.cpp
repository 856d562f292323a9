#include "skewcat/finite_category.hpp"

#include <utility>

namespace skewcat {

  finite_category::finite_category(std::vector<std::string> objects, std::vector<arrow_record> arrows,
                                   std::vector<std::vector<std::size_t>> compose,
                                   std::vector<std::size_t>              identities)
      : objects_(std::move(objects)),
        arrows_(std::move(arrows)),
        table_(std::move(compose)),
        identities_(std::move(identities)) {
    std::size_t const n = arrows_.size();
    if (identities_.size() != objects_.size()) {
      throw ill_typed("identity table size differs from object count");
    }
    for (auto const& a : arrows_) {
      if (a.source >= objects_.size() || a.target >= objects_.size()) {
        throw ill_typed("morphism '" + a.name + "' has an endpoint out of range");
      }
    }
    for (std::size_t o = 0; o < objects_.size(); ++o) {
      auto id = identities_[o];
      if (id >= n || arrows_[id].source != o || arrows_[id].target != o) {
        throw ill_typed("identity of '" + objects_[o] + "' is not an endomorphism of it");
      }
    }
    if (table_.size() != n) {
      throw ill_typed("composition table has the wrong number of rows");
    }
    for (std::size_t f = 0; f < n; ++f) {
      if (table_[f].size() != n) {
        throw ill_typed("composition table row has the wrong length");
      }
      for (std::size_t g = 0; g < n; ++g) {
        bool const composable = arrows_[f].target == arrows_[g].source;
        auto const h          = table_[f][g];
        if (!composable) {
          if (h != undefined) {
            throw ill_typed("entry for non-composable pair (" + arrows_[f].name + ", "
                            + arrows_[g].name + ")");
          }
          continue;
        }
        if (h == undefined || h >= n) {
          throw ill_typed("missing composite (" + arrows_[f].name + ", " + arrows_[g].name + ")");
        }
      }
    }
  }

  std::vector<obj_id> finite_category::objects() const {
    std::vector<obj_id> out;
    for (std::size_t i = 0; i < objects_.size(); ++i) {
      out.push_back({i});
    }
    return out;
  }

  std::vector<mor_id> finite_category::morphisms() const {
    std::vector<mor_id> out;
    for (std::size_t i = 0; i < arrows_.size(); ++i) {
      out.push_back({i});
    }
    return out;
  }

  mor_id finite_category::compose(mor_id f, mor_id g) const {
    if (!is_valid(f) || !is_valid(g) || arrows_[f.index].target != arrows_[g.index].source) {
      throw ill_typed("compose " + describe_morphism(f) + " ; " + describe_morphism(g));
    }
    return {table_[f.index][g.index]};
  }

  std::vector<mor_id> finite_category::hom(obj_id a, obj_id b) const {
    std::vector<mor_id> out;
    for (std::size_t i = 0; i < arrows_.size(); ++i) {
      if (arrows_[i].source == a.index && arrows_[i].target == b.index) {
        out.push_back({i});
      }
    }
    return out;
  }

  std::string finite_category::describe_morphism(mor_id f) const {
    if (!is_valid(f)) {
      return "#" + std::to_string(f.index) + "?";
    }
    auto const& a = arrows_[f.index];
    return a.name + ":" + objects_[a.source] + "->" + objects_[a.target];
  }

  finite_category finite_category::with_entry(std::size_t f, std::size_t g, std::size_t h) const {
    auto table     = table_;
    table.at(f).at(g) = h;
    return finite_category(objects_, arrows_, std::move(table), identities_);
  }

  bool finite_category::operator==(finite_category const& other) const {
    if (objects_ != other.objects_ || table_ != other.table_ || identities_ != other.identities_
        || arrows_.size() != other.arrows_.size()) {
      return false;
    }
    for (std::size_t i = 0; i < arrows_.size(); ++i) {
      auto const& a = arrows_[i];
      auto const& b = other.arrows_[i];
      if (a.source != b.source || a.target != b.target || a.name != b.name) {
        return false;
      }
    }
    return true;
  }

  nlohmann::json finite_category::to_json() const {
    nlohmann::json arrows = nlohmann::json::array();
    for (auto const& a : arrows_) {
      arrows.push_back({{"src", a.source}, {"tgt", a.target}, {"payload", a.name}});
    }
    nlohmann::json table = nlohmann::json::array();
    for (auto const& row : table_) {
      nlohmann::json r = nlohmann::json::array();
      for (auto h : row) {
        if (h == undefined) {
          r.push_back(-1);
        } else {
          r.push_back(h);
        }
      }
      table.push_back(r);
    }
    return {{"kind", "category"},
            {"objects", objects_},
            {"morphisms", arrows},
            {"compose", table},
            {"identities", identities_}};
  }

  finite_category finite_category::from_json(nlohmann::json const& doc) {
    try {
      std::vector<std::string> objects;
      for (auto const& o : doc.at("objects")) {
        objects.push_back(o.is_string() ? o.get<std::string>() : o.dump());
      }
      std::vector<arrow_record> arrows;
      for (auto const& m : doc.at("morphisms")) {
        std::string name;
        if (m.contains("payload")) {
          name = m["payload"].is_string() ? m["payload"].get<std::string>() : m["payload"].dump();
        } else {
          name = "f" + std::to_string(arrows.size());
        }
        arrows.push_back({m.at("src").get<std::size_t>(), m.at("tgt").get<std::size_t>(), name});
      }
      std::vector<std::vector<std::size_t>> table;
      for (auto const& row : doc.at("compose")) {
        std::vector<std::size_t> r;
        for (auto const& h : row) {
          auto v = h.get<long long>();
          r.push_back(v < 0 ? undefined : static_cast<std::size_t>(v));
        }
        table.push_back(std::move(r));
      }
      auto ids = doc.at("identities").get<std::vector<std::size_t>>();
      return finite_category(std::move(objects), std::move(arrows), std::move(table), std::move(ids));
    } catch (nlohmann::json::exception const& e) {
      throw parse_error(std::string("category document: ") + e.what());
    }
  }

  finite_category monoid_category(std::vector<std::vector<std::size_t>> const& mult, std::size_t unit,
                                  std::string const& name) {
    std::size_t const                    n = mult.size();
    std::vector<finite_category::arrow_record> arrows;
    for (std::size_t i = 0; i < n; ++i) {
      arrows.push_back({0, 0, "m" + std::to_string(i)});
    }
    return finite_category({name}, std::move(arrows), mult, {unit});
  }

  finite_category preorder_category(std::vector<std::string> const&      names,
                                    std::vector<std::vector<bool>> const& le) {
    std::size_t const                          n = names.size();
    std::vector<finite_category::arrow_record> arrows;
    std::vector<std::vector<std::size_t>>      index(n, std::vector<std::size_t>(n, finite_category::undefined));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (le[a][b]) {
          index[a][b] = arrows.size();
          arrows.push_back({a, b, names[a] + "<=" + names[b]});
        }
      }
    }
    std::vector<std::vector<std::size_t>> table(arrows.size(),
                                                std::vector<std::size_t>(arrows.size(), finite_category::undefined));
    for (std::size_t f = 0; f < arrows.size(); ++f) {
      for (std::size_t g = 0; g < arrows.size(); ++g) {
        if (arrows[f].target == arrows[g].source) {
          table[f][g] = index[arrows[f].source][arrows[g].target];
        }
      }
    }
    std::vector<std::size_t> ids;
    for (std::size_t a = 0; a < n; ++a) {
      ids.push_back(index[a][a]);
    }
    return finite_category(names, std::move(arrows), std::move(table), std::move(ids));
  }

  finite_category terminal_category() { return monoid_category({{0}}, 0, "*"); }

  finite_category product_table(finite_category const& x, finite_category const& c) {
    std::size_t const        nx = x.object_count();
    std::size_t const        nc = c.object_count();
    std::size_t const        mx = x.morphism_count();
    std::size_t const        mc = c.morphism_count();
    std::vector<std::string> objects;
    for (std::size_t i = 0; i < nx; ++i) {
      for (std::size_t j = 0; j < nc; ++j) {
        objects.push_back("<" + x.describe_object({i}) + "," + c.describe_object({j}) + ">");
      }
    }
    std::vector<finite_category::arrow_record> arrows;
    for (std::size_t f = 0; f < mx; ++f) {
      for (std::size_t g = 0; g < mc; ++g) {
        auto const& rf = x.record({f});
        auto const& rg = c.record({g});
        arrows.push_back({rf.source * nc + rg.source, rf.target * nc + rg.target,
                          "<" + rf.name + "," + rg.name + ">"});
      }
    }
    std::vector<std::vector<std::size_t>> table(mx * mc, std::vector<std::size_t>(mx * mc, finite_category::undefined));
    for (std::size_t p = 0; p < mx * mc; ++p) {
      for (std::size_t q = 0; q < mx * mc; ++q) {
        auto fx = x.compose_index(p / mc, q / mc);
        auto fc = c.compose_index(p % mc, q % mc);
        if (fx != finite_category::undefined && fc != finite_category::undefined) {
          table[p][q] = fx * mc + fc;
        }
      }
    }
    std::vector<std::size_t> ids;
    for (std::size_t i = 0; i < nx; ++i) {
      for (std::size_t j = 0; j < nc; ++j) {
        ids.push_back(x.identity({i}).index * mc + c.identity({j}).index);
      }
    }
    return finite_category(std::move(objects), std::move(arrows), std::move(table), std::move(ids));
  }

  finite_category opposite_table(finite_category const& c) {
    std::vector<std::string> objects;
    for (std::size_t i = 0; i < c.object_count(); ++i) {
      objects.push_back(c.describe_object({i}));
    }
    std::vector<finite_category::arrow_record> arrows;
    for (std::size_t f = 0; f < c.morphism_count(); ++f) {
      auto const& r = c.record({f});
      arrows.push_back({r.target, r.source, r.name});
    }
    std::size_t const                     m = c.morphism_count();
    std::vector<std::vector<std::size_t>> table(m, std::vector<std::size_t>(m));
    for (std::size_t f = 0; f < m; ++f) {
      for (std::size_t g = 0; g < m; ++g) {
        table[f][g] = c.compose_index(g, f);
      }
    }
    std::vector<std::size_t> ids;
    for (std::size_t i = 0; i < c.object_count(); ++i) {
      ids.push_back(c.identity({i}).index);
    }
    return finite_category(std::move(objects), std::move(arrows), std::move(table), std::move(ids));
  }

}  // namespace skewcat
