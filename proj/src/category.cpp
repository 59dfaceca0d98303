#include "enriched/category.hpp"

#include <algorithm>
#include <numeric>

namespace enriched {

  namespace {
    constexpr std::size_t max_paths = 400'000;

    struct UnionFind {
      std::vector<std::size_t> parent;
      explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
      }
      std::size_t find(std::size_t x) {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x         = parent[x];
        }
        return x;
      }
      void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
          parent[std::max(a, b)] = std::min(a, b);
        }
      }
    };

    bool shortlex_less(Path const& a, Path const& b) {
      if (a.size() != b.size()) {
        return a.size() < b.size();
      }
      return a < b;
    }

    // Target of `p` read from `source`, or nullopt if it is not a path.
    std::optional<std::size_t> walk(std::vector<Generator> const& gens,
                                    std::size_t                   source,
                                    Path const&                   p) {
      auto at = source;
      for (auto g : p) {
        if (g >= gens.size() || gens[g].source != at) {
          return std::nullopt;
        }
        at = gens[g].target;
      }
      return at;
    }
  }  // namespace

  PathCategory PathCategory::present(std::vector<std::string> objects,
                                     std::vector<Generator>   generators,
                                     std::vector<Relation>    relations,
                                     std::size_t              fuel) {
    PathCategory c;
    c.objects_    = std::move(objects);
    c.generators_ = std::move(generators);
    c.relations_  = std::move(relations);
    c.fuel_       = fuel;
    auto const n  = c.objects_.size();

    for (auto const& g : c.generators_) {
      if (g.source >= n || g.target >= n) {
        throw Error("generator " + g.label + ": endpoint out of range");
      }
    }
    for (auto const& r : c.relations_) {
      if (r.source >= n || r.target >= n
          || walk(c.generators_, r.source, r.lhs) != r.target
          || walk(c.generators_, r.source, r.rhs) != r.target) {
        throw Error("relation between non-parallel paths");
      }
    }

    std::vector<std::vector<std::size_t>> out_gens(n);
    for (std::size_t g = 0; g < c.generators_.size(); ++g) {
      out_gens[c.generators_[g].source].push_back(g);
    }

    // Enumerate every path of length <= fuel, level by level.
    std::vector<std::pair<std::size_t, Path>> paths;
    std::vector<std::size_t>                  ends;
    for (std::size_t o = 0; o < n; ++o) {
      paths.push_back({o, {}});
      ends.push_back(o);
    }
    std::size_t level_begin = 0;
    for (std::size_t len = 1; len <= fuel + 1; ++len) {
      auto level_end = paths.size();
      for (auto i = level_begin; i < level_end; ++i) {
        for (auto g : out_gens[ends[i]]) {
          if (len == fuel + 1) {
            c.complete_ = false;
            break;
          }
          auto p = paths[i].second;
          p.push_back(g);
          paths.push_back({paths[i].first, std::move(p)});
          ends.push_back(c.generators_[g].target);
          if (paths.size() > max_paths) {
            throw FuelExhausted("path enumeration exceeded "
                                + std::to_string(max_paths) + " paths");
          }
        }
        if (!c.complete_) {
          break;
        }
      }
      if (!c.complete_ || paths.size() == level_end) {
        break;
      }
      level_begin = level_end;
    }

    std::map<std::pair<std::size_t, Path>, std::size_t> index;
    for (std::size_t i = 0; i < paths.size(); ++i) {
      index.emplace(paths[i], i);
    }

    // Congruence closure: one relation rewrite at one offset per union.
    UnionFind uf(paths.size());
    for (std::size_t i = 0; i < paths.size(); ++i) {
      auto const& [src, w] = paths[i];
      for (auto const& r : c.relations_) {
        for (int dir = 0; dir < 2; ++dir) {
          auto const& from = dir == 0 ? r.lhs : r.rhs;
          auto const& to   = dir == 0 ? r.rhs : r.lhs;
          if (from.size() > w.size()) {
            continue;
          }
          if (w.size() - from.size() + to.size() > fuel) {
            continue;
          }
          for (std::size_t k = 0; k + from.size() <= w.size(); ++k) {
            auto at = k == 0 ? src : c.generators_[w[k - 1]].target;
            if (at != r.source
                || !std::equal(from.begin(), from.end(), w.begin() + k)) {
              continue;
            }
            Path v(w.begin(), w.begin() + k);
            v.insert(v.end(), to.begin(), to.end());
            v.insert(v.end(), w.begin() + k + from.size(), w.end());
            if (auto it = index.find({src, v}); it != index.end()) {
              uf.unite(i, it->second);
            }
          }
        }
      }
    }

    std::map<std::size_t, std::size_t> rep;  // root -> best member
    for (std::size_t i = 0; i < paths.size(); ++i) {
      auto root         = uf.find(i);
      auto [it, fresh]  = rep.emplace(root, i);
      if (!fresh && shortlex_less(paths[i].second, paths[it->second].second)) {
        it->second = i;
      }
    }
    std::vector<std::size_t> roots;
    for (auto const& [root, _] : rep) {
      roots.push_back(root);
    }
    auto key = [&](std::size_t root) {
      auto const& [src, p] = paths[rep[root]];
      return std::make_tuple(src, ends[rep[root]], p.size(), p);
    };
    std::sort(roots.begin(), roots.end(), [&](auto a, auto b) { return key(a) < key(b); });

    std::map<std::size_t, std::size_t> id_of_root;
    c.identities_.assign(n, 0);
    c.homs_.assign(n * n, {});
    for (auto root : roots) {
      auto const  best = rep[root];
      Morphism    m{paths[best].first, ends[best], paths[best].second,
                 paths[best].second.empty()};
      auto const  id = c.morphisms_.size();
      id_of_root[root] = id;
      if (m.identity) {
        c.identities_[m.source] = id;
      }
      c.homs_[m.source * n + m.target].push_back(id);
      c.morphisms_.push_back(std::move(m));
    }
    for (std::size_t i = 0; i < paths.size(); ++i) {
      c.path_classes_.emplace(paths[i], id_of_root[uf.find(i)]);
    }
    return c;
  }

  std::vector<std::size_t> const& PathCategory::hom(std::size_t a, std::size_t b) const {
    return homs_.at(a * objects_.size() + b);
  }

  std::optional<std::size_t> PathCategory::class_of(std::size_t source, Path const& p) const {
    if (auto it = path_classes_.find({source, p}); it != path_classes_.end()) {
      return it->second;
    }
    return std::nullopt;
  }

  std::size_t PathCategory::compose(std::size_t f, std::size_t g) const {
    auto const& mf = morphisms_.at(f);
    auto const& mg = morphisms_.at(g);
    if (mf.target != mg.source) {
      throw Error("composing non-composable morphisms");
    }
    auto p = mf.path;
    p.insert(p.end(), mg.path.begin(), mg.path.end());
    if (auto c = class_of(mf.source, p)) {
      return *c;
    }
    throw IncompleteCategory("composite lies beyond the enumerated paths");
  }

  std::size_t PathCategory::non_identity_count() const noexcept {
    return static_cast<std::size_t>(std::count_if(
        morphisms_.begin(), morphisms_.end(), [](auto const& m) { return !m.identity; }));
  }

  std::string PathCategory::describe(std::size_t m) const {
    auto const& mor = morphisms_.at(m);
    if (mor.identity) {
      return "id(" + objects_[mor.source] + ")";
    }
    std::string out;
    for (auto g : mor.path) {
      out += (out.empty() ? "" : ";") + generators_[g].label;
    }
    return out;
  }

  void PathCategory::require_complete(char const* what) const {
    if (!complete_) {
      throw IncompleteCategory(std::string(what)
                               + ": category has paths beyond fuel "
                               + std::to_string(fuel_));
    }
  }

  PathCategory free_category_gph(Graph const& g, std::size_t fuel) {
    std::vector<Generator> gens;
    for (auto const& e : g.edges) {
      gens.push_back({e.source, e.target, e.label});
    }
    return PathCategory::present(g.vertices, std::move(gens), {}, fuel);
  }

  PathCategory free_category_rgph(ReflexiveGraph const& r, std::size_t fuel) {
    std::vector<Generator> gens;
    for (auto const& e : r.edges) {
      gens.push_back({e.source, e.target, e.label});
    }
    return PathCategory::present(r.vertices, std::move(gens), {}, fuel);
  }

  PathCategory realize(TruncSSet const& x, std::size_t fuel) {
    if (auto bad = identity_violations(x); !bad.empty()) {
      throw SimplicialIdentityViolation("simplicial identity violated: " + bad.front());
    }
    std::vector<Generator> gens;
    std::vector<Path>      as_path(x.size1());
    for (std::size_t e = 0; e < x.size1(); ++e) {
      if (x.nondegenerate_edge(e)) {
        as_path[e] = {gens.size()};
        gens.push_back({x.face1[1][e], x.face1[0][e], x.edge_names[e]});
      }
    }
    std::vector<Relation> rels;
    for (std::size_t t = 0; t < x.size2(); ++t) {
      auto const long_edge = x.face2[1][t];
      auto       composite = as_path[x.face2[2][t]];
      auto const& second   = as_path[x.face2[0][t]];
      composite.insert(composite.end(), second.begin(), second.end());
      if (composite == as_path[long_edge]) {
        continue;
      }
      rels.push_back({x.face1[1][long_edge], x.face1[0][long_edge], as_path[long_edge],
                      std::move(composite)});
    }
    return PathCategory::present(x.points, std::move(gens), std::move(rels), fuel);
  }

  PathCategory product_cat(PathCategory const& a, PathCategory const& b) {
    a.require_complete("product_cat");
    b.require_complete("product_cat");
    auto const na = a.objects().size(), nb = b.objects().size();
    auto const ga = a.generators().size(), gb = b.generators().size();

    std::vector<std::string> objects;
    for (auto const& p : a.objects()) {
      for (auto const& q : b.objects()) {
        objects.push_back("(" + p + "," + q + ")");
      }
    }
    // (g, j) has id g * nb + j; (i, h) has id ga * nb + i * gb + h.
    auto left  = [&](std::size_t g, std::size_t j) { return g * nb + j; };
    auto right = [&](std::size_t i, std::size_t h) { return ga * nb + i * gb + h; };

    std::vector<Generator> gens;
    for (auto const& g : a.generators()) {
      for (std::size_t j = 0; j < nb; ++j) {
        gens.push_back({g.source * nb + j, g.target * nb + j,
                        "(" + g.label + ",id(" + b.objects()[j] + "))"});
      }
    }
    for (std::size_t i = 0; i < na; ++i) {
      for (auto const& h : b.generators()) {
        gens.push_back({i * nb + h.source, i * nb + h.target,
                        "(id(" + a.objects()[i] + ")," + h.label + ")"});
      }
    }

    std::vector<Relation> rels;
    for (std::size_t g = 0; g < ga; ++g) {
      auto const& eg = a.generators()[g];
      for (std::size_t h = 0; h < gb; ++h) {
        auto const& eh = b.generators()[h];
        rels.push_back({eg.source * nb + eh.source, eg.target * nb + eh.target,
                        {left(g, eh.source), right(eg.target, h)},
                        {right(eg.source, h), left(g, eh.target)}});
      }
    }
    for (auto const& r : a.relations()) {
      for (std::size_t j = 0; j < nb; ++j) {
        Relation lifted{r.source * nb + j, r.target * nb + j, {}, {}};
        for (auto g : r.lhs) lifted.lhs.push_back(left(g, j));
        for (auto g : r.rhs) lifted.rhs.push_back(left(g, j));
        rels.push_back(std::move(lifted));
      }
    }
    for (auto const& r : b.relations()) {
      for (std::size_t i = 0; i < na; ++i) {
        Relation lifted{i * nb + r.source, i * nb + r.target, {}, {}};
        for (auto h : r.lhs) lifted.lhs.push_back(right(i, h));
        for (auto h : r.rhs) lifted.rhs.push_back(right(i, h));
        rels.push_back(std::move(lifted));
      }
    }
    return PathCategory::present(std::move(objects), std::move(gens), std::move(rels),
                                 a.fuel() + b.fuel());
  }

  PathCategory terminal_category() {
    return PathCategory::present({"*"}, {}, {});
  }

  namespace {
    class IsoSearch {
     public:
      IsoSearch(PathCategory const& a, PathCategory const& b) : a_(a), b_(b) {}

      bool run() {
        auto const n = a_.objects().size();
        if (n != b_.objects().size() || a_.morphisms().size() != b_.morphisms().size()
            || a_.non_identity_count() != b_.non_identity_count()) {
          return false;
        }
        sig_a_ = signatures(a_);
        sig_b_ = signatures(b_);
        auto sa = sig_a_, sb = sig_b_;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) {
          return false;
        }
        comp_a_ = table(a_);
        comp_b_ = table(b_);
        producers_.assign(comp_a_.size(), {});
        for (std::size_t x = 0; x < comp_a_.size(); ++x) {
          for (std::size_t y = 0; y < comp_a_.size(); ++y) {
            if (comp_a_[x][y] != npos) {
              producers_[comp_a_[x][y]].emplace_back(x, y);
            }
          }
        }
        obj_.assign(n, npos);
        obj_used_.assign(n, false);
        return assign_object(0);
      }

     private:
      static constexpr std::size_t npos = static_cast<std::size_t>(-1);
      using Signature = std::tuple<std::size_t, std::vector<std::size_t>,
                                   std::vector<std::size_t>>;

      static std::vector<Signature> signatures(PathCategory const& c) {
        auto const             n = c.objects().size();
        std::vector<Signature> out;
        for (std::size_t o = 0; o < n; ++o) {
          std::vector<std::size_t> outs, ins;
          for (std::size_t p = 0; p < n; ++p) {
            outs.push_back(c.hom(o, p).size());
            ins.push_back(c.hom(p, o).size());
          }
          std::sort(outs.begin(), outs.end());
          std::sort(ins.begin(), ins.end());
          out.emplace_back(c.hom(o, o).size(), outs, ins);
        }
        return out;
      }

      static std::vector<std::vector<std::size_t>> table(PathCategory const& c) {
        auto const m = c.morphisms().size();
        std::vector<std::vector<std::size_t>> out(m, std::vector<std::size_t>(m, npos));
        for (std::size_t f = 0; f < m; ++f) {
          for (std::size_t g = 0; g < m; ++g) {
            if (c.morphisms()[f].target == c.morphisms()[g].source) {
              out[f][g] = c.compose(f, g);
            }
          }
        }
        return out;
      }

      bool assign_object(std::size_t o) {
        auto const n = obj_.size();
        if (o == n) {
          return match_morphisms();
        }
        for (std::size_t p = 0; p < n; ++p) {
          if (obj_used_[p] || sig_a_[o] != sig_b_[p]) {
            continue;
          }
          bool ok = true;
          for (std::size_t q = 0; q < o && ok; ++q) {
            ok = a_.hom(o, q).size() == b_.hom(p, obj_[q]).size()
                 && a_.hom(q, o).size() == b_.hom(obj_[q], p).size();
          }
          ok = ok && a_.hom(o, o).size() == b_.hom(p, p).size();
          if (!ok) {
            continue;
          }
          obj_[o]      = p;
          obj_used_[p] = true;
          if (assign_object(o + 1)) {
            return true;
          }
          obj_used_[p] = false;
          obj_[o]      = npos;
        }
        return false;
      }

      bool match_morphisms() {
        auto const m = a_.morphisms().size();
        mor_.assign(m, npos);
        mor_used_.assign(m, false);
        order_.clear();
        for (std::size_t o = 0; o < obj_.size(); ++o) {
          auto i = a_.identity(o), j = b_.identity(obj_[o]);
          mor_[i]      = j;
          mor_used_[j] = true;
        }
        for (std::size_t f = 0; f < m; ++f) {
          if (!a_.morphisms()[f].identity) {
            order_.push_back(f);
          }
        }
        // Generators before composites so constraints bite early.
        std::stable_sort(order_.begin(), order_.end(), [&](auto x, auto y) {
          return a_.morphisms()[x].path.size() < a_.morphisms()[y].path.size();
        });
        return assign_morphism(0);
      }

      bool consistent(std::size_t f) const {
        auto const m = mor_.size();
        for (std::size_t g = 0; g < m; ++g) {
          if (mor_[g] == npos) {
            continue;
          }
          for (auto [x, y] : {std::pair{f, g}, std::pair{g, f}}) {
            auto c = comp_a_[x][y];
            if (c != npos && mor_[c] != npos && comp_b_[mor_[x]][mor_[y]] != mor_[c]) {
              return false;
            }
          }
        }
        for (auto [x, y] : producers_[f]) {
          if (mor_[x] != npos && mor_[y] != npos && comp_b_[mor_[x]][mor_[y]] != mor_[f]) {
            return false;
          }
        }
        return true;
      }

      bool assign_morphism(std::size_t k) {
        if (k == order_.size()) {
          return true;
        }
        auto const  f  = order_[k];
        auto const& mf = a_.morphisms()[f];
        for (auto g : b_.hom(obj_[mf.source], obj_[mf.target])) {
          if (mor_used_[g]) {
            continue;
          }
          mor_[f]      = g;
          mor_used_[g] = true;
          if (consistent(f) && assign_morphism(k + 1)) {
            return true;
          }
          mor_used_[g] = false;
          mor_[f]      = npos;
        }
        return false;
      }

      PathCategory const&                   a_;
      PathCategory const&                   b_;
      std::vector<Signature>                sig_a_, sig_b_;
      std::vector<std::vector<std::size_t>> comp_a_, comp_b_;
      std::vector<std::vector<std::pair<std::size_t, std::size_t>>> producers_;
      std::vector<std::size_t>              obj_, mor_, order_;
      std::vector<bool>                     obj_used_, mor_used_;
    };
  }  // namespace

  bool cat_iso(PathCategory const& a, PathCategory const& b) {
    a.require_complete("cat_iso");
    b.require_complete("cat_iso");
    return IsoSearch(a, b).run();
  }

}  // namespace enriched
