#include "enriched/arities.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>

namespace enriched {

  std::string to_string(BaseTag tag) {
    switch (tag) {
      case BaseTag::set: return "set";
      case BaseTag::pos: return "pos";
      case BaseTag::rgph: return "rgph";
    }
    return "?";
  }

  std::size_t BaseObject::size() const {
    return std::visit(
        [](auto const& c) -> std::size_t {
          using T = std::decay_t<decltype(c)>;
          if constexpr (std::is_same_v<T, std::size_t>) {
            return c;
          } else if constexpr (std::is_same_v<T, FinPoset>) {
            return c.size();
          } else {
            return c.vertices.size();
          }
        },
        carrier);
  }

  std::size_t BaseObject::structure() const {
    if (auto const* p = std::get_if<FinPoset>(&carrier)) {
      std::size_t strict = 0;
      for (std::size_t a = 0; a < p->size(); ++a)
        for (std::size_t b = 0; b < p->size(); ++b)
          strict += (a != b && p->leq[a][b]) ? 1 : 0;
      return strict;
    }
    if (auto const* g = std::get_if<ReflexiveGraph>(&carrier)) {
      return g->edges.size();
    }
    return 0;
  }

  namespace {
    constexpr std::size_t max_enumeration = 2'000'000;

    // Saturating power.
    std::size_t ipow(std::size_t base, std::size_t exp) {
      std::size_t out = 1;
      for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && out > max_enumeration * 1000 / base) {
          return static_cast<std::size_t>(-1);
        }
        out *= base;
      }
      return out;
    }

    void same_base(BaseObject const& a, BaseObject const& b) {
      if (a.tag != b.tag) {
        throw Error("base mismatch: " + to_string(a.tag) + " vs " + to_string(b.tag));
      }
    }

    // Calls f on every map {0..m-1} -> {0..n-1}.
    void for_each_map(std::size_t                                   m,
                      std::size_t                                   n,
                      std::function<void(std::vector<std::size_t> const&)> const& f) {
      if (ipow(n, m) > max_enumeration) {
        throw SizeOverflow("too many maps: " + std::to_string(n) + "^" + std::to_string(m));
      }
      std::vector<std::size_t> map(m, 0);
      if (m == 0) {
        f(map);
        return;
      }
      if (n == 0) {
        return;
      }
      while (true) {
        f(map);
        std::size_t i = 0;
        while (i < m && ++map[i] == n) {
          map[i++] = 0;
        }
        if (i == m) {
          return;
        }
      }
    }

    bool monotone(FinPoset const& src, FinPoset const& dst, std::vector<std::size_t> const& f) {
      for (std::size_t x = 0; x < src.size(); ++x)
        for (std::size_t y = 0; y < src.size(); ++y)
          if (src.leq[x][y] && !dst.leq[f[x]][f[y]]) return false;
      return true;
    }

    // Edge ids in the extended numbering: v < |V| is the identity at v, and
    // |V| + k is non-identity edge k.
    struct RHom {
      std::vector<std::size_t> vertex;
      std::vector<std::size_t> edge;

      auto key() const { return std::make_pair(vertex, edge); }
    };

    std::vector<std::vector<std::size_t>> edge_choices(ReflexiveGraph const&           src,
                                                       ReflexiveGraph const&           dst,
                                                       std::vector<std::size_t> const& vmap) {
      std::vector<std::vector<std::size_t>> out;
      for (auto const& e : src.edges) {
        auto                     s = vmap[e.source], t = vmap[e.target];
        std::vector<std::size_t> opts;
        if (s == t) {
          opts.push_back(s);
        }
        for (std::size_t k = 0; k < dst.edges.size(); ++k) {
          if (dst.edges[k].source == s && dst.edges[k].target == t) {
            opts.push_back(dst.vertices.size() + k);
          }
        }
        out.push_back(std::move(opts));
      }
      return out;
    }

    std::size_t count_rgph_homs(ReflexiveGraph const& src, ReflexiveGraph const& dst) {
      std::size_t total = 0;
      for_each_map(src.vertices.size(), dst.vertices.size(), [&](auto const& vmap) {
        std::size_t ways = 1;
        for (auto const& opts : edge_choices(src, dst, vmap)) {
          ways *= opts.size();
        }
        total += ways;
      });
      return total;
    }

    std::vector<RHom> rgph_homs(ReflexiveGraph const& src, ReflexiveGraph const& dst) {
      std::vector<RHom> out;
      for_each_map(src.vertices.size(), dst.vertices.size(), [&](auto const& vmap) {
        auto        choices = edge_choices(src, dst, vmap);
        std::vector<std::size_t> pick(choices.size(), 0);
        for (auto const& c : choices) {
          if (c.empty()) return;
        }
        while (true) {
          RHom h{vmap, {}};
          for (std::size_t k = 0; k < choices.size(); ++k) {
            h.edge.push_back(choices[k][pick[k]]);
          }
          out.push_back(std::move(h));
          if (out.size() > max_base_size * 10) {
            throw SizeOverflow("too many graph homomorphisms");
          }
          std::size_t k = 0;
          while (k < pick.size() && ++pick[k] == choices[k].size()) {
            pick[k++] = 0;
          }
          if (k == pick.size()) {
            return;
          }
        }
      });
      return out;
    }

    ReflexiveGraph coproduct_rgph(ReflexiveGraph const& a, ReflexiveGraph const& b) {
      ReflexiveGraph out = a;
      auto const     off = a.vertices.size();
      for (auto const& v : b.vertices) {
        out.vertices.push_back(v + "'");
      }
      for (auto const& e : b.edges) {
        out.edges.push_back({e.source + off, e.target + off, e.label + "'"});
      }
      return out;
    }

    FinPoset coproduct_pos(FinPoset const& a, FinPoset const& b) {
      FinPoset   out;
      auto const na = a.size(), n = a.size() + b.size();
      out.leq.assign(n, std::vector<bool>(n, false));
      for (std::size_t i = 0; i < na; ++i) {
        out.elements.push_back(a.elements[i]);
        for (std::size_t j = 0; j < na; ++j) out.leq[i][j] = a.leq[i][j];
      }
      for (std::size_t i = 0; i < b.size(); ++i) {
        out.elements.push_back(b.elements[i] + "'");
        for (std::size_t j = 0; j < b.size(); ++j) out.leq[na + i][na + j] = b.leq[i][j];
      }
      return out;
    }

    FinPoset exponential_pos(FinPoset const& a, FinPoset const& b) {
      if (ipow(a.size(), b.size()) > max_base_size) {
        throw SizeOverflow("exponential too large");
      }
      std::vector<std::vector<std::size_t>> maps;
      for_each_map(b.size(), a.size(), [&](auto const& f) {
        if (monotone(b, a, f)) maps.push_back(f);
      });
      FinPoset out;
      out.leq.assign(maps.size(), std::vector<bool>(maps.size(), false));
      for (std::size_t i = 0; i < maps.size(); ++i) {
        out.elements.push_back("f" + std::to_string(i));
        for (std::size_t j = 0; j < maps.size(); ++j) {
          bool le = true;
          for (std::size_t x = 0; x < b.size() && le; ++x) le = a.leq[maps[i][x]][maps[j][x]];
          out.leq[i][j] = le;
        }
      }
      return out;
    }

    ReflexiveGraph exponential_rgph(ReflexiveGraph const& a, ReflexiveGraph const& b) {
      if (ipow(a.vertices.size(), 2 * b.vertices.size()) > max_enumeration) {
        throw SizeOverflow("exponential too large");
      }
      auto const nb = b.vertices.size(), kb = b.edges.size();
      ReflexiveGraph out;
      auto           homs = rgph_homs(b, a);
      std::map<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>, std::size_t> index;
      for (std::size_t i = 0; i < homs.size(); ++i) {
        out.vertices.push_back("h" + std::to_string(i));
        index.emplace(homs[i].key(), i);
      }

      // E x b: vertex (s, v) is s * nb + v.  Edges, in order: (i0, x), (i1, x),
      // (e, i(v)), (e, x).
      ReflexiveGraph exb;
      for (std::size_t s = 0; s < 2; ++s)
        for (std::size_t v = 0; v < nb; ++v) exb.vertices.push_back(std::to_string(s * nb + v));
      for (std::size_t s = 0; s < 2; ++s)
        for (auto const& x : b.edges) exb.edges.push_back({s * nb + x.source, s * nb + x.target, ""});
      for (std::size_t v = 0; v < nb; ++v) exb.edges.push_back({v, nb + v, ""});
      for (auto const& x : b.edges) exb.edges.push_back({x.source, nb + x.target, ""});

      auto const na = a.vertices.size();
      for (auto const& h : rgph_homs(exb, a)) {
        RHom h0, h1;
        for (std::size_t v = 0; v < nb; ++v) {
          h0.vertex.push_back(h.vertex[v]);
          h1.vertex.push_back(h.vertex[nb + v]);
        }
        for (std::size_t x = 0; x < kb; ++x) {
          h0.edge.push_back(h.edge[x]);
          h1.edge.push_back(h.edge[kb + x]);
        }
        bool factors = h0.vertex == h1.vertex && h0.edge == h1.edge;
        for (std::size_t v = 0; v < nb && factors; ++v) {
          factors = h.edge[2 * kb + v] == h0.vertex[v];
        }
        for (std::size_t x = 0; x < kb && factors; ++x) {
          factors = h.edge[2 * kb + nb + x] == h0.edge[x];
        }
        if (factors) {
          continue;
        }
        out.edges.push_back({index.at(h0.key()), index.at(h1.key()),
                             "k" + std::to_string(out.edges.size())});
      }
      (void) na;
      return out;
    }

    bool rgraph_extend(std::vector<std::vector<std::size_t>> const& ca,
                       std::vector<std::vector<std::size_t>> const& cb,
                       std::vector<std::size_t>&                    image,
                       std::vector<bool>&                           used,
                       std::size_t                                  v) {
      auto const n = ca.size();
      if (v == n) {
        return true;
      }
      for (std::size_t w = 0; w < n; ++w) {
        if (used[w] || ca[v][v] != cb[w][w]) continue;
        bool ok = true;
        for (std::size_t u = 0; u < v && ok; ++u) {
          ok = ca[v][u] == cb[w][image[u]] && ca[u][v] == cb[image[u]][w];
        }
        if (!ok) continue;
        image[v] = w;
        used[w]  = true;
        if (rgraph_extend(ca, cb, image, used, v + 1)) return true;
        used[w] = false;
      }
      return false;
    }

    bool rgraph_iso(ReflexiveGraph const& a, ReflexiveGraph const& b) {
      auto const n = a.vertices.size();
      if (n != b.vertices.size() || a.edges.size() != b.edges.size()) {
        return false;
      }
      std::vector<std::vector<std::size_t>> ca(n, std::vector<std::size_t>(n, 0)), cb = ca;
      for (auto const& e : a.edges) ++ca[e.source][e.target];
      for (auto const& e : b.edges) ++cb[e.source][e.target];
      std::vector<std::size_t> image(n);
      std::vector<bool>        used(n, false);
      return rgraph_extend(ca, cb, image, used, 0);
    }

    std::string describe(BaseObject const& o) {
      switch (o.tag) {
        case BaseTag::set: return std::to_string(o.size()) + " elements";
        case BaseTag::pos:
          return std::to_string(o.size()) + " elements, " + std::to_string(o.structure())
                 + " strict";
        case BaseTag::rgph:
          return std::to_string(o.size()) + " vertices, " + std::to_string(o.structure())
                 + " edges";
      }
      return "?";
    }
  }  // namespace

  BaseObject nat_object(BaseTag base, std::size_t n) {
    switch (base) {
      case BaseTag::set: return {base, n};
      case BaseTag::pos: return {base, discrete_poset(n)};
      case BaseTag::rgph: return {base, discrete_rgraph(n)};
    }
    throw Error("unknown base");
  }

  BaseObject base_coproduct(BaseObject const& a, BaseObject const& b) {
    same_base(a, b);
    switch (a.tag) {
      case BaseTag::set: return {a.tag, a.size() + b.size()};
      case BaseTag::pos:
        return {a.tag, coproduct_pos(std::get<FinPoset>(a.carrier), std::get<FinPoset>(b.carrier))};
      case BaseTag::rgph:
        return {a.tag, coproduct_rgph(std::get<ReflexiveGraph>(a.carrier),
                                      std::get<ReflexiveGraph>(b.carrier))};
    }
    throw Error("unknown base");
  }

  BaseObject base_product(BaseObject const& a, BaseObject const& b) {
    same_base(a, b);
    switch (a.tag) {
      case BaseTag::set: return {a.tag, a.size() * b.size()};
      case BaseTag::pos:
        return {a.tag, product_pos(std::get<FinPoset>(a.carrier), std::get<FinPoset>(b.carrier))};
      case BaseTag::rgph:
        return {a.tag, product_rgph(std::get<ReflexiveGraph>(a.carrier),
                                    std::get<ReflexiveGraph>(b.carrier))};
    }
    throw Error("unknown base");
  }

  BaseObject base_exponential(BaseObject const& a, BaseObject const& b) {
    same_base(a, b);
    switch (a.tag) {
      case BaseTag::set: {
        auto n = ipow(a.size(), b.size());
        if (n > max_base_size) {
          throw SizeOverflow("exponential too large");
        }
        return {a.tag, n};
      }
      case BaseTag::pos:
        return {a.tag,
                exponential_pos(std::get<FinPoset>(a.carrier), std::get<FinPoset>(b.carrier))};
      case BaseTag::rgph:
        return {a.tag, exponential_rgph(std::get<ReflexiveGraph>(a.carrier),
                                        std::get<ReflexiveGraph>(b.carrier))};
    }
    throw Error("unknown base");
  }

  std::size_t base_hom_count(BaseObject const& a, BaseObject const& b) {
    same_base(a, b);
    switch (a.tag) {
      case BaseTag::set: {
        auto n = ipow(b.size(), a.size());
        if (n == static_cast<std::size_t>(-1)) {
          throw SizeOverflow("hom-set too large");
        }
        return n;
      }
      case BaseTag::pos: {
        auto const& p = std::get<FinPoset>(a.carrier);
        auto const& q = std::get<FinPoset>(b.carrier);
        std::size_t n = 0;
        for_each_map(p.size(), q.size(), [&](auto const& f) { n += monotone(p, q, f) ? 1 : 0; });
        return n;
      }
      case BaseTag::rgph:
        return count_rgph_homs(std::get<ReflexiveGraph>(a.carrier),
                               std::get<ReflexiveGraph>(b.carrier));
    }
    throw Error("unknown base");
  }

  bool base_iso(BaseObject const& a, BaseObject const& b) {
    same_base(a, b);
    switch (a.tag) {
      case BaseTag::set: return a.size() == b.size();
      case BaseTag::pos:
        return poset_iso(std::get<FinPoset>(a.carrier), std::get<FinPoset>(b.carrier));
      case BaseTag::rgph:
        return rgraph_iso(std::get<ReflexiveGraph>(a.carrier), std::get<ReflexiveGraph>(b.carrier));
    }
    return false;
  }

  bool LemmaReport::all_passed() const {
    return failures() == 0;
  }

  std::size_t LemmaReport::failures() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](auto const& c) { return !c.passed; }));
  }

  namespace {
    std::vector<LemmaCheck> check_pair(BaseTag base, std::size_t m, std::size_t n) {
      std::vector<LemmaCheck> out;
      auto const              vm = nat_object(base, m);
      auto const              vn = nat_object(base, n);

      auto iso_check = [&](std::string family, BaseObject const& got, std::size_t want) {
        auto const expected = nat_object(base, want);
        out.push_back({m, n, std::move(family), describe(expected), describe(got),
                       base_iso(got, expected)});
      };
      iso_check("coproduct", base_coproduct(vm, vn), m + n);
      iso_check("product", base_product(vm, vn), m * n);
      iso_check("exponential", base_exponential(vm, vn), ipow(m, n));

      auto const homs = base_hom_count(vm, vn);
      auto const want = ipow(n, m);
      out.push_back({m, n, "hom-count", std::to_string(want), std::to_string(homs), homs == want});
      return out;
    }
  }  // namespace

  LemmaReport verify_lemma_nn(BaseTag     base,
                              std::size_t max_m,
                              std::size_t max_n,
                              unsigned    threads) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t m = 0; m <= max_m; ++m)
      for (std::size_t n = 0; n <= max_n; ++n) pairs.emplace_back(m, n);

    std::vector<std::vector<LemmaCheck>> results(pairs.size());
    if (threads <= 1) {
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        results[i] = check_pair(base, pairs[i].first, pairs[i].second);
      }
    } else {
      std::vector<std::future<std::vector<LemmaCheck>>> jobs;
      for (auto [m, n] : pairs) {
        jobs.push_back(std::async(std::launch::async, check_pair, base, m, n));
      }
      for (std::size_t i = 0; i < jobs.size(); ++i) {
        results[i] = jobs[i].get();
      }
    }
    LemmaReport report{base, {}};
    for (auto& r : results) {
      report.checks.insert(report.checks.end(), r.begin(), r.end());
    }
    return report;
  }

}  // namespace enriched
