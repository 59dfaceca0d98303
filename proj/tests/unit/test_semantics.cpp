#include <doctest.h>

#include <deque>
#include <random>
#include <set>

#include "enriched/calculi.hpp"
#include "enriched/parse.hpp"
#include "enriched/preservation.hpp"
#include "enriched/semantics.hpp"

using namespace enriched;

namespace {
  // Random acyclic reflexive graph: edges only go from lower to higher ids,
  // parallel edges allowed.
  ReflexiveGraph random_dag(std::mt19937& rng, std::size_t max_v, std::size_t max_e) {
    ReflexiveGraph g;
    auto           n = std::uniform_int_distribution<std::size_t>(1, max_v)(rng);
    for (std::size_t v = 0; v < n; ++v) g.vertices.push_back("v" + std::to_string(v));
    if (n < 2) return g;
    auto                                        m = std::uniform_int_distribution<std::size_t>(0, max_e)(rng);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t k = 0; k < m; ++k) {
      auto a = pick(rng), b = pick(rng);
      if (a == b) continue;
      g.edges.push_back({std::min(a, b), std::max(a, b), "e" + std::to_string(k)});
    }
    return g;
  }

  std::size_t hom_size(PathCategory const& c, std::size_t a, std::size_t b) {
    return c.hom(a, b).size();
  }

  // Connected components of the symmetrized order by breadth-first search.
  std::vector<std::set<std::size_t>> bfs_components(FinPoset const& p) {
    std::vector<std::set<std::size_t>> out;
    std::vector<bool>                  seen(p.size(), false);
    for (std::size_t s = 0; s < p.size(); ++s) {
      if (seen[s]) continue;
      std::set<std::size_t>   cls;
      std::deque<std::size_t> q{s};
      seen[s] = true;
      while (!q.empty()) {
        auto v = q.front();
        q.pop_front();
        cls.insert(v);
        for (std::size_t w = 0; w < p.size(); ++w) {
          if (!seen[w] && (p.leq[v][w] || p.leq[w][v])) {
            seen[w] = true;
            q.push_back(w);
          }
        }
      }
      out.push_back(cls);
    }
    return out;
  }

  // Every category law that can be checked on the finite table.
  void category_laws(PathCategory const& c) {
    auto const& ms = c.morphisms();
    for (std::size_t f = 0; f < ms.size(); ++f) {
      CHECK(c.compose(c.identity(ms[f].source), f) == f);
      CHECK(c.compose(f, c.identity(ms[f].target)) == f);
    }
    for (std::size_t f = 0; f < ms.size(); ++f)
      for (std::size_t g = 0; g < ms.size(); ++g) {
        if (ms[f].target != ms[g].source) continue;
        for (std::size_t h = 0; h < ms.size(); ++h) {
          if (ms[g].target != ms[h].source) continue;
          CHECK(c.compose(c.compose(f, g), h) == c.compose(f, c.compose(g, h)));
        }
      }
    for (auto const& r : c.relations()) {
      CHECK(c.class_of(r.source, r.lhs) == c.class_of(r.source, r.rhs));
    }
  }
}  // namespace

TEST_CASE("built-in counterexample objects") {
  auto p = product_gph(g1(), g1());
  CHECK(p.vertices.size() == 4);
  REQUIRE(p.edges.size() == 1);
  CHECK(p.edges[0].label == "(e,e)");
  CHECK(p.edges[0].source == 0);
  CHECK(p.edges[0].target == 3);

  auto r = product_rgph(r1(), r1());
  CHECK(r.vertices.size() == 4);
  CHECK(r.edges.size() == 5);
  CHECK(validate(r).empty());
  CHECK(validate(p).empty());
}

TEST_CASE("rewrite graph to reflexive graph") {
  auto th = th_ski();
  auto g  = generate_graph(th, {parse_term(th, "(((S K)(I K)) S)")}, Bounds{});
  auto r  = to_reflexive_graph(th, g);
  CHECK(r.vertices.size() == 5);
  CHECK(r.edges.size() == 6);
  CHECK(r.edges[0].label.find('@') != std::string::npos);
  CHECK(to_reflexive_graph(th, RewriteGraph{}).vertices.empty());
  auto s = to_reflexive_graph(th, generate_graph(th, {parse_term(th, "S")}, Bounds{}));
  CHECK(s.vertices.size() == 1);
  CHECK(s.edges.empty());
}

TEST_CASE("embedding reflexive graphs as simplicial sets") {
  auto x = rgraph_to_sset(r1());
  CHECK(x.size0() == 2);
  CHECK(x.size1() == 3);
  CHECK(x.size2() == 4);
  CHECK(identity_violations(x).empty());
  CHECK(x.count_nondegenerate_edges() == 1);
  CHECK(x.count_nondegenerate_triangles() == 0);

  auto one = rgraph_to_sset(discrete_rgraph(1));
  CHECK((one.size0() == 1 && one.size1() == 1 && one.size2() == 1));
  auto none = rgraph_to_sset(ReflexiveGraph{});
  CHECK((none.size0() == 0 && none.size1() == 0 && none.size2() == 0));

  std::mt19937 rng(1);
  for (int i = 0; i < 100; ++i) {
    auto g = random_dag(rng, 6, 8);
    auto s = rgraph_to_sset(g);
    CHECK(identity_violations(s).empty());
    CHECK(s.size1() == g.vertices.size() + g.edges.size());
    CHECK(s.size2() == g.vertices.size() + 2 * g.edges.size());
    CHECK(s.count_nondegenerate_triangles() == 0);
  }
}

TEST_CASE("levelwise product of simplicial sets") {
  auto x  = rgraph_to_sset(r1());
  auto xx = product_sset(x, x);
  CHECK(identity_violations(xx).empty());
  CHECK(xx.size0() == 4);
  CHECK(xx.size1() == 9);
  CHECK(xx.size2() == 16);
  CHECK(xx.count_nondegenerate_edges() == 5);

  // A pair of triangles is degenerate iff both come from one pair of
  // edges through the same degeneracy.
  std::size_t nondeg = 0;
  for (std::size_t a = 0; a < x.size2(); ++a)
    for (std::size_t b = 0; b < x.size2(); ++b) {
      bool degenerate = false;
      for (int i = 0; i < 2; ++i)
        for (std::size_t e = 0; e < x.size1(); ++e)
          for (std::size_t f = 0; f < x.size1(); ++f)
            degenerate = degenerate || (x.degen1[i][e] == a && x.degen1[i][f] == b);
      nondeg += degenerate ? 0 : 1;
    }
  CHECK(xx.count_nondegenerate_triangles() == nondeg);
  CHECK(nondeg == 2);

  auto unit = product_sset(x, terminal_sset());
  CHECK(unit.size0() == x.size0());
  CHECK(unit.size1() == x.size1());
  CHECK(unit.size2() == x.size2());
  CHECK(cat_iso(realize(unit), realize(x)));
  auto empty = product_sset(rgraph_to_sset(ReflexiveGraph{}), x);
  CHECK(empty.size0() + empty.size1() + empty.size2() == 0);

  auto broken = x;
  broken.face1[0][broken.degen0[0]] = 1;
  CHECK_FALSE(identity_violations(broken).empty());
  CHECK_THROWS_AS(realize(broken), SimplicialIdentityViolation);
}

TEST_CASE("free categories on the counterexample graphs") {
  auto l = free_category_gph(product_gph(g1(), g1()));
  auto r = product_cat(free_category_gph(g1()), free_category_gph(g1()));
  CHECK(l.non_identity_count() == 1);
  CHECK(r.non_identity_count() == 5);
  CHECK_FALSE(cat_iso(l, r));
  CHECK(free_category_gph(Graph{}).objects().empty());

  auto lr = free_category_rgph(product_rgph(r1(), r1()));
  auto rr = product_cat(free_category_rgph(r1()), free_category_rgph(r1()));
  CHECK(lr.non_identity_count() == 7);
  CHECK(rr.non_identity_count() == 5);
  // (0,0) -> (1,1): the diagonal and two composites, pairwise distinct.
  CHECK(hom_size(lr, 0, 3) == 3);
  CHECK(hom_size(rr, 0, 3) == 1);
  CHECK_FALSE(cat_iso(lr, rr));

  CHECK(cat_iso(free_category_rgph(discrete_rgraph(1)), terminal_category()));
  category_laws(lr);
  category_laws(rr);
}

TEST_CASE("realization of the product commutes both triangles") {
  auto c = realize(product_sset(rgraph_to_sset(r1()), rgraph_to_sset(r1())));
  CHECK(c.objects().size() == 4);
  CHECK(c.non_identity_count() == 5);
  CHECK(hom_size(c, 0, 3) == 1);
  CHECK(c.complete());
  auto p = product_cat(realize(rgraph_to_sset(r1())), realize(rgraph_to_sset(r1())));
  CHECK(cat_iso(c, p));
  CHECK(cat_iso(realize(terminal_sset()), terminal_category()));
  category_laws(c);
  category_laws(p);
}

TEST_CASE("product preservation reports") {
  auto f = check_product_preservation(BaseFunctor::free_gph, g1(), g1());
  CHECK_FALSE(f.preserved);
  CHECK(f.left_count == 1);
  CHECK(f.right_count == 5);

  auto fp = check_product_preservation(BaseFunctor::free_rgph, r1(), r1());
  CHECK_FALSE(fp.preserved);
  CHECK(fp.left_count == 7);
  CHECK(fp.right_count == 5);

  auto fc = check_product_preservation(BaseFunctor::realization, rgraph_to_sset(r1()),
                                       rgraph_to_sset(r1()));
  CHECK(fc.preserved);
  CHECK(fc.left_count == 5);
  CHECK(fc.right_count == 5);
  CHECK(check_product_preservation(BaseFunctor::realization, r1(), r1()).preserved);

  auto th = th_ski();
  auto g  = generate_graph(th, {parse_term(th, "(((S K)(I K)) S)")}, Bounds{});
  auto c  = realize(rgraph_to_sset(to_reflexive_graph(th, g)));
  CHECK(check_product_preservation(BaseFunctor::free_poset, c, terminal_category()).preserved);
  CHECK(check_product_preservation(BaseFunctor::free_poset, c, c).preserved);
  CHECK(check_product_preservation(BaseFunctor::components, chain_poset(3), discrete_poset(2))
            .preserved);
  CHECK_THROWS_AS(check_product_preservation(BaseFunctor::free_gph, r1(), r1()), Error);
}

TEST_CASE("property: realization agrees with the free category on reflexive graphs") {
  std::mt19937 rng(2);
  for (int i = 0; i < 150; ++i) {
    auto g = random_dag(rng, 6, 7);
    auto a = realize(rgraph_to_sset(g));
    auto b = free_category_rgph(g);
    CHECK(a.non_identity_count() == b.non_identity_count());
    CHECK(cat_iso(a, b));
  }
}

TEST_CASE("property: realization preserves products of small reflexive graphs") {
  std::mt19937 rng(4);
  for (int i = 0; i < 60; ++i) {
    auto a = random_dag(rng, 4, 4);
    auto b = random_dag(rng, 4, 4);
    auto r = check_product_preservation(BaseFunctor::realization, a, b);
    CHECK(r.preserved);
    CHECK(r.left_count == r.right_count);
  }
  // Exhaustive over graphs on at most three vertices with at most two
  // forward edges.
  std::vector<ReflexiveGraph> small;
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = s + 1; t < n; ++t) slots.emplace_back(s, t);
    ReflexiveGraph base = discrete_rgraph(n);
    small.push_back(base);
    for (std::size_t i = 0; i < slots.size(); ++i) {
      auto one = base;
      one.edges.push_back({slots[i].first, slots[i].second, "a"});
      small.push_back(one);
      for (std::size_t j = i; j < slots.size(); ++j) {
        auto two = one;
        two.edges.push_back({slots[j].first, slots[j].second, "b"});
        small.push_back(two);
      }
    }
  }
  for (auto const& a : small)
    for (auto const& b : small) {
      CHECK(check_product_preservation(BaseFunctor::realization, a, b).preserved);
    }
}

TEST_CASE("free poset") {
  auto th = th_ski();
  auto g  = generate_graph(th, {parse_term(th, "(((S K)(I K)) S)")}, Bounds{});
  auto c  = realize(rgraph_to_sset(to_reflexive_graph(th, g)));
  auto p  = free_poset(c);
  CHECK(validate(p).empty());
  CHECK(p.size() == 5);
  REQUIRE(p.minimal().size() == 1);
  auto bottom = p.minimal()[0];
  CHECK(p.elements[bottom] == "S");
  for (std::size_t e = 0; e < p.size(); ++e) {
    CHECK(p.le(bottom, e));
  }

  CHECK(free_poset(terminal_category()).size() == 1);

  auto loop = PathCategory::present({"a", "b"}, {{0, 1, "f"}, {1, 0, "g"}}, {}, 4);
  CHECK_FALSE(loop.complete());
  auto q = free_poset(loop);
  CHECK(q.size() == 1);
  CHECK(q.elements[0] == "a ~ b");
  CHECK(validate(q).empty());
}

TEST_CASE("components match a breadth-first oracle") {
  CHECK(components(discrete_poset(3)).classes.size() == 3);
  CHECK(components(chain_poset(3)).classes.size() == 1);
  std::mt19937 rng(6);
  for (int i = 0; i < 200; ++i) {
    auto g     = random_dag(rng, 7, 6);
    auto p     = free_poset(free_category_rgph(g));
    CHECK(validate(p).empty());
    auto parts = components(p);
    CHECK(validate(parts).empty());
    std::set<std::set<std::size_t>> got;
    for (auto const& cls : parts.classes) got.emplace(cls.begin(), cls.end());
    auto want = bfs_components(p);
    CHECK(got == std::set<std::set<std::size_t>>(want.begin(), want.end()));
  }
}

TEST_CASE("FP and FS on identity data and inclusions") {
  for (std::size_t n = 0; n <= 4; ++n) {
    auto p = free_poset(realize(rgraph_to_sset(discrete_rgraph(n))));
    CHECK(poset_iso(p, discrete_poset(n)));
    CHECK(components(p).classes.size() == n);
  }
  // Adding edges to an acyclic graph only adds comparabilities and merges
  // components.
  std::mt19937 rng(8);
  for (int i = 0; i < 100; ++i) {
    auto big   = random_dag(rng, 6, 6);
    auto small = big;
    small.edges.resize(small.edges.size() / 2);
    auto ps = free_poset(free_category_rgph(small));
    auto pb = free_poset(free_category_rgph(big));
    REQUIRE(ps.size() == pb.size());
    for (std::size_t a = 0; a < ps.size(); ++a)
      for (std::size_t b = 0; b < ps.size(); ++b)
        if (ps.le(a, b)) CHECK(pb.le(a, b));
    CHECK(components(pb).classes.size() <= components(ps).classes.size());
  }
}

TEST_CASE("semantics chain collapses the five-vertex example") {
  auto th    = th_ski();
  auto chain = run_semantics(th, parse_term(th, "(((S K)(I K)) S)"), Bounds{}, Level::denote);
  CHECK(chain.small.edges.size() == 6);
  CHECK(chain.big.complete());
  CHECK(chain.full.size() == 5);
  REQUIRE(chain.denote.classes.size() == 1);
  REQUIRE(chain.representatives[0].has_value());
  CHECK(to_string(chain.graph.vertices[*chain.representatives[0]]) == "S");

  auto early = run_semantics(th, parse_term(th, "(((S K)(I K)) S)"), Bounds{}, Level::small);
  CHECK(early.big.objects().empty());
}
