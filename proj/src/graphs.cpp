#include "enriched/graphs.hpp"

namespace enriched {

  namespace {
    template <typename G>
    std::vector<std::string> check_endpoints(G const& g) {
      std::vector<std::string> out;
      for (std::size_t i = 0; i < g.edges.size(); ++i) {
        auto const& e = g.edges[i];
        if (e.source >= g.vertices.size() || e.target >= g.vertices.size()) {
          out.push_back("edge " + std::to_string(i) + " (" + e.label
                        + "): endpoint out of range");
        }
      }
      return out;
    }

    std::string pair_name(std::string const& a, std::string const& b) {
      return "(" + a + "," + b + ")";
    }

    template <typename G>
    std::vector<std::string> pair_vertices(G const& a, G const& b) {
      std::vector<std::string> out;
      for (auto const& u : a.vertices) {
        for (auto const& v : b.vertices) {
          out.push_back(pair_name(u, v));
        }
      }
      return out;
    }
  }  // namespace

  std::vector<std::string> validate(Graph const& g) {
    return check_endpoints(g);
  }

  std::vector<std::string> validate(ReflexiveGraph const& g) {
    return check_endpoints(g);
  }

  ReflexiveGraph to_reflexive_graph(TheoryPresentation const& theory,
                                    RewriteGraph const&       g) {
    ReflexiveGraph out;
    for (auto const& t : g.vertices) {
      out.vertices.push_back(to_string(t));
    }
    for (auto const& e : g.edges) {
      out.edges.push_back({e.source, e.target, to_string(theory, e.label)});
    }
    return out;
  }

  Graph product_gph(Graph const& a, Graph const& b) {
    Graph out;
    out.vertices  = pair_vertices(a, b);
    auto const nb = b.vertices.size();
    for (auto const& ea : a.edges) {
      for (auto const& eb : b.edges) {
        out.edges.push_back({ea.source * nb + eb.source,
                             ea.target * nb + eb.target,
                             pair_name(ea.label, eb.label)});
      }
    }
    return out;
  }

  ReflexiveGraph product_rgph(ReflexiveGraph const& a, ReflexiveGraph const& b) {
    // Each side's edges with identities listed first.
    auto with_ids = [](ReflexiveGraph const& g) {
      std::vector<Edge> out;
      for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        out.push_back({v, v, "i(" + g.vertices[v] + ")"});
      }
      out.insert(out.end(), g.edges.begin(), g.edges.end());
      return out;
    };
    ReflexiveGraph out;
    out.vertices  = pair_vertices(a, b);
    auto const na = a.vertices.size();
    auto const nb = b.vertices.size();
    auto const ea = with_ids(a);
    auto const eb = with_ids(b);
    for (std::size_t i = 0; i < ea.size(); ++i) {
      for (std::size_t j = 0; j < eb.size(); ++j) {
        if (i < na && j < nb) {
          continue;
        }
        out.edges.push_back({ea[i].source * nb + eb[j].source,
                             ea[i].target * nb + eb[j].target,
                             pair_name(ea[i].label, eb[j].label)});
      }
    }
    return out;
  }

  Graph g1() {
    return Graph{{"0", "1"}, {{0, 1, "e"}}};
  }

  ReflexiveGraph r1() {
    return ReflexiveGraph{{"0", "1"}, {{0, 1, "e"}}};
  }

  ReflexiveGraph discrete_rgraph(std::size_t n) {
    ReflexiveGraph out;
    for (std::size_t i = 0; i < n; ++i) {
      out.vertices.push_back(std::to_string(i));
    }
    return out;
  }

}  // namespace enriched
