#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "enriched/rewrite.hpp"

namespace enriched {

  struct Edge {
    std::size_t source = 0;
    std::size_t target = 0;
    std::string label;

    friend bool operator==(Edge const&, Edge const&) = default;
  };

  /// Directed multigraph.
  struct Graph {
    std::vector<std::string> vertices;
    std::vector<Edge>        edges;
  };

  // Reflexive graph: `edges` holds only the non-identity edges, every vertex
  // carries an implicit identity edge.
  struct ReflexiveGraph {
    std::vector<std::string> vertices;
    std::vector<Edge>        edges;
  };

  /// Endpoint checks; empty when well formed.
  std::vector<std::string> validate(Graph const& g);
  std::vector<std::string> validate(ReflexiveGraph const& g);

  /// Rewrite edges labelled "rule@position"; vertices named by their terms.
  ReflexiveGraph to_reflexive_graph(TheoryPresentation const& theory,
                                    RewriteGraph const&       g);

  /// Vertices (u,v) numbered u * |b| + v; edges are pairs of edges.
  Graph product_gph(Graph const& a, Graph const& b);

  // Vertices as in product_gph; edges are pairs of edges where either side
  // may be an identity, except both.  Identities print as "i(v)".
  ReflexiveGraph product_rgph(ReflexiveGraph const& a, ReflexiveGraph const& b);

  /// Two vertices, one edge e : 0 -> 1.
  Graph g1();

  /// Two vertices, one non-identity edge e : 0 -> 1.
  ReflexiveGraph r1();

  /// Vertex names "0", "1", ... and no edges.
  ReflexiveGraph discrete_rgraph(std::size_t n);

}  // namespace enriched
