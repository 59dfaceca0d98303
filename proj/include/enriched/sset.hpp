#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "enriched/graphs.hpp"

namespace enriched {

  class SimplicialIdentityViolation : public Error {
   public:
    using Error::Error;
  };

  // A simplicial set truncated at dimension 2.  Simplices are indices into
  // each level; the face and degeneracy maps are stored as index tables.
  // For an edge x, face1[1][x] is its source and face1[0][x] its target.
  // For a triangle with vertices (v0,v1,v2), face i omits v_i.
  struct TruncSSet {
    std::vector<std::string> points;       // X0, by name
    std::vector<std::string> edge_names;   // X1, by name
    std::size_t              triangles = 0;  // |X2|

    std::array<std::vector<std::size_t>, 2> face1;  // X1 -> X0
    std::array<std::vector<std::size_t>, 3> face2;  // X2 -> X1
    std::vector<std::size_t>                degen0;  // s0 : X0 -> X1
    std::array<std::vector<std::size_t>, 2> degen1;  // s0, s1 : X1 -> X2

    std::size_t size0() const noexcept { return points.size(); }
    std::size_t size1() const noexcept { return edge_names.size(); }
    std::size_t size2() const noexcept { return triangles; }

    /// Not in the image of s0.
    bool nondegenerate_edge(std::size_t x) const;
    /// Not in the image of s0 or s1.
    bool nondegenerate_triangle(std::size_t t) const;

    std::size_t count_nondegenerate_edges() const;
    std::size_t count_nondegenerate_triangles() const;
  };

  /// Every failed simplicial identity, checked exhaustively; empty if sound.
  std::vector<std::string> identity_violations(TruncSSet const& x);

  // The nerve-style embedding: X1 holds s0(v) for every vertex followed by the
  // non-identity edges, and X2 holds only degenerate triangles with
  // s1(s0 v) identified with s0(s0 v).
  TruncSSet rgraph_to_sset(ReflexiveGraph const& r);

  /// Levelwise cartesian product; simplex (i,j) has index i * |b_k| + j.
  TruncSSet product_sset(TruncSSet const& a, TruncSSet const& b);

  TruncSSet terminal_sset();

}  // namespace enriched
