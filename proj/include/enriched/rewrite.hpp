#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "enriched/term.hpp"
#include "enriched/theory.hpp"

namespace enriched {

  class StaleRedex : public Error {
   public:
    using Error::Error;
  };

  /// A rule matching at a position, with the witnessing substitution.
  struct Redex {
    std::size_t  rule = 0;  // index into TheoryPresentation::rules
    Position     position;
    Substitution theta;

    friend bool operator==(Redex const&, Redex const&) = default;
  };

  /// "rule@[i,j]"
  std::string to_string(TheoryPresentation const& theory, Redex const& r);

  // An edge label: one redex, or a nonempty set of redexes at pairwise
  // disjoint positions contracted simultaneously.
  struct EdgeLabel {
    std::vector<Redex> redexes;

    bool is_single() const noexcept { return redexes.size() == 1; }
  };

  std::string to_string(TheoryPresentation const& theory, EdgeLabel const& l);

  struct RewriteEdge {
    std::size_t source = 0;
    std::size_t target = 0;
    EdgeLabel   label;
  };

  enum class EdgeMode { single, parallel };

  struct Bounds {
    std::size_t max_depth    = 64;
    std::size_t max_vertices = 10'000;
    std::size_t fuel         = default_canonicalize_fuel;
  };

  // A finite piece of the free-model hom-graph on closed terms: everything
  // reachable from the seeds within the bounds.  Vertex ids follow the term
  // order; identity edges are implicit.
  struct RewriteGraph {
    std::vector<Term>        vertices;
    std::vector<RewriteEdge> edges;
    std::vector<std::size_t> seeds;
    bool                     truncated = false;
    Bounds                   bounds;
    EdgeMode                 mode = EdgeMode::single;

    /// Vertex id of `t`, or vertices.size() if absent.
    std::size_t find(Term const& t) const;
  };

  enum class Strategy { full, leftmost_outermost, leftmost_innermost };

  /// Every (rule, position) match, ordered by position then rule order.
  std::vector<Redex> find_redexes(TheoryPresentation const& theory, Term const& t);

  /// Contract `r` and canonicalize; throws StaleRedex if `r` no longer matches.
  Term apply_redex(TheoryPresentation const& theory,
                   Term const&               t,
                   Redex const&              r,
                   std::size_t               fuel = default_canonicalize_fuel);

  /// Simultaneous contraction of redexes at pairwise disjoint positions.
  Term apply_label(TheoryPresentation const& theory,
                   Term const&               t,
                   EdgeLabel const&          label,
                   std::size_t               fuel = default_canonicalize_fuel);

  struct Successor {
    EdgeLabel label;
    Term      term;
  };

  // Single mode: one successor per redex.  Parallel mode: one per nonempty
  // set of pairwise disjoint redexes, ordered by set size and then by the
  // redex order.
  std::vector<Successor> successors(TheoryPresentation const& theory,
                                    Term const&               t,
                                    EdgeMode                  mode,
                                    std::size_t fuel = default_canonicalize_fuel);

  // Breadth-first closure of the seeds.  Frontier expansion is spread over
  // `threads` workers; the result does not depend on it.
  RewriteGraph generate_graph(TheoryPresentation const& theory,
                              std::vector<Term> const&  seeds,
                              Bounds const&             bounds,
                              EdgeMode                  mode    = EdgeMode::single,
                              unsigned                  threads = 1);

  /// Canonical closed terms with at most `max_nodes` nodes in term order.
  std::vector<Term> enumerate_closed_terms(TheoryPresentation const& theory,
                                           std::size_t               max_nodes);

  struct NormalForm {
    Term        term;
    std::size_t steps = 0;
  };

  struct Timeout {
    Term        last;
    std::size_t steps = 0;
  };

  using NormalizeResult = std::variant<NormalForm, Timeout>;

  struct Step {
    EdgeLabel label;
    Term      term;
  };

  // Leftmost-outermost and leftmost-innermost contract one redex per step.
  // Full contracts every outermost redex simultaneously.  `trace`, when
  // given, receives every step.
  NormalizeResult normalize(TheoryPresentation const& theory,
                            Term const&               t,
                            Strategy                  strategy,
                            std::size_t               fuel,
                            std::vector<Step>*        trace = nullptr);

  /// The redexes a strategy contracts next; empty iff `t` is a normal form.
  EdgeLabel select(TheoryPresentation const& theory,
                   Term const&               t,
                   Strategy                  strategy);

}  // namespace enriched
