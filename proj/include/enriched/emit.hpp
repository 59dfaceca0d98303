#pragma once

#include <string>
#include <string_view>

#include "enriched/arities.hpp"
#include "enriched/calculi.hpp"
#include "enriched/category.hpp"
#include "enriched/poset.hpp"
#include "enriched/rewrite.hpp"

namespace enriched {

  // DOT and JSON writers.  Output is a pure function of the input, so equal
  // inputs give byte-identical text.

  std::string to_dot(TheoryPresentation const& theory, RewriteGraph const& g);
  std::string to_dot(Graph const& g);
  std::string to_dot(ReflexiveGraph const& g);
  std::string to_dot(PathCategory const& c);
  std::string to_dot(FinPoset const& p);                          // Hasse diagram
  std::string to_dot(FinPoset const& p, Partition const& parts);  // clusters

  // {"vertices":[{"id":N,"term":S}],
  //  "edges":[{"src":N,"dst":N,"rule":S,"pos":[N...]}],
  //  "truncated":B}
  // An edge contracting several redexes at once carries the joined rule
  // names ("σ+κ"), the first position, and the full list under "redexes".
  std::string to_json(TheoryPresentation const& theory, RewriteGraph const& g);

  /// Inverse of to_json; throws ParseError on schema violations.
  RewriteGraph rewrite_graph_from_json(TheoryPresentation const& theory,
                                       std::string_view          text);

  std::string to_json(Graph const& g);
  std::string to_json(ReflexiveGraph const& g);
  std::string to_json(PathCategory const& c);
  std::string to_json(FinPoset const& p);
  std::string to_json(Partition const& p, FinPoset const& elements);
  std::string to_json(LemmaReport const& r);
  std::string to_json(MorphismReport const& r);

}  // namespace enriched
