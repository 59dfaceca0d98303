#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "enriched/category.hpp"
#include "enriched/poset.hpp"
#include "enriched/rewrite.hpp"
#include "enriched/sset.hpp"

namespace enriched {

  enum class Level { small, big, full, denote };

  // The change-of-base chain applied to the rewrite graph of one seed.
  // Stages past `level` are left empty.
  struct SemanticsChain {
    Level          level = Level::denote;
    RewriteGraph   graph;
    ReflexiveGraph small;
    TruncSSet      simplices;
    PathCategory   big;
    FinPoset       full;
    std::vector<std::size_t> full_class;  // vertex -> poset element
    Partition      denote;                // over poset elements

    // Per class of `denote`, the vertices with no outgoing rewrite, and
    // the unique one if there is exactly one.
    std::vector<std::vector<std::size_t>>   normal_forms;
    std::vector<std::optional<std::size_t>> representatives;
  };

  SemanticsChain run_semantics(TheoryPresentation const& theory,
                               Term const&               seed,
                               Bounds const&             bounds,
                               Level                     level,
                               unsigned                  threads   = 1,
                               std::size_t               path_fuel = default_path_fuel);

}  // namespace enriched
