#pragma once

#include <cstddef>
#include <string>
#include <variant>

#include "enriched/category.hpp"
#include "enriched/poset.hpp"

namespace enriched {

  // The base-change functors whose product preservation can be checked:
  //   free_gph     F  : Gph  -> Cat
  //   free_rgph    F' : RGph -> Cat
  //   realization  FC : sSet -> Cat
  //   free_poset   FP : Cat  -> Pos
  //   components   FS : Pos  -> Set
  enum class BaseFunctor { free_gph, free_rgph, realization, free_poset, components };

  std::string to_string(BaseFunctor f);

  // Sizes count non-identity morphisms for Cat-valued functors, elements
  // for FP and classes for FS.
  struct PreservationReport {
    BaseFunctor functor;
    bool        preserved   = false;
    std::size_t left_count  = 0;  // F(a x b)
    std::size_t right_count = 0;  // F(a) x F(b)
  };

  // Inputs to check_product_preservation.  A reflexive graph handed to the
  // realization check is embedded into sSet first.
  using FunctorInput
      = std::variant<Graph, ReflexiveGraph, TruncSSet, PathCategory, FinPoset>;

  /// Throws Error when an input lies outside the functor's source category.
  PreservationReport check_product_preservation(BaseFunctor         functor,
                                                FunctorInput const& a,
                                                FunctorInput const& b,
                                                std::size_t fuel = default_path_fuel);

}  // namespace enriched
