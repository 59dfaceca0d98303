#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "enriched/rewrite.hpp"
#include "enriched/theory.hpp"

namespace enriched {

  /// SKI combinators: S, K, I, app; rules σ, κ, ι.
  TheoryPresentation th_ski();

  // SKI with a reduction marker R.  R(x y) = (R(x) y) and R(R(x)) = R(x)
  // push markers to the head; σ_r, κ_r, ι_r fire only under a marker.
  TheoryPresentation th_ski_r();

  /// Ω = (((S I) I)((S I) I)), which reduces to itself forever.
  Term omega();

  /// The canonical form of R(t) in th_ski_r.
  Term mark_root(Term const& t);

  inline constexpr char const* derivable = "derivable";

  // Operations go to terms over x0..x(arity-1); rules go to a rule name of
  // the target, or to `derivable` when any rewrite sequence will do.
  struct TheoryMorphism {
    std::string                        name;
    TheoryPresentation                 source;
    TheoryPresentation                 target;
    std::map<std::string, Term>        op_map;
    std::map<std::string, std::string> rule_map;
  };

  TheoryMorphism morphism_f_r();
  TheoryMorphism morphism_u_r();
  TheoryMorphism identity_morphism(TheoryPresentation const& theory);

  /// Replace every operation node by its image, then canonicalize in the
  /// target.  Throws Error for an operation missing from op_map.
  Term apply_morphism(TheoryMorphism const& m, Term const& t);

  struct MorphismCheck {
    std::string item;     // "op app", "eq RR", "rule σ"
    bool        passed = false;
    std::string detail;
  };

  struct MorphismReport {
    std::vector<MorphismCheck> checks;

    bool passed() const;
  };

  inline constexpr std::size_t default_morphism_fuel = 8;

  // Checks op_map arities, equations up to target canonical form, and that
  // each rule's translated lhs reaches its translated rhs within `fuel`
  // steps using the mapped rule at least once.  With `observation`, the
  // endpoint only has to agree with the translated rhs after applying it,
  // which lets f_R be judged through u_R.
  MorphismReport validate_morphism(TheoryMorphism const& m,
                                   std::size_t           fuel        = default_morphism_fuel,
                                   TheoryMorphism const* observation = nullptr);

}  // namespace enriched
