#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "enriched/term.hpp"

namespace enriched {

  struct Operation {
    std::string name;
    std::size_t arity = 0;
  };

  /// Structural equation, always used left to right when canonicalizing.
  struct StructuralEquation {
    std::string name;
    Term        lhs;
    Term        rhs;
  };

  struct RewriteRule {
    std::string name;
    Term        lhs;
    Term        rhs;
  };

  // A presentation of a graph-enriched theory with one generating sort.
  // Plain data: construct freely, then run validate_theory.  Everything the
  // library hands out (parse_theory, the built-in calculi) is validated.
  struct TheoryPresentation {
    std::string                     name;
    std::vector<Operation>          operations;
    std::vector<StructuralEquation> equations;
    std::vector<RewriteRule>        rules;

    Operation const*          find_operation(std::string_view op) const;
    RewriteRule const*        find_rule(std::string_view rule) const;
    std::optional<std::size_t> rule_index(std::string_view rule) const;
  };

  /// Raised when a presentation fails validation; carries every diagnostic.
  class TheoryError : public Error {
   public:
    explicit TheoryError(std::vector<std::string> diagnostics);
    std::vector<std::string> const& diagnostics() const noexcept {
      return diagnostics_;
    }

   private:
    std::vector<std::string> diagnostics_;
  };

  /// One message per violated invariant; empty iff the presentation is sound.
  std::vector<std::string> validate_theory(TheoryPresentation const& theory);

  /// Diagnostics for a single term (undeclared operations, arity mismatches).
  std::vector<std::string> validate_term(TheoryPresentation const& theory,
                                         Term const&               t);

  inline constexpr std::size_t default_canonicalize_fuel = 100'000;

  // Normal form under the oriented structural equations, innermost first.
  // Each equation application costs one unit of fuel; running out throws
  // FuelExhausted rather than looping.
  Term canonicalize(TheoryPresentation const& theory,
                    Term const&               t,
                    std::size_t               fuel = default_canonicalize_fuel);

  bool is_canonical(TheoryPresentation const& theory, Term const& t);

}  // namespace enriched
