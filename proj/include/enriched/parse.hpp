#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "enriched/term.hpp"
#include "enriched/theory.hpp"

namespace enriched {

  class ParseError : public Error {
   public:
    ParseError(std::string const& message, std::size_t line, std::size_t column);
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

   private:
    std::size_t line_;
    std::size_t column_;
  };

  // Theory files (UTF-8, `#` starts a comment):
  //
  //   theory NAME
  //     op NAME : NAT
  //     eq NAME : TERM = TERM
  //     rule NAME : TERM => TERM
  //
  //   TERM := IDENT | IDENT "(" TERM ("," TERM)* ")" | "(" TERM TERM ")"
  //
  // In a call the "(" must follow the identifier directly, so "(K (S I))"
  // is an application and "R(K)" a call.
  // Operations must be declared before they are used.  An identifier that is
  // not a declared nullary operation is a variable; variables are numbered
  // x0, x1, ... in order of first occurrence, lhs before rhs.  `(t u)` is
  // sugar for app(t,u) and needs a binary operation named app.
  //
  // Throws ParseError on malformed input and TheoryError when the parsed
  // presentation fails validate_theory.
  TheoryPresentation parse_theory(std::string_view source);

  /// Parse one term against `theory`; throws ParseError.
  Term parse_term(TheoryPresentation const& theory, std::string_view source);

  /// Inverse of parse_theory up to whitespace and comments.
  std::string print_theory(TheoryPresentation const& theory);

}  // namespace enriched
