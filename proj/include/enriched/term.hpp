#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace enriched {

  /// Base class of every error raised by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class InvalidPosition : public Error {
   public:
    using Error::Error;
  };

  class UnboundVariable : public Error {
   public:
    using Error::Error;
  };

  class FuelExhausted : public Error {
   public:
    using Error::Error;
  };

  /// Path of child indices from the root of a term; the root is the empty path.
  using Position = std::vector<std::size_t>;

  std::string to_string(Position const& p);

  /// True iff `a` is a (not necessarily proper) prefix of `b`.
  bool is_prefix(Position const& a, Position const& b);

  /// Two positions are disjoint when neither lies above the other.
  inline bool disjoint(Position const& a, Position const& b) {
    return !is_prefix(a, b) && !is_prefix(b, a);
  }

  // A term is an immutable tree shared by reference.  Either a variable x_i
  // or an operation node whose children count is the operation's arity (the
  // arity itself is checked against a theory, not here).
  class Term {
   public:
    static Term var(std::size_t index);
    static Term op(std::string name, std::vector<Term> children = {});

    bool is_var() const noexcept { return node_->is_var; }
    std::size_t var_index() const noexcept { return node_->index; }
    std::string const& name() const noexcept { return node_->name; }
    std::vector<Term> const& children() const noexcept {
      return node_->children;
    }
    std::size_t arity() const noexcept { return node_->children.size(); }
    Term const& child(std::size_t i) const { return node_->children.at(i); }

    /// Number of nodes, variables included.
    std::size_t size() const noexcept { return node_->size; }
    std::size_t hash() const noexcept { return node_->hash; }

    /// Largest variable index plus one; 0 for closed terms.
    std::size_t var_bound() const noexcept { return node_->var_bound; }
    bool is_closed() const noexcept { return node_->var_bound == 0; }

    friend bool operator==(Term const& a, Term const& b) noexcept;
    friend std::strong_ordering operator<=>(Term const& a,
                                            Term const& b) noexcept;

   private:
    struct Node {
      bool                    is_var = false;
      std::size_t             index  = 0;
      std::string             name;
      std::vector<Term>       children;
      std::size_t             size      = 1;
      std::size_t             var_bound = 0;
      std::size_t             hash      = 0;
    };
    explicit Term(std::shared_ptr<Node const> n) : node_(std::move(n)) {}
    bool same_node(Term const& o) const noexcept { return node_ == o.node_; }

    std::shared_ptr<Node const> node_;
  };

  struct TermHash {
    std::size_t operator()(Term const& t) const noexcept { return t.hash(); }
  };

  /// Finite map from variable index to term.
  using Substitution = std::map<std::size_t, Term>;

  /// Subterm at `p`; throws InvalidPosition.
  Term const& subterm_at(Term const& t, Position const& p);

  /// `t` with the subterm at `p` replaced by `u`; throws InvalidPosition.
  Term replace_at(Term const& t, Position const& p, Term const& u);

  /// All positions of `t` in preorder, which is lexicographic order.
  std::vector<Position> positions(Term const& t);

  /// Distinct variable indices occurring in `t`, ascending.
  std::vector<std::size_t> variables(Term const& t);

  /// Occurrence count per variable index.
  std::map<std::size_t, std::size_t> variable_occurrences(Term const& t);

  bool is_linear(Term const& t);

  /// Unique θ with substitute(pattern, θ) == subject, if any.  Non-linear
  /// patterns are accepted; repeated variables must bind equal subterms.
  std::optional<Substitution> match_pattern(Term const& pattern,
                                            Term const& subject);

  /// Replace every variable by its image; throws UnboundVariable.
  Term substitute(Term const& pattern, Substitution const& theta);

  // Concrete syntax.  Binary `app` prints as juxtaposition "(t u)", with the
  // separating space dropped between ")" and "(" as in "((S K)(I K))".
  // Variables print as x0, x1, ...
  std::string to_string(Term const& t);

  std::string to_string(Substitution const& theta);

}  // namespace enriched
