#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "enriched/graphs.hpp"
#include "enriched/sset.hpp"

namespace enriched {

  class IncompleteCategory : public Error {
   public:
    using Error::Error;
  };

  /// Generator ids in traversal order: [f, g] means f first, then g.
  using Path = std::vector<std::size_t>;

  struct Generator {
    std::size_t source = 0;
    std::size_t target = 0;
    std::string label;
  };

  /// Two parallel paths declared equal.  Either side may be empty.
  struct Relation {
    std::size_t source = 0;
    std::size_t target = 0;
    Path        lhs;
    Path        rhs;
  };

  struct Morphism {
    std::size_t source = 0;
    std::size_t target = 0;
    Path        path;  // shortlex-least representative
    bool        identity = false;
  };

  inline constexpr std::size_t default_path_fuel = 12;

  // A finite category presented by generators and relations.  The morphism
  // table holds the classes of all paths of length <= fuel under the
  // congruence generated by the relations.  complete() is true when no
  // longer path exists, in which case the table is the whole category.
  class PathCategory {
   public:
    PathCategory() = default;

    /// Throws Error on malformed relations, FuelExhausted on path blow-up.
    static PathCategory present(std::vector<std::string> objects,
                                std::vector<Generator>   generators,
                                std::vector<Relation>    relations,
                                std::size_t              fuel = default_path_fuel);

    std::vector<std::string> const& objects() const noexcept { return objects_; }
    std::vector<Generator> const&   generators() const noexcept { return generators_; }
    std::vector<Relation> const&    relations() const noexcept { return relations_; }
    std::vector<Morphism> const&    morphisms() const noexcept { return morphisms_; }
    std::size_t                     fuel() const noexcept { return fuel_; }
    bool                            complete() const noexcept { return complete_; }

    std::size_t identity(std::size_t object) const { return identities_.at(object); }

    /// Morphism ids in hom(a, b), ascending.
    std::vector<std::size_t> const& hom(std::size_t a, std::size_t b) const;

    /// Class of a path starting at `source`; nullopt beyond the table.
    std::optional<std::size_t> class_of(std::size_t source, Path const& p) const;

    /// `f` then `g`; throws IncompleteCategory when outside the table.
    std::size_t compose(std::size_t f, std::size_t g) const;

    std::size_t non_identity_count() const noexcept;

    /// Morphism label: the generator labels joined by ";", or "id(o)".
    std::string describe(std::size_t m) const;

    /// Throws IncompleteCategory unless complete().
    void require_complete(char const* what) const;

   private:
    std::vector<std::string>              objects_;
    std::vector<Generator>                generators_;
    std::vector<Relation>                 relations_;
    std::vector<Morphism>                 morphisms_;
    std::vector<std::size_t>              identities_;
    std::vector<std::vector<std::size_t>> homs_;
    std::map<std::pair<std::size_t, Path>, std::size_t> path_classes_;
    std::size_t                           fuel_     = default_path_fuel;
    bool                                  complete_ = true;
  };

  /// Edge paths, no relations.
  PathCategory free_category_gph(Graph const& g, std::size_t fuel = default_path_fuel);

  /// Edge paths with identity edges read as identities.
  PathCategory free_category_rgph(ReflexiveGraph const& r,
                                  std::size_t           fuel = default_path_fuel);

  // Realization: nondegenerate edges generate, degenerate edges are
  // identities, and every triangle t imposes d1(t) = d2(t) then d0(t).
  // Throws SimplicialIdentityViolation on malformed input.
  PathCategory realize(TruncSSet const& x, std::size_t fuel = default_path_fuel);

  // Presented by generators (g, b) and (a, h), lifted relations on each
  // side, and a commuting square for every pair of generators.  Both inputs
  // must be complete.
  PathCategory product_cat(PathCategory const& a, PathCategory const& b);

  PathCategory terminal_category();

  /// Exhaustive search for an isomorphism of categories; both complete.
  bool cat_iso(PathCategory const& a, PathCategory const& b);

}  // namespace enriched
