#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "enriched/category.hpp"

namespace enriched {

  /// Finite poset; leq[a][b] means a <= b.
  struct FinPoset {
    std::vector<std::string>       elements;
    std::vector<std::vector<bool>> leq;

    std::size_t size() const noexcept { return elements.size(); }
    bool        le(std::size_t a, std::size_t b) const { return leq.at(a).at(b); }

    /// Covering pairs (a, b): a < b with nothing strictly between.
    std::vector<std::pair<std::size_t, std::size_t>> hasse() const;

    /// Elements with nothing strictly below them.
    std::vector<std::size_t> minimal() const;
  };

  /// Reflexivity, antisymmetry and transitivity failures; empty when sound.
  std::vector<std::string> validate(FinPoset const& p);

  FinPoset discrete_poset(std::size_t n);
  FinPoset chain_poset(std::size_t n);

  /// Componentwise order on pairs, numbered a * |q| + b.
  FinPoset product_pos(FinPoset const& p, FinPoset const& q);

  /// Exhaustive search for an order isomorphism.
  bool poset_iso(FinPoset const& p, FinPoset const& q);

  // The reduction order of a category: c <= c' iff c' has a morphism to c,
  // so that normal forms sit at the bottom.  Objects that reach each other
  // collapse to one element.  Reachability is read off the generators, so
  // incomplete categories are handled exactly.
  FinPoset free_poset(PathCategory const& c);

  /// Element of free_poset(c) holding each object.
  std::vector<std::size_t> free_poset_classes(PathCategory const& c);

  /// Disjoint nonempty classes covering 0..carrier-1, each sorted.
  struct Partition {
    std::size_t                           carrier = 0;
    std::vector<std::vector<std::size_t>> classes;
  };

  std::vector<std::string> validate(Partition const& p);

  /// Connected components of the comparability graph.
  Partition components(FinPoset const& p);

}  // namespace enriched
