#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "enriched/graphs.hpp"
#include "enriched/poset.hpp"

namespace enriched {

  class SizeOverflow : public Error {
   public:
    using Error::Error;
  };

  /// The concrete enriching bases available at desk scale.
  enum class BaseTag { set, pos, rgph };

  std::string to_string(BaseTag tag);

  // An object of a base: a finite set (just its cardinality), a finite
  // poset, or a finite reflexive graph.
  struct BaseObject {
    BaseTag                                             tag = BaseTag::set;
    std::variant<std::size_t, FinPoset, ReflexiveGraph> carrier;

    /// Points: elements or vertices.
    std::size_t size() const;
    /// Non-identity edges (rgph) or strict comparabilities (pos); 0 for sets.
    std::size_t structure() const;
  };

  inline constexpr std::size_t max_base_size = 10'000;

  /// The n-fold coproduct of the terminal object.
  BaseObject nat_object(BaseTag base, std::size_t n);

  /// Throws Error on tag mismatch.
  BaseObject base_coproduct(BaseObject const& a, BaseObject const& b);
  BaseObject base_product(BaseObject const& a, BaseObject const& b);

  // a^b.  Pos: monotone maps with the pointwise order.  RGph: vertices are
  // homomorphisms b -> a and edges are homomorphisms (E x b) -> a, E the
  // walking edge; those factoring through the projection are identities.
  // Throws SizeOverflow past max_base_size.
  BaseObject base_exponential(BaseObject const& a, BaseObject const& b);

  /// |hom(a, b)|; throws SizeOverflow when enumeration is out of reach.
  std::size_t base_hom_count(BaseObject const& a, BaseObject const& b);

  /// Exhaustive isomorphism test.
  bool base_iso(BaseObject const& a, BaseObject const& b);

  struct LemmaCheck {
    std::size_t m = 0;
    std::size_t n = 0;
    std::string family;    // "coproduct", "product", "exponential", "hom-count"
    std::string expected;
    std::string actual;
    bool        passed = false;
  };

  struct LemmaReport {
    BaseTag                 base = BaseTag::set;
    std::vector<LemmaCheck> checks;

    bool        all_passed() const;
    std::size_t failures() const;
  };

  // For every m <= max_m and n <= max_n: m+n, m x n and m^n computed in the
  // base are isomorphic to the corresponding nat_object, and |hom(m, n)| is
  // n^m.  Pairs may be checked concurrently; the report order is fixed.
  LemmaReport verify_lemma_nn(BaseTag     base,
                              std::size_t max_m,
                              std::size_t max_n,
                              unsigned    threads = 1);

}  // namespace enriched
