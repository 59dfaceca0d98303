#include "enriched/preservation.hpp"

namespace enriched {

  std::string to_string(BaseFunctor f) {
    switch (f) {
      case BaseFunctor::free_gph: return "F (Gph -> Cat)";
      case BaseFunctor::free_rgph: return "F' (RGph -> Cat)";
      case BaseFunctor::realization: return "FC (sSet -> Cat)";
      case BaseFunctor::free_poset: return "FP (Cat -> Pos)";
      case BaseFunctor::components: return "FS (Pos -> Set)";
    }
    return "?";
  }

  namespace {
    template <typename T>
    T const& expect(FunctorInput const& in, BaseFunctor f) {
      if (auto const* p = std::get_if<T>(&in)) {
        return *p;
      }
      throw Error("input outside the source category of " + to_string(f));
    }

    TruncSSet as_sset(FunctorInput const& in) {
      if (auto const* r = std::get_if<ReflexiveGraph>(&in)) {
        return rgraph_to_sset(*r);
      }
      return expect<TruncSSet>(in, BaseFunctor::realization);
    }

    PreservationReport compare(BaseFunctor f, PathCategory const& l, PathCategory const& r) {
      l.require_complete(to_string(f).c_str());
      r.require_complete(to_string(f).c_str());
      return {f, cat_iso(l, r), l.non_identity_count(), r.non_identity_count()};
    }
  }  // namespace

  PreservationReport check_product_preservation(BaseFunctor         functor,
                                                FunctorInput const& a,
                                                FunctorInput const& b,
                                                std::size_t         fuel) {
    switch (functor) {
      case BaseFunctor::free_gph: {
        auto const& x = expect<Graph>(a, functor);
        auto const& y = expect<Graph>(b, functor);
        return compare(functor, free_category_gph(product_gph(x, y), fuel),
                       product_cat(free_category_gph(x, fuel), free_category_gph(y, fuel)));
      }
      case BaseFunctor::free_rgph: {
        auto const& x = expect<ReflexiveGraph>(a, functor);
        auto const& y = expect<ReflexiveGraph>(b, functor);
        return compare(functor, free_category_rgph(product_rgph(x, y), fuel),
                       product_cat(free_category_rgph(x, fuel), free_category_rgph(y, fuel)));
      }
      case BaseFunctor::realization: {
        auto x = as_sset(a);
        auto y = as_sset(b);
        return compare(functor, realize(product_sset(x, y), fuel),
                       product_cat(realize(x, fuel), realize(y, fuel)));
      }
      case BaseFunctor::free_poset: {
        auto const& x = expect<PathCategory>(a, functor);
        auto const& y = expect<PathCategory>(b, functor);
        x.require_complete("FP");
        y.require_complete("FP");
        auto l = free_poset(product_cat(x, y));
        auto r = product_pos(free_poset(x), free_poset(y));
        return {functor, poset_iso(l, r), l.size(), r.size()};
      }
      case BaseFunctor::components: {
        auto const& x = expect<FinPoset>(a, functor);
        auto const& y = expect<FinPoset>(b, functor);
        auto l = components(product_pos(x, y)).classes.size();
        auto r = components(x).classes.size() * components(y).classes.size();
        return {functor, l == r, l, r};
      }
    }
    throw Error("unknown functor");
  }

}  // namespace enriched
