#include "enriched/semantics.hpp"

namespace enriched {

  SemanticsChain run_semantics(TheoryPresentation const& theory,
                               Term const&               seed,
                               Bounds const&             bounds,
                               Level                     level,
                               unsigned                  threads,
                               std::size_t               path_fuel) {
    SemanticsChain out;
    out.level     = level;
    out.graph     = generate_graph(theory, {seed}, bounds, EdgeMode::single, threads);
    out.small     = to_reflexive_graph(theory, out.graph);
    out.simplices = rgraph_to_sset(out.small);
    if (level == Level::small) {
      return out;
    }
    out.big = realize(out.simplices, path_fuel);
    if (level == Level::big) {
      return out;
    }
    out.full       = free_poset(out.big);
    out.full_class = free_poset_classes(out.big);
    if (level == Level::full) {
      return out;
    }
    out.denote = components(out.full);

    std::vector<std::size_t> class_of(out.full.size());
    for (std::size_t k = 0; k < out.denote.classes.size(); ++k) {
      for (auto e : out.denote.classes[k]) {
        class_of[e] = k;
      }
    }
    std::vector<bool> has_out(out.graph.vertices.size(), false);
    for (auto const& e : out.graph.edges) {
      has_out[e.source] = true;
    }
    out.normal_forms.assign(out.denote.classes.size(), {});
    for (std::size_t v = 0; v < out.graph.vertices.size(); ++v) {
      if (!has_out[v] && find_redexes(theory, out.graph.vertices[v]).empty()) {
        out.normal_forms[class_of[out.full_class[v]]].push_back(v);
      }
    }
    for (auto const& nf : out.normal_forms) {
      out.representatives.push_back(nf.size() == 1 ? std::optional(nf.front()) : std::nullopt);
    }
    return out;
  }

}  // namespace enriched
