#include "enriched/emit.hpp"

#include <algorithm>

#include <json.hpp>

#include "enriched/parse.hpp"

namespace enriched {

  using json = nlohmann::ordered_json;

  namespace {
    std::string quote(std::string_view s) {
      std::string out = "\"";
      for (char ch : s) {
        if (ch == '"' || ch == '\\') {
          out += '\\';
        }
        if (ch == '\n') {
          out += "\\n";
          continue;
        }
        out += ch;
      }
      return out + "\"";
    }

    std::string node(std::size_t id, std::string_view label, std::string_view extra = "") {
      return "  n" + std::to_string(id) + " [label=" + quote(label)
             + (extra.empty() ? "" : ", " + std::string(extra)) + "];\n";
    }

    std::string arrow(std::size_t s, std::size_t t, std::string_view label) {
      return "  n" + std::to_string(s) + " -> n" + std::to_string(t)
             + (label.empty() ? "" : " [label=" + quote(label) + "]") + ";\n";
    }

    std::string dump(json const& j) {
      return j.dump(2) + "\n";
    }

    std::string edge_dot(std::vector<std::string> const& vertices, std::vector<Edge> const& edges) {
      std::string out = "digraph G {\n";
      for (std::size_t v = 0; v < vertices.size(); ++v) {
        out += node(v, vertices[v]);
      }
      for (auto const& e : edges) {
        out += arrow(e.source, e.target, e.label);
      }
      return out + "}\n";
    }

    json edge_json(std::vector<std::string> const& vertices, std::vector<Edge> const& edges) {
      json j;
      j["vertices"] = json::array();
      for (std::size_t v = 0; v < vertices.size(); ++v) {
        j["vertices"].push_back({{"id", v}, {"name", vertices[v]}});
      }
      j["edges"] = json::array();
      for (auto const& e : edges) {
        j["edges"].push_back({{"src", e.source}, {"dst", e.target}, {"label", e.label}});
      }
      return j;
    }

    [[noreturn]] void schema(std::string const& msg) {
      throw ParseError("graph json: " + msg, 1, 1);
    }
  }  // namespace

  std::string to_dot(TheoryPresentation const& theory, RewriteGraph const& g) {
    std::string out = "digraph rewrites {\n";
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
      bool seed = std::find(g.seeds.begin(), g.seeds.end(), v) != g.seeds.end();
      out += node(v, to_string(g.vertices[v]), seed ? "shape=box" : "");
    }
    for (auto const& e : g.edges) {
      out += arrow(e.source, e.target, to_string(theory, e.label));
    }
    if (g.truncated) {
      out += "  truncated [shape=plaintext, label=\"truncated\"];\n";
    }
    return out + "}\n";
  }

  std::string to_dot(Graph const& g) {
    return edge_dot(g.vertices, g.edges);
  }

  std::string to_dot(ReflexiveGraph const& g) {
    return edge_dot(g.vertices, g.edges);
  }

  std::string to_dot(PathCategory const& c) {
    std::string out = "digraph category {\n";
    for (std::size_t o = 0; o < c.objects().size(); ++o) {
      out += node(o, c.objects()[o]);
    }
    for (auto const& g : c.generators()) {
      out += arrow(g.source, g.target, g.label);
    }
    for (std::size_t r = 0; r < c.relations().size(); ++r) {
      auto const& rel = c.relations()[r];
      std::string l, rr;
      for (auto g : rel.lhs) l += (l.empty() ? "" : ";") + c.generators()[g].label;
      for (auto g : rel.rhs) rr += (rr.empty() ? "" : ";") + c.generators()[g].label;
      if (l.empty()) l = "id";
      if (rr.empty()) rr = "id";
      out += "  // relation " + std::to_string(r) + ": " + l + " = " + rr + "\n";
    }
    return out + "}\n";
  }

  std::string to_dot(FinPoset const& p) {
    std::string out = "digraph poset {\n  rankdir=BT;\n";
    for (std::size_t e = 0; e < p.size(); ++e) {
      out += node(e, p.elements[e]);
    }
    for (auto [a, b] : p.hasse()) {
      out += arrow(a, b, "");
    }
    return out + "}\n";
  }

  std::string to_dot(FinPoset const& p, Partition const& parts) {
    std::string out = "digraph components {\n";
    for (std::size_t k = 0; k < parts.classes.size(); ++k) {
      out += "  subgraph cluster_" + std::to_string(k) + " {\n    label=" + quote("class " + std::to_string(k)) + ";\n";
      for (auto e : parts.classes[k]) {
        out += "  " + node(e, p.elements[e]);
      }
      out += "  }\n";
    }
    for (auto [a, b] : p.hasse()) {
      out += arrow(a, b, "");
    }
    return out + "}\n";
  }

  std::string to_json(TheoryPresentation const& theory, RewriteGraph const& g) {
    json j;
    j["vertices"] = json::array();
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
      j["vertices"].push_back({{"id", v}, {"term", to_string(g.vertices[v])}});
    }
    j["edges"] = json::array();
    for (auto const& e : g.edges) {
      std::string rule;
      for (auto const& r : e.label.redexes) {
        rule += (rule.empty() ? "" : "+") + theory.rules[r.rule].name;
      }
      json edge{{"src", e.source}, {"dst", e.target}, {"rule", rule},
                {"pos", e.label.redexes.front().position}};
      if (!e.label.is_single()) {
        edge["redexes"] = json::array();
        for (auto const& r : e.label.redexes) {
          edge["redexes"].push_back({{"rule", theory.rules[r.rule].name}, {"pos", r.position}});
        }
      }
      j["edges"].push_back(std::move(edge));
    }
    j["truncated"] = g.truncated;
    return dump(j);
  }

  RewriteGraph rewrite_graph_from_json(TheoryPresentation const& theory, std::string_view text) {
    json j;
    try {
      j = json::parse(text);
    } catch (json::exception const& e) {
      schema(e.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")
        || !j.contains("truncated") || !j["truncated"].is_boolean()) {
      schema("expected vertices, edges and truncated");
    }
    RewriteGraph g;
    g.truncated = j["truncated"].get<bool>();
    try {
      for (auto const& v : j["vertices"]) {
        if (v.at("id").get<std::size_t>() != g.vertices.size()) {
          schema("vertex ids must be 0, 1, ... in order");
        }
        g.vertices.push_back(parse_term(theory, v.at("term").get<std::string>()));
      }
      auto redex = [&](Term const& src, json const& r) {
        auto name = r.at("rule").get<std::string>();
        auto idx  = theory.rule_index(name);
        if (!idx) {
          schema("unknown rule " + name);
        }
        auto pos   = r.at("pos").get<Position>();
        auto theta = match_pattern(theory.rules[*idx].lhs, subterm_at(src, pos));
        if (!theta) {
          schema("rule " + name + " does not match at " + to_string(pos));
        }
        return Redex{*idx, pos, *theta};
      };
      for (auto const& e : j["edges"]) {
        RewriteEdge edge{e.at("src").get<std::size_t>(), e.at("dst").get<std::size_t>(), {}};
        if (edge.source >= g.vertices.size() || edge.target >= g.vertices.size()) {
          schema("edge endpoint out of range");
        }
        auto const& src = g.vertices[edge.source];
        if (e.contains("redexes")) {
          g.mode = EdgeMode::parallel;
          for (auto const& r : e["redexes"]) {
            edge.label.redexes.push_back(redex(src, r));
          }
        } else {
          edge.label.redexes.push_back(redex(src, e));
        }
        g.edges.push_back(std::move(edge));
      }
    } catch (json::exception const& e) {
      schema(e.what());
    } catch (InvalidPosition const& e) {
      schema(e.what());
    }
    return g;
  }

  std::string to_json(Graph const& g) {
    return dump(edge_json(g.vertices, g.edges));
  }

  std::string to_json(ReflexiveGraph const& g) {
    auto j     = edge_json(g.vertices, g.edges);
    j["reflexive"] = true;
    return dump(j);
  }

  std::string to_json(PathCategory const& c) {
    json j;
    j["objects"] = c.objects();
    j["generators"] = json::array();
    for (std::size_t g = 0; g < c.generators().size(); ++g) {
      auto const& gen = c.generators()[g];
      j["generators"].push_back(
          {{"id", g}, {"src", gen.source}, {"dst", gen.target}, {"label", gen.label}});
    }
    j["relations"] = json::array();
    for (auto const& r : c.relations()) {
      j["relations"].push_back({{"src", r.source}, {"dst", r.target}, {"lhs", r.lhs}, {"rhs", r.rhs}});
    }
    j["morphisms"] = json::array();
    for (std::size_t m = 0; m < c.morphisms().size(); ++m) {
      auto const& mor = c.morphisms()[m];
      j["morphisms"].push_back(
          {{"src", mor.source}, {"dst", mor.target}, {"path", mor.path}, {"name", c.describe(m)}});
    }
    j["complete"] = c.complete();
    return dump(j);
  }

  std::string to_json(FinPoset const& p) {
    json j;
    j["elements"] = p.elements;
    j["order"]    = json::array();
    for (auto [a, b] : p.hasse()) {
      j["order"].push_back({a, b});
    }
    return dump(j);
  }

  std::string to_json(Partition const& p, FinPoset const& elements) {
    json j;
    j["carrier"] = elements.elements;
    j["classes"] = p.classes;
    return dump(j);
  }

  std::string to_json(LemmaReport const& r) {
    json j;
    j["base"]   = to_string(r.base);
    j["checks"] = json::array();
    for (auto const& c : r.checks) {
      j["checks"].push_back({{"m", c.m}, {"n", c.n}, {"family", c.family},
                             {"expected", c.expected}, {"actual", c.actual}, {"passed", c.passed}});
    }
    j["failures"] = r.failures();
    return dump(j);
  }

  std::string to_json(MorphismReport const& r) {
    json j = json::array();
    for (auto const& c : r.checks) {
      j.push_back({{"item", c.item}, {"passed", c.passed}, {"detail", c.detail}});
    }
    return dump(j);
  }

}  // namespace enriched
