#include "enriched/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "enriched/emit.hpp"
#include "enriched/parse.hpp"
#include "enriched/preservation.hpp"
#include "enriched/semantics.hpp"

namespace enriched {

  namespace {
    struct Usage : Error {
      using Error::Error;
    };
    struct BoundsHit : Error {
      using Error::Error;
    };
    struct FileParseError : Error {
      using Error::Error;
    };

    struct Options {
      unsigned    threads = 1;
      std::string file;
      std::string term;
      std::string strategy = "lo";
      std::size_t fuel     = 1000;
      bool        strict   = false;
      std::string mode     = "single";
      std::size_t depth    = Bounds{}.max_depth;
      std::size_t max_terms = Bounds{}.max_vertices;
      std::size_t path_fuel = default_path_fuel;
      std::string format;
      std::string level;
      std::string morphism;
      bool        validate = false;
      std::string base;
      std::size_t max  = 3;
      std::string demo;
    };

    TheoryPresentation load_theory(std::string const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw Usage("cannot read " + path);
      }
      std::ostringstream buf;
      buf << in.rdbuf();
      try {
        return parse_theory(buf.str());
      } catch (ParseError const& e) {
        throw FileParseError(path + ":" + e.what());
      }
    }

    Bounds bounds_of(Options const& o) {
      Bounds b;
      b.max_depth    = o.depth;
      b.max_vertices = o.max_terms;
      return b;
    }

    void strict_check(Options const& o, bool truncated, std::ostream& err) {
      if (truncated) {
        err << "warning: graph truncated at the exploration bounds\n";
        if (o.strict) {
          throw BoundsHit("bounds exhausted");
        }
      }
    }

    int cmd_check(Options const& o, std::ostream& out) {
      auto th = load_theory(o.file);
      out << "ok: " << th.operations.size() << " ops, " << th.rules.size() << " rules";
      if (!th.equations.empty()) {
        out << ", " << th.equations.size() << " equations";
      }
      out << "\n";
      return exit_ok;
    }

    int cmd_rewrite(Options const& o, std::ostream& out, std::ostream& err) {
      auto th = load_theory(o.file);
      auto t  = canonicalize(th, parse_term(th, o.term));
      auto strategy = o.strategy == "full" ? Strategy::full
                      : o.strategy == "li" ? Strategy::leftmost_innermost
                                           : Strategy::leftmost_outermost;
      std::vector<Step> trace;
      auto result = normalize(th, t, strategy, o.fuel, &trace);
      out << "0: " << to_string(t) << "\n";
      for (std::size_t i = 0; i < trace.size(); ++i) {
        out << i + 1 << ": " << to_string(th, trace[i].label) << " -> " << to_string(trace[i].term)
            << "\n";
      }
      if (auto const* nf = std::get_if<NormalForm>(&result)) {
        out << "normal form: " << to_string(nf->term) << " (" << nf->steps << " steps)\n";
        return exit_ok;
      }
      auto const& to = std::get<Timeout>(result);
      out << "timeout: no normal form within " << to.steps << " steps\n";
      if (o.strict) {
        err << "error: fuel exhausted\n";
        return exit_bounds;
      }
      return exit_ok;
    }

    int cmd_graph(Options const& o, std::ostream& out, std::ostream& err) {
      auto th   = load_theory(o.file);
      auto t    = canonicalize(th, parse_term(th, o.term));
      auto mode = o.mode == "parallel" ? EdgeMode::parallel : EdgeMode::single;
      auto g    = generate_graph(th, {t}, bounds_of(o), mode, o.threads);
      out << (o.format == "json" ? to_json(th, g) : to_dot(th, g));
      strict_check(o, g.truncated, err);
      return exit_ok;
    }

    std::string names(FinPoset const& p, std::vector<std::size_t> const& ids) {
      std::string s;
      for (auto i : ids) {
        s += (s.empty() ? "" : ", ") + p.elements[i];
      }
      return s;
    }

    int cmd_semantics(Options const& o, std::ostream& out, std::ostream& err) {
      auto th    = load_theory(o.file);
      auto t     = canonicalize(th, parse_term(th, o.term));
      auto level = o.level == "small" ? Level::small
                   : o.level == "big" ? Level::big
                   : o.level == "full" ? Level::full
                                       : Level::denote;
      auto chain = run_semantics(th, t, bounds_of(o), level, o.threads, o.path_fuel);
      strict_check(o, chain.graph.truncated, err);
      bool const dot  = o.format == "dot";
      bool const json = o.format == "json";

      switch (level) {
        case Level::small:
          if (dot || json) {
            out << (dot ? to_dot(chain.small) : to_json(chain.small));
            break;
          }
          out << "vertices: " << chain.small.vertices.size() << "\n"
              << "edges: " << chain.small.edges.size() << "\n"
              << "simplices: " << chain.simplices.size0() << " points, "
              << chain.simplices.size1() << " edges ("
              << chain.simplices.count_nondegenerate_edges() << " nondegenerate), "
              << chain.simplices.size2() << " triangles ("
              << chain.simplices.count_nondegenerate_triangles() << " nondegenerate)\n";
          break;
        case Level::big:
          if (dot || json) {
            out << (dot ? to_dot(chain.big) : to_json(chain.big));
            break;
          }
          out << "objects: " << chain.big.objects().size() << "\n"
              << "generators: " << chain.big.generators().size() << "\n"
              << "relations: " << chain.big.relations().size() << "\n"
              << "morphisms: " << chain.big.non_identity_count() << " non-identity\n"
              << "complete: " << (chain.big.complete() ? "yes" : "no") << "\n";
          break;
        case Level::full:
          if (dot || json) {
            out << (dot ? to_dot(chain.full) : to_json(chain.full));
            break;
          }
          out << "elements: " << chain.full.size() << "\n"
              << "minimal: " << names(chain.full, chain.full.minimal()) << "\n";
          for (auto [a, b] : chain.full.hasse()) {
            out << chain.full.elements[a] << " <= " << chain.full.elements[b] << "\n";
          }
          break;
        case Level::denote:
          if (dot) {
            out << to_dot(chain.full, chain.denote);
            break;
          }
          if (json) {
            out << to_json(chain.denote, chain.full);
            break;
          }
          out << "components: " << chain.denote.classes.size() << "\n";
          for (std::size_t k = 0; k < chain.denote.classes.size(); ++k) {
            out << "class " << k << ": " << chain.denote.classes[k].size() << " elements, ";
            if (auto r = chain.representatives[k]) {
              out << "representative " << to_string(chain.graph.vertices[*r]) << "\n";
            } else {
              out << chain.normal_forms[k].size() << " normal forms\n";
            }
          }
          break;
      }
      return exit_ok;
    }

    int cmd_translate(Options const& o, std::ostream& out) {
      auto m = o.morphism == "u_r" ? morphism_u_r() : morphism_f_r();
      if (o.validate) {
        auto obs    = morphism_u_r();
        auto report = validate_morphism(m, default_morphism_fuel, o.morphism == "f_r" ? &obs : nullptr);
        for (auto const& c : report.checks) {
          out << (c.passed ? "ok   " : "FAIL ") << c.item << (c.detail.empty() ? "" : ": ")
              << c.detail << "\n";
        }
        if (!report.passed()) {
          return exit_validation;
        }
      }
      if (!o.term.empty()) {
        out << to_string(apply_morphism(m, canonicalize(m.source, parse_term(m.source, o.term))))
            << "\n";
      }
      return exit_ok;
    }

    int cmd_laws(Options const& o, std::ostream& out) {
      auto base   = o.base == "pos" ? BaseTag::pos : o.base == "rgph" ? BaseTag::rgph : BaseTag::set;
      auto report = verify_lemma_nn(base, o.max, o.max, o.threads);
      if (o.format == "json") {
        out << to_json(report);
      } else {
        for (auto const& c : report.checks) {
          out << (c.passed ? "ok   " : "FAIL ") << c.family << " m=" << c.m << " n=" << c.n
              << ": expected " << c.expected << ", got " << c.actual << "\n";
        }
        out << to_string(base) << ": " << report.checks.size() - report.failures() << "/"
            << report.checks.size() << " checks passed\n";
      }
      return report.all_passed() ? exit_ok : exit_validation;
    }

    int cmd_demo(Options const& o, std::ostream& out) {
      if (o.demo == "diamond") {
        auto th = th_ski();
        auto t  = parse_term(th, "((K S)(((S K) I)(I K)))");
        Bounds b;
        b.max_depth = 6;
        auto g      = generate_graph(th, {t}, b, EdgeMode::single, o.threads);
        out << (o.format == "json" ? to_json(th, g) : to_dot(th, g));
        return exit_ok;
      }
      struct Row {
        BaseFunctor  f;
        FunctorInput a;
      };
      std::vector<Row> rows{{BaseFunctor::free_gph, g1()},
                            {BaseFunctor::free_rgph, r1()},
                            {BaseFunctor::realization, rgraph_to_sset(r1())}};
      out << std::left << std::setw(20) << "functor" << std::right << std::setw(10) << "F(a x b)"
          << std::setw(14) << "F(a) x F(b)" << "  preserved\n";
      for (auto const& row : rows) {
        auto r = check_product_preservation(row.f, row.a, row.a);
        out << std::left << std::setw(20) << to_string(row.f) << std::right << std::setw(10)
            << r.left_count << std::setw(14) << r.right_count << "  "
            << (r.preserved ? "yes" : "no") << "\n";
      }
      return exit_ok;
    }
  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    Options  o;
    CLI::App app{"Graph-enriched theories: rewriting and the change-of-base chain", "enriched"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--threads", o.threads, "Worker threads for graph exploration")
        ->check(CLI::Range(1u, 64u));

    auto* check = app.add_subcommand("check", "Parse and validate a theory file");
    check->add_option("file", o.file)->required();

    auto bounds_opts = [&](CLI::App* sub) {
      sub->add_option("--depth", o.depth, "Maximum exploration depth");
      sub->add_option("--max-terms", o.max_terms, "Maximum number of vertices");
      sub->add_flag("--strict", o.strict, "Exit 4 when a bound is hit");
    };

    auto* rewrite = app.add_subcommand("rewrite", "Normalize a term");
    rewrite->add_option("file", o.file)->required();
    rewrite->add_option("term", o.term)->required();
    rewrite->add_option("--strategy", o.strategy)->check(CLI::IsMember({"full", "lo", "li"}));
    rewrite->add_option("--fuel", o.fuel, "Maximum number of steps");
    rewrite->add_flag("--strict", o.strict, "Exit 4 when fuel runs out");

    auto* graph = app.add_subcommand("graph", "Generate the rewrite graph of a term");
    graph->add_option("file", o.file)->required();
    graph->add_option("term", o.term)->required();
    graph->add_option("--mode", o.mode)->check(CLI::IsMember({"single", "parallel"}));
    graph->add_option("--format", o.format)->check(CLI::IsMember({"dot", "json"}));
    bounds_opts(graph);

    auto* sem = app.add_subcommand("semantics", "Run the change-of-base chain");
    sem->add_option("file", o.file)->required();
    sem->add_option("term", o.term)->required();
    sem->add_option("--level", o.level)
        ->required()
        ->check(CLI::IsMember({"small", "big", "full", "denote"}));
    sem->add_option("--format", o.format)->check(CLI::IsMember({"text", "dot", "json"}));
    sem->add_option("--path-fuel", o.path_fuel, "Maximum path length in the category");
    bounds_opts(sem);

    auto* tr = app.add_subcommand("translate", "Apply a theory morphism to a term");
    tr->add_option("--morphism", o.morphism)->required()->check(CLI::IsMember({"f_r", "u_r"}));
    tr->add_option("term", o.term);
    tr->add_flag("--validate", o.validate, "Check the morphism first");

    auto* laws = app.add_subcommand("laws", "Check the arity laws in a base");
    laws->add_option("--base", o.base)->required()->check(CLI::IsMember({"set", "pos", "rgph"}));
    laws->add_option("--max", o.max)->check(CLI::Range(0, 4));
    laws->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

    auto* demo = app.add_subcommand("demo", "Built-in demonstrations");
    demo->add_option("which", o.demo)
        ->required()
        ->check(CLI::IsMember({"counterexample", "diamond"}));
    demo->add_option("--format", o.format)->check(CLI::IsMember({"dot", "json"}));

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::CallForHelp const& e) {
      out << app.help();
      return exit_ok;
    } catch (CLI::ParseError const& e) {
      err << "usage error: " << e.what() << "\n";
      return exit_usage;
    }

    try {
      if (check->parsed()) return cmd_check(o, out);
      if (rewrite->parsed()) return cmd_rewrite(o, out, err);
      if (graph->parsed()) return cmd_graph(o, out, err);
      if (sem->parsed()) return cmd_semantics(o, out, err);
      if (tr->parsed()) return cmd_translate(o, out);
      if (laws->parsed()) return cmd_laws(o, out);
      if (demo->parsed()) return cmd_demo(o, out);
    } catch (Usage const& e) {
      err << "error: " << e.what() << "\n";
      return exit_usage;
    } catch (ParseError const& e) {
      err << "parse error: " << e.what() << "\n";
      return exit_parse;
    } catch (FileParseError const& e) {
      err << "parse error: " << e.what() << "\n";
      return exit_parse;
    } catch (TheoryError const& e) {
      for (auto const& d : e.diagnostics()) {
        err << "invalid: " << d << "\n";
      }
      return exit_validation;
    } catch (BoundsHit const& e) {
      err << "error: " << e.what() << "\n";
      return exit_bounds;
    } catch (FuelExhausted const& e) {
      err << "error: " << e.what() << "\n";
      return exit_bounds;
    } catch (SizeOverflow const& e) {
      err << "error: " << e.what() << "\n";
      return exit_bounds;
    } catch (IncompleteCategory const& e) {
      err << "error: " << e.what() << "\n";
      return exit_bounds;
    } catch (Error const& e) {
      err << "error: " << e.what() << "\n";
      return exit_validation;
    }
    return exit_usage;
  }

}  // namespace enriched
