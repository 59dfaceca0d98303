#include "enriched/rewrite.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <set>
#include <unordered_map>

namespace enriched {

  std::string to_string(TheoryPresentation const& theory, Redex const& r) {
    return theory.rules.at(r.rule).name + "@" + to_string(r.position);
  }

  std::string to_string(TheoryPresentation const& theory, EdgeLabel const& l) {
    std::string out;
    for (auto const& r : l.redexes) {
      out += (out.empty() ? "" : "+") + to_string(theory, r);
    }
    return out;
  }

  std::size_t RewriteGraph::find(Term const& t) const {
    auto it = std::find(vertices.begin(), vertices.end(), t);
    return static_cast<std::size_t>(it - vertices.begin());
  }

  std::vector<Redex> find_redexes(TheoryPresentation const& theory, Term const& t) {
    std::vector<Redex> out;
    for (auto const& p : positions(t)) {
      auto const& sub = subterm_at(t, p);
      if (sub.is_var()) {
        continue;
      }
      for (std::size_t i = 0; i < theory.rules.size(); ++i) {
        if (auto theta = match_pattern(theory.rules[i].lhs, sub)) {
          out.push_back(Redex{i, p, std::move(*theta)});
        }
      }
    }
    return out;
  }

  namespace {
    Term contract(TheoryPresentation const& theory, Term const& t, Redex const& r) {
      if (r.rule >= theory.rules.size()) {
        throw StaleRedex("redex names an unknown rule");
      }
      auto const& rule = theory.rules[r.rule];
      Term const* sub  = nullptr;
      try {
        sub = &subterm_at(t, r.position);
      } catch (InvalidPosition const&) {
        throw StaleRedex("stale redex " + to_string(theory, r) + ": no such position");
      }
      auto theta = match_pattern(rule.lhs, *sub);
      if (!theta || *theta != r.theta) {
        throw StaleRedex("stale redex " + to_string(theory, r) + " in "
                         + to_string(t));
      }
      return substitute(rule.rhs, *theta);
    }

    // Nonempty sets of pairwise disjoint redexes, as index lists.
    void disjoint_sets(std::vector<Redex> const&              redexes,
                       std::size_t                            from,
                       std::vector<std::size_t>&              chosen,
                       std::vector<std::vector<std::size_t>>& out) {
      for (std::size_t i = from; i < redexes.size(); ++i) {
        bool ok = std::all_of(chosen.begin(), chosen.end(), [&](std::size_t j) {
          return disjoint(redexes[j].position, redexes[i].position);
        });
        if (!ok) {
          continue;
        }
        chosen.push_back(i);
        out.push_back(chosen);
        disjoint_sets(redexes, i + 1, chosen, out);
        chosen.pop_back();
      }
    }
  }  // namespace

  Term apply_redex(TheoryPresentation const& theory,
                   Term const&               t,
                   Redex const&              r,
                   std::size_t               fuel) {
    return canonicalize(theory, replace_at(t, r.position, contract(theory, t, r)), fuel);
  }

  Term apply_label(TheoryPresentation const& theory,
                   Term const&               t,
                   EdgeLabel const&          label,
                   std::size_t               fuel) {
    if (label.redexes.empty()) {
      throw StaleRedex("empty edge label");
    }
    for (std::size_t i = 0; i < label.redexes.size(); ++i) {
      for (std::size_t j = i + 1; j < label.redexes.size(); ++j) {
        if (!disjoint(label.redexes[i].position, label.redexes[j].position)) {
          throw StaleRedex("overlapping redexes in " + to_string(theory, label));
        }
      }
    }
    // Contract against the original term: disjoint positions stay valid.
    Term out = t;
    for (auto const& r : label.redexes) {
      out = replace_at(out, r.position, contract(theory, t, r));
    }
    return canonicalize(theory, out, fuel);
  }

  std::vector<Successor> successors(TheoryPresentation const& theory,
                                    Term const&               t,
                                    EdgeMode                  mode,
                                    std::size_t               fuel) {
    auto                   redexes = find_redexes(theory, t);
    std::vector<Successor> out;
    if (mode == EdgeMode::single) {
      for (auto& r : redexes) {
        auto u = apply_redex(theory, t, r, fuel);
        out.push_back({EdgeLabel{{std::move(r)}}, std::move(u)});
      }
      return out;
    }
    std::vector<std::vector<std::size_t>> sets;
    std::vector<std::size_t>              chosen;
    disjoint_sets(redexes, 0, chosen, sets);
    std::stable_sort(sets.begin(), sets.end(), [](auto const& a, auto const& b) {
      return a.size() < b.size();
    });
    for (auto const& s : sets) {
      EdgeLabel label;
      for (auto i : s) {
        label.redexes.push_back(redexes[i]);
      }
      auto u = apply_label(theory, t, label, fuel);
      out.push_back({std::move(label), std::move(u)});
    }
    return out;
  }

  RewriteGraph generate_graph(TheoryPresentation const& theory,
                              std::vector<Term> const&  seeds,
                              Bounds const&             bounds,
                              EdgeMode                  mode,
                              unsigned                  threads) {
    RewriteGraph g;
    g.bounds = bounds;
    g.mode   = mode;

    std::unordered_map<Term, std::size_t, TermHash> ids;
    std::vector<Term>                               found;
    std::vector<RewriteEdge>                        edges;
    std::vector<std::size_t>                        seed_ids;
    std::vector<std::size_t>                        frontier;

    auto add_vertex = [&](Term const& t) -> std::optional<std::size_t> {
      if (auto it = ids.find(t); it != ids.end()) {
        return it->second;
      }
      if (found.size() >= bounds.max_vertices) {
        g.truncated = true;
        return std::nullopt;
      }
      ids.emplace(t, found.size());
      found.push_back(t);
      return found.size() - 1;
    };

    for (auto const& s : seeds) {
      auto before = found.size();
      if (auto id = add_vertex(canonicalize(theory, s, bounds.fuel))) {
        seed_ids.push_back(*id);
        if (found.size() != before) {
          frontier.push_back(*id);
        }
      }
    }

    threads = std::max(1u, threads);
    for (std::size_t depth = 0; !frontier.empty(); ++depth) {
      if (depth >= bounds.max_depth) {
        for (auto v : frontier) {
          if (!find_redexes(theory, found[v]).empty()) {
            g.truncated = true;
            break;
          }
        }
        break;
      }
      std::vector<std::vector<Successor>> results(frontier.size());
      auto expand = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
          results[i] = successors(theory, found[frontier[i]], mode, bounds.fuel);
        }
      };
      if (threads == 1 || frontier.size() < 2) {
        expand(0, frontier.size());
      } else {
        std::vector<std::future<void>> jobs;
        auto chunk = (frontier.size() + threads - 1) / threads;
        for (std::size_t lo = 0; lo < frontier.size(); lo += chunk) {
          jobs.push_back(std::async(std::launch::async, expand, lo,
                                    std::min(frontier.size(), lo + chunk)));
        }
        for (auto& j : jobs) {
          j.get();
        }
      }
      // Merge in frontier order so the outcome is schedule independent.
      std::vector<std::size_t> next;
      for (std::size_t i = 0; i < frontier.size(); ++i) {
        for (auto& s : results[i]) {
          auto before = found.size();
          auto id     = add_vertex(s.term);
          if (!id) {
            continue;
          }
          if (found.size() != before) {
            next.push_back(*id);
          }
          edges.push_back({frontier[i], *id, std::move(s.label)});
        }
      }
      frontier = std::move(next);
    }

    // Renumber by term order.
    std::vector<std::size_t> order(found.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return found[a] < found[b];
    });
    std::vector<std::size_t> rank(found.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      rank[order[i]] = i;
      g.vertices.push_back(found[order[i]]);
    }
    for (auto& e : edges) {
      e.source = rank[e.source];
      e.target = rank[e.target];
    }
    std::stable_sort(edges.begin(), edges.end(), [](auto const& a, auto const& b) {
      return a.source < b.source;
    });
    g.edges = std::move(edges);
    for (auto s : seed_ids) {
      g.seeds.push_back(rank[s]);
    }
    return g;
  }

  std::vector<Term> enumerate_closed_terms(TheoryPresentation const& theory,
                                           std::size_t               max_nodes) {
    // by_size[n]: raw closed terms with exactly n nodes.
    std::vector<std::vector<Term>> by_size(max_nodes + 1);
    for (std::size_t n = 1; n <= max_nodes; ++n) {
      for (auto const& op : theory.operations) {
        if (op.arity == 0) {
          if (n == 1) {
            by_size[n].push_back(Term::op(op.name));
          }
          continue;
        }
        if (n < 1 + op.arity) {
          continue;
        }
        // Distribute n-1 nodes over the children, each getting at least one.
        std::vector<Term> kids;
        auto fill = [&](auto&& self, std::size_t k, std::size_t left) -> void {
          if (k == op.arity) {
            if (left == 0) {
              by_size[n].push_back(Term::op(op.name, kids));
            }
            return;
          }
          auto remaining = op.arity - k - 1;
          for (std::size_t s = 1; s + remaining <= left; ++s) {
            for (auto const& c : by_size[s]) {
              kids.push_back(c);
              self(self, k + 1, left - s);
              kids.pop_back();
            }
          }
        };
        fill(fill, 0, n - 1);
      }
    }
    std::set<Term> out;
    for (auto const& level : by_size) {
      for (auto const& t : level) {
        auto c = canonicalize(theory, t);
        if (c.size() <= max_nodes) {
          out.insert(std::move(c));
        }
      }
    }
    return {out.begin(), out.end()};
  }

  EdgeLabel select(TheoryPresentation const& theory, Term const& t, Strategy strategy) {
    auto      redexes = find_redexes(theory, t);
    EdgeLabel out;
    if (redexes.empty()) {
      return out;
    }
    auto strictly_above = [](Position const& a, Position const& b) {
      return a.size() < b.size() && is_prefix(a, b);
    };
    switch (strategy) {
      case Strategy::leftmost_outermost:
        out.redexes.push_back(redexes.front());
        break;
      case Strategy::leftmost_innermost:
        for (auto const& r : redexes) {
          bool innermost = std::none_of(redexes.begin(), redexes.end(), [&](auto const& q) {
            return strictly_above(r.position, q.position);
          });
          if (innermost) {
            out.redexes.push_back(r);
            break;
          }
        }
        break;
      case Strategy::full:
        for (auto const& r : redexes) {
          bool outermost = std::none_of(redexes.begin(), redexes.end(), [&](auto const& q) {
            return strictly_above(q.position, r.position);
          });
          bool position_taken
              = !out.redexes.empty() && out.redexes.back().position == r.position;
          if (outermost && !position_taken) {
            out.redexes.push_back(r);
          }
        }
        break;
    }
    return out;
  }

  NormalizeResult normalize(TheoryPresentation const& theory,
                            Term const&               t,
                            Strategy                  strategy,
                            std::size_t               fuel,
                            std::vector<Step>*        trace) {
    Term cur = canonicalize(theory, t);
    for (std::size_t steps = 0;; ++steps) {
      auto label = select(theory, cur, strategy);
      if (label.redexes.empty()) {
        return NormalForm{cur, steps};
      }
      if (steps == fuel) {
        return Timeout{cur, steps};
      }
      cur = apply_label(theory, cur, label);
      if (trace != nullptr) {
        trace->push_back({std::move(label), cur});
      }
    }
  }

}  // namespace enriched
