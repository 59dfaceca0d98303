#include "enriched/calculi.hpp"

#include <deque>
#include <optional>
#include <tuple>
#include <set>

namespace enriched {

  namespace {
    Term x(std::size_t i) {
      return Term::var(i);
    }
    Term c(char const* name) {
      return Term::op(name);
    }
    Term app(Term a, Term b) {
      return Term::op("app", {std::move(a), std::move(b)});
    }
    Term mark(Term a) {
      return Term::op("R", {std::move(a)});
    }

    void must_validate(TheoryPresentation const& t) {
      auto diags = validate_theory(t);
      if (!diags.empty()) {
        throw TheoryError(std::move(diags));
      }
    }
  }  // namespace

  TheoryPresentation th_ski() {
    TheoryPresentation t;
    t.name       = "SKI";
    t.operations = {{"S", 0}, {"K", 0}, {"I", 0}, {"app", 2}};
    t.rules      = {
        {"σ", app(app(app(c("S"), x(0)), x(1)), x(2)), app(app(x(0), x(2)), app(x(1), x(2)))},
        {"κ", app(app(c("K"), x(0)), x(1)), x(0)},
        {"ι", app(c("I"), x(0)), x(0)},
    };
    must_validate(t);
    return t;
  }

  TheoryPresentation th_ski_r() {
    TheoryPresentation t;
    t.name       = "SKI_R";
    t.operations = {{"S", 0}, {"K", 0}, {"I", 0}, {"R", 1}, {"app", 2}};
    t.equations  = {
        {"R_app", mark(app(x(0), x(1))), app(mark(x(0)), x(1))},
        {"RR", mark(mark(x(0))), mark(x(0))},
    };
    t.rules = {
        {"σ_r", app(app(app(mark(c("S")), x(0)), x(1)), x(2)),
         app(app(mark(x(0)), x(2)), app(x(1), x(2)))},
        {"κ_r", app(app(mark(c("K")), x(0)), x(1)), mark(x(0))},
        {"ι_r", app(mark(c("I")), x(0)), mark(x(0))},
    };
    must_validate(t);
    return t;
  }

  Term omega() {
    auto sii = app(app(c("S"), c("I")), c("I"));
    return app(sii, sii);
  }

  Term mark_root(Term const& t) {
    static TheoryPresentation const theory = th_ski_r();
    return canonicalize(theory, mark(t));
  }

  TheoryMorphism morphism_f_r() {
    TheoryMorphism m{"f_R", th_ski(), th_ski_r(), {}, {}};
    m.op_map   = {{"S", c("S")}, {"K", c("K")}, {"I", c("I")}, {"app", mark(app(x(0), x(1)))}};
    m.rule_map = {{"σ", "σ_r"}, {"κ", "κ_r"}, {"ι", "ι_r"}};
    return m;
  }

  TheoryMorphism morphism_u_r() {
    TheoryMorphism m{"u_R", th_ski_r(), th_ski(), {}, {}};
    m.op_map = {{"S", c("S")}, {"K", c("K")}, {"I", c("I")}, {"R", x(0)}, {"app", app(x(0), x(1))}};
    m.rule_map = {{"σ_r", "σ"}, {"κ_r", "κ"}, {"ι_r", "ι"}};
    return m;
  }

  TheoryMorphism identity_morphism(TheoryPresentation const& theory) {
    TheoryMorphism m{"id", theory, theory, {}, {}};
    for (auto const& op : theory.operations) {
      std::vector<Term> args;
      for (std::size_t i = 0; i < op.arity; ++i) {
        args.push_back(x(i));
      }
      m.op_map.emplace(op.name, Term::op(op.name, std::move(args)));
    }
    for (auto const& r : theory.rules) {
      m.rule_map.emplace(r.name, r.name);
    }
    return m;
  }

  namespace {
    Term translate(TheoryMorphism const& m, Term const& t) {
      if (t.is_var()) {
        return t;
      }
      auto it = m.op_map.find(t.name());
      if (it == m.op_map.end()) {
        throw Error("operation " + t.name() + " missing from " + m.name);
      }
      Substitution theta;
      for (std::size_t i = 0; i < t.arity(); ++i) {
        theta.emplace(i, translate(m, t.child(i)));
      }
      return substitute(it->second, theta);
    }
  }  // namespace

  Term apply_morphism(TheoryMorphism const& m, Term const& t) {
    return canonicalize(m.target, translate(m, t));
  }

  bool MorphismReport::passed() const {
    for (auto const& c : checks) {
      if (!c.passed) {
        return false;
      }
    }
    return true;
  }

  namespace {
    // Breadth-first search from `from` for a term equal to `to` under
    // `observe`, reached in at least one step of which one uses `rule`
    // (any rule when `rule` is `derivable`).
    std::optional<std::size_t> derive(TheoryMorphism const& m,
                                      Term const&           from,
                                      Term const&           to,
                                      std::string const&    rule,
                                      std::size_t           fuel,
                                      TheoryMorphism const* observe) {
      auto seen_as = [&](Term const& t) { return observe ? apply_morphism(*observe, t) : t; };
      auto const goal = seen_as(to);

      std::set<std::pair<Term, bool>>                    visited{{from, false}};
      std::deque<std::tuple<Term, bool, std::size_t>>    queue{{from, false, 0}};
      while (!queue.empty()) {
        auto [t, used, depth] = queue.front();
        queue.pop_front();
        if (depth == fuel) {
          continue;
        }
        for (auto const& s : successors(m.target, t, EdgeMode::single)) {
          bool now = used || rule == derivable
                     || m.target.rules[s.label.redexes.front().rule].name == rule;
          if (now && seen_as(s.term) == goal) {
            return depth + 1;
          }
          if (visited.size() < 20'000 && visited.emplace(s.term, now).second) {
            queue.emplace_back(s.term, now, depth + 1);
          }
        }
      }
      return std::nullopt;
    }
  }  // namespace

  MorphismReport validate_morphism(TheoryMorphism const& m,
                                   std::size_t           fuel,
                                   TheoryMorphism const* observation) {
    MorphismReport report;

    for (auto const& op : m.source.operations) {
      MorphismCheck check{"op " + op.name, false, ""};
      auto          it = m.op_map.find(op.name);
      if (it == m.op_map.end()) {
        check.detail = "unmapped";
      } else if (it->second.var_bound() > op.arity) {
        check.detail = "image uses a variable beyond x" + std::to_string(op.arity);
      } else if (auto diags = validate_term(m.target, it->second); !diags.empty()) {
        check.detail = diags.front();
      } else {
        check.passed = true;
      }
      report.checks.push_back(std::move(check));
    }
    if (!report.passed()) {
      return report;
    }

    for (auto const& eq : m.source.equations) {
      auto l = apply_morphism(m, eq.lhs);
      auto r = apply_morphism(m, eq.rhs);
      report.checks.push_back({"eq " + eq.name, l == r, to_string(l) + " vs " + to_string(r)});
    }

    for (auto const& rule : m.source.rules) {
      MorphismCheck check{"rule " + rule.name, false, ""};
      auto          it = m.rule_map.find(rule.name);
      if (it == m.rule_map.end()) {
        check.detail = "unmapped";
      } else if (it->second != derivable && !m.target.find_rule(it->second)) {
        check.detail = "no rule " + it->second + " in " + m.target.name;
      } else {
        auto l     = apply_morphism(m, rule.lhs);
        auto r     = apply_morphism(m, rule.rhs);
        auto steps = derive(m, l, r, it->second, fuel, observation);
        check.passed = steps.has_value();
        check.detail = to_string(l) + " => " + to_string(r)
                       + (steps ? " in " + std::to_string(*steps) + " steps via " + it->second
                                : " not reached via " + it->second);
      }
      report.checks.push_back(std::move(check));
    }
    return report;
  }

}  // namespace enriched
