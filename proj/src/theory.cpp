#include "enriched/theory.hpp"

#include <algorithm>
#include <set>

namespace enriched {

  Operation const*
  TheoryPresentation::find_operation(std::string_view op) const {
    for (auto const& o : operations) {
      if (o.name == op) {
        return &o;
      }
    }
    return nullptr;
  }

  RewriteRule const* TheoryPresentation::find_rule(std::string_view rule) const {
    for (auto const& r : rules) {
      if (r.name == rule) {
        return &r;
      }
    }
    return nullptr;
  }

  std::optional<std::size_t>
  TheoryPresentation::rule_index(std::string_view rule) const {
    for (std::size_t i = 0; i < rules.size(); ++i) {
      if (rules[i].name == rule) {
        return i;
      }
    }
    return std::nullopt;
  }

  namespace {
    std::string join(std::vector<std::string> const& v) {
      std::string out;
      for (auto const& s : v) {
        out += (out.empty() ? "" : "; ") + s;
      }
      return out;
    }

    void check_term(TheoryPresentation const& theory,
                    Term const&               t,
                    std::string const&        where,
                    std::vector<std::string>& out) {
      if (t.is_var()) {
        return;
      }
      auto const* op = theory.find_operation(t.name());
      if (op == nullptr) {
        out.push_back(where + ": undeclared operation " + t.name());
      } else if (op->arity != t.arity()) {
        out.push_back(where + ": arity mismatch for " + t.name() + " (expected "
                      + std::to_string(op->arity) + ", got "
                      + std::to_string(t.arity()) + ")");
      }
      for (auto const& c : t.children()) {
        check_term(theory, c, where, out);
      }
    }

    bool vars_subset(Term const& rhs, Term const& lhs) {
      auto lv = variables(lhs);
      for (auto v : variables(rhs)) {
        if (!std::binary_search(lv.begin(), lv.end(), v)) {
          return false;
        }
      }
      return true;
    }

    // One innermost pass: canonical children, then the root until stable.
    Term canon(TheoryPresentation const& theory, Term const& t, std::size_t& fuel) {
      if (t.is_var() || theory.equations.empty()) {
        return t;
      }
      Term cur = t;
      if (cur.arity() != 0) {
        std::vector<Term> kids;
        kids.reserve(cur.arity());
        bool changed = false;
        for (auto const& c : cur.children()) {
          kids.push_back(canon(theory, c, fuel));
          changed = changed || !(kids.back() == c);
        }
        if (changed) {
          cur = Term::op(cur.name(), std::move(kids));
        }
      }
      for (auto const& eq : theory.equations) {
        if (auto theta = match_pattern(eq.lhs, cur)) {
          if (fuel == 0) {
            throw FuelExhausted("canonicalization fuel exhausted on "
                                + to_string(t));
          }
          --fuel;
          return canon(theory, substitute(eq.rhs, *theta), fuel);
        }
      }
      return cur;
    }
  }  // namespace

  TheoryError::TheoryError(std::vector<std::string> diagnostics)
      : Error(join(diagnostics)), diagnostics_(std::move(diagnostics)) {}

  std::vector<std::string> validate_term(TheoryPresentation const& theory,
                                         Term const&               t) {
    std::vector<std::string> out;
    check_term(theory, t, "term " + to_string(t), out);
    return out;
  }

  std::vector<std::string> validate_theory(TheoryPresentation const& theory) {
    std::vector<std::string> out;

    std::set<std::string> seen;
    for (auto const& op : theory.operations) {
      if (op.name.empty()) {
        out.push_back("operation with empty name");
      } else if (!seen.insert(op.name).second) {
        out.push_back("operation " + op.name + ": duplicate name");
      }
    }

    seen.clear();
    for (auto const& eq : theory.equations) {
      auto where = "equation " + eq.name;
      if (!seen.insert(eq.name).second) {
        out.push_back(where + ": duplicate name");
      }
      if (eq.lhs.is_var()) {
        out.push_back(where + ": equation lhs is a bare variable");
      }
      if (!vars_subset(eq.rhs, eq.lhs)) {
        out.push_back(where + ": unbound variable on rhs");
      }
      check_term(theory, eq.lhs, where, out);
      check_term(theory, eq.rhs, where, out);
    }

    seen.clear();
    for (auto const& rule : theory.rules) {
      auto where = "rule " + rule.name;
      if (!seen.insert(rule.name).second) {
        out.push_back(where + ": duplicate name");
      }
      if (rule.lhs.is_var()) {
        out.push_back(where + ": rule lhs is a bare variable");
      } else if (!is_linear(rule.lhs)) {
        out.push_back(where + ": rule lhs is not left-linear");
      }
      if (!vars_subset(rule.rhs, rule.lhs)) {
        out.push_back(where + ": unbound variable on rhs");
      }
      check_term(theory, rule.lhs, where, out);
      check_term(theory, rule.rhs, where, out);
    }
    return out;
  }

  Term canonicalize(TheoryPresentation const& theory,
                    Term const&               t,
                    std::size_t               fuel) {
    return canon(theory, t, fuel);
  }

  bool is_canonical(TheoryPresentation const& theory, Term const& t) {
    for (auto const& p : positions(t)) {
      for (auto const& eq : theory.equations) {
        if (match_pattern(eq.lhs, subterm_at(t, p))) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace enriched
