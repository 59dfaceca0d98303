#include "enriched/term.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace enriched {

  namespace {
    std::size_t mix(std::size_t seed, std::size_t v) {
      return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
    }
  }  // namespace

  std::string to_string(Position const& p) {
    std::string out = "[";
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i != 0) {
        out += ",";
      }
      out += std::to_string(p[i]);
    }
    return out + "]";
  }

  bool is_prefix(Position const& a, Position const& b) {
    return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
  }

  Term Term::var(std::size_t index) {
    auto n       = std::make_shared<Node>();
    n->is_var    = true;
    n->index     = index;
    n->var_bound = index + 1;
    n->hash      = mix(0x51ed27, index);
    return Term(std::move(n));
  }

  Term Term::op(std::string name, std::vector<Term> children) {
    auto n   = std::make_shared<Node>();
    n->hash  = std::hash<std::string>{}(name);
    n->name  = std::move(name);
    for (auto const& c : children) {
      n->size += c.size();
      n->var_bound = std::max(n->var_bound, c.var_bound());
      n->hash      = mix(n->hash, c.hash());
    }
    n->hash     = mix(n->hash, children.size());
    n->children = std::move(children);
    return Term(std::move(n));
  }

  bool operator==(Term const& a, Term const& b) noexcept {
    if (a.same_node(b)) {
      return true;
    }
    if (a.hash() != b.hash() || a.size() != b.size()
        || a.is_var() != b.is_var()) {
      return false;
    }
    if (a.is_var()) {
      return a.var_index() == b.var_index();
    }
    return a.name() == b.name() && a.children() == b.children();
  }

  // Size first, then variables before operations, then name, then children.
  std::strong_ordering operator<=>(Term const& a, Term const& b) noexcept {
    if (a.same_node(b)) {
      return std::strong_ordering::equal;
    }
    if (auto c = a.size() <=> b.size(); c != 0) {
      return c;
    }
    if (a.is_var() != b.is_var()) {
      return a.is_var() ? std::strong_ordering::less
                        : std::strong_ordering::greater;
    }
    if (a.is_var()) {
      return a.var_index() <=> b.var_index();
    }
    if (auto c = a.name().compare(b.name()); c != 0) {
      return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (auto c = a.arity() <=> b.arity(); c != 0) {
      return c;
    }
    for (std::size_t i = 0; i < a.arity(); ++i) {
      if (auto c = a.child(i) <=> b.child(i); c != 0) {
        return c;
      }
    }
    return std::strong_ordering::equal;
  }

  Term const& subterm_at(Term const& t, Position const& p) {
    Term const* cur = &t;
    for (auto i : p) {
      if (cur->is_var() || i >= cur->arity()) {
        throw InvalidPosition("invalid position " + to_string(p) + " in "
                              + to_string(t));
      }
      cur = &cur->child(i);
    }
    return *cur;
  }

  namespace {
    Term replace_from(Term const&     t,
                      Position const& p,
                      std::size_t     depth,
                      Term const&     u) {
      if (depth == p.size()) {
        return u;
      }
      auto i = p[depth];
      if (t.is_var() || i >= t.arity()) {
        throw InvalidPosition("invalid position " + to_string(p));
      }
      auto kids = t.children();
      kids[i]   = replace_from(t.child(i), p, depth + 1, u);
      return Term::op(t.name(), std::move(kids));
    }

    void collect_positions(Term const&            t,
                           Position&              cur,
                           std::vector<Position>& out) {
      out.push_back(cur);
      for (std::size_t i = 0; i < t.arity(); ++i) {
        cur.push_back(i);
        collect_positions(t.child(i), cur, out);
        cur.pop_back();
      }
    }

    void count_vars(Term const& t, std::map<std::size_t, std::size_t>& out) {
      if (t.is_var()) {
        ++out[t.var_index()];
        return;
      }
      for (auto const& c : t.children()) {
        count_vars(c, out);
      }
    }

    bool match_into(Term const& pattern, Term const& subject, Substitution& theta) {
      if (pattern.is_var()) {
        auto [it, inserted] = theta.emplace(pattern.var_index(), subject);
        return inserted || it->second == subject;
      }
      if (subject.is_var() || pattern.name() != subject.name()
          || pattern.arity() != subject.arity()) {
        return false;
      }
      for (std::size_t i = 0; i < pattern.arity(); ++i) {
        if (!match_into(pattern.child(i), subject.child(i), theta)) {
          return false;
        }
      }
      return true;
    }

    void print(Term const& t, std::string& out) {
      if (t.is_var()) {
        out += "x" + std::to_string(t.var_index());
        return;
      }
      if (t.name() == "app" && t.arity() == 2) {
        std::string lhs, rhs;
        print(t.child(0), lhs);
        print(t.child(1), rhs);
        out += "(" + lhs;
        if (lhs.back() != ')' || rhs.front() != '(') {
          out += " ";
        }
        out += rhs + ")";
        return;
      }
      out += t.name();
      if (t.arity() == 0) {
        return;
      }
      out += "(";
      for (std::size_t i = 0; i < t.arity(); ++i) {
        if (i != 0) {
          out += ",";
        }
        print(t.child(i), out);
      }
      out += ")";
    }
  }  // namespace

  Term replace_at(Term const& t, Position const& p, Term const& u) {
    return replace_from(t, p, 0, u);
  }

  std::vector<Position> positions(Term const& t) {
    std::vector<Position> out;
    Position              cur;
    collect_positions(t, cur, out);
    return out;
  }

  std::map<std::size_t, std::size_t> variable_occurrences(Term const& t) {
    std::map<std::size_t, std::size_t> out;
    count_vars(t, out);
    return out;
  }

  std::vector<std::size_t> variables(Term const& t) {
    std::vector<std::size_t> out;
    for (auto const& [v, _] : variable_occurrences(t)) {
      out.push_back(v);
    }
    return out;
  }

  bool is_linear(Term const& t) {
    auto occ = variable_occurrences(t);
    return std::all_of(
        occ.begin(), occ.end(), [](auto const& kv) { return kv.second == 1; });
  }

  std::optional<Substitution> match_pattern(Term const& pattern,
                                            Term const& subject) {
    Substitution theta;
    if (match_into(pattern, subject, theta)) {
      return theta;
    }
    return std::nullopt;
  }

  Term substitute(Term const& pattern, Substitution const& theta) {
    if (pattern.is_var()) {
      auto it = theta.find(pattern.var_index());
      if (it == theta.end()) {
        throw UnboundVariable("unbound variable x"
                              + std::to_string(pattern.var_index()));
      }
      return it->second;
    }
    if (pattern.is_closed()) {
      return pattern;
    }
    std::vector<Term> kids;
    kids.reserve(pattern.arity());
    for (auto const& c : pattern.children()) {
      kids.push_back(substitute(c, theta));
    }
    return Term::op(pattern.name(), std::move(kids));
  }

  std::string to_string(Term const& t) {
    std::string out;
    print(t, out);
    return out;
  }

  std::string to_string(Substitution const& theta) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (auto const& [v, t] : theta) {
      os << (first ? "" : ", ") << "x" << v << "↦" << to_string(t);
      first = false;
    }
    os << "}";
    return os.str();
  }

}  // namespace enriched
