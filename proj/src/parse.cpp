#include "enriched/parse.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace enriched {

  ParseError::ParseError(std::string const& message,
                         std::size_t        line,
                         std::size_t        column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": "
              + message),
        line_(line),
        column_(column) {}

  namespace {

    enum class Tok { ident, number, lparen, rparen, comma, colon, equals, arrow, end };

    struct Token {
      Tok         kind;
      std::string text;
      std::size_t line;
      std::size_t column;
    };

    bool ident_start(unsigned char c) {
      return std::isalpha(c) != 0 || c == '_' || c >= 0x80;
    }

    bool ident_char(unsigned char c) {
      return ident_start(c) || std::isdigit(c) != 0 || c == '\'';
    }

    std::vector<Token> lex(std::string_view src) {
      std::vector<Token> out;
      std::size_t        line = 1, column = 1, i = 0;
      auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
          auto c = static_cast<unsigned char>(src[i]);
          if (c == '\n') {
            ++line;
            column = 1;
          } else if ((c & 0xC0) != 0x80) {
            ++column;
          }
        }
      };
      while (i < src.size()) {
        auto c = static_cast<unsigned char>(src[i]);
        if (c == '#') {
          while (i < src.size() && src[i] != '\n') {
            advance(1);
          }
          continue;
        }
        if (std::isspace(c) != 0) {
          advance(1);
          continue;
        }
        Token tok{Tok::end, "", line, column};
        std::size_t len = 1;
        if (ident_start(c)) {
          while (i + len < src.size()
                 && ident_char(static_cast<unsigned char>(src[i + len]))) {
            ++len;
          }
          tok.kind = Tok::ident;
        } else if (std::isdigit(c) != 0) {
          while (i + len < src.size()
                 && std::isdigit(static_cast<unsigned char>(src[i + len])) != 0) {
            ++len;
          }
          tok.kind = Tok::number;
        } else if (c == '=' && i + 1 < src.size() && src[i + 1] == '>') {
          tok.kind = Tok::arrow;
          len      = 2;
        } else {
          switch (c) {
            case '(': tok.kind = Tok::lparen; break;
            case ')': tok.kind = Tok::rparen; break;
            case ',': tok.kind = Tok::comma; break;
            case ':': tok.kind = Tok::colon; break;
            case '=': tok.kind = Tok::equals; break;
            default:
              throw ParseError(std::string("unexpected character '")
                                   + static_cast<char>(c) + "'",
                               line,
                               column);
          }
        }
        tok.text = std::string(src.substr(i, len));
        out.push_back(std::move(tok));
        advance(len);
      }
      out.push_back(Token{Tok::end, "", line, column});
      return out;
    }

    std::size_t code_points(std::string const& s) {
      std::size_t n = 0;
      for (unsigned char c : s) {
        n += (c & 0xC0) != 0x80 ? 1 : 0;
      }
      return n;
    }

    std::string describe(Token const& t) {
      return t.kind == Tok::end ? std::string("end of input")
                                : "'" + t.text + "'";
    }

    class Parser {
     public:
      Parser(std::string_view src) : toks_(lex(src)) {}

      Token const& peek() const { return toks_[pos_]; }

      Token const& next() {
        auto const& t = toks_[pos_];
        if (t.kind != Tok::end) {
          ++pos_;
        }
        return t;
      }

      Token const& expect(Tok kind, char const* what) {
        auto const& t = peek();
        if (t.kind != kind) {
          throw ParseError(std::string("expected ") + what + ", found "
                               + describe(t),
                           t.line,
                           t.column);
        }
        return next();
      }

      // Variables get indices in first-occurrence order within `vars`.
      Term term(TheoryPresentation const&          theory,
                std::map<std::string, std::size_t>& vars) {
        auto const& t = peek();
        if (t.kind == Tok::lparen) {
          next();
          auto const* app = theory.find_operation("app");
          if (app == nullptr || app->arity != 2) {
            throw ParseError(
                "juxtaposition needs a binary operation named app", t.line, t.column);
          }
          auto fun = term(theory, vars);
          auto arg = term(theory, vars);
          expect(Tok::rparen, "')'");
          return Term::op("app", {std::move(fun), std::move(arg)});
        }
        auto const& id = expect(Tok::ident, "a term");
        auto const* op = theory.find_operation(id.text);
        if (peek().kind == Tok::lparen && peek().line == id.line
            && peek().column == id.column + code_points(id.text)) {
          if (op == nullptr) {
            throw ParseError("undeclared operation " + id.text, id.line, id.column);
          }
          next();
          std::vector<Term> kids;
          kids.push_back(term(theory, vars));
          while (peek().kind == Tok::comma) {
            next();
            kids.push_back(term(theory, vars));
          }
          expect(Tok::rparen, "')' or ','");
          if (kids.size() != op->arity) {
            throw ParseError("arity mismatch for " + id.text + " (expected "
                                 + std::to_string(op->arity) + ", got "
                                 + std::to_string(kids.size()) + ")",
                             id.line,
                             id.column);
          }
          return Term::op(id.text, std::move(kids));
        }
        if (op != nullptr) {
          if (op->arity != 0) {
            throw ParseError("arity mismatch for " + id.text + " (expected "
                                 + std::to_string(op->arity) + ", got 0)",
                             id.line,
                             id.column);
          }
          return Term::op(id.text);
        }
        auto [it, _] = vars.emplace(id.text, vars.size());
        return Term::var(it->second);
      }

      TheoryPresentation theory() {
        TheoryPresentation th;
        auto const&        kw = expect(Tok::ident, "'theory'");
        if (kw.text != "theory") {
          throw ParseError("expected 'theory', found " + describe(kw), kw.line, kw.column);
        }
        th.name = expect(Tok::ident, "theory name").text;
        while (peek().kind != Tok::end) {
          auto const& decl = expect(Tok::ident, "'op', 'eq' or 'rule'");
          if (decl.text == "op") {
            auto name = expect(Tok::ident, "operation name").text;
            expect(Tok::colon, "':'");
            auto const& n = expect(Tok::number, "arity");
            std::size_t arity = 0;
            try {
              arity = std::stoul(n.text);
            } catch (std::exception const&) {
              throw ParseError("arity out of range", n.line, n.column);
            }
            th.operations.push_back({std::move(name), arity});
          } else if (decl.text == "eq" || decl.text == "rule") {
            auto name = expect(Tok::ident, "name").text;
            expect(Tok::colon, "':'");
            std::map<std::string, std::size_t> vars;
            auto lhs = term(th, vars);
            if (decl.text == "eq") {
              expect(Tok::equals, "'='");
            } else {
              expect(Tok::arrow, "'=>'");
            }
            auto rhs = term(th, vars);
            if (decl.text == "eq") {
              th.equations.push_back({std::move(name), lhs, rhs});
            } else {
              th.rules.push_back({std::move(name), lhs, rhs});
            }
          } else {
            throw ParseError("expected 'op', 'eq' or 'rule', found " + describe(decl),
                             decl.line,
                             decl.column);
          }
        }
        return th;
      }

     private:
      std::vector<Token> toks_;
      std::size_t        pos_ = 0;
    };

  }  // namespace

  TheoryPresentation parse_theory(std::string_view source) {
    Parser p(source);
    auto   th    = p.theory();
    auto   diags = validate_theory(th);
    if (!diags.empty()) {
      throw TheoryError(std::move(diags));
    }
    return th;
  }

  Term parse_term(TheoryPresentation const& theory, std::string_view source) {
    Parser                             p(source);
    std::map<std::string, std::size_t> vars;
    auto                               t = p.term(theory, vars);
    if (p.peek().kind != Tok::end) {
      throw ParseError("trailing input " + describe(p.peek()),
                       p.peek().line,
                       p.peek().column);
    }
    return t;
  }

  std::string print_theory(TheoryPresentation const& theory) {
    std::ostringstream os;
    os << "theory " << theory.name << "\n";
    for (auto const& op : theory.operations) {
      os << "  op " << op.name << " : " << op.arity << "\n";
    }
    for (auto const& eq : theory.equations) {
      os << "  eq " << eq.name << " : " << to_string(eq.lhs) << " = "
         << to_string(eq.rhs) << "\n";
    }
    for (auto const& rule : theory.rules) {
      os << "  rule " << rule.name << " : " << to_string(rule.lhs) << " => "
         << to_string(rule.rhs) << "\n";
    }
    return os.str();
  }

}  // namespace enriched
