#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "enriched/calculi.hpp"
#include "enriched/parse.hpp"
#include "oracle.hpp"

using namespace enriched;

namespace {
  Term ski(char const* src) {
    static auto const th = th_ski();
    return parse_term(th, src);
  }
}  // namespace

TEST_CASE("positions come out in preorder") {
  auto t  = ski("((S K)(I K))");
  auto ps = positions(t);
  CHECK(ps.size() == t.size());
  CHECK(to_string(ps[0]) == "[]");
  CHECK(to_string(ps[1]) == "[0]");
  CHECK(to_string(ps[2]) == "[0,0]");
  CHECK(to_string(ps[3]) == "[0,1]");
  CHECK(to_string(ps[4]) == "[1]");
  CHECK(std::is_sorted(ps.begin(), ps.end()));
}

TEST_CASE("subterm access and replacement") {
  auto t = ski("((S K)(I K))");
  CHECK(to_string(subterm_at(t, {1})) == "(I K)");
  CHECK(to_string(replace_at(t, {1}, Term::op("S"))) == "((S K) S)");
  CHECK(replace_at(t, {}, Term::op("I")) == Term::op("I"));
  CHECK_THROWS_AS(subterm_at(t, {2}), InvalidPosition);
  CHECK_THROWS_AS(subterm_at(t, {0, 0, 0}), InvalidPosition);
  CHECK_THROWS_AS(replace_at(t, {3}, t), InvalidPosition);
}

TEST_CASE("printing sugars application") {
  CHECK(to_string(ski("(((S K)(I K)) S)")) == "(((S K)(I K)) S)");
  CHECK(to_string(Term::op("R", {ski("(K S)")})) == "R((K S))");
  CHECK(to_string(Term::op("f", {Term::var(0), Term::var(3)})) == "f(x0,x3)");
  CHECK(to_string(Term::op("c")) == "c");
}

TEST_CASE("variables and linearity") {
  auto lin    = Term::op("app", {Term::var(0), Term::var(1)});
  auto nonlin = Term::op("app", {Term::var(0), Term::var(0)});
  CHECK(is_linear(lin));
  CHECK_FALSE(is_linear(nonlin));
  CHECK(variables(nonlin) == std::vector<std::size_t>{0});
  CHECK(variable_occurrences(nonlin).at(0) == 2);
  CHECK(lin.var_bound() == 2);
  CHECK(ski("(S K)").is_closed());
}

TEST_CASE("matching yields the unique substitution") {
  auto th   = th_ski();
  auto lhs  = th.find_rule("κ")->lhs;
  auto t    = ski("((K (S I)) K)");
  auto hit  = match_pattern(lhs, t);
  REQUIRE(hit.has_value());
  CHECK(to_string(hit->at(0)) == "(S I)");
  CHECK(to_string(hit->at(1)) == "K");
  CHECK(substitute(lhs, *hit) == t);
  CHECK_FALSE(match_pattern(lhs, ski("(K S)")).has_value());

  auto nonlin = Term::op("app", {Term::var(0), Term::var(0)});
  CHECK(match_pattern(nonlin, ski("(K K)")).has_value());
  CHECK_FALSE(match_pattern(nonlin, ski("(K S)")).has_value());
  CHECK_THROWS_AS(substitute(lhs, Substitution{{0, Term::op("S")}}), UnboundVariable);
}

TEST_CASE("term order is total and compatible with equality") {
  std::mt19937      rng(7);
  std::vector<Term> ts;
  for (int i = 0; i < 200; ++i) {
    ts.push_back(oracle::random_term(rng, {"S", "K", "I"}, 9));
  }
  for (auto const& a : ts) {
    for (auto const& b : ts) {
      auto c = a <=> b;
      CHECK((c == 0) == (a == b));
      CHECK((c < 0) == ((b <=> a) > 0));
      if (a == b) {
        CHECK(a.hash() == b.hash());
      }
    }
  }
  CHECK(Term::op("S") < ski("(S K)"));
}

TEST_CASE("property: replacing a subterm by itself is the identity") {
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    auto t = oracle::random_term(rng, {"S", "K", "I"}, 11);
    for (auto const& p : positions(t)) {
      CHECK(replace_at(t, p, subterm_at(t, p)) == t);
      CHECK(*oracle::at(t, p) == subterm_at(t, p));
    }
  }
}

TEST_CASE("property: matching inverts substitution for linear patterns") {
  std::mt19937 rng(13);
  auto         th = th_ski();
  for (int i = 0; i < 200; ++i) {
    for (auto const& r : th.rules) {
      Substitution theta;
      for (auto v : variables(r.lhs)) {
        theta.emplace(v, oracle::random_term(rng, {"S", "K", "I"}, 7));
      }
      auto t   = substitute(r.lhs, theta);
      auto got = match_pattern(r.lhs, t);
      REQUIRE(got.has_value());
      CHECK(*got == theta);
    }
  }
}
