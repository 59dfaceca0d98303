#include <doctest.h>

#include <random>

#include "enriched/calculi.hpp"
#include "enriched/parse.hpp"
#include "oracle.hpp"

using namespace enriched;

namespace {
  TheoryPresentation const& ski() {
    static auto const th = th_ski();
    return th;
  }
  TheoryPresentation const& skir() {
    static auto const th = th_ski_r();
    return th;
  }

  // Marks every application, then pushes markers to the head: the
  // reference f_R.
  Term ref_f_r(Term const& t) {
    if (t.arity() == 0) {
      return t;
    }
    auto inner = Term::op("app", {ref_f_r(t.child(0)), ref_f_r(t.child(1))});
    return oracle::canonical(skir(), Term::op("R", {inner}));
  }

  Term ref_u_r(Term const& t) {
    if (t.is_var() || t.arity() == 0) {
      return t;
    }
    if (t.name() == "R") {
      return ref_u_r(t.child(0));
    }
    return Term::op("app", {ref_u_r(t.child(0)), ref_u_r(t.child(1))});
  }

  bool has_marker(Term const& t) {
    if (!t.is_var() && t.name() == "R") return true;
    for (auto const& c : t.children())
      if (has_marker(c)) return true;
    return false;
  }
}  // namespace

TEST_CASE("built-in theories") {
  CHECK(validate_theory(ski()).empty());
  CHECK(ski().rules.size() == 3);
  CHECK(ski().equations.empty());
  CHECK(ski().operations.size() == 4);
  CHECK(validate_theory(skir()).empty());
  CHECK(skir().operations.size() == 5);
  CHECK(skir().equations.size() == 2);
  CHECK(skir().rules.size() == 3);
}

TEST_CASE("marked rules fire only under a marker") {
  CHECK(find_redexes(skir(), parse_term(skir(), "((K S) K)")).empty());
  auto rs = find_redexes(skir(), parse_term(skir(), "((R(K) S) K)"));
  REQUIRE(rs.size() == 1);
  CHECK(to_string(skir(), rs[0]) == "κ_r@[]");
}

TEST_CASE("property: no redex in any marker-free term") {
  for (auto const& t : enumerate_closed_terms(skir(), 7)) {
    if (!has_marker(t)) {
      CHECK(find_redexes(skir(), t).empty());
    }
  }
}

TEST_CASE("applying f_R and u_R") {
  auto f = morphism_f_r();
  auto u = morphism_u_r();
  CHECK(to_string(apply_morphism(f, parse_term(ski(), "(I K)"))) == "(R(I) K)");
  CHECK(to_string(apply_morphism(f, parse_term(ski(), "S"))) == "S");
  auto ksk = parse_term(ski(), "((K S) K)");
  CHECK(apply_morphism(f, ksk) == ref_f_r(ksk));
  CHECK(to_string(apply_morphism(f, ksk)) == "((R(K) S) K)");

  CHECK(to_string(apply_morphism(u, parse_term(skir(), "(R(K) S)"))) == "(K S)");
  CHECK(to_string(apply_morphism(u, parse_term(skir(), "R(R(I))"))) == "I");
  auto t = parse_term(ski(), "((K S)(I K))");
  CHECK(apply_morphism(u, apply_morphism(f, t)) == t);

  auto id = identity_morphism(ski());
  CHECK(apply_morphism(id, t) == t);
  auto broken = f;
  broken.op_map.erase("I");
  CHECK_THROWS_AS(apply_morphism(broken, t), Error);
}

TEST_CASE("property: f_R and u_R agree with reference translations") {
  for (auto const& t : enumerate_closed_terms(ski(), 7)) {
    auto ft = apply_morphism(morphism_f_r(), t);
    CHECK(ft == ref_f_r(t));
    CHECK(is_canonical(skir(), ft));
    CHECK(apply_morphism(morphism_u_r(), ft) == ref_u_r(ft));
  }
}

TEST_CASE("property: u_R after f_R is the identity") {
  for (auto const& t : enumerate_closed_terms(ski(), 7)) {
    CHECK(canonicalize(ski(), apply_morphism(morphism_u_r(), apply_morphism(morphism_f_r(), t))) == t);
  }
  std::mt19937 rng(21);
  for (int i = 0; i < 1000; ++i) {
    auto t = oracle::random_term(rng, {"S", "K", "I"}, 9);
    CHECK(apply_morphism(morphism_u_r(), apply_morphism(morphism_f_r(), t)) == t);
  }
}

TEST_CASE("property: f_R simulates every SKI step") {
  auto f = morphism_f_r();
  auto u = morphism_u_r();
  for (auto const& t : enumerate_closed_terms(ski(), 7)) {
    auto ft = apply_morphism(f, t);
    auto fs = successors(skir(), ft, EdgeMode::single);
    for (auto const& step : successors(ski(), t, EdgeMode::single)) {
      auto want = ski().rules[step.label.redexes[0].rule].name + "_r";
      bool found = false;
      for (auto const& s : fs) {
        found = found
                || (skir().rules[s.label.redexes[0].rule].name == want
                    && apply_morphism(u, s.term) == step.term);
      }
      CHECK_MESSAGE(found, to_string(t) << " -> " << to_string(step.term));
    }
  }
}

TEST_CASE("validating morphisms") {
  auto f = morphism_f_r();
  auto u = morphism_u_r();
  CHECK(validate_morphism(u).passed());

  auto judged = validate_morphism(f, default_morphism_fuel, &u);
  CHECK(judged.passed());

  // Read literally, the marked σ leaves its third argument unmarked while
  // f_R of the unmarked right-hand side marks it, so the strict check
  // fails on σ and κ, ι only hold up to erasing markers.
  auto strict = validate_morphism(f);
  CHECK_FALSE(strict.passed());
  for (auto const& c : strict.checks) {
    if (c.item.rfind("op ", 0) == 0) CHECK(c.passed);
    if (c.item == "rule σ") CHECK_FALSE(c.passed);
  }

  auto broken = morphism_f_r();
  broken.target   = skir();
  broken.op_map.insert_or_assign("app", Term::op("app", {Term::var(0), Term::var(1)}));
  broken.rule_map["κ"] = "ι_r";
  auto report = validate_morphism(broken, default_morphism_fuel, &u);
  CHECK_FALSE(report.passed());
  for (auto const& c : report.checks) {
    if (c.item == "rule κ") CHECK_FALSE(c.passed);
  }

  auto bad_arity = morphism_u_r();
  bad_arity.op_map.insert_or_assign("R", Term::var(3));
  CHECK_FALSE(validate_morphism(bad_arity).passed());

  auto id = identity_morphism(skir());
  CHECK(validate_morphism(id).passed());
}

TEST_CASE("weak-head evaluation through a root marker") {
  auto ks = Term::op("app", {parse_term(ski(), "(K S)"), omega()});
  auto r  = normalize(skir(), mark_root(ks), Strategy::leftmost_outermost, 50);
  REQUIRE(std::holds_alternative<NormalForm>(r));
  CHECK(to_string(std::get<NormalForm>(r).term) == "R(S)");
  // The marker never reaches the argument, so Ω is never touched.
  auto full = normalize(skir(), mark_root(ks), Strategy::full, 50);
  REQUIRE(std::holds_alternative<NormalForm>(full));
  CHECK(to_string(std::get<NormalForm>(full).term) == "R(S)");

  std::vector<Step> trace;
  auto li = normalize(ski(), ks, Strategy::leftmost_innermost, 20, &trace);
  CHECK(std::holds_alternative<Timeout>(li));
  REQUIRE(trace.size() == 20);
  for (auto const& s : trace) {
    CHECK_FALSE(find_redexes(ski(), s.term).empty());
  }
}
