#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "dot_check.hpp"
#include "enriched/cli.hpp"

using namespace enriched;

namespace {
  struct Result {
    int         code;
    std::string out;
    std::string err;
  };

  Result cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int                code = run(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::string theory(char const* name) {
    return std::string(THEORY_DIR) + "/" + name;
  }

  std::string temp_file(std::string const& name, std::string const& body) {
    auto          path = std::string("cli_test_") + name;
    std::ofstream(path, std::ios::binary) << body;
    return path;
  }
}  // namespace

TEST_CASE("cli check") {
  auto r = cli({"check", theory("ski.th")});
  CHECK(r.code == 0);
  CHECK(r.out == "ok: 4 ops, 3 rules\n");
  CHECK(cli({"check", theory("ski_r.th")}).out == "ok: 5 ops, 3 rules, 2 equations\n");

  auto bad_syntax = temp_file("syntax.th", "theory T\n  op S 0\n");
  auto r2         = cli({"check", bad_syntax});
  CHECK(r2.code == 2);
  CHECK(r2.err.find(":2:") != std::string::npos);

  auto bad_rule = temp_file("rule.th", "theory T\n  op K : 0\n  op app : 2\n  rule k : (K x) => y\n");
  auto r3       = cli({"check", bad_rule});
  CHECK(r3.code == 3);
  CHECK(r3.err.find("unbound variable") != std::string::npos);
  std::remove(bad_syntax.c_str());
  std::remove(bad_rule.c_str());
}

TEST_CASE("cli usage errors") {
  CHECK(cli({}).code == 1);
  CHECK(cli({"frobnicate"}).code == 1);
  CHECK(cli({"rewrite", theory("ski.th")}).code == 1);
  CHECK(cli({"rewrite", theory("ski.th"), "S", "--strategy", "random"}).code == 1);
  CHECK(cli({"laws", "--base", "cat", "--max", "2"}).code == 1);
  CHECK(cli({"check", "no/such/file.th"}).code == 1);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("cli rewrite") {
  auto r = cli({"rewrite", theory("ski.th"), "(((S K)(I K)) S)"});
  CHECK(r.code == 0);
  CHECK(r.out.find("normal form: S") != std::string::npos);
  CHECK(cli({"rewrite", theory("ski.th"), "(S K"}).code == 2);

  auto omega = "(((S I) I)((S I) I))";
  auto loose = cli({"rewrite", theory("ski.th"), omega, "--fuel", "10"});
  CHECK(loose.code == 0);
  CHECK(loose.out.find("timeout") != std::string::npos);
  CHECK(cli({"rewrite", theory("ski.th"), omega, "--fuel", "10", "--strict"}).code == 4);

  auto lazy = cli({"rewrite", theory("ski_r.th"), "R(((K S)(((S I) I)((S I) I))))", "--fuel", "50"});
  CHECK(lazy.out.find("normal form: R(S)") != std::string::npos);
}

TEST_CASE("cli graph") {
  auto r = cli({"graph", theory("ski.th"), "(((S K)(I K)) S)"});
  CHECK(r.code == 0);
  CHECK(dot::check(r.out) == "");
  auto j = cli({"graph", theory("ski.th"), "(((S K)(I K)) S)", "--format", "json"});
  CHECK(j.out.find("\"truncated\": false") != std::string::npos);

  auto big = "((K S)(((S I) I)((S I) I)))";
  CHECK(cli({"graph", theory("ski.th"), big, "--max-terms", "50"}).code == 0);
  CHECK(cli({"graph", theory("ski.th"), big, "--max-terms", "50", "--strict"}).code == 4);
  auto a = cli({"--threads", "1", "graph", theory("ski.th"), big, "--max-terms", "80", "--format", "json"});
  auto b = cli({"graph", theory("ski.th"), big, "--max-terms", "80", "--format", "json", "--threads", "4"});
  CHECK(a.out == b.out);
}

TEST_CASE("cli semantics") {
  auto t = "(((S K)(I K)) S)";
  auto d = cli({"semantics", theory("ski.th"), t, "--level", "denote"});
  CHECK(d.code == 0);
  CHECK(d.out == "components: 1\nclass 0: 5 elements, representative S\n");
  CHECK(cli({"semantics", theory("ski.th"), t, "--level", "small"}).out.find("vertices: 5") == 0);
  CHECK(cli({"semantics", theory("ski.th"), t, "--level", "big"}).out.find("objects: 5") == 0);
  CHECK(cli({"semantics", theory("ski.th"), t, "--level", "full"}).out.find("minimal: S") != std::string::npos);
  for (auto level : {"small", "big", "full", "denote"}) {
    auto r = cli({"semantics", theory("ski.th"), t, "--level", level, "--format", "dot"});
    CHECK(r.code == 0);
    CHECK(dot::check(r.out) == "");
  }
  CHECK(cli({"semantics", theory("ski.th"), t}).code == 1);
}

TEST_CASE("cli translate, laws, demo") {
  CHECK(cli({"translate", "--morphism", "f_r", "(I K)"}).out == "(R(I) K)\n");
  CHECK(cli({"translate", "--morphism", "u_r", "(R(K) S)"}).out == "(K S)\n");
  CHECK(cli({"translate", "--morphism", "f_r", "--validate"}).code == 0);

  auto laws = cli({"laws", "--base", "rgph", "--max", "3"});
  CHECK(laws.code == 0);
  CHECK(laws.out.find("rgph: 64/64 checks passed") != std::string::npos);

  auto demo = cli({"demo", "counterexample"});
  CHECK(demo.code == 0);
  CHECK(demo.out.find("F (Gph -> Cat)               1             5  no") != std::string::npos);
  CHECK(demo.out.find("F' (RGph -> Cat)             7             5  no") != std::string::npos);
  CHECK(demo.out.find("FC (sSet -> Cat)             5             5  yes") != std::string::npos);
  auto diamond = cli({"demo", "diamond"});
  CHECK(dot::check(diamond.out) == "");
}
