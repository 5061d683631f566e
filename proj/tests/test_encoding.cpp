#include "doctest.h"
#include "mproc/dsl.hpp"
#include "mproc/quote.hpp"
#include "support/generators.hpp"

using namespace mproc;
using namespace mproc::testing;

namespace {

const char* kHello = "q0 _ h q1\nq1 h R q2\nq2 _ i q3\n";

}  // namespace

TEST_CASE("parse_dsl: instruction shapes") {
  auto m = parse_dsl("q0 _ h q1\n");
  REQUIRE(m.instructions.size() == 1);
  CHECK(m.instructions[0] == Instruction{{kInitialState, kBlank}, Print{'h', StateId{1}}});

  m = parse_dsl("q1 h R q2\n");
  CHECK(m.instructions[0] == Instruction{{StateId{1}, 'h'}, MoveRight{StateId{2}}});

  m = parse_dsl("q0 _ ?hot q1 q2 q3\n");
  CHECK(m.instructions[0] == Instruction{{kInitialState, kBlank}, ReadAct{"hot", StateId{1}, StateId{2}, StateId{3}}});
  CHECK(m.vocabulary == std::set<std::string>{"hot"});

  m = parse_dsl("q0 _ !roll q1 q2\nq0 a ? q4 q5\nq1 _ L q0\n");
  CHECK(m.instructions[0].op == Operation{Act{"roll", StateId{1}, StateId{2}}});
  CHECK(m.instructions[1].op == Operation{OracleBranch{StateId{4}, StateId{5}}});
  CHECK(m.instructions[2].op == Operation{MoveLeft{kInitialState}});
}

TEST_CASE("parse_dsl: headers, comments, escapes") {
  const auto m = parse_dsl(
      "# a comment line\n"
      "name: demo\n"
      "alphabet: _ a R \\#\n"
      "actions: roll\n"
      "q0 _ \\R q1   # prints the letter R\n"
      "q1 R \\# q2\n");
  CHECK(m.name == "demo");
  CHECK(m.alphabet == std::set<Symbol>{'_', 'a', 'R', '#'});
  CHECK(m.vocabulary == std::set<std::string>{"roll"});
  REQUIRE(m.instructions.size() == 2);
  CHECK(m.instructions[0].op == Operation{Print{'R', StateId{1}}});
  CHECK(m.instructions[1] == Instruction{{StateId{1}, 'R'}, Print{'#', StateId{2}}});
  CHECK(parse_dsl(render_dsl(m)) == canonical(m));
}

TEST_CASE("parse_dsl: errors carry positions") {
  try {
    parse_dsl("q0 _ h q1\nq1 h R\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_dsl("q0 _ hh q1\n"), ParseError);
  CHECK_THROWS_AS(parse_dsl("x0 _ h q1\n"), ParseError);
  CHECK_THROWS_AS(parse_dsl("name: a\nname: b\n"), ParseError);
  CHECK_THROWS_AS(parse_dsl("colour: red\n"), ParseError);
  CHECK_THROWS_AS(parse_dsl("alphabet: _ a\nq0 _ b q1\n"), InvalidMachine);
}

TEST_CASE("render_dsl") {
  const auto text = render_dsl(parse_dsl("q2 _ i q3\nq1 h R q2\nq0 _ h q1\n"));
  CHECK(text ==
        "alphabet: _ h i\n"
        "actions:\n"
        "q0 _ h q1\n"
        "q1 h R q2\n"
        "q2 _ i q3\n");
  CHECK(render_dsl(Machine{}) == "alphabet: _\nactions:\n");
  Machine named;
  named.name = "x";
  CHECK(render_dsl(named).starts_with("name: x\n"));
}

TEST_CASE("quote examples") {
  const auto hello = parse_dsl(kHello);
  const auto code = quote(hello);
  for (char c : code) CHECK(kQuotingAlphabet.find(c) != std::string_view::npos);
  CHECK(unquote(code) == canonical(hello));
  CHECK(quote(Machine{}) == "2:::");
  CHECK(unquote("2:::") == Machine{});
  CHECK(quote(parse_dsl("q0 _ a q0\n")) != quote(parse_dsl("q0 _ b q0\n")));
}

TEST_CASE("quote ignores names and authoring order") {
  auto a = parse_dsl("name: one\nq0 _ h q1\nq1 h R q2\nq2 _ i q3\n");
  auto b = parse_dsl("name: two\nq2 _ i q7\nq0 _ h q5\nq5 h R q2\n");
  CHECK(quote(a) == quote(b));
}

TEST_CASE("unquote rejects malformed codes") {
  const auto code = quote(parse_dsl(kHello));
  CHECK_THROWS_AS(unquote(""), DecodeError);
  CHECK_THROWS_AS(unquote(code.substr(0, code.size() - 1)), DecodeError);
  CHECK_THROWS_AS(unquote(code + "0"), DecodeError);
  CHECK_THROWS_AS(unquote("02:::"), DecodeError);
  CHECK_THROWS_AS(unquote("hello"), DecodeError);
}

TEST_CASE("split_quoted_pair") {
  const auto code = quote(parse_dsl(kHello));
  auto p = split_quoted_pair(code);
  REQUIRE(p);
  CHECK(p->code == code);
  CHECK(p->input == code);
  p = split_quoted_pair(code + "/ab");
  REQUIRE(p);
  CHECK(p->code == code);
  CHECK(p->input == "ab");
  CHECK_FALSE(split_quoted_pair("garbage"));
  CHECK_FALSE(split_quoted_pair(""));
}

TEST_CASE("property: quote and DSL round trips") {
  MachineGen gen(23);
  for (const std::string syms : {"_ab1", "_R?#", "_\\!L"}) {
    for (int i = 0; i < 200; ++i) {
      const auto m = gen.machine({.symbols = syms, .provider_free = false});
      const auto c = canonical(m);
      CHECK(unquote(quote(m)) == c);
      CHECK(quote(c) == quote(m));
      CHECK(parse_dsl(render_dsl(m)) == c);
    }
  }
}

TEST_CASE("property: no proper prefix of a code decodes") {
  MachineGen gen(29);
  for (int i = 0; i < 50; ++i) {
    const auto code = quote(gen.machine({.provider_free = false}));
    for (std::size_t n = 0; n < code.size(); ++n) CHECK_THROWS_AS(unquote(code.substr(0, n)), DecodeError);
  }
}
