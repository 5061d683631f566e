#include "doctest.h"
#include "mproc/compose.hpp"
#include "mproc/dsl.hpp"
#include "mproc/executor.hpp"
#include "support/generators.hpp"
#include "support/reference.hpp"

using namespace mproc;
using namespace mproc::testing;

namespace {

Machine hello() { return parse_dsl("q0 _ h q1\nq1 h R q2\nq2 _ i q3\n"); }

}  // namespace

TEST_CASE("inline_subroutine: HELLO at a hook state") {
  // q0 walks right twice, reaching q9, which has no instructions of its own.
  const auto host = parse_dsl("alphabet: _ h i\nq0 _ R q1\nq1 _ R q9\nq5 _ R q5\n");
  const auto combined = inline_subroutine(host, StateId{9}, hello());
  const auto ref = ref_simulate(combined, "", 100);
  REQUIRE(ref.halted);
  CHECK(ref.result == "hi");
  const auto o = run(combined, "", {.budget = 100});
  CHECK(o.status == RunStatus::Halted);
  CHECK(*o.result == "hi");
  CHECK(o.steps == 5);
}

TEST_CASE("inline_subroutine: empty sub leaves the host") {
  const auto host = parse_dsl("q0 _ a q1\nq1 a R q2\n");
  CHECK(same_procedure(inline_subroutine(host, StateId{2}, Machine{}), host));
}

TEST_CASE("inline_subroutine: preconditions") {
  const auto host = parse_dsl("q0 _ a q1\n");
  CHECK_THROWS_AS(inline_subroutine(host, StateId{1}, hello()), CompositionError);  // h, i not in host
  const auto wide = parse_dsl("alphabet: _ a h i\nq0 _ a q1\n");
  CHECK_THROWS_AS(inline_subroutine(wide, StateId{0}, hello()), CompositionError);  // (q0,_) collides
}

TEST_CASE("bake_input examples") {
  Machine empty;
  empty.alphabet.insert('7');
  auto o = run(bake_input(empty, "7"), "", {.budget = 100});
  CHECK(o.status == RunStatus::Halted);
  CHECK(*o.result == "7");

  o = run(bake_input(hello(), ""), "", {.budget = 100});
  CHECK(*o.result == "hi");
  CHECK(o.steps == 3);

  CHECK_THROWS(bake_input(hello(), "z"));
}

TEST_CASE("bake_input costs 3n-2 steps before handing over") {
  Machine m;
  m.alphabet = {kBlank, 'a', 'b'};
  for (std::string e : {"a", "ab", "abba", "b_a"}) {
    const auto o = run(bake_input(m, e), "", {.budget = 100});
    CHECK(o.steps == 3 * e.size() - 2);
    CHECK(*o.result == run(m, e, {.budget = 100}).result.value());
  }
}

TEST_CASE("property: bake_input equivalence on random machines") {
  MachineGen gen(17);
  int mismatches = 0;
  for (int i = 0; i < 100; ++i) {
    const auto m = gen.machine();
    const auto e = gen.input(m, 5);
    const auto a = run(m, e, {.budget = 10000});
    const auto b = run(bake_input(m, e), "", {.budget = 10000 + 3 * e.size()});
    mismatches += a.status != b.status || a.result != b.result;
  }
  CHECK(mismatches == 0);
}
