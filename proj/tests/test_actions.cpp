#include "doctest.h"
#include "mproc/diagonal.hpp"
#include "mproc/dsl.hpp"
#include "mproc/quote.hpp"
#include "mproc/rng.hpp"
#include "mproc/world_config.hpp"
#include "mproc/worlds.hpp"
#include "support/reference.hpp"

using namespace mproc;
using namespace mproc::testing;

TEST_CASE("generator matches the reference MT19937-64") {
  RefMt64 ref;
  std::uint64_t last = 0;
  for (int i = 0; i < 10000; ++i) last = ref.next();
  CHECK(last == 9981545732273789042ULL);

  for (std::uint64_t seed : {0ULL, 1ULL, 42ULL, 0xdeadbeefULL}) {
    Rng rng(seed);
    RefMt64 r(seed);
    for (int i = 0; i < 1000; ++i) REQUIRE(rng.next() == r.next());
  }
}

TEST_CASE("generator derived draws match the reference") {
  Rng rng(9);
  RefMt64 r(9);
  for (int i = 0; i < 500; ++i) {
    CHECK(rng.below(6) + 1 == static_cast<std::uint64_t>(ref_face(r)));
    CHECK(rng.gaussian() == ref_gaussian(r));
    CHECK(rng.uniform01() == ref_uniform(r));
  }
}

TEST_CASE("perform and verify") {
  ProviderSet dice(42);
  dice.add(make_dice_world(42));
  CHECK(dice.verify("shows_3", "") == Response::CannotPerform);
  CHECK(dice.perform("roll", "") == Response::Performed);
  CHECK_THROWS_AS(dice.perform("unknown", ""), ExecutionError);
  CHECK_THROWS_AS(dice.verify("unknown", ""), ExecutionError);
  CHECK(dice.invocations() == 2);

  ProviderSet lab;
  lab.add(make_broken_instrument({"set_voltage_10"}, {"voltage_is_10"}));
  CHECK(lab.perform("set_voltage_10", "") == Response::CannotPerform);

  ProviderSet supply;
  supply.add(make_voltage_supply(true));
  CHECK(supply.verify("voltage_is_10", "") == Response::False);
  CHECK(supply.perform("set_voltage_10", "") == Response::Performed);
  CHECK(supply.verify("voltage_is_10", "") == Response::True);

  ProviderSet both;
  both.add(make_dice_world(1));
  CHECK_THROWS_AS(both.add(make_dice_world(2)), std::invalid_argument);
}

TEST_CASE("dice readings follow the reference face") {
  // Find a seed whose first roll is a 6 with the reference generator.
  std::uint64_t seed = 0;
  for (;; ++seed) {
    RefMt64 r(seed);
    if (ref_face(r) == 6) break;
  }
  auto world = make_dice_world(seed);
  ProviderSet p(seed);
  p.add(world);
  p.perform("roll", "");
  CHECK(world->face() == 6);
  CHECK(p.verify("shows_ge_4", "") == Response::True);
  CHECK(p.verify("shows_6", "") == Response::True);
  CHECK(p.verify("shows_5", "") == Response::False);
}

TEST_CASE("dice partition and balance") {
  auto world = make_dice_world(2024);
  ProviderSet p;
  p.add(world);
  RefMt64 ref(2024);
  int counts[7] = {};
  for (int i = 0; i < 6000; ++i) {
    p.perform("roll", "");
    const int face = ref_face(ref);
    REQUIRE(world->face() == face);
    ++counts[face];
    int trues = 0;
    for (int k = 1; k <= 6; ++k) trues += p.verify("shows_" + std::to_string(k), "") == Response::True;
    CHECK(trues == 1);
  }
  for (int k = 1; k <= 6; ++k) {
    CHECK(counts[k] >= 800);
    CHECK(counts[k] <= 1200);
  }
}

TEST_CASE("thermometer world") {
  CHECK_THROWS_AS(ThermometerWorld({100.0, 0.0}, 1), std::invalid_argument);
  CHECK_THROWS_AS(ThermometerWorld({-0.5, 0.0}, 1), std::invalid_argument);
  CHECK_THROWS_AS(ThermometerWorld({20.0, -1.0}, 1), std::invalid_argument);

  auto world = make_thermometer_world({23.7, 0.0}, 3);
  ProviderSet p;
  p.add(world);
  CHECK(p.verify("digit_0_ge_1", "") == Response::CannotPerform);
  CHECK(p.perform("sample", "") == Response::Performed);
  CHECK(world->rendered() == std::optional<std::string>("23.700"));
  CHECK(p.verify("digit_0_ge_3", "") == Response::False);  // tens digit is 2
  CHECK(p.verify("digit_0_ge_2", "") == Response::True);
  CHECK(p.verify("digit_2_ge_7", "") == Response::True);
  CHECK(p.verify("digit_2_ge_8", "") == Response::False);
  CHECK(p.verify("digit_4_ge_0", "") == Response::True);
  CHECK(p.verify("digit_4_ge_1", "") == Response::False);
  CHECK_THROWS_AS(p.verify("digit_5_ge_1", ""), ExecutionError);

  // Noisy samples against the reference Box-Muller draw.
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto w = make_thermometer_world({23.7, 0.05}, seed);
    ProviderSet q;
    q.add(w);
    q.perform("sample", "");
    CHECK(w->rendered() == ref_thermometer_sample(23.7, 0.05, seed));
  }
  auto a = make_thermometer_world({23.7, 0.05}, 1);
  auto b = make_thermometer_world({23.7, 0.05}, 2);
  a->perform("sample", {});
  b->perform("sample", {});
  CHECK(a->rendered() != b->rendered());

  CHECK(render_reading(5200) == "05.200");
  CHECK(render_reading(0) == "00.000");
  CHECK(render_reading(99999) == "99.999");
}

TEST_CASE("thermometer samples outside the range cannot be performed") {
  auto w = make_thermometer_world({0.0, 5.0}, 0);
  int failures = 0;
  for (int i = 0; i < 100; ++i) failures += w->perform("sample", {}) == Response::CannotPerform;
  CHECK(failures > 0);
  CHECK(failures < 100);
}

TEST_CASE("seed determinism over 1000 calls") {
  auto sequence = [](std::uint64_t seed) {
    auto config = parse_world_config(R"({"worlds":[{"type":"dice"},{"type":"thermometer","noise_sigma":0.3}]})");
    ProviderSet p = build_world(config, seed);
    std::vector<Response> out;
    for (int i = 0; i < 1000; ++i) {
      switch (i % 4) {
        case 0: out.push_back(p.perform("roll", "")); break;
        case 1: out.push_back(p.verify("shows_ge_" + std::to_string(i % 6 + 1), "")); break;
        case 2: out.push_back(p.perform("sample", "")); break;
        default: out.push_back(p.verify("digit_" + std::to_string(i % 5) + "_ge_" + std::to_string(i % 10), ""));
      }
    }
    return out;
  };
  CHECK(sequence(7) == sequence(7));
  CHECK(sequence(7) != sequence(8));
}

TEST_CASE("reading actions leave the tape alone") {
  const auto m = parse_dsl(
      "alphabet: _ a b\n"
      "q0 a !roll q1 q9\n"
      "q1 a ?shows_1 q2 q2 q2\n"
      "q2 a ?shows_ge_4 q3 q3 q3\n");
  ProviderSet p;
  p.add(make_dice_world(5));
  const auto o = run(m, "abba", p, {.budget = 10});
  CHECK(o.status == RunStatus::Halted);
  CHECK(*o.result == "abba");
  CHECK(o.steps == 3);
}

TEST_CASE("verifier provider") {
  const auto hello = quote(parse_dsl("q0 _ h q1\nq1 h R q2\nq2 _ i q3\n"));
  {
    ProviderSet p;
    auto blue = make_verifier_provider(constant_decider("yes", '1'));
    p.add(blue);
    CHECK(p.verify(kVerifierReading, hello) == Response::True);
    CHECK(p.verify(kVerifierReading, "7:1|2") == Response::CannotPerform);
    CHECK(p.verify(kVerifierReading, "") == Response::CannotPerform);
    REQUIRE(blue->calls().size() == 3);
    CHECK(blue->calls()[0].code == hello);
    CHECK(blue->calls()[0].input == hello);
  }
  {
    ProviderSet p;
    p.add(make_verifier_provider(constant_decider("no", '0')));
    CHECK(p.verify(kVerifierReading, hello) == Response::False);
  }
  {
    ProviderSet p;
    auto blue = make_verifier_provider(simulating_verifier(1000, {23.7, 0.0}, 0));
    p.add(blue);
    // HELLO on the empty input halts with "hi", which is no temperature.
    CHECK(p.verify(kVerifierReading, hello + "/") == Response::False);
    CHECK(blue->calls().back().input.empty());
    CHECK(p.verify(kVerifierReading, hello) == Response::False);
  }
  {
    ProviderSet p;
    Decider slow{"slow", 1, [](std::string_view, std::string_view) -> char { throw DeciderTimeout("budget"); }};
    p.add(make_verifier_provider(slow));
    CHECK(p.verify(kVerifierReading, hello) == Response::CannotPerform);
  }
}

TEST_CASE("world configuration") {
  const auto c = parse_world_config(
      R"({"worlds":[{"type":"thermometer","true_temp":5.2,"noise_sigma":0},{"type":"voltage_supply","available":false}]})");
  REQUIRE(c.worlds.size() == 2);
  CHECK(c.thermometer().true_temp == 5.2);
  auto p = build_world(c, 1);
  CHECK(p.has_action("sample"));
  CHECK(p.perform("set_voltage_10", "") == Response::CannotPerform);

  CHECK_THROWS_AS(parse_world_config("{"), ConfigError);
  CHECK_THROWS_AS(parse_world_config(R"({"worlds":[{"type":"ufo"}]})"), ConfigError);
  CHECK_THROWS_AS(parse_world_config(R"({"worlds":[{"type":"dice","colour":1}]})"), ConfigError);

  const auto off = parse_world_config(R"({"worlds":[{"type":"thermometer","available":false}]})");
  auto q = build_world(off, 0);
  CHECK(q.perform("sample", "") == Response::CannotPerform);
}

TEST_CASE("fragment seeds differ per fragment") {
  CHECK(fragment_seed(0, 0) != fragment_seed(0, 1));
  CHECK(fragment_seed(1, 0) != fragment_seed(0, 0));
  CHECK(fragment_seed(5, 2) == fragment_seed(5, 2));
}
