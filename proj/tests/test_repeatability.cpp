#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "mproc/diagonal.hpp"
#include "mproc/dsl.hpp"
#include "mproc/procedures.hpp"
#include "mproc/repeatability.hpp"
#include "support/generators.hpp"
#include "support/reference.hpp"

using namespace mproc;
using namespace mproc::testing;

namespace {

std::string slurp(const std::string& rel) {
  std::ifstream in(std::string(MPROC_SOURCE_DIR) + "/" + rel);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::uint64_t> seed_range(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (auto s = lo; s <= hi; ++s) out.push_back(s);
  return out;
}

WorldFactory dice_factory() {
  return [](std::uint64_t seed) {
    ProviderSet p(seed);
    p.add(make_dice_world(seed));
    return p;
  };
}

WorldFactory thermometer_factory(ThermometerParams params) {
  return [params](std::uint64_t seed) {
    ProviderSet p(seed);
    p.add(make_thermometer_world(params, seed));
    return p;
  };
}

// Half-up rounding on the exact digit string with integer arithmetic.
std::string ref_round(const std::string& s, int n) {
  const auto point = s.find('.');
  const int scale = point == std::string::npos ? 0 : static_cast<int>(s.size() - point - 1);
  std::string digits = s;
  digits.erase(std::remove(digits.begin(), digits.end(), '.'), digits.end());
  unsigned long long v = std::stoull(digits);
  if (v == 0) return "0";
  const int len = static_cast<int>(std::to_string(v).size());
  int exp = -scale;
  if (len > n) {
    unsigned long long p = 1;
    for (int i = 0; i < len - n; ++i) p *= 10;
    const auto r = v % p;
    v /= p;
    if (2 * r >= p) ++v;
    exp += len - n;
    if (static_cast<int>(std::to_string(v).size()) > n) {
      v /= 10;
      ++exp;
    }
  }
  std::string q = std::to_string(v);
  if (len < n) {  // pad with zeros to n figures
    q += std::string(n - len, '0');
    exp -= n - len;
  }
  if (exp >= 0) return q + std::string(exp, '0');
  const auto frac = static_cast<std::size_t>(-exp);
  if (q.size() > frac) return q.substr(0, q.size() - frac) + "." + q.substr(q.size() - frac);
  return "0." + std::string(frac - q.size(), '0') + q;
}

}  // namespace

TEST_CASE("run_trials: provider-free and looping machines") {
  const auto hello = parse_dsl(slurp("machines/hello.tm"));
  const auto t = run_trials(hello, "", dice_factory(), seed_range(1, 10), 100);
  REQUIRE(t.trials.size() == 10);
  for (const auto& trial : t.trials) CHECK(*trial.outcome.result == "hi");
  CHECK(is_repeatable(t));

  const auto loop = run_trials(parse_dsl(slurp("machines/loop.tm")), "", dice_factory(), seed_range(1, 10), 50);
  for (const auto& trial : loop.trials) CHECK(trial.outcome.status == RunStatus::BudgetExhausted);
  CHECK_FALSE(is_repeatable(loop));
}

TEST_CASE("run_trials: dice machine against reference rolls") {
  const auto dice = parse_dsl(slurp("machines/dice.tm"));
  const auto seeds = seed_range(1, 100);
  const auto t = run_trials(dice, "", dice_factory(), seeds, 100, 4);
  std::set<std::string> seen;
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    CHECK(t.trials[i].seed == seeds[i]);
    RefMt64 r(seeds[i]);
    CHECK(*t.trials[i].outcome.result == std::to_string(ref_face(r)));
    seen.insert(*t.trials[i].outcome.result);
  }
  CHECK(seen.size() >= 2);
  CHECK_FALSE(is_repeatable(t));
}

TEST_CASE("run_trials: thread count does not change the report") {
  const auto dice = parse_dsl(slurp("machines/dice.tm"));
  const auto a = run_trials(dice, "", dice_factory(), seed_range(0, 63), 100, 1);
  const auto b = run_trials(dice, "", dice_factory(), seed_range(0, 63), 100, 8);
  for (std::size_t i = 0; i < a.trials.size(); ++i) {
    CHECK(a.trials[i].seed == b.trials[i].seed);
    CHECK(a.trials[i].outcome.result == b.trials[i].outcome.result);
  }
}

TEST_CASE("is_repeatable: vacuous and mixed sets") {
  const auto hello = parse_dsl(slurp("machines/hello.tm"));
  CHECK(is_repeatable(run_trials(hello, "", dice_factory(), {5}, 100)));
  CHECK_FALSE(is_repeatable(run_trials(hello, "", dice_factory(), {5}, 2)));  // did not halt
}

TEST_CASE("truncate_significant") {
  CHECK(truncate_significant("23.712", 2) == "24");
  CHECK(truncate_significant("23.712", 4) == "23.71");
  CHECK(truncate_significant("23.712", 5) == "23.712");
  CHECK(truncate_significant("23.450", 3) == "23.5");
  CHECK(truncate_significant("99.960", 3) == "100");
  CHECK(truncate_significant("05.200", 2) == "5.2");
  CHECK(truncate_significant("00.012", 1) == "0.01");
  CHECK(truncate_significant("7", 3) == "7.00");
  CHECK(truncate_significant("00.000", 2) == "0");
  CHECK_THROWS_AS(truncate_significant("hi", 2), NotNumeric);
  CHECK_THROWS_AS(truncate_significant("2.", 2), NotNumeric);
  CHECK_THROWS_AS(truncate_significant("", 2), NotNumeric);
  CHECK_THROWS_AS(truncate_significant("1.5", 0), std::invalid_argument);
  CHECK_THROWS_AS(truncate_significant("1.5", 6), std::invalid_argument);
}

TEST_CASE("property: truncation agrees with integer rounding") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 5000; ++i) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%02d.%03d", static_cast<int>(rng() % 100), static_cast<int>(rng() % 1000));
    for (int n = 1; n <= 5; ++n) REQUIRE(truncate_significant(buf, n) == ref_round(buf, n));
  }
}

TEST_CASE("thermometer repeatability against reference samples") {
  const auto reader = make_thermometer_reader(ReaderFormat::Full);
  const ThermometerParams params{23.7, 0.05};
  const auto seeds = seed_range(1, 100);
  const auto t = run_trials(reader, "", thermometer_factory(params), seeds, 1000);
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    CHECK(t.trials[i].outcome.result == ref_thermometer_sample(23.7, 0.05, seeds[i]));
  }
  CHECK_FALSE(is_repeatable(t));
  CHECK(repeatable_after_truncation(t, 2));
  CHECK_FALSE(repeatable_after_truncation(t, 5));

  // Monotone in the number of figures.
  bool seen_repeatable = false;
  for (int n = 5; n >= 1; --n) {
    const bool r = repeatable_after_truncation(t, n).repeatable;
    if (seen_repeatable) CHECK(r);
    seen_repeatable = seen_repeatable || r;
  }

  const auto exact = run_trials(reader, "", thermometer_factory({23.7, 0.0}), seed_range(1, 20), 1000);
  CHECK(is_repeatable(exact));
  for (int n = 1; n <= 5; ++n) CHECK(repeatable_after_truncation(exact, n));
}

TEST_CASE("thermometer reader file matches the generated reader") {
  CHECK(slurp("machines/thermometer.tm") == render_dsl(make_thermometer_reader(ReaderFormat::Full)));
}

TEST_CASE("truncation of a non-numeric trial is an error") {
  const auto hello = parse_dsl(slurp("machines/hello.tm"));
  const auto t = run_trials(hello, "", dice_factory(), {1, 2}, 100);
  CHECK_THROWS_AS(repeatable_after_truncation(t, 2), NotNumeric);
}

TEST_CASE("property: is_repeatable is permutation invariant") {
  const auto dice = parse_dsl(slurp("machines/dice.tm"));
  auto t = run_trials(dice, "", dice_factory(), seed_range(1, 30), 100);
  const auto base = is_repeatable(t);
  std::mt19937 rng(1);
  for (int i = 0; i < 20; ++i) {
    std::shuffle(t.trials.begin(), t.trials.end(), rng);
    const auto v = is_repeatable(t);
    CHECK(v.repeatable == base.repeatable);
    CHECK(v.distinct_results == base.distinct_results);
  }
}

TEST_CASE("property: provider-free machines are repeatable") {
  MachineGen gen(41);
  for (int i = 0; i < 200; ++i) {
    const auto m = gen.machine();
    const auto t = run_trials(m, "", dice_factory(), seed_range(1, 5), 500, 1);
    const bool halts = run(m, "", {.budget = 500}).status == RunStatus::Halted;
    CHECK(is_repeatable(t).repeatable == halts);
    CHECK(is_repeatable(t).distinct_results.size() == (halts ? 1u : 0u));
  }
}
