#include "mproc/diagonal.hpp"

#include <charconv>
#include <cstdio>
#include <memory>

#include "mproc/builder.hpp"
#include "mproc/compose.hpp"
#include "mproc/procedures.hpp"
#include "mproc/quote.hpp"

namespace mproc {

namespace {

std::string describe_world(const ThermometerParams& p, std::uint64_t seed) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "world(true_temp %.3f, sigma %.3f, seed %llu)", p.true_temp, p.noise_sigma,
                static_cast<unsigned long long>(seed));
  return buf;
}

std::string quoted(std::string_view s) { return "\"" + std::string(s) + "\""; }

std::size_t parse_budget(std::string_view digits, std::string_view name) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size() || v == 0) {
    throw std::invalid_argument("bad candidate budget in '" + std::string(name) + "'");
  }
  return v;
}

char simulate_verifier(std::size_t budget, const ThermometerParams& params, std::uint64_t seed,
                       const std::shared_ptr<const std::optional<std::string>>& reference, std::string_view code,
                       std::string_view input) {
  if (budget == 0 || !*reference) return '0';
  Machine m;
  try {
    m = unquote(code);
  } catch (const DecodeError&) {
    return '0';
  }
  ProviderSet world = thermometer_world(params, seed);
  Decider nested{"sim:" + std::to_string(budget - 1), budget - 1,
                 [=](std::string_view c, std::string_view e) {
                   return simulate_verifier(budget - 1, params, seed, reference, c, e);
                 }};
  world.add(make_verifier_provider(std::move(nested)));
  try {
    const auto out = run(m, input, world, {.budget = budget});
    return out.status == RunStatus::Halted && out.result == **reference ? '1' : '0';
  } catch (const std::invalid_argument&) {
    return '0';
  }
}

char simulate_halting(std::size_t budget, std::string_view code, std::string_view input) {
  if (budget == 0) return 'N';
  Machine m;
  try {
    m = unquote(code);
  } catch (const DecodeError&) {
    return 'N';
  }
  ProviderSet world;
  Decider nested{"sim:" + std::to_string(budget - 1), budget - 1,
                 [=](std::string_view c, std::string_view e) { return simulate_halting(budget - 1, c, e); }};
  world.add(make_halting_provider(std::move(nested)));
  try {
    return run(m, input, world, {.budget = budget}).status == RunStatus::Halted ? 'H' : 'N';
  } catch (const std::invalid_argument&) {
    return 'N';
  }
}

std::optional<char> ask(const Decider& d, const std::string& code) {
  try {
    return d.decide(code, code);
  } catch (const DeciderTimeout&) {
    return std::nullopt;
  }
}

std::optional<Response> last_branch(const DeciderProvider& p) {
  if (p.calls().empty()) return std::nullopt;
  return p.calls().back().response;
}

std::string branch_story(std::optional<Response> branch) {
  if (!branch) return "green: blue was never consulted";
  switch (*branch) {
    case Response::True:
      return "green: blue_says_yes -> True (Yes branch): turned off the tentative procedure, printed \"NOTEMP\"";
    case Response::False:
      return "green: blue_says_yes -> False (No branch): measured with red, printed its result";
    default:
      return "green: blue_says_yes -> CannotPerform (CannotPerform branch): printed \"ERR\"";
  }
}

std::string outcome_story(const RunOutcome& out) {
  std::string s = std::string(to_string(out.status)) + " after " + std::to_string(out.steps) + " steps";
  if (out.result) s += " with " + quoted(*out.result);
  if (!out.error.empty()) s += " (" + out.error + ")";
  return s;
}

}  // namespace

Machine make_reference_thermometer() { return make_thermometer_reader(ReaderFormat::IntegerDegrees); }

ProviderSet thermometer_world(const ThermometerParams& params, std::uint64_t seed) {
  ProviderSet world(seed);
  world.add(make_thermometer_world(params, fragment_seed(seed, 0)));
  return world;
}

std::optional<std::string> reference_output(const ThermometerParams& params, std::uint64_t seed) {
  ProviderSet world = thermometer_world(params, seed);
  const auto out = run(make_reference_thermometer(), "", world, {.budget = 10000});
  if (out.status != RunStatus::Halted) return std::nullopt;
  return out.result;
}

Machine make_green(const Machine& red) {
  MachineBuilder b("green");
  b.symbols(kQuotingAlphabet);
  b.symbols(kNoTemperature);
  b.symbols(kErrorResult);
  for (Symbol s : red.alphabet) b.symbols(std::string_view(&s, 1));

  const StateId yes = b.fresh();
  const StateId no = b.fresh();
  const StateId err = b.fresh();
  const std::vector<Symbol> alphabet(b.machine().alphabet.begin(), b.machine().alphabet.end());
  for (Symbol s : alphabet) b.add(kInitialState, s, ReadAct{std::string(kVerifierReading), yes, no, err});

  b.erase_rightwards(yes);
  b.write_and_halt(yes, kNoTemperature);
  b.erase_rightwards(err);
  b.write_and_halt(err, kErrorResult);
  b.erase_rightwards(no);
  return inline_subroutine(b.take(), no, red);
}

SelfApplication self_apply(const Machine& green) {
  SelfApplication sa;
  sa.core = canonical(green);
  sa.core_quote = quote(sa.core);
  sa.baked = bake_input(sa.core, sa.core_quote);
  sa.baked_quote = quote(sa.baked);
  return sa;
}

bool measures_temperature(const RunOutcome& outcome, const ThermometerParams& params, std::uint64_t seed) {
  if (outcome.status != RunStatus::Halted) return false;
  const auto reference = reference_output(params, seed);
  return reference && outcome.result == reference;
}

SelfApplication make_halting_diagonal() {
  MachineBuilder b("halting_diagonal");
  b.symbols(kQuotingAlphabet);
  b.symbols(kErrorResult);

  const StateId loop_a = b.fresh();
  const StateId loop_b = b.fresh();
  const StateId no = b.fresh();
  const StateId err = b.fresh();
  const std::vector<Symbol> alphabet(b.machine().alphabet.begin(), b.machine().alphabet.end());
  for (Symbol s : alphabet) {
    b.add(kInitialState, s, ReadAct{std::string(kHaltingReading), loop_a, no, err});
    b.add(loop_a, s, MoveRight{loop_b});
    b.add(loop_b, s, MoveLeft{loop_a});
  }
  b.erase_rightwards(no);
  b.write_and_halt(no, "0");
  b.erase_rightwards(err);
  b.write_and_halt(err, kErrorResult);
  return self_apply(b.take());
}

Decider constant_decider(std::string name, char answer) {
  return {"const-" + std::move(name), 1000, [answer](std::string_view, std::string_view) { return answer; }};
}

VerifierHandle simulating_verifier(std::size_t budget, const ThermometerParams& params, std::uint64_t seed) {
  auto reference = std::make_shared<const std::optional<std::string>>(reference_output(params, seed));
  return {"sim:" + std::to_string(budget), budget, [=](std::string_view code, std::string_view input) {
            return simulate_verifier(budget, params, seed, reference, code, input);
          }};
}

HaltingDecider simulating_halting_decider(std::size_t budget) {
  return {"sim:" + std::to_string(budget), budget,
          [=](std::string_view code, std::string_view input) { return simulate_halting(budget, code, input); }};
}

VerifierHandle parse_verifier(std::string_view name, const ThermometerParams& params, std::uint64_t seed) {
  if (name == "const-yes") return constant_decider("yes", '1');
  if (name == "const-no") return constant_decider("no", '0');
  if (name.starts_with("sim:")) return simulating_verifier(parse_budget(name.substr(4), name), params, seed);
  throw std::invalid_argument("unknown verifier candidate '" + std::string(name) + "'");
}

HaltingDecider parse_halting_decider(std::string_view name) {
  if (name == "const-H") return constant_decider("H", 'H');
  if (name == "const-N") return constant_decider("N", 'N');
  if (name.starts_with("sim:")) return simulating_halting_decider(parse_budget(name.substr(4), name));
  if (name.starts_with("bounded-sim:")) return simulating_halting_decider(parse_budget(name.substr(12), name));
  throw std::invalid_argument("unknown halting candidate '" + std::string(name) + "'");
}

std::string_view to_string(Behavior b) {
  switch (b) {
    case Behavior::MeasuredTemperature: return "MeasuredTemperature";
    case Behavior::DidNotMeasure: return "DidNotMeasure";
    case Behavior::NonEffective: return "NonEffective";
    case Behavior::Halted: return "Halted";
    case Behavior::BudgetExhausted: return "BudgetExhausted";
    case Behavior::Undetermined: return "Undetermined";
  }
  return "unknown";
}

RefutationReport refute_verifier(const VerifierHandle& candidate, const ThermometerParams& params,
                                 std::size_t budget, std::uint64_t seed) {
  RefutationReport r;
  r.candidate_id = candidate.id;
  r.candidate_budget = candidate.budget;

  const Machine red = make_reference_thermometer();
  const SelfApplication g = self_apply(make_green(red));
  r.core_quote = g.core_quote;
  r.green_quote = g.baked_quote;
  r.reference = reference_output(params, seed);
  r.transcript.push_back("red: reference procedure on " + describe_world(params, seed) + " prints " +
                         (r.reference ? quoted(*r.reference) : std::string("nothing")));

  r.verdict = ask(candidate, g.core_quote);
  if (r.verdict) {
    r.transcript.push_back("blue[" + candidate.id + "]: asked whether green(<green>, <green>) measures temperature, answers '" +
                           std::string(1, *r.verdict) + "'");
  } else {
    r.transcript.push_back("blue[" + candidate.id + "]: did not answer within its budget");
  }
  r.transcript.push_back("green: G is green with its own description baked in (" + std::to_string(g.core_quote.size()) +
                         " symbols); running G on an empty tape");

  ProviderSet world = thermometer_world(params, seed);
  auto blue = make_verifier_provider(candidate);
  world.add(blue);
  r.outcome = run(g.baked, "", world, {.budget = budget});
  r.branch = last_branch(*blue);
  r.transcript.push_back(branch_story(r.branch));
  r.transcript.push_back("G: " + outcome_story(r.outcome));

  if (r.outcome.status != RunStatus::Halted) {
    r.actual = Behavior::NonEffective;
  } else {
    r.actual = r.reference && r.outcome.result == r.reference ? Behavior::MeasuredTemperature : Behavior::DidNotMeasure;
  }

  if (!r.verdict || (*r.verdict != '1' && *r.verdict != '0')) {
    r.contradiction = true;
    r.transcript.push_back("blue is not effective on <G>: it gives no verdict");
  } else if (*r.verdict == '1') {
    r.contradiction = r.actual != Behavior::MeasuredTemperature;
    r.transcript.push_back(std::string("verdict '1' (measures temperature); observed ") + std::string(to_string(r.actual)) +
                           (r.contradiction ? ": contradiction" : ": consistent"));
  } else {
    r.contradiction = r.actual == Behavior::MeasuredTemperature;
    r.transcript.push_back(std::string("verdict '0' (does not measure temperature); observed ") +
                           std::string(to_string(r.actual)) + (r.contradiction ? ": contradiction" : ": consistent"));
  }
  return r;
}

RefutationReport refute_halting_decider(const HaltingDecider& candidate, std::size_t budget) {
  RefutationReport r;
  r.candidate_id = candidate.id;
  r.candidate_budget = candidate.budget;

  const SelfApplication d = make_halting_diagonal();
  r.core_quote = d.core_quote;
  r.green_quote = d.baked_quote;

  r.verdict = ask(candidate, d.core_quote);
  r.transcript.push_back("decider[" + candidate.id + "]: asked whether D halts on its own description, answers " +
                         (r.verdict ? "'" + std::string(1, *r.verdict) + "'" : std::string("nothing")));

  ProviderSet world;
  auto h = make_halting_provider(candidate);
  world.add(h);
  r.outcome = run(d.baked, "", world, {.budget = budget});
  r.branch = last_branch(*h);
  r.transcript.push_back("D: " + outcome_story(r.outcome));

  switch (r.outcome.status) {
    case RunStatus::Halted: r.actual = Behavior::Halted; break;
    case RunStatus::BudgetExhausted: r.actual = Behavior::BudgetExhausted; break;
    default: r.actual = Behavior::Undetermined; break;
  }

  if (!r.verdict || (*r.verdict != 'H' && *r.verdict != 'N')) {
    r.contradiction = true;
    r.transcript.push_back("decider is not effective on <D>: it gives no verdict");
  } else {
    const bool halted = r.actual == Behavior::Halted;
    r.contradiction = (*r.verdict == 'H') != halted;
    r.transcript.push_back(std::string("verdict '") + *r.verdict + "'; observed " + std::string(to_string(r.actual)) +
                           " within " + std::to_string(budget) + " steps" +
                           (r.contradiction ? ": contradiction" : ": consistent"));
  }
  return r;
}

GreenProbe probe_green(const VerifierHandle& candidate, std::string_view tape, const ThermometerParams& params,
                       std::size_t budget, std::uint64_t seed) {
  GreenProbe p;
  const Machine green = make_green(make_reference_thermometer());
  ProviderSet world = thermometer_world(params, seed);
  auto blue = make_verifier_provider(candidate);
  world.add(blue);
  p.outcome = run(green, tape, world, {.budget = budget});
  p.branch = last_branch(*blue);
  p.transcript.push_back("green on " + quoted(tape) + " with blue[" + candidate.id + "]");
  p.transcript.push_back(branch_story(p.branch));
  p.transcript.push_back("green: " + outcome_story(p.outcome));
  return p;
}

}  // namespace mproc
