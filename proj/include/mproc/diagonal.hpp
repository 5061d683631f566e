#pragma once

// Diagonal constructions. Given a candidate verifier ("blue") that claims to
// decide whether a quoted procedure measures temperature, and an accepted
// reference procedure ("red"), build the "green" machine that does the
// opposite of what blue predicts about it, feed it its own description and
// report the contradiction. The same scheme refutes candidate halting
// deciders.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mproc/executor.hpp"
#include "mproc/machine.hpp"
#include "mproc/providers.hpp"
#include "mproc/worlds.hpp"

namespace mproc {

/// Result printed by green when blue says yes.
inline constexpr std::string_view kNoTemperature = "NOTEMP";
/// Result printed when a consultation cannot be performed.
inline constexpr std::string_view kErrorResult = "ERR";

/// Reads the thermometer's integer degrees ("23" at 23.7).
Machine make_reference_thermometer();

/// Output of the reference procedure on a fresh world with these
/// parameters and seed; nullopt if it does not halt.
std::optional<std::string> reference_output(const ThermometerParams& params, std::uint64_t seed);

/// Thermometer world for diagonal runs: the thermometer is the world's
/// fragment 0, so it samples like the reference procedure's world.
ProviderSet thermometer_world(const ThermometerParams& params, std::uint64_t seed);

/// Green: consults `blue_says_yes` about the pair on its tape, then erases
/// the tape and either prints "NOTEMP" (yes), runs `red` (no) or prints
/// "ERR" (cannot perform). `red` must start on a blank cell with only
/// blanks to its right. The verifier itself is bound through the world's
/// providers. Throws CompositionError if red collides with the erase loop.
Machine make_green(const Machine& red);

struct SelfApplication {
  Machine core;             // the machine taking a quoted machine as input
  std::string core_quote;   // its description
  Machine baked;            // core with its own description baked in
  std::string baked_quote;
};

/// G = bake_input(green, quote(green)); a lone quote on the tape stands for
/// the self-pair, so G on an empty tape behaves as green(<green>, <green>).
SelfApplication self_apply(const Machine& green);

/// Operational T predicate: the run halted with exactly the reference
/// procedure's output on the same world.
bool measures_temperature(const RunOutcome& outcome, const ThermometerParams& params, std::uint64_t seed);

/// Halting diagonal: consults `h_says_halt` about its self-pair; loops
/// forever on yes and prints "0" on no ("ERR" if it cannot ask).
SelfApplication make_halting_diagonal();

// Built-in candidates.

/// Always answers `answer`; id is "const-<name>".
Decider constant_decider(std::string name, char answer);

/// "sim:<budget>": answers '1' iff the quoted machine, run on the input in
/// a fresh thermometer world for at most `budget` steps, halts with the
/// reference output. Consultations of itself inside that simulation are
/// answered by the same candidate with one step less of budget.
VerifierHandle simulating_verifier(std::size_t budget, const ThermometerParams& params, std::uint64_t seed);

/// "sim:<budget>": answers 'H' iff the quoted machine halts on the input
/// within `budget` steps, self-consultations as for simulating_verifier.
HaltingDecider simulating_halting_decider(std::size_t budget);

/// Parses "const-yes", "const-no" or "sim:<budget>". Throws
/// std::invalid_argument.
VerifierHandle parse_verifier(std::string_view name, const ThermometerParams& params, std::uint64_t seed);

/// Parses "const-H", "const-N", "sim:<budget>" or "bounded-sim:<budget>".
HaltingDecider parse_halting_decider(std::string_view name);

enum class Behavior { MeasuredTemperature, DidNotMeasure, NonEffective, Halted, BudgetExhausted, Undetermined };

std::string_view to_string(Behavior b);

struct RefutationReport {
  std::string candidate_id;
  std::size_t candidate_budget = 0;
  std::string core_quote;                    // <green> (or <D>): what the verdict is about
  std::string green_quote;                   // <G>: the argument-free self-application
  std::optional<char> verdict;               // nullopt if the candidate did not answer
  std::optional<Response> branch;            // how the consultation during the run went
  RunOutcome outcome;                        // G on the empty tape
  std::optional<std::string> reference;      // red's output (verifier reports only)
  Behavior actual = Behavior::Undetermined;
  bool contradiction = false;
  std::vector<std::string> transcript;
};

/// Builds red, green and G; asks the candidate about (<green>, <green>);
/// runs G on an empty tape in a fresh thermometer world with `budget`
/// steps; compares.
RefutationReport refute_verifier(const VerifierHandle& candidate, const ThermometerParams& params,
                                 std::size_t budget, std::uint64_t seed = 0);

/// Same for a halting decider; actual behavior is Halted or BudgetExhausted.
RefutationReport refute_halting_decider(const HaltingDecider& candidate, std::size_t budget);

struct GreenProbe {
  RunOutcome outcome;
  std::optional<Response> branch;
  std::vector<std::string> transcript;
};

/// Runs green directly on `tape` (e.g. a garbage tape) with the candidate
/// bound, recording which branch was taken.
GreenProbe probe_green(const VerifierHandle& candidate, std::string_view tape, const ThermometerParams& params,
                       std::size_t budget, std::uint64_t seed = 0);

}  // namespace mproc
