#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mproc/machine.hpp"
#include "mproc/providers.hpp"
#include "mproc/tape.hpp"

namespace mproc {

/// Predicate consulted by OracleBranch instructions.
class Oracle {
 public:
  explicit Oracle(std::function<bool(std::string_view)> accepts) : accepts_(std::move(accepts)) {}

  /// Accepts exactly the listed tape contents.
  static Oracle membership(std::set<std::string, std::less<>> accepted);

  bool accepts(std::string_view tape_content) const { return accepts_(tape_content); }

 private:
  std::function<bool(std::string_view)> accepts_;
};

/// A validated machine with its dispatch table. Immutable once built.
class Program {
 public:
  /// Throws InvalidMachine.
  explicit Program(Machine m);

  const Machine& machine() const noexcept { return machine_; }
  const Instruction* lookup(StateId state, Symbol read) const;

 private:
  Machine machine_;
  std::unordered_map<std::uint64_t, std::size_t> dispatch_;
};

struct Configuration {
  Tape tape;
  std::int64_t head = 0;
  StateId state = kInitialState;
  std::size_t steps = 0;
};

enum class StepStatus { Halted, Stepped };

struct StepResult {
  StepStatus status;
  const Instruction* applied = nullptr;
  std::optional<Response> response;  // provider answer for Act / ReadAct
};

/// Applies the instruction matching (state, symbol under head). Throws
/// ExecutionError for providerless ids or an oracle branch without oracle.
StepResult step(Configuration& c, const Program& p, ProviderSet& providers, const Oracle* oracle = nullptr);

enum class RunStatus { Halted, BudgetExhausted, ExecutionError };

std::string_view to_string(RunStatus s);

enum class TraceLevel { None, Steps };

struct TraceEntry {
  std::size_t step = 0;
  StateId state;
  std::int64_t head = 0;
  Symbol read = kBlank;
  std::string instruction;
  std::optional<Response> response;
};

struct RunOutcome {
  RunStatus status = RunStatus::Halted;
  std::optional<std::string> result;  // present iff Halted
  std::size_t steps = 0;
  std::string error;                  // set iff ExecutionError
  std::vector<TraceEntry> trace;
};

struct RunOptions {
  std::size_t budget = 100000;
  TraceLevel trace = TraceLevel::None;
  const Oracle* oracle = nullptr;
};

/// Writes `input` on cells 0..len-1, starts in q0 at cell 0 and steps until
/// the machine halts, the budget is spent or execution fails. Throws
/// InvalidMachine for an invalid machine and std::invalid_argument for a
/// zero budget or input outside the alphabet.
RunOutcome run(const Program& p, std::string_view input, ProviderSet& providers, const RunOptions& opts = {});
RunOutcome run(const Machine& m, std::string_view input, ProviderSet& providers, const RunOptions& opts = {});

/// Provider-free convenience overload.
RunOutcome run(const Machine& m, std::string_view input, const RunOptions& opts = {});

}  // namespace mproc
