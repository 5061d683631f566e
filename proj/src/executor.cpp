#include "mproc/executor.hpp"

#include <stdexcept>

namespace mproc {

namespace {

std::uint64_t pack(StateId s, Symbol read) {
  return (std::uint64_t{s.value} << 8) | static_cast<unsigned char>(read);
}

}  // namespace

Oracle Oracle::membership(std::set<std::string, std::less<>> accepted) {
  return Oracle([set = std::move(accepted)](std::string_view content) { return set.contains(content); });
}

Program::Program(Machine m) : machine_(std::move(m)) {
  require_valid(machine_);
  dispatch_.reserve(machine_.instructions.size());
  for (std::size_t i = 0; i < machine_.instructions.size(); ++i) {
    const auto& k = machine_.instructions[i].key;
    dispatch_.emplace(pack(k.state, k.read), i);
  }
}

const Instruction* Program::lookup(StateId state, Symbol read) const {
  auto it = dispatch_.find(pack(state, read));
  return it == dispatch_.end() ? nullptr : &machine_.instructions[it->second];
}

StepResult step(Configuration& c, const Program& p, ProviderSet& providers, const Oracle* oracle) {
  const Instruction* ins = p.lookup(c.state, c.tape.read(c.head));
  if (ins == nullptr) return {StepStatus::Halted};

  StepResult r{StepStatus::Stepped, ins};
  if (const auto* op = std::get_if<Print>(&ins->op)) {
    c.tape.write(c.head, op->write);
    c.state = op->next;
  } else if (const auto* op = std::get_if<MoveRight>(&ins->op)) {
    ++c.head;
    c.state = op->next;
  } else if (const auto* op = std::get_if<MoveLeft>(&ins->op)) {
    --c.head;
    c.state = op->next;
  } else if (const auto* op = std::get_if<OracleBranch>(&ins->op)) {
    if (oracle == nullptr) throw ExecutionError("oracle branch at " + to_string(ins->key) + " with no oracle");
    c.state = oracle->accepts(result_of(c.tape)) ? op->yes : op->no;
  } else if (const auto* op = std::get_if<Act>(&ins->op)) {
    const auto tape = result_of(c.tape);
    r.response = providers.perform(op->action, tape, c.steps);
    c.state = *r.response == Response::Performed ? op->ok : op->fail;
  } else if (const auto* op = std::get_if<ReadAct>(&ins->op)) {
    const auto tape = result_of(c.tape);
    r.response = providers.verify(op->reading, tape, c.steps);
    switch (*r.response) {
      case Response::True: c.state = op->on_true; break;
      case Response::False: c.state = op->on_false; break;
      default: c.state = op->fail; break;
    }
  }
  ++c.steps;
  return r;
}

std::string_view to_string(RunStatus s) {
  switch (s) {
    case RunStatus::Halted: return "Halted";
    case RunStatus::BudgetExhausted: return "BudgetExhausted";
    case RunStatus::ExecutionError: return "ExecutionError";
  }
  return "unknown";
}

RunOutcome run(const Program& p, std::string_view input, ProviderSet& providers, const RunOptions& opts) {
  if (opts.budget == 0) throw std::invalid_argument("budget must be positive");
  for (Symbol s : input) {
    if (!p.machine().alphabet.contains(s)) {
      throw std::invalid_argument("input symbol '" + std::string(1, s) + "' is not in the machine's alphabet");
    }
  }

  Configuration c{Tape(input)};
  RunOutcome out;
  try {
    for (;;) {
      if (c.steps == opts.budget) {
        if (p.lookup(c.state, c.tape.read(c.head)) == nullptr) break;
        out.status = RunStatus::BudgetExhausted;
        out.steps = c.steps;
        return out;
      }
      TraceEntry entry{c.steps, c.state, c.head, c.tape.read(c.head)};
      const auto r = step(c, p, providers, opts.oracle);
      if (r.status == StepStatus::Halted) break;
      if (opts.trace == TraceLevel::Steps) {
        entry.instruction = to_string(*r.applied);
        entry.response = r.response;
        out.trace.push_back(std::move(entry));
      }
    }
  } catch (const ExecutionError& e) {
    out.status = RunStatus::ExecutionError;
    out.steps = c.steps;
    out.error = e.what();
    return out;
  }
  out.status = RunStatus::Halted;
  out.result = result_of(c.tape);
  out.steps = c.steps;
  return out;
}

RunOutcome run(const Machine& m, std::string_view input, ProviderSet& providers, const RunOptions& opts) {
  return run(Program(m), input, providers, opts);
}

RunOutcome run(const Machine& m, std::string_view input, const RunOptions& opts) {
  ProviderSet none;
  return run(m, input, none, opts);
}

}  // namespace mproc
