#pragma once

// Machines, instructions and static validation for the extended Turing
// machine: the classic print/move instructions plus oracle branches,
// world actions and reading actions.

#include <compare>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace mproc {

/// Tape symbols are single printable ASCII characters.
using Symbol = char;

inline constexpr Symbol kBlank = '_';

/// True for the characters allowed as symbols (0x21..0x7e).
constexpr bool is_symbol_char(char c) noexcept { return c >= 0x21 && c <= 0x7e; }

/// Action and reading ids are identifiers: [A-Za-z_][A-Za-z0-9_]*.
bool is_action_id(std::string_view s) noexcept;

struct StateId {
  std::uint32_t value = 0;

  friend auto operator<=>(const StateId&, const StateId&) = default;
};

inline constexpr StateId kInitialState{0};

std::string to_string(StateId s);

/// Dispatch key of an instruction: (state, symbol under the head).
struct DispatchKey {
  StateId state;
  Symbol read = kBlank;

  friend auto operator<=>(const DispatchKey&, const DispatchKey&) = default;
};

std::string to_string(const DispatchKey& k);

struct Print {
  Symbol write = kBlank;
  StateId next;
  friend bool operator==(const Print&, const Print&) = default;
};

struct MoveRight {
  StateId next;
  friend bool operator==(const MoveRight&, const MoveRight&) = default;
};

struct MoveLeft {
  StateId next;
  friend bool operator==(const MoveLeft&, const MoveLeft&) = default;
};

/// Branch on the configured oracle's verdict about the tape content.
struct OracleBranch {
  StateId yes;
  StateId no;
  friend bool operator==(const OracleBranch&, const OracleBranch&) = default;
};

/// Perform a world action; `fail` is taken when it cannot be performed.
struct Act {
  std::string action;
  StateId ok;
  StateId fail;
  friend bool operator==(const Act&, const Act&) = default;
};

/// Verify a binary statement about the world.
struct ReadAct {
  std::string reading;
  StateId on_true;
  StateId on_false;
  StateId fail;
  friend bool operator==(const ReadAct&, const ReadAct&) = default;
};

using Operation = std::variant<Print, MoveRight, MoveLeft, OracleBranch, Act, ReadAct>;

struct Instruction {
  DispatchKey key;
  Operation op;

  friend bool operator==(const Instruction&, const Instruction&) = default;
};

/// Successor states named by an instruction, in operand order.
std::vector<StateId> successors(const Instruction& ins);

/// Copy of `ins` with every state operand (including the source) mapped by `f`.
Instruction map_states(const Instruction& ins, const std::function<StateId(StateId)>& f);

/// Action or reading id referenced by the instruction, empty if none.
std::string_view action_id(const Instruction& ins);

/// Symbols referenced by the instruction (read symbol and, for prints, the
/// written symbol).
std::vector<Symbol> symbols_of(const Instruction& ins);

/// One instruction in DSL line form, e.g. `q0 _ h q1`.
std::string to_string(const Instruction& ins);

/// Renders a symbol as a DSL token, escaping characters that would
/// otherwise be read as syntax. `operand` selects the stricter escaping of
/// the third token of an instruction line.
std::string symbol_token(Symbol s, bool operand = false);

/// A measurement procedure: named, finite set of instructions over an
/// alphabet, with a declared vocabulary of action and reading ids.
struct Machine {
  std::string name;
  std::set<Symbol> alphabet{kBlank};
  std::set<std::string> vocabulary;
  std::vector<Instruction> instructions;

  /// Adds every symbol and action id referenced by the instructions.
  void declare_referenced();

  StateId max_state() const;

  friend bool operator==(const Machine&, const Machine&) = default;
};

/// True when the two machines are equal ignoring their names.
bool same_procedure(const Machine& a, const Machine& b);

enum class ViolationKind {
  DuplicateDispatchKey,
  SymbolOutsideAlphabet,
  UndeclaredAction,
  InvalidSymbol,
  UnreachableState,  // informational
};

std::string_view to_string(ViolationKind k);

struct Violation {
  ViolationKind kind;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  /// Valid iff no violation other than informational ones.
  bool valid() const;
  std::size_t error_count() const;
};

ValidationReport validate_machine(const Machine& m);

class InvalidMachine : public std::runtime_error {
 public:
  explicit InvalidMachine(ValidationReport report);
  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

/// Throws InvalidMachine unless `m` validates.
void require_valid(const Machine& m);

/// Canonical form: states renumbered in first-use order (breadth first from
/// q0, keys visited by symbol, successors by operand position; unreachable
/// components are appended by ascending original id) and instructions
/// sorted by dispatch key. Idempotent.
Machine canonical(const Machine& m);

}  // namespace mproc
