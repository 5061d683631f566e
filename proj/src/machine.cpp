#include "mproc/machine.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace mproc {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

StateId rename(const std::map<StateId, StateId>& ids, StateId s) { return ids.at(s); }

}  // namespace

bool is_action_id(std::string_view s) noexcept {
  auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; };
  if (s.empty() || !alpha(s[0])) return false;
  return std::all_of(s.begin() + 1, s.end(), [&](char c) { return alpha(c) || (c >= '0' && c <= '9'); });
}

std::string to_string(StateId s) { return "q" + std::to_string(s.value); }

std::string to_string(const DispatchKey& k) {
  return "(" + to_string(k.state) + "," + symbol_token(k.read) + ")";
}

std::vector<StateId> successors(const Instruction& ins) {
  return std::visit(
      overloaded{
          [](const Print& p) { return std::vector<StateId>{p.next}; },
          [](const MoveRight& p) { return std::vector<StateId>{p.next}; },
          [](const MoveLeft& p) { return std::vector<StateId>{p.next}; },
          [](const OracleBranch& p) { return std::vector<StateId>{p.yes, p.no}; },
          [](const Act& p) { return std::vector<StateId>{p.ok, p.fail}; },
          [](const ReadAct& p) { return std::vector<StateId>{p.on_true, p.on_false, p.fail}; },
      },
      ins.op);
}

Instruction map_states(const Instruction& ins, const std::function<StateId(StateId)>& f) {
  Instruction c{{f(ins.key.state), ins.key.read}, ins.op};
  std::visit(overloaded{
                 [&](Print& p) { p.next = f(p.next); },
                 [&](MoveRight& p) { p.next = f(p.next); },
                 [&](MoveLeft& p) { p.next = f(p.next); },
                 [&](OracleBranch& p) {
                   p.yes = f(p.yes);
                   p.no = f(p.no);
                 },
                 [&](Act& p) {
                   p.ok = f(p.ok);
                   p.fail = f(p.fail);
                 },
                 [&](ReadAct& p) {
                   p.on_true = f(p.on_true);
                   p.on_false = f(p.on_false);
                   p.fail = f(p.fail);
                 },
             },
             c.op);
  return c;
}

std::string_view action_id(const Instruction& ins) {
  if (const auto* a = std::get_if<Act>(&ins.op)) return a->action;
  if (const auto* r = std::get_if<ReadAct>(&ins.op)) return r->reading;
  return {};
}

std::vector<Symbol> symbols_of(const Instruction& ins) {
  std::vector<Symbol> out{ins.key.read};
  if (const auto* p = std::get_if<Print>(&ins.op)) out.push_back(p->write);
  return out;
}

std::string symbol_token(Symbol s, bool operand) {
  if (s == '\\' || s == '#') return std::string{'\\', s};
  if (operand && (s == 'R' || s == 'L' || s == '?' || s == '!')) return std::string{'\\', s};
  return std::string(1, s);
}

std::string to_string(const Instruction& ins) {
  std::ostringstream os;
  os << to_string(ins.key.state) << ' ' << symbol_token(ins.key.read) << ' ';
  std::visit(overloaded{
                 [&](const Print& p) { os << symbol_token(p.write, true) << ' ' << to_string(p.next); },
                 [&](const MoveRight& p) { os << "R " << to_string(p.next); },
                 [&](const MoveLeft& p) { os << "L " << to_string(p.next); },
                 [&](const OracleBranch& p) { os << "? " << to_string(p.yes) << ' ' << to_string(p.no); },
                 [&](const Act& p) {
                   os << '!' << p.action << ' ' << to_string(p.ok) << ' ' << to_string(p.fail);
                 },
                 [&](const ReadAct& p) {
                   os << '?' << p.reading << ' ' << to_string(p.on_true) << ' ' << to_string(p.on_false)
                      << ' ' << to_string(p.fail);
                 },
             },
             ins.op);
  return os.str();
}

void Machine::declare_referenced() {
  alphabet.insert(kBlank);
  for (const auto& ins : instructions) {
    for (Symbol s : symbols_of(ins)) alphabet.insert(s);
    if (auto id = action_id(ins); !id.empty()) vocabulary.emplace(id);
  }
}

StateId Machine::max_state() const {
  StateId top = kInitialState;
  for (const auto& ins : instructions) {
    top = std::max(top, ins.key.state);
    for (StateId s : successors(ins)) top = std::max(top, s);
  }
  return top;
}

bool same_procedure(const Machine& a, const Machine& b) {
  return a.alphabet == b.alphabet && a.vocabulary == b.vocabulary && a.instructions == b.instructions;
}

std::string_view to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::DuplicateDispatchKey: return "duplicate dispatch key";
    case ViolationKind::SymbolOutsideAlphabet: return "symbol outside alphabet";
    case ViolationKind::UndeclaredAction: return "undeclared action";
    case ViolationKind::InvalidSymbol: return "invalid symbol";
    case ViolationKind::UnreachableState: return "unreachable state";
  }
  return "unknown";
}

bool ValidationReport::valid() const { return error_count() == 0; }

std::size_t ValidationReport::error_count() const {
  return static_cast<std::size_t>(std::count_if(violations.begin(), violations.end(), [](const Violation& v) {
    return v.kind != ViolationKind::UnreachableState;
  }));
}

ValidationReport validate_machine(const Machine& m) {
  ValidationReport report;
  auto add = [&](ViolationKind kind, std::string detail) {
    report.violations.push_back({kind, std::string(to_string(kind)) + " " + std::move(detail)});
  };

  for (Symbol s : m.alphabet) {
    if (!is_symbol_char(s)) add(ViolationKind::InvalidSymbol, "code " + std::to_string(int(s)) + " in alphabet");
  }
  for (const auto& id : m.vocabulary) {
    if (!is_action_id(id)) add(ViolationKind::InvalidSymbol, "action id '" + id + "'");
  }
  if (!m.alphabet.contains(kBlank)) add(ViolationKind::SymbolOutsideAlphabet, "_ (blank must be in every alphabet)");

  std::set<DispatchKey> seen;
  std::set<DispatchKey> reported;
  for (const auto& ins : m.instructions) {
    if (!seen.insert(ins.key).second && reported.insert(ins.key).second) {
      add(ViolationKind::DuplicateDispatchKey, to_string(ins.key));
    }
    for (Symbol s : symbols_of(ins)) {
      if (!is_symbol_char(s)) {
        add(ViolationKind::InvalidSymbol, "code " + std::to_string(int(s)) + " in " + to_string(ins.key));
      } else if (!m.alphabet.contains(s)) {
        add(ViolationKind::SymbolOutsideAlphabet, symbol_token(s) + " in " + to_string(ins.key));
      }
    }
    if (auto id = action_id(ins); !id.empty() && !m.vocabulary.contains(std::string(id))) {
      add(ViolationKind::UndeclaredAction, std::string(id) + " in " + to_string(ins.key));
    }
  }

  // Reachability from q0 over the transition graph.
  std::map<StateId, std::vector<const Instruction*>> by_state;
  for (const auto& ins : m.instructions) by_state[ins.key.state].push_back(&ins);
  std::set<StateId> reached{kInitialState};
  std::deque<StateId> queue{kInitialState};
  while (!queue.empty()) {
    StateId s = queue.front();
    queue.pop_front();
    auto it = by_state.find(s);
    if (it == by_state.end()) continue;
    for (const auto* ins : it->second) {
      for (StateId t : successors(*ins)) {
        if (reached.insert(t).second) queue.push_back(t);
      }
    }
  }
  for (const auto& [s, _] : by_state) {
    if (!reached.contains(s)) add(ViolationKind::UnreachableState, to_string(s));
  }
  return report;
}

namespace {

std::string summarize(const ValidationReport& r) {
  std::string msg = "invalid machine:";
  for (const auto& v : r.violations) {
    if (v.kind != ViolationKind::UnreachableState) msg += " " + v.message + ";";
  }
  return msg;
}

}  // namespace

InvalidMachine::InvalidMachine(ValidationReport report)
    : std::runtime_error(summarize(report)), report_(std::move(report)) {}

void require_valid(const Machine& m) {
  auto report = validate_machine(m);
  if (!report.valid()) throw InvalidMachine(std::move(report));
}

Machine canonical(const Machine& m) {
  std::map<StateId, std::vector<const Instruction*>> by_state;
  std::set<StateId> all_states{kInitialState};
  for (const auto& ins : m.instructions) {
    by_state[ins.key.state].push_back(&ins);
    all_states.insert(ins.key.state);
    for (StateId s : successors(ins)) all_states.insert(s);
  }
  for (auto& [_, list] : by_state) {
    std::stable_sort(list.begin(), list.end(),
                     [](const Instruction* a, const Instruction* b) { return a->key.read < b->key.read; });
  }

  std::map<StateId, StateId> ids;
  std::uint32_t next = 0;
  auto assign = [&](StateId s, std::deque<StateId>& queue) {
    if (ids.emplace(s, StateId{next}).second) {
      ++next;
      queue.push_back(s);
    }
  };
  auto explore = [&](StateId root) {
    std::deque<StateId> queue;
    assign(root, queue);
    while (!queue.empty()) {
      StateId s = queue.front();
      queue.pop_front();
      auto it = by_state.find(s);
      if (it == by_state.end()) continue;
      for (const auto* ins : it->second) {
        for (StateId t : successors(*ins)) assign(t, queue);
      }
    }
  };
  explore(kInitialState);
  for (const auto& [s, _] : by_state) {
    if (!ids.contains(s)) explore(s);
  }
  for (StateId s : all_states) {
    if (!ids.contains(s)) ids.emplace(s, StateId{next++});
  }

  Machine out;
  out.name = m.name;
  out.alphabet = m.alphabet;
  out.vocabulary = m.vocabulary;
  out.instructions.reserve(m.instructions.size());
  for (const auto& ins : m.instructions) {
    auto c = map_states(ins, [&](StateId s) { return rename(ids, s); });
    out.instructions.push_back(std::move(c));
  }
  std::stable_sort(out.instructions.begin(), out.instructions.end(),
                   [](const Instruction& a, const Instruction& b) { return a.key < b.key; });
  return out;
}

}  // namespace mproc
