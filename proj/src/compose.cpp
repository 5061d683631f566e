#include "mproc/compose.hpp"

#include <algorithm>
#include <set>

namespace mproc {

Machine inline_subroutine(const Machine& host, StateId hook, const Machine& sub) {
  require_valid(host);
  require_valid(sub);
  for (Symbol s : sub.alphabet) {
    if (!host.alphabet.contains(s)) {
      throw CompositionError("subroutine symbol " + symbol_token(s) + " is not in the host alphabet");
    }
  }

  std::set<Symbol> hook_keys;
  for (const auto& ins : host.instructions) {
    if (ins.key.state == hook) hook_keys.insert(ins.key.read);
  }

  const std::uint32_t offset = std::max(host.max_state(), hook).value + 1;
  auto rename = [&](StateId s) { return s == kInitialState ? hook : StateId{s.value - 1 + offset}; };

  Machine out = host;
  out.vocabulary.insert(sub.vocabulary.begin(), sub.vocabulary.end());
  for (const auto& ins : sub.instructions) {
    if (ins.key.state == kInitialState && hook_keys.contains(ins.key.read)) {
      throw CompositionError("subroutine collides with host at " + to_string(DispatchKey{hook, ins.key.read}));
    }
    out.instructions.push_back(map_states(ins, rename));
  }
  auto report = validate_machine(out);
  if (!report.valid()) throw CompositionError("inlined machine is invalid");
  return out;
}

Machine bake_input(const Machine& m, std::string_view input) {
  require_valid(m);
  for (Symbol s : input) {
    if (!m.alphabet.contains(s)) {
      throw std::invalid_argument("input symbol '" + std::string(1, s) + "' is not in the machine's alphabet");
    }
  }

  // Writer: print s_i, step right; then walk back to cell 0.
  Machine writer;
  writer.name = m.name;
  writer.alphabet = m.alphabet;
  std::uint32_t state = 0;
  const auto n = input.size();
  for (std::size_t i = 0; i < n; ++i) {
    writer.instructions.push_back({{StateId{state}, kBlank}, Print{input[i], StateId{state + 1}}});
    ++state;
    if (i + 1 < n) {
      writer.instructions.push_back({{StateId{state}, input[i]}, MoveRight{StateId{state + 1}}});
      ++state;
    }
  }
  for (std::size_t i = n; i-- > 1;) {
    writer.instructions.push_back({{StateId{state}, input[i]}, MoveLeft{StateId{state + 1}}});
    ++state;
  }
  return inline_subroutine(writer, StateId{state}, m);
}

}  // namespace mproc
