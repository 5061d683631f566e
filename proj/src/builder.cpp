#include "mproc/builder.hpp"

#include <vector>

namespace mproc {

MachineBuilder::MachineBuilder(std::string name) { m_.name = std::move(name); }

void MachineBuilder::symbols(std::string_view syms) { m_.alphabet.insert(syms.begin(), syms.end()); }

void MachineBuilder::add(StateId state, Symbol read, Operation op) {
  Instruction ins{{state, read}, std::move(op)};
  for (Symbol s : symbols_of(ins)) m_.alphabet.insert(s);
  if (auto id = action_id(ins); !id.empty()) m_.vocabulary.emplace(id);
  m_.instructions.push_back(std::move(ins));
}

void MachineBuilder::write_and_halt(StateId from, std::string_view text) {
  StateId at = from;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const StateId printed = fresh();
    add(at, kBlank, Print{text[i], printed});
    if (i + 1 < text.size()) {
      at = fresh();
      add(printed, text[i], MoveRight{at});
    }
  }
}

void MachineBuilder::erase_rightwards(StateId from) {
  const StateId erased = fresh();
  const std::vector<Symbol> alphabet(m_.alphabet.begin(), m_.alphabet.end());
  for (Symbol s : alphabet) {
    if (s != kBlank) add(from, s, Print{kBlank, erased});
  }
  add(erased, kBlank, MoveRight{from});
}

}  // namespace mproc
