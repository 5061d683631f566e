#pragma once

#include <string>
#include <string_view>

#include "mproc/machine.hpp"

namespace mproc {

/// Incremental construction of generated machines.
class MachineBuilder {
 public:
  explicit MachineBuilder(std::string name = {});

  StateId fresh() { return StateId{next_++}; }

  void symbols(std::string_view syms);
  void add(StateId state, Symbol read, Operation op);

  /// From `from` on a blank cell: prints `text` rightwards and halts on the
  /// last symbol.
  void write_and_halt(StateId from, std::string_view text);

  /// From `from`: blanks cells rightwards up to the first blank one. The
  /// caller continues by adding instructions keyed (from, blank).
  void erase_rightwards(StateId from);

  const Machine& machine() const { return m_; }
  Machine take() { return std::move(m_); }

 private:
  Machine m_;
  std::uint32_t next_ = 1;  // q0 is reserved for the entry state
};

}  // namespace mproc
