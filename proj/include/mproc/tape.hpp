#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mproc/machine.hpp"

namespace mproc {

/// Tape unbounded in both directions; every cell not yet written is blank.
class Tape {
 public:
  Tape() = default;
  /// Tape holding `input` on cells 0..len-1.
  explicit Tape(std::string_view input);

  Symbol read(std::int64_t cell) const;
  void write(std::int64_t cell, Symbol s);

  /// Leftmost and rightmost non-blank cells; empty when the tape is blank.
  bool blank() const;
  std::int64_t leftmost() const;
  std::int64_t rightmost() const;

  std::size_t non_blank_count() const;

 private:
  std::vector<Symbol> cells_;
  std::int64_t origin_ = 0;  // cell index of cells_[0]
};

/// Symbols from the leftmost to the rightmost non-blank cell inclusive,
/// interior blanks rendered as `_`. Empty for an all-blank tape.
std::string result_of(const Tape& tape);

}  // namespace mproc
