#pragma once

// Generated measurement procedures over the thermometer world.

#include "mproc/machine.hpp"

namespace mproc {

enum class ReaderFormat {
  IntegerDegrees,  // "DD": the integer part, truncated
  Full,            // "DD.ddd"
};

/// Performs `sample`, then recovers each digit by a binary search over the
/// `digit_P_ge_D` readings and prints it. Prints "ERR" if the sample or a
/// reading cannot be performed. Expects a blank tape to its right.
Machine make_thermometer_reader(ReaderFormat format);

}  // namespace mproc
