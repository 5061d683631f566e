#pragma once

#include <stdexcept>
#include <string_view>

#include "mproc/machine.hpp"

namespace mproc {

class CompositionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Host machine that continues as `sub` (from sub's q0) once it reaches
/// state `hook`. Sub states other than q0 are renamed to fresh ids above
/// the host's; sub's q0 becomes `hook`. The sub alphabet must be contained
/// in the host alphabet and sub's q0 keys must not collide with keys the
/// host already dispatches from `hook`. Throws CompositionError.
Machine inline_subroutine(const Machine& host, StateId hook, const Machine& sub);

/// Argument-free version of `m` on `input`: started on a blank tape it
/// prints `input` on cells 0..len-1, returns to cell 0 and then runs as `m`.
/// Costs 3*len-2 extra steps for non-empty input.
Machine bake_input(const Machine& m, std::string_view input);

}  // namespace mproc
