#pragma once

// Quoted machines: a canonical, self-delimiting rendering of a machine as a
// string over a 16-character alphabet, so a description can sit on a tape.
//
//   code   := LEN ':' body                  LEN = decimal length of body
//   body   := alpha ':' vocab ':' instr*
//   alpha  := ASCII codes of the non-blank symbols, ascending, ','-separated
//   vocab  := action ids, ascending, ','-separated; an id is its ASCII
//             codes joined by '.'
//   instr  := state '|' sym '|' kind ('|' operand)* ';'
//
// `sym` indexes the alphabet with 0 for blank and 1.. for `alpha` in order.
// Kinds and operands: 0 print (sym, next), 1 right (next), 2 left (next),
// 3 oracle (yes, no), 4 action (vocab index, ok, fail), 5 reading (vocab
// index, true, false, fail). Numbers are decimal without leading zeros.
// The machine is canonicalized first and its name is not encoded.
//
// A tape holding `code` alone denotes the pair (code, code); `code '/' e`
// denotes the pair (code, e).

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "mproc/machine.hpp"

namespace mproc {

inline constexpr std::string_view kQuotingAlphabet = "0123456789|;:.,/";

inline constexpr char kPairSeparator = '/';

class DecodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws InvalidMachine for an invalid machine.
std::string quote(const Machine& m);

/// Inverse of quote. Accepts exactly the strings quote produces; anything
/// else (truncated, extended, non-canonical) throws DecodeError.
Machine unquote(std::string_view code);

struct QuotedPair {
  std::string code;
  std::string input;
};

/// Splits tape content into (code, input) per the pair convention. Returns
/// nullopt when no well-formed code starts the content. Does not decode.
std::optional<QuotedPair> split_quoted_pair(std::string_view tape);

}  // namespace mproc
