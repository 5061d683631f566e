#pragma once

// Text format for machines. One instruction per line:
//
//   qI S S' qM             print S' and go to qM
//   qI S R qM / qI S L qM  move right / left
//   qI S ? qY qN           oracle branch
//   qI S !act qOK qFAIL    world action
//   qI S ?rd qT qF qFAIL   reading action
//
// Header lines `name: ...`, `alphabet: ...` and `actions: ...`; `#` starts
// a comment at the beginning of a token. A symbol token is one printable
// character or a backslash followed by one; `\R`, `\L`, `\?`, `\!` print
// those characters, and `\\` and `\#` denote backslash and hash anywhere.
// Without an `alphabet:` header the alphabet is every symbol the
// instructions use; likewise for `actions:`.

#include <stdexcept>
#include <string>
#include <string_view>

#include "mproc/machine.hpp"

namespace mproc {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Parses without validating. Throws ParseError.
Machine parse_dsl_unchecked(std::string_view text);

/// Parses and validates. Throws ParseError or InvalidMachine.
Machine parse_dsl(std::string_view text);

/// Canonical text of `m`: headers, then instructions of canonical(m).
std::string render_dsl(const Machine& m);

}  // namespace mproc
