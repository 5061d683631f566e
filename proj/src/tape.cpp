#include "mproc/tape.hpp"

#include <algorithm>

namespace mproc {

Tape::Tape(std::string_view input) : cells_(input.begin(), input.end()) {}

Symbol Tape::read(std::int64_t cell) const {
  const std::int64_t i = cell - origin_;
  if (i < 0 || i >= static_cast<std::int64_t>(cells_.size())) return kBlank;
  return cells_[static_cast<std::size_t>(i)];
}

void Tape::write(std::int64_t cell, Symbol s) {
  std::int64_t i = cell - origin_;
  if (i < 0) {
    if (s == kBlank) return;
    const auto grow = static_cast<std::size_t>(std::max<std::int64_t>(-i, static_cast<std::int64_t>(cells_.size())));
    cells_.insert(cells_.begin(), grow, kBlank);
    origin_ -= static_cast<std::int64_t>(grow);
    i = cell - origin_;
  } else if (i >= static_cast<std::int64_t>(cells_.size())) {
    if (s == kBlank) return;
    cells_.resize(std::max<std::size_t>(static_cast<std::size_t>(i) + 1, cells_.size() * 2), kBlank);
  }
  cells_[static_cast<std::size_t>(i)] = s;
}

bool Tape::blank() const {
  return std::all_of(cells_.begin(), cells_.end(), [](Symbol s) { return s == kBlank; });
}

std::int64_t Tape::leftmost() const {
  auto it = std::find_if(cells_.begin(), cells_.end(), [](Symbol s) { return s != kBlank; });
  return origin_ + (it - cells_.begin());
}

std::int64_t Tape::rightmost() const {
  auto it = std::find_if(cells_.rbegin(), cells_.rend(), [](Symbol s) { return s != kBlank; });
  return origin_ + static_cast<std::int64_t>(cells_.rend() - it) - 1;
}

std::size_t Tape::non_blank_count() const {
  return static_cast<std::size_t>(std::count_if(cells_.begin(), cells_.end(), [](Symbol s) { return s != kBlank; }));
}

std::string result_of(const Tape& tape) {
  if (tape.blank()) return {};
  std::string out;
  for (std::int64_t c = tape.leftmost(); c <= tape.rightmost(); ++c) out.push_back(tape.read(c));
  return out;
}

}  // namespace mproc
