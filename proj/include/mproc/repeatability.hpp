#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mproc/executor.hpp"
#include "mproc/machine.hpp"
#include "mproc/providers.hpp"

namespace mproc {

using WorldFactory = std::function<ProviderSet(std::uint64_t seed)>;

struct Trial {
  std::uint64_t seed = 0;
  RunOutcome outcome;
};

struct TrialSet {
  Machine machine;
  std::string input;
  std::size_t budget = 0;
  std::vector<Trial> trials;  // in seed-list order
};

/// One run per seed, each against a fresh world. Per-trial failures
/// (including an invalid input) are recorded in that trial's outcome.
/// Runs are spread over `threads` workers (0 = hardware concurrency);
/// results are ordered as `seeds`.
TrialSet run_trials(const Machine& m, std::string_view input, const WorldFactory& world,
                    const std::vector<std::uint64_t>& seeds, std::size_t budget, unsigned threads = 0);

struct RepeatabilityVerdict {
  bool repeatable = false;
  std::string reason;
  std::vector<std::string> distinct_results;  // sorted

  explicit operator bool() const noexcept { return repeatable; }
};

/// Repeatable iff every trial halted and all results are the same string.
RepeatabilityVerdict is_repeatable(const TrialSet& t);

class NotNumeric : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Rounds a fixed-point decimal ("23.712") half-up to `n` significant
/// figures (1..5): "23.712", 2 -> "24"; 4 -> "23.71". Throws NotNumeric for
/// anything other than digits with an optional fractional part, and
/// std::invalid_argument for n outside 1..5.
std::string truncate_significant(std::string_view result, int n);

/// is_repeatable over the truncated results. Throws as truncate_significant
/// for a halted trial whose result is not numeric.
RepeatabilityVerdict repeatable_after_truncation(const TrialSet& t, int n);

}  // namespace mproc
