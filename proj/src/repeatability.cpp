#include "mproc/repeatability.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

namespace mproc {

namespace {

RunOutcome run_one(const Program* program, std::string_view error, std::string_view input,
                   const WorldFactory& world, std::uint64_t seed, std::size_t budget) {
  RunOutcome out;
  if (program == nullptr) {
    out.status = RunStatus::ExecutionError;
    out.error = std::string(error);
    return out;
  }
  try {
    ProviderSet providers = world(seed);
    return run(*program, input, providers, {.budget = budget});
  } catch (const std::exception& e) {
    out.status = RunStatus::ExecutionError;
    out.error = e.what();
  }
  return out;
}

RepeatabilityVerdict verdict_over(const TrialSet& t, const std::function<std::string(const std::string&)>& canon) {
  RepeatabilityVerdict v;
  std::set<std::string> distinct;
  for (const auto& trial : t.trials) {
    if (trial.outcome.status != RunStatus::Halted) {
      v.reason = "non-effective within budget (seed " + std::to_string(trial.seed) + ": " +
                 std::string(to_string(trial.outcome.status)) + ")";
      return v;
    }
    distinct.insert(canon(*trial.outcome.result));
  }
  v.distinct_results.assign(distinct.begin(), distinct.end());
  v.repeatable = distinct.size() <= 1;
  v.reason = v.repeatable ? "all results equal" : std::to_string(distinct.size()) + " distinct results";
  return v;
}

}  // namespace

TrialSet run_trials(const Machine& m, std::string_view input, const WorldFactory& world,
                    const std::vector<std::uint64_t>& seeds, std::size_t budget, unsigned threads) {
  require_valid(m);
  TrialSet set{m, std::string(input), budget, {}};
  set.trials.resize(seeds.size());

  std::optional<Program> program;
  std::string error;
  try {
    for (Symbol s : input) {
      if (!m.alphabet.contains(s)) throw std::invalid_argument("input symbol outside alphabet");
    }
    if (budget == 0) throw std::invalid_argument("budget must be positive");
    program.emplace(m);
  } catch (const std::exception& e) {
    error = e.what();
  }

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(seeds.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < seeds.size(); i = next++) {
      set.trials[i] = {seeds[i], run_one(program ? &*program : nullptr, error, input, world, seeds[i], budget)};
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  return set;
}

RepeatabilityVerdict is_repeatable(const TrialSet& t) {
  return verdict_over(t, [](const std::string& s) { return s; });
}

std::string truncate_significant(std::string_view result, int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("significant figures must be in 1..5");
  const auto point = result.find('.');
  const auto int_part = result.substr(0, point);
  const auto frac_part = point == std::string_view::npos ? std::string_view{} : result.substr(point + 1);
  auto all_digits = [](std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  if (int_part.empty() || !all_digits(int_part) || !all_digits(frac_part) ||
      (point != std::string_view::npos && frac_part.empty())) {
    throw NotNumeric("not a numeric quantity value: '" + std::string(result) + "'");
  }

  // Work on the digit string with the decimal exponent of its first digit.
  std::string digits = std::string(int_part) + std::string(frac_part);
  const auto first = digits.find_first_not_of('0');
  if (first == std::string::npos) return "0";
  // Place value of digits[i] is 10^(int_len - 1 - i).
  const long int_len = static_cast<long>(int_part.size());
  const long lead_exp = int_len - 1 - static_cast<long>(first);
  const long last_exp = lead_exp - (n - 1);  // exponent of the last kept digit

  // Kept digits, padded with zeros when the input is shorter.
  std::string kept;
  for (long e = lead_exp; e >= last_exp; --e) {
    const long i = int_len - 1 - e;
    kept.push_back(i < static_cast<long>(digits.size()) ? digits[static_cast<std::size_t>(i)] : '0');
  }
  const long round_i = int_len - 1 - (last_exp - 1);
  const bool round_up = round_i < static_cast<long>(digits.size()) && digits[static_cast<std::size_t>(round_i)] >= '5';

  long exp = last_exp;
  if (round_up) {
    int k = static_cast<int>(kept.size()) - 1;
    while (k >= 0 && kept[static_cast<std::size_t>(k)] == '9') kept[static_cast<std::size_t>(k--)] = '0';
    if (k >= 0) {
      ++kept[static_cast<std::size_t>(k)];
    } else {
      // 99.96 -> 100: one more leading digit, drop the last to keep n.
      kept.insert(kept.begin(), '1');
      kept.pop_back();
      ++exp;
    }
  }

  // kept holds n digits; its last digit has place value 10^exp.
  if (exp >= 0) return kept + std::string(static_cast<std::size_t>(exp), '0');
  const auto frac_len = static_cast<std::size_t>(-exp);
  if (kept.size() > frac_len) return kept.substr(0, kept.size() - frac_len) + "." + kept.substr(kept.size() - frac_len);
  return "0." + std::string(frac_len - kept.size(), '0') + kept;
}

RepeatabilityVerdict repeatable_after_truncation(const TrialSet& t, int n) {
  return verdict_over(t, [n](const std::string& s) { return truncate_significant(s, n); });
}

}  // namespace mproc
