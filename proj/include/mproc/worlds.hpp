#pragma once

// Simulated worlds offering actions and reading actions, plus providers
// that wrap candidate deciders so machines can consult them.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mproc/providers.hpp"
#include "mproc/rng.hpp"

namespace mproc {

/// Fair six-sided die. Action `roll`; readings `shows_k` and `shows_ge_k`
/// for k = 1..6. Readings before the first roll cannot be performed.
/// A roll draws face = below(6) + 1.
class DiceWorld : public Provider {
 public:
  explicit DiceWorld(std::uint64_t seed) : rng_(seed) {}

  std::vector<std::string> actions() const override;
  std::vector<std::string> readings() const override;
  Response perform(std::string_view action, const Observation& obs) override;
  Response verify(std::string_view reading, const Observation& obs) override;

  std::optional<int> face() const { return face_; }

 private:
  Rng rng_;
  std::optional<int> face_;
};

struct ThermometerParams {
  double true_temp = 23.7;
  double noise_sigma = 0.0;
};

/// Thermometer over a bath at `true_temp`. Action `sample` draws
/// true_temp + noise_sigma * gaussian() and renders it as "DD.ddd"
/// (nearest thousandth, halves away from zero); a sample outside
/// [0, 100) cannot be performed. Readings `digit_P_ge_D` compare digit P
/// of "DDddd" (P = 0..4, decimal point skipped) with D = 0..9.
class ThermometerWorld : public Provider {
 public:
  /// Throws std::invalid_argument unless true_temp is in [0, 100) and
  /// noise_sigma >= 0.
  ThermometerWorld(ThermometerParams params, std::uint64_t seed);

  std::vector<std::string> actions() const override;
  std::vector<std::string> readings() const override;
  Response perform(std::string_view action, const Observation& obs) override;
  Response verify(std::string_view reading, const Observation& obs) override;

  /// Current sample as "DD.ddd", if any.
  std::optional<std::string> rendered() const;

 private:
  ThermometerParams params_;
  Rng rng_;
  std::optional<std::int64_t> milli_;  // current sample in thousandths
};

/// Renders thousandths of a degree as "DD.ddd". Requires 0 <= milli < 100000.
std::string render_reading(std::int64_t milli);

/// Lab voltage supply. Action `set_voltage_10`, reading `voltage_is_10`.
/// When unavailable (supply removed) every call cannot be performed.
class VoltageSupply : public Provider {
 public:
  explicit VoltageSupply(bool available) : available_(available) {}

  std::vector<std::string> actions() const override;
  std::vector<std::string> readings() const override;
  Response perform(std::string_view action, const Observation& obs) override;
  Response verify(std::string_view reading, const Observation& obs) override;

 private:
  bool available_;
  bool set_ = false;
};

/// Registers the given ids but can perform none of them.
class BrokenInstrument : public Provider {
 public:
  BrokenInstrument(std::vector<std::string> actions, std::vector<std::string> readings)
      : actions_(std::move(actions)), readings_(std::move(readings)) {}

  std::vector<std::string> actions() const override { return actions_; }
  std::vector<std::string> readings() const override { return readings_; }
  Response perform(std::string_view, const Observation&) override { return Response::CannotPerform; }
  Response verify(std::string_view, const Observation&) override { return Response::CannotPerform; }

 private:
  std::vector<std::string> actions_;
  std::vector<std::string> readings_;
};

/// Thrown by a decider that cannot answer within its budget.
class DeciderTimeout : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A candidate decision procedure over quoted machines, hosted outside the
/// machine model. `decide(code, input)` must be a pure function answering
/// one character.
struct Decider {
  std::string id;
  std::size_t budget = 0;
  std::function<char(std::string_view code, std::string_view input)> decide;
};

using VerifierHandle = Decider;
using HaltingDecider = Decider;

/// Reading action `reading` answering whether `decider` says `yes` about
/// the (code, input) pair on the tape. CannotPerform when the tape holds no
/// decodable pair or the decider fails to answer.
class DeciderProvider : public Provider {
 public:
  struct Call {
    std::string code;
    std::string input;
    std::optional<char> answer;
    Response response;
  };

  DeciderProvider(std::string reading, Decider decider, char yes)
      : reading_(std::move(reading)), decider_(std::move(decider)), yes_(yes) {}

  std::vector<std::string> readings() const override { return {reading_}; }
  Response verify(std::string_view reading, const Observation& obs) override;

  const std::vector<Call>& calls() const noexcept { return calls_; }

 private:
  std::string reading_;
  Decider decider_;
  char yes_;
  std::vector<Call> calls_;
};

inline constexpr std::string_view kVerifierReading = "blue_says_yes";
inline constexpr std::string_view kHaltingReading = "h_says_halt";

std::shared_ptr<DiceWorld> make_dice_world(std::uint64_t seed);
std::shared_ptr<ThermometerWorld> make_thermometer_world(ThermometerParams params, std::uint64_t seed);
std::shared_ptr<VoltageSupply> make_voltage_supply(bool available);
std::shared_ptr<BrokenInstrument> make_broken_instrument(std::vector<std::string> actions,
                                                         std::vector<std::string> readings);
/// `blue_says_yes`, true iff the candidate answers '1'.
std::shared_ptr<DeciderProvider> make_verifier_provider(VerifierHandle candidate);
/// `h_says_halt`, true iff the candidate answers 'H'.
std::shared_ptr<DeciderProvider> make_halting_provider(HaltingDecider candidate);

}  // namespace mproc
