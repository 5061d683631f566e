#include "mproc/worlds.hpp"

#include <charconv>
#include <cmath>

#include "mproc/quote.hpp"

namespace mproc {

namespace {

// Parses "<prefix><digits>" into the number, or -1.
int suffix_number(std::string_view id, std::string_view prefix) {
  if (!id.starts_with(prefix) || id.size() == prefix.size()) return -1;
  int v = 0;
  const char* first = id.data() + prefix.size();
  const char* last = id.data() + id.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  return (ec == std::errc{} && ptr == last) ? v : -1;
}

Response truth(bool b) { return b ? Response::True : Response::False; }

}  // namespace

std::vector<std::string> DiceWorld::actions() const { return {"roll"}; }

std::vector<std::string> DiceWorld::readings() const {
  std::vector<std::string> out;
  for (int k = 1; k <= 6; ++k) {
    out.push_back("shows_" + std::to_string(k));
    out.push_back("shows_ge_" + std::to_string(k));
  }
  return out;
}

Response DiceWorld::perform(std::string_view action, const Observation&) {
  if (action != "roll") throw ExecutionError("dice world has no action " + std::string(action));
  face_ = static_cast<int>(rng_.below(6)) + 1;
  return Response::Performed;
}

Response DiceWorld::verify(std::string_view reading, const Observation&) {
  if (!face_) return Response::CannotPerform;
  if (int k = suffix_number(reading, "shows_ge_"); k >= 1 && k <= 6) return truth(*face_ >= k);
  if (int k = suffix_number(reading, "shows_"); k >= 1 && k <= 6) return truth(*face_ == k);
  throw ExecutionError("dice world has no reading " + std::string(reading));
}

ThermometerWorld::ThermometerWorld(ThermometerParams params, std::uint64_t seed) : params_(params), rng_(seed) {
  if (!(params.true_temp >= 0.0 && params.true_temp < 100.0)) {
    throw std::invalid_argument("true temperature must lie in [0, 100) to render as DD.ddd");
  }
  if (!(params.noise_sigma >= 0.0)) throw std::invalid_argument("noise sigma must be non-negative");
}

std::vector<std::string> ThermometerWorld::actions() const { return {"sample"}; }

std::vector<std::string> ThermometerWorld::readings() const {
  std::vector<std::string> out;
  for (int p = 0; p < 5; ++p) {
    for (int d = 0; d <= 9; ++d) out.push_back("digit_" + std::to_string(p) + "_ge_" + std::to_string(d));
  }
  return out;
}

Response ThermometerWorld::perform(std::string_view action, const Observation&) {
  if (action != "sample") throw ExecutionError("thermometer has no action " + std::string(action));
  const double value = params_.true_temp + params_.noise_sigma * rng_.gaussian();
  const auto milli = std::llround(value * 1000.0);
  if (milli < 0 || milli >= 100000) {
    milli_.reset();
    return Response::CannotPerform;
  }
  milli_ = milli;
  return Response::Performed;
}

Response ThermometerWorld::verify(std::string_view reading, const Observation&) {
  if (!reading.starts_with("digit_") || reading.size() != 12 || reading.substr(7, 4) != "_ge_") {
    throw ExecutionError("thermometer has no reading " + std::string(reading));
  }
  const int pos = reading[6] - '0';
  const int d = reading[11] - '0';
  if (pos < 0 || pos > 4 || d < 0 || d > 9) throw ExecutionError("thermometer has no reading " + std::string(reading));
  if (!milli_) return Response::CannotPerform;
  static constexpr std::int64_t kPlace[] = {10000, 1000, 100, 10, 1};
  return truth((*milli_ / kPlace[pos]) % 10 >= d);
}

std::optional<std::string> ThermometerWorld::rendered() const {
  if (!milli_) return std::nullopt;
  return render_reading(*milli_);
}

std::string render_reading(std::int64_t milli) {
  if (milli < 0 || milli >= 100000) throw std::out_of_range("reading out of DD.ddd range");
  std::string digits = std::to_string(milli);
  digits.insert(0, 5 - digits.size(), '0');
  return digits.substr(0, 2) + "." + digits.substr(2);
}

std::vector<std::string> VoltageSupply::actions() const { return {"set_voltage_10"}; }

std::vector<std::string> VoltageSupply::readings() const { return {"voltage_is_10"}; }

Response VoltageSupply::perform(std::string_view, const Observation&) {
  if (!available_) return Response::CannotPerform;
  set_ = true;
  return Response::Performed;
}

Response VoltageSupply::verify(std::string_view, const Observation&) {
  if (!available_) return Response::CannotPerform;
  return truth(set_);
}

Response DeciderProvider::verify(std::string_view reading, const Observation& obs) {
  if (reading != reading_) throw ExecutionError("decider provider has no reading " + std::string(reading));
  Call call{{}, {}, std::nullopt, Response::CannotPerform};
  if (auto pair = split_quoted_pair(obs.tape)) {
    call.code = pair->code;
    call.input = pair->input;
    bool decodable = true;
    try {
      unquote(pair->code);
    } catch (const DecodeError&) {
      decodable = false;
    }
    if (decodable) {
      try {
        call.answer = decider_.decide(call.code, call.input);
        call.response = truth(*call.answer == yes_);
      } catch (const DeciderTimeout&) {
        call.response = Response::CannotPerform;
      }
    }
  }
  calls_.push_back(call);
  return call.response;
}

std::shared_ptr<DiceWorld> make_dice_world(std::uint64_t seed) { return std::make_shared<DiceWorld>(seed); }

std::shared_ptr<ThermometerWorld> make_thermometer_world(ThermometerParams params, std::uint64_t seed) {
  return std::make_shared<ThermometerWorld>(params, seed);
}

std::shared_ptr<VoltageSupply> make_voltage_supply(bool available) {
  return std::make_shared<VoltageSupply>(available);
}

std::shared_ptr<BrokenInstrument> make_broken_instrument(std::vector<std::string> actions,
                                                         std::vector<std::string> readings) {
  return std::make_shared<BrokenInstrument>(std::move(actions), std::move(readings));
}

std::shared_ptr<DeciderProvider> make_verifier_provider(VerifierHandle candidate) {
  return std::make_shared<DeciderProvider>(std::string(kVerifierReading), std::move(candidate), '1');
}

std::shared_ptr<DeciderProvider> make_halting_provider(HaltingDecider candidate) {
  return std::make_shared<DeciderProvider>(std::string(kHaltingReading), std::move(candidate), 'H');
}

}  // namespace mproc
