#pragma once

// World configuration files (JSON):
//
//   {
//     "worlds": [
//       {"type": "dice"},
//       {"type": "thermometer", "true_temp": 23.7, "noise_sigma": 0.05},
//       {"type": "thermometer", "available": false},
//       {"type": "voltage_supply", "available": false, "seed": 7}
//     ]
//   }
//
// The i-th world is seeded with fragment_seed(world_seed, i) unless it has
// its own "seed". An unavailable thermometer registers `sample` and its
// readings but can perform none of them.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mproc/providers.hpp"
#include "mproc/worlds.hpp"

namespace mproc {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class WorldKind { Dice, Thermometer, VoltageSupply };

struct WorldSpec {
  WorldKind kind = WorldKind::Dice;
  ThermometerParams thermometer;
  bool available = true;
  std::optional<std::uint64_t> seed;
};

struct WorldConfig {
  std::vector<WorldSpec> worlds;

  /// First thermometer's parameters, or the defaults.
  ThermometerParams thermometer() const;
};

/// Throws ConfigError on malformed JSON or unknown fields/types.
WorldConfig parse_world_config(std::string_view json_text);

/// Fresh provider set for one execution.
ProviderSet build_world(const WorldConfig& config, std::uint64_t world_seed);

}  // namespace mproc
