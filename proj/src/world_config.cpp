#include "mproc/world_config.hpp"

#include <set>

#include "json.hpp"

namespace mproc {

namespace {

using nlohmann::json;

void only_keys(const json& obj, const std::set<std::string>& allowed) {
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.contains(key)) throw ConfigError("unknown world field '" + key + "'");
  }
}

}  // namespace

ThermometerParams WorldConfig::thermometer() const {
  for (const auto& w : worlds) {
    if (w.kind == WorldKind::Thermometer) return w.thermometer;
  }
  return {};
}

WorldConfig parse_world_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("world config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("worlds") || !doc["worlds"].is_array()) {
    throw ConfigError("world config needs a \"worlds\" array");
  }

  WorldConfig config;
  try {
    for (const auto& w : doc["worlds"]) {
      if (!w.is_object() || !w.contains("type")) throw ConfigError("each world needs a \"type\"");
      WorldSpec spec;
      const auto type = w["type"].get<std::string>();
      if (type == "dice") {
        only_keys(w, {"type", "seed"});
        spec.kind = WorldKind::Dice;
      } else if (type == "thermometer") {
        only_keys(w, {"type", "seed", "true_temp", "noise_sigma", "available"});
        spec.kind = WorldKind::Thermometer;
        spec.thermometer.true_temp = w.value("true_temp", spec.thermometer.true_temp);
        spec.thermometer.noise_sigma = w.value("noise_sigma", spec.thermometer.noise_sigma);
        // Validates the parameters.
        ThermometerWorld probe(spec.thermometer, 0);
      } else if (type == "voltage_supply") {
        only_keys(w, {"type", "seed", "available"});
        spec.kind = WorldKind::VoltageSupply;
      } else {
        throw ConfigError("unknown world type '" + type + "'");
      }
      spec.available = w.value("available", true);
      if (w.contains("seed")) spec.seed = w["seed"].get<std::uint64_t>();
      config.worlds.push_back(spec);
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad world field: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return config;
}

ProviderSet build_world(const WorldConfig& config, std::uint64_t world_seed) {
  ProviderSet set(world_seed);
  for (std::size_t i = 0; i < config.worlds.size(); ++i) {
    const auto& w = config.worlds[i];
    const std::uint64_t seed = w.seed.value_or(fragment_seed(world_seed, i));
    switch (w.kind) {
      case WorldKind::Dice: set.add(make_dice_world(seed)); break;
      case WorldKind::Thermometer:
        if (w.available) {
          set.add(make_thermometer_world(w.thermometer, seed));
        } else {
          ThermometerWorld shape(w.thermometer, seed);
          set.add(make_broken_instrument(shape.actions(), shape.readings()));
        }
        break;
      case WorldKind::VoltageSupply: set.add(make_voltage_supply(w.available)); break;
    }
  }
  return set;
}

}  // namespace mproc
