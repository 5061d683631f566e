#include "mproc/providers.hpp"

namespace mproc {

std::string_view to_string(Response r) {
  switch (r) {
    case Response::Performed: return "Performed";
    case Response::True: return "True";
    case Response::False: return "False";
    case Response::CannotPerform: return "CannotPerform";
  }
  return "unknown";
}

Response Provider::perform(std::string_view action, const Observation&) {
  throw ExecutionError("provider does not implement action " + std::string(action));
}

Response Provider::verify(std::string_view reading, const Observation&) {
  throw ExecutionError("provider does not implement reading " + std::string(reading));
}

ProviderSet& ProviderSet::add(std::shared_ptr<Provider> fragment) {
  for (auto& id : fragment->actions()) {
    if (!actions_.emplace(id, fragment).second) throw std::invalid_argument("action registered twice: " + id);
  }
  for (auto& id : fragment->readings()) {
    if (!readings_.emplace(id, fragment).second) throw std::invalid_argument("reading registered twice: " + id);
  }
  return *this;
}

bool ProviderSet::has_action(std::string_view id) const { return actions_.find(id) != actions_.end(); }

bool ProviderSet::has_reading(std::string_view id) const { return readings_.find(id) != readings_.end(); }

Response ProviderSet::perform(std::string_view action, std::string_view tape, std::size_t steps_taken) {
  auto it = actions_.find(action);
  if (it == actions_.end()) throw ExecutionError("no provider for action " + std::string(action));
  Observation obs{tape, invocations_++, steps_taken};
  Response r = it->second->perform(action, obs);
  if (r != Response::Performed && r != Response::CannotPerform) {
    throw ExecutionError("action " + std::string(action) + " answered " + std::string(to_string(r)));
  }
  return r;
}

Response ProviderSet::verify(std::string_view reading, std::string_view tape, std::size_t steps_taken) {
  auto it = readings_.find(reading);
  if (it == readings_.end()) throw ExecutionError("no provider for reading " + std::string(reading));
  Observation obs{tape, invocations_++, steps_taken};
  Response r = it->second->verify(reading, obs);
  if (r == Response::Performed) {
    throw ExecutionError("reading " + std::string(reading) + " answered Performed");
  }
  return r;
}

std::uint64_t fragment_seed(std::uint64_t world_seed, std::size_t index) {
  std::uint64_t z = world_seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(index) + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace mproc
