#pragma once

// The "experimental possibilities" of a machine: providers that perform
// world actions and answer reading actions on its behalf.

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mproc {

/// Artifact misconfiguration during execution (unregistered provider, no
/// oracle configured). Distinct from the modeled CannotPerform branch.
class ExecutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Response { Performed, True, False, CannotPerform };

std::string_view to_string(Response r);

/// What a provider may see of the running machine. Read-only.
struct Observation {
  std::string_view tape;              // non-blank span, as result_of renders it
  std::size_t invocation_index = 0;   // provider calls made earlier in this run
  std::size_t steps_taken = 0;        // steps executed before this one
};

/// A world fragment offering actions and/or reading actions. Fragments
/// keep mutable world state and are owned by a single ProviderSet.
class Provider {
 public:
  virtual ~Provider() = default;

  virtual std::vector<std::string> actions() const { return {}; }
  virtual std::vector<std::string> readings() const { return {}; }

  /// Performed or CannotPerform.
  virtual Response perform(std::string_view action, const Observation& obs);
  /// True, False or CannotPerform. Must not change world state.
  virtual Response verify(std::string_view reading, const Observation& obs);
};

/// Registry of action and reading ids for one execution. Move-only: each
/// run owns its world.
class ProviderSet {
 public:
  explicit ProviderSet(std::uint64_t world_seed = 0) : seed_(world_seed) {}

  ProviderSet(ProviderSet&&) noexcept = default;
  ProviderSet& operator=(ProviderSet&&) noexcept = default;
  ProviderSet(const ProviderSet&) = delete;
  ProviderSet& operator=(const ProviderSet&) = delete;

  /// Registers every id the fragment offers. Throws std::invalid_argument if
  /// an id is already registered.
  ProviderSet& add(std::shared_ptr<Provider> fragment);

  bool has_action(std::string_view id) const;
  bool has_reading(std::string_view id) const;

  /// Throws ExecutionError for unregistered ids.
  Response perform(std::string_view action, std::string_view tape, std::size_t steps_taken = 0);
  Response verify(std::string_view reading, std::string_view tape, std::size_t steps_taken = 0);

  std::uint64_t seed() const noexcept { return seed_; }
  std::size_t invocations() const noexcept { return invocations_; }

 private:
  std::uint64_t seed_;
  std::size_t invocations_ = 0;
  std::map<std::string, std::shared_ptr<Provider>, std::less<>> actions_;
  std::map<std::string, std::shared_ptr<Provider>, std::less<>> readings_;
};

/// Seed for the index-th fragment of a world built from `world_seed`
/// (one splitmix64 step over world_seed + index).
std::uint64_t fragment_seed(std::uint64_t world_seed, std::size_t index);

}  // namespace mproc
