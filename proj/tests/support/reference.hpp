#pragma once

// Independent reference implementations used as test oracles. Nothing here
// calls into the library's executor, tape or generator.

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mproc/machine.hpp"

namespace mproc::testing {

// MT19937-64 written out from the published recurrence.
class RefMt64 {
 public:
  explicit RefMt64(std::uint64_t seed = 5489) {
    mt_[0] = seed;
    for (int i = 1; i < kN; ++i) mt_[i] = 6364136223846793005ULL * (mt_[i - 1] ^ (mt_[i - 1] >> 62)) + i;
    idx_ = kN;
  }

  std::uint64_t next() {
    if (idx_ >= kN) twist();
    std::uint64_t x = mt_[idx_++];
    x ^= (x >> 29) & 0x5555555555555555ULL;
    x ^= (x << 17) & 0x71D67FFFEDA60000ULL;
    x ^= (x << 37) & 0xFFF7EEE000000000ULL;
    x ^= x >> 43;
    return x;
  }

 private:
  static constexpr int kN = 312;
  static constexpr int kM = 156;

  void twist() {
    constexpr std::uint64_t upper = 0xFFFFFFFF80000000ULL, lower = 0x7FFFFFFFULL;
    for (int i = 0; i < kN; ++i) {
      const std::uint64_t x = (mt_[i] & upper) | (mt_[(i + 1) % kN] & lower);
      std::uint64_t xa = x >> 1;
      if (x & 1) xa ^= 0xB5026F5AA96619E9ULL;
      mt_[i] = mt_[(i + kM) % kN] ^ xa;
    }
    idx_ = 0;
  }

  std::uint64_t mt_[kN];
  int idx_;
};

// Die face from the documented rejection rule: draws below 2^64 mod 6 = 4
// are discarded.
inline int ref_face(RefMt64& g) {
  for (;;) {
    const auto x = g.next();
    if (x >= 4) return static_cast<int>(x % 6) + 1;
  }
}

inline double ref_uniform(RefMt64& g) { return static_cast<double>((g.next() >> 11) + 1) / 9007199254740992.0; }

inline double ref_gaussian(RefMt64& g) {
  const double u1 = ref_uniform(g);
  const double u2 = ref_uniform(g);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
}

// "DD.ddd" of a sample, nullopt when out of range.
inline std::optional<std::string> ref_thermometer_sample(double true_temp, double sigma, std::uint64_t seed) {
  RefMt64 g(seed);
  const double v = true_temp + sigma * ref_gaussian(g);
  const long long milli = std::llround(v * 1000.0);
  if (milli < 0 || milli >= 100000) return std::nullopt;
  char buf[16];
  std::snprintf(buf, sizeof buf, "%02lld.%03lld", milli / 1000, milli % 1000);
  return std::string(buf);
}

struct RefOutcome {
  bool halted = false;
  std::string result;
  std::size_t steps = 0;
};

// Straight-line simulation of a provider-free machine: linear instruction
// scan, sparse tape.
inline RefOutcome ref_simulate(const Machine& m, const std::string& input, std::size_t budget) {
  std::map<long long, char> tape;
  for (std::size_t i = 0; i < input.size(); ++i) {
    if (input[i] != kBlank) tape[static_cast<long long>(i)] = input[i];
  }
  long long head = 0;
  std::uint32_t state = 0;
  RefOutcome out;
  for (;;) {
    const char read = tape.count(head) ? tape[head] : kBlank;
    const Instruction* hit = nullptr;
    for (const auto& ins : m.instructions) {
      if (ins.key.state.value == state && ins.key.read == read) hit = &ins;
    }
    if (!hit) {
      out.halted = true;
      break;
    }
    if (out.steps == budget) break;
    if (auto* p = std::get_if<Print>(&hit->op)) {
      if (p->write == kBlank) tape.erase(head); else tape[head] = p->write;
      state = p->next.value;
    } else if (auto* r = std::get_if<MoveRight>(&hit->op)) {
      ++head;
      state = r->next.value;
    } else if (auto* l = std::get_if<MoveLeft>(&hit->op)) {
      --head;
      state = l->next.value;
    } else {
      return out;  // not provider-free
    }
    ++out.steps;
  }
  if (out.halted && !tape.empty()) {
    for (long long i = tape.begin()->first; i <= tape.rbegin()->first; ++i) out.result += tape.count(i) ? tape[i] : kBlank;
  }
  return out;
}

}  // namespace mproc::testing
