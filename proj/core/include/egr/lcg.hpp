#pragma once

#include <cstdint>

namespace egr {

/// 64-bit linear congruential generator (Knuth's MMIX constants). Used for
/// every seeded choice so that sampled runs reproduce bit-for-bit.
class Lcg {
 public:
  static constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
  static constexpr std::uint64_t kIncrement = 1442695040888963407ULL;

  explicit Lcg(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ = state_ * kMultiplier + kIncrement;
    return state_;
  }

  /// Value in [0, bound) from the high 32 bits of the next state. bound must
  /// be in [1, 2^32].
  std::uint64_t below(std::uint64_t bound) { return (next() >> 32) % bound; }

 private:
  std::uint64_t state_;
};

}  // namespace egr
