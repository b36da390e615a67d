#pragma once

#include <array>
#include <cstdint>

namespace ginvkit {

/// Counter-based pseudorandom generator (Philox 4x64, 10 rounds).
///
/// Streams are addressed by (seed, stream): the key is the pair and the
/// 256-bit counter starts at zero, so independent trials can draw from
/// disjoint streams without coordination. Output matches numpy's Philox
/// bit generator for the same key/counter.
class Philox {
 public:
  explicit Philox(std::uint64_t seed, std::uint64_t stream = 0)
      : key_{seed, stream}, counter_{0, 0, 0, 0} {}

  /// One raw 4x64 block for the given counter/key (stateless core).
  static std::array<std::uint64_t, 4> block(const std::array<std::uint64_t, 4>& counter,
                                            const std::array<std::uint64_t, 2>& key);

  std::uint64_t next_u64();

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();

  /// Standard normal via Box-Muller (uses two uniforms per pair).
  double gaussian();

  /// Rademacher +/-1.
  double sign();

 private:
  void refill();

  std::array<std::uint64_t, 2> key_;
  std::array<std::uint64_t, 4> counter_;
  std::array<std::uint64_t, 4> buffer_{};
  int buffer_pos_ = 4;  // empty
  double spare_gaussian_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace ginvkit
