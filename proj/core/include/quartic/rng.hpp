#pragma once

#include <array>
#include <cstdint>

namespace quartic {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
/// Pure function of (counter, key); no internal state.
struct Philox4x32 {
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static Counter apply(Counter ctr, Key key);
};

/// Role of a random stream drawn from a master seed.
enum class StreamRole : std::uint64_t { Process = 0, Brownian = 1, Auxiliary = 2 };

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Key of the stream for one replicate: hash(master_seed, replicate, role).
/// Path m gets the same stream however the replicates are scheduled.
std::uint64_t derive_stream_key(std::uint64_t master_seed, std::uint64_t replicate, StreamRole role);

/// Standard normal variates by inverse CDF of a Philox uniform stream.
/// Draw k of the stream with key K is a pure function of (K, k).
class NormalStream {
 public:
  explicit NormalStream(std::uint64_t key);

  double next();

  /// Uniform in the open interval (0, 1) with 52 random bits.
  static double to_unit(std::uint64_t bits);

 private:
  void refill();

  Philox4x32::Key key_;
  std::uint64_t block_ = 0;
  std::array<std::uint64_t, 2> buffer_{};
  int used_ = 2;
};

}  // namespace quartic
