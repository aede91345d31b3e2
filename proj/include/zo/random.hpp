#pragma once

#include <array>
#include <cstdint>

namespace zo {

/// Seedable xoshiro256** generator with explicit substreams.
///
/// The state is derived from (seed, stream) through SplitMix64, so the same
/// pair always yields the same sequence and distinct stream ids give
/// decorrelated sequences. Parallel trials each own one stream; nothing here
/// is shared between threads.
///
/// Normal variates use the basic Box-Muller transform with the second
/// variate cached. That choice is fixed: changing it changes every frame.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  std::uint64_t next_u64();

  /// Uniform on the open interval (0, 1), 53 bits of resolution.
  double uniform();

  /// Standard normal variate.
  double normal();

  /// Uniform integer in [0, bound). Unbiased (Lemire rejection).
  std::uint64_t below(std::uint64_t bound);

  /// Fair coin as +1 / -1.
  int sign();

  /// Child source for a sub-task; depends only on (seed, stream, id).
  RandomSource substream(std::uint64_t id) const;

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::array<std::uint64_t, 4> state_{};
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

}  // namespace zo
