#pragma once

#include <cstdint>
#include <string_view>

namespace kerneval {

// Counter-based deterministic generator: every draw is a pure function of
// (seed, stream, index), so test data is reproducible across runs, threads,
// and platforms regardless of draw order.
class CounterRng {
 public:
  CounterRng(uint64_t seed, uint64_t stream) : seed_(seed), stream_(stream) {}

  // Uniform in [0, 1) with 53 bits of precision.
  double uniform01(uint64_t index) const;

  // Uniform real in [lo, hi).
  double uniform(uint64_t index, double lo, double hi) const;

  // Uniform integer in [lo, hi] inclusive.
  int64_t uniform_int(uint64_t index, int64_t lo, int64_t hi) const;

  uint64_t word(uint64_t index) const;

  static uint64_t hash_stream(std::string_view name, uint64_t extra);

 private:
  uint64_t seed_;
  uint64_t stream_;
};

}  // namespace kerneval
