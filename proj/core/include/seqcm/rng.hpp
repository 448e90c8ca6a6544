#pragma once

#include <cstdint>

namespace seqcm {

// splitmix64: tiny deterministic generator, identical across platforms.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi], rejection sampled.
  int64_t uniform(int64_t lo, int64_t hi) {
    uint64_t span = (uint64_t)(hi - lo) + 1;
    uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return lo + (int64_t)(v % span);
  }

  // Uniform in [-bound, bound] excluding zero.
  int64_t nonzero(int64_t bound) {
    int64_t v;
    do {
      v = uniform(-bound, bound);
    } while (v == 0);
    return v;
  }

  static uint64_t derive(uint64_t seed, uint64_t salt) {
    Rng r(seed ^ (0x9e3779b97f4a7c15ULL * (salt + 1)));
    return r.next();
  }

 private:
  uint64_t state_;
};

}  // namespace seqcm
