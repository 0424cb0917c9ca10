#pragma once

// Seeded randomness with portable bounded sampling. std::mt19937_64 has a
// standard-mandated output sequence, but the std distributions do not, so
// bounded draws are done by explicit rejection here. Identical seed implies
// identical results on every platform.

#include "kakeya/numbers.hpp"

#include <random>

namespace kakeya {

class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next_u64() { return gen_(); }

  // Uniform in [0, n), n >= 1.
  uint64_t below(uint64_t n) {
    if (n == 0) throw ConfigError("Rng::below(0)");
    if ((n & (n - 1)) == 0) return gen_() & (n - 1);
    const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t v;
    do {
      v = gen_();
    } while (v >= limit);
    return v % n;
  }

  // Uniform in [lo, hi] inclusive.
  int64_t range(int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo) + 1));
  }

  // Uniform Int in [0, n), n >= 1; samples 64-bit limbs with rejection.
  Int below_int(const Int& n) {
    if (n <= 0) throw ConfigError("Rng::below_int with n <= 0");
    if (n <= Int(UINT64_MAX)) return Int(below(static_cast<uint64_t>(n)));
    unsigned bits = 0;
    Int t = n - 1;
    while (t > 0) { ++bits; t >>= 1; }
    const unsigned limbs = (bits + 63) / 64;
    for (;;) {
      Int v = 0;
      for (unsigned i = 0; i < limbs; ++i) v = (v << 64) | Int(gen_());
      v >>= (limbs * 64 - bits);
      if (v < n) return v;
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace kakeya
