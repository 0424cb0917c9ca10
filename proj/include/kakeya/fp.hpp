#pragma once

// Finite subsets of F_p^n. Points are stored as base-p indices
// (x_1 + x_2 p + ... + x_n p^{n-1}), which keeps large instance handling
// (the pipeline works in dimensions up to ~12) cheap and deterministic.

#include "kakeya/numbers.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace kakeya {

bool is_prime_u64(uint64_t n);  // deterministic Miller-Rabin
uint64_t next_prime_at_least(uint64_t n);

struct FpSpace {
  uint32_t p = 2;
  uint32_t n = 1;
  uint64_t card = 2;  // p^n

  FpSpace() = default;
  FpSpace(uint32_t p_, uint32_t n_);

  std::vector<uint32_t> decode(uint64_t idx) const;
  uint64_t encode(const std::vector<uint32_t>& coords) const;

  uint64_t add(uint64_t a, uint64_t b) const;
  uint64_t sub(uint64_t a, uint64_t b) const;
  uint64_t scale(uint64_t c, uint64_t a) const;  // c in {0,...,p-1}
  uint64_t neg(uint64_t a) const { return scale(p - 1, a); }

  friend bool operator==(const FpSpace& a, const FpSpace& b) {
    return a.p == b.p && a.n == b.n;
  }
};

class FpSet {
 public:
  FpSet() = default;
  FpSet(FpSpace space, std::vector<uint64_t> pts);

  const FpSpace& space() const { return space_; }
  size_t size() const { return pts_.size(); }
  bool empty() const { return pts_.empty(); }
  bool contains(uint64_t idx) const;
  const std::vector<uint64_t>& points() const { return pts_; }

  FpSet united(const FpSet& other) const;
  FpSet translated(uint64_t t) const;

  auto begin() const { return pts_.begin(); }
  auto end() const { return pts_.end(); }

 private:
  FpSpace space_;
  std::vector<uint64_t> pts_;
};

// Slope r in F_p ∪ {inf} for projections of F_p^n-valued pairs.
struct FpSlope {
  uint32_t r = 0;
  bool infinite = false;

  static FpSlope inf() { return {0, true}; }
  static FpSlope of(uint32_t v) { return {v, false}; }
};

// All slopes except -1 (mod p), the supremum set of the entropy inequality.
std::vector<FpSlope> fp_slopes_excluding_minus_one(uint32_t p);

struct FpCoverResult {
  int64_t k = 1;
  std::map<uint64_t, uint64_t> entries;  // direction -> base (minimal index)
  std::vector<uint64_t> uncovered;

  bool ok() const { return uncovered.empty(); }
};

// k-term progressions {a + j d} in F_p^n for each requested direction; the
// zero direction is trivially covered by any nonempty set.
FpCoverResult fp_verify_cover(const FpSet& a, int64_t k, const std::vector<uint64_t>& dirs);

// All nonzero directions of the ambient space.
std::vector<uint64_t> all_nonzero_directions(const FpSpace& space);

// Directions (projective representatives: first nonzero coordinate = 1)
// whose full p-term line is contained in `a`.
std::vector<uint64_t> full_line_directions(const FpSet& a);

}  // namespace kakeya
