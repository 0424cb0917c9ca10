#pragma once

// The two randomized compression arguments: the multiplicative-shift map
// phi_theta(x) = floor(N {theta x}) that turns N distinct progression
// differences into a full cover of {1..N}, and the random linear projection
// F_p^M -> F_p^n that keeps at least half of a line-direction set alive.
// Both are Las-Vegas: expectations from the defining arguments drive the
// acceptance thresholds, and every accepted output is re-verified exactly.

#include "kakeya/ap_cover.hpp"
#include "kakeya/fp.hpp"
#include "kakeya/int_set.hpp"
#include "kakeya/rng.hpp"

#include <vector>

namespace kakeya {

struct ThetaMap {
  Rat theta;  // in (0,1)
  Int n;      // range parameter: values land in {0, ..., N-1}

  ThetaMap(Rat t, Int range) : theta(std::move(t)), n(std::move(range)) {
    if (theta <= 0 || theta >= 1) throw ConfigError("theta must lie in (0,1)");
    if (n < 1) throw ConfigError("ThetaMap with N < 1");
  }
};

// Exact rational evaluation of floor(N * {theta x}).
Int phi_theta(const Int& x, const ThetaMap& map);

struct DistinctToFullResult {
  bool ok = false;              // theta accepted and final cover verified
  int attempts = 0;
  Rat theta;                    // the accepted map, for replay
  Int grid;                     // denominator grid the numerator was drawn from
  int64_t collisions = 0;       // pairs i<j with phi(d_i) = phi(d_j)
  int64_t distinct_images = 0;  // #{phi(d_i)}  (>= N/3 once accepted)
  IntSet a1;
  CoverResult cover;            // verified k-term cover of {1, ..., N}
  Int size_bound;               // 12 k^3 (1 + ln N) #A0, rounded up
  bool size_ok = false;
};

// Input: A0 with a verified k-term certificate for N pairwise-distinct
// positive differences (d -> base). Resamples theta from an exact rational
// grid until the image differences collide at most N-1 times, then builds
// A1 = phi(A0) + {0..k-1} - {0,N,...,(k-1)N} + {0..k-1}·T.
DistinctToFullResult distinct_to_full(const IntSet& a0,
                                      const std::map<Int, Int>& certificate, int64_t k,
                                      int64_t n_target, uint64_t seed, int retries = 64);

using FpMatrix = std::vector<std::vector<uint32_t>>;  // n rows, M columns

struct LinearCompressResult {
  bool accepted = false;
  int attempts = 0;
  uint32_t target_dim = 1;           // smallest n with p^n >= N
  FpMatrix matrix;                   // the accepted map, for replay
  FpSet image;
  std::vector<uint64_t> surviving;   // distinct nonzero images of the directions
  FpCoverResult image_cover;         // verified lines in the surviving directions
  bool lines_ok = false;             // image of each certified line is a line
};

// `cert` certifies one full line (p-term progression) per direction of A.
// Resamples a uniform linear map until >= N/2 direction images survive.
LinearCompressResult random_linear_compress(const FpSet& a, const FpCoverResult& cert,
                                            uint64_t seed, int retries = 64);

// Deterministic single application, used by tests and for replaying an
// accepted matrix.
LinearCompressResult compress_with_matrix(const FpSet& a, const FpCoverResult& cert,
                                          uint32_t target_dim, const FpMatrix& matrix);

}  // namespace kakeya
