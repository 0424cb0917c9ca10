#pragma once

// Exact brute-force minima for the cover quantities F_k(N), F'_k(N) and
// f_{k,n}(p) on tiny instances, by depth-first branch and bound over
// progression placements with a greedy incumbent. These searches are the
// independent ground truth the constructions are compared against.
//
// Normalisation: the integer searches run inside the window {0,...,(k-1)N}.
// For F this rests on translating the connected components of an optimal
// solution to start at 0; for F' the same argument is combined with capping
// the differences at the window width. The F' cap is an implementation lemma
// of this library, not a quoted fact; it is exact on every instance small
// enough to cross-check by unwindowed enumeration.

#include "kakeya/fp.hpp"
#include "kakeya/int_set.hpp"

#include <optional>

namespace kakeya {

enum class OracleQuantity { FullCover, DistinctCover, FpCover };

struct OracleOptions {
  int64_t window_cap = 40;      // refuse exact F/F' search beyond (k-1)N > cap
  uint64_t fp_cap = 25;         // refuse exact f search beyond p^n > cap
  int64_t time_budget_ms = 0;   // 0 = unlimited; on expiry: incumbent, exhausted=false
  int64_t window_width = 0;     // 0 = (k-1)N; larger widens the F' normalization
};

struct OracleResult {
  OracleQuantity quantity = OracleQuantity::FullCover;
  int64_t k = 1;
  int64_t n_param = 1;          // N, or the dimension n for f_{k,n}(p)
  uint32_t p = 0;
  int64_t optimum = 0;
  IntSet witness;                        // lexicographically smallest optimum
  std::vector<uint64_t> fp_witness;
  bool exhausted = true;                 // exact within the declared window
  int64_t window = 0;                    // normalization window {0, ..., window}
  uint64_t nodes = 0;
  double wall_ms = 0.0;
  std::optional<double> dkss_reference;  // (p/2)^n, reported when k = p
};

OracleResult min_full_cover(int64_t k, int64_t n, const OracleOptions& opt = {});
OracleResult min_distinct_cover(int64_t k, int64_t n, const OracleOptions& opt = {});
OracleResult min_fp_cover(int64_t k, uint32_t dim, uint32_t p, const OracleOptions& opt = {});

struct BoundComparison {
  OracleResult full;      // F_k(N)
  OracleResult distinct;  // F'_k(N)
  bool order_ok = false;  // F' <= F
  bool factor_ok = false; // F <= 12 k^3 (1 + ln N) F'
  double factor_bound = 0.0;
  int64_t trivial_construction = 0;  // |union of {0, d, ..., (k-1)d}|
};

BoundComparison compare_bounds(int64_t k, int64_t n, const OracleOptions& opt = {});

}  // namespace kakeya
