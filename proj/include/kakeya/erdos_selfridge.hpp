#pragma once

// Interval-coverage counts for prime multiples: the quantity behind the
// sandwich F'_k(N) <= G_k(N) <= k F'_k(N). The minimum over intervals is a
// sweep over one full period lcm(p_1..p_N) when that is small enough; the
// upper construction replaces the prime-pattern existence theorem with a
// bounded search whose failure is an ordinary value.

#include "kakeya/int_set.hpp"
#include "kakeya/oracle.hpp"

#include <vector>

namespace kakeya {

struct ESInstance {
  std::vector<Int> primes;  // strictly increasing
  int64_t k = 1;
  Int w;                    // interval I = {w+1, ..., w + k p_N}

  void check() const;
  Int interval_length() const { return Int(k) * primes.back(); }
};

// #(I ∩ ∪ p_i Z), exact.
Int interval_multiple_count(const ESInstance& inst);

struct IntervalMin {
  Int w;            // smallest minimizing shift in {0, ..., period-1}
  Int count;
  Int period;       // lcm of the primes
  bool exhaustive;  // full-period sweep vs seeded sampling
};

// Exact when lcm(primes) <= exact_cap, otherwise a seeded random search over
// `samples` shifts, flagged non-exhaustive.
IntervalMin min_over_intervals(const std::vector<Int>& primes, int64_t k,
                               const Int& exact_cap = Int(1'000'000'000),
                               uint64_t seed = 0, int64_t samples = 1'000'000);

struct PrimePattern {
  bool found = false;
  Int u, v, x;               // v, d_1 u + v, ..., d_N u + v prime in [(1-delta)X, X]
  std::vector<Int> primes;   // p_i = d_i u + v
  Int w;                     // CRT shift with p_i | w + u a_i
  Int interval_start;        // I = interval_start + {1, ..., k p_N}
  bool claim_ok = false;     // I ∩ p_i Z = {w + u a_i + j p_i : 0 <= j < k}, all i
};

// Bounded search for primes in arithmetic pattern; existence is only known
// asymptotically, so failure is a value. `bases` are the a_i (defaults to
// zeros).
PrimePattern prime_pattern_search(const std::vector<Int>& diffs, double delta, const Int& x_max,
                                  int64_t k, const std::vector<Int>& bases = {},
                                  const Int& u_max = 512);

struct SandwichReport {
  OracleResult f_prime;            // oracle F'_k(N)
  bool left_ok = false;            // F' <= instance count, via extracted cover
  bool right_ok = false;           // construction achieved count <= k F'
  bool right_demonstrated = false; // prime pattern search succeeded
  PrimePattern pattern;
  ESInstance instance;             // the constructed instance
  Int instance_count;              // multiples in the constructed interval
  IntervalMin sweep;               // exact minimum for the constructed primes
  std::string binding_condition;   // which window inequality fixed the search
};

SandwichReport sandwich_check(int64_t k, int64_t n, const Int& x_max = Int(1'000'000),
                              const OracleOptions& oracle_opt = {});

}  // namespace kakeya
