#pragma once

// Arithmetic-progression cover verification over the integers: certificates
// map a common difference d to the minimal base a(d) with
// {a(d), a(d)+d, ..., a(d)+(k-1)d} inside the certified set. A difference of
// zero is trivially covered by any nonempty set (the progression degenerates
// to one repeated point).

#include "kakeya/int_set.hpp"

#include <map>
#include <vector>

namespace kakeya {

struct ApCertificate {
  int64_t k = 1;
  std::map<Int, Int> entries;  // d -> a(d)

  // True when every entry's progression lies in `set`.
  bool valid_for(const IntSet& set) const;
};

struct CoverResult {
  int64_t k = 1;
  std::map<Int, Int> entries;    // minimal base per covered difference
  std::vector<Int> uncovered;    // differences with no k-term progression

  bool ok() const { return uncovered.empty(); }
  ApCertificate certificate() const { return {k, entries}; }
};

// For each d in `diffs`, finds the minimal a with the k-term progression in A,
// or records d as uncovered. Failure is a value, not an exception.
CoverResult verify_cover(const IntSet& a, int64_t k, const std::vector<Int>& diffs);

inline std::vector<Int> diff_range(const Int& lo, const Int& hi) {
  std::vector<Int> d;
  for (Int x = lo; x <= hi; ++x) d.push_back(x);
  return d;
}

struct CutMoveResult {
  bool ok = false;
  std::vector<Int> bad_differences;  // precondition failures, when !ok
  IntSet set;                        // subset of {1, ..., 10kN}
  CoverResult half_cover;            // verified floor(k/2)-term cover of {1..N}
};

// Splits Z into intervals of length 10kN and overlays the pieces. Requires a
// verified k-term cover of {1..N}; yields a floor(k/2)-term cover confined to
// {1, ..., 10kN}.
CutMoveResult cut_and_move(const IntSet& a, int64_t k, int64_t n_diffs);

struct FreimanResult {
  bool ok = false;
  Int minimal_base;  // reported when the requested base is too small
  IntSet image;
};

// Digit map f(x) = sum_i base^i * x_i on vectors with coordinates in
// {0,...,B-1}. Injective on the whole box and progression-preserving once
// base >= 10*k*B*n; smaller bases are rejected with the minimal one reported.
FreimanResult freiman_collapse(const std::vector<VecInt>& points, int64_t k, const Int& base);

}  // namespace kakeya
