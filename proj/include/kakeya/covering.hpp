#pragma once

// Greedy covering by translates: T with S + T ⊇ {1..X} over the integers, or
// S + T = F_p^n. Each step takes a translate of maximal new coverage (ties to
// the smallest translate), which contracts the uncovered set by the factor
// (1 - #S/2X) resp. (1 - #S/p^n); the explicit size bounds below follow.

#include "kakeya/fp.hpp"
#include "kakeya/int_set.hpp"

#include <vector>

namespace kakeya {

struct GreedyStep {
  Int translate;
  Int uncovered_before;
  Int uncovered_after;
};

struct GreedyIntCover {
  IntSet translates;              // T ⊆ {-X+1, ..., X}
  std::vector<GreedyStep> steps;  // per-step contraction audit
  Int size_bound;                 // ceil((2X/#S) ln X) + 1
  bool bound_ok = false;
  bool contraction_ok = false;    // 2X * after <= before * (2X - #S) at every step
};

GreedyIntCover greedy_translate_cover_int(const IntSet& s, const Int& x);

struct GreedyFpCover {
  std::vector<uint64_t> translates;
  std::vector<GreedyStep> steps;
  Int size_bound;                 // 2*ceil((p^n/#S) n ln p) + 1
  bool bound_ok = false;
  bool contraction_ok = false;    // p^n * after <= before * (p^n - #S)
};

// Covers the whole space; `target` restricts the set to cover (used by the
// difference-cover extension, which only needs the nonzero directions).
GreedyFpCover greedy_translate_cover_fp(const FpSet& s);
GreedyFpCover greedy_translate_cover_fp_target(const FpSet& s, const std::vector<uint64_t>& target);

struct ExtendResult {
  bool input_ok = false;          // supplied certificate verified
  FpSet extended;
  std::vector<uint64_t> translates;
  FpCoverResult full_cover;       // re-verified over every nonzero direction
  bool size_ok = false;           // #A' <= k * #T * #A
};

// Corollary-style extension: from k-term progressions in the directions of
// `cert` to every nonzero direction, via A' = ∪_{j<k, t∈T} (A + j·t).
ExtendResult extend_full_difference_cover(const FpSet& a, const FpCoverResult& cert, int64_t k);

}  // namespace kakeya
