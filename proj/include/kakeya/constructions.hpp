#pragma once

// Explicit constructions: the quadratic-residue union of progressions and its
// digit concatenation, the Mockenhaupt-Tao plane set, and the wrap/unwrap
// transfers between Z and F_p^n. Every construction re-verifies its own
// certificate; nothing is trusted from the defining argument alone.

#include "kakeya/ap_cover.hpp"
#include "kakeya/fp.hpp"
#include "kakeya/int_set.hpp"
#include "kakeya/rng.hpp"

#include <optional>

namespace kakeya {

struct QRConstruction {
  int64_t k = 1;
  int64_t m = 1;                 // number of odd primes
  std::vector<Int> odd_primes;   // 3, 5, ..., p_m
  Int q;                         // product of the odd primes
  IntSet s;
  CoverResult certificate;       // verified over d in {1, ..., Q-1}
  Int size_bound;                // k^2 * prod (p_i + 1)/2
  bool size_ok = false;
};

// S = ∪_d {x_d + jd : 0 <= j < k} with x_d the unique element of {1..Q}
// congruent to d^2 (mod Q).
QRConstruction quadratic_residue_cover(int64_t k, int64_t m, const Int& cap = Int(1) << 22);

struct DigitConcatResult {
  IntSet set;                // A_n = {s_0 + s_1 Q + ... + s_{n-1} Q^{n-1}}
  CoverResult certificate;   // verified over d in {0, ..., Q^n - 1}
  Int q_pow_n;
  bool size_ok = false;      // #A_n <= (#S)^n
};

DigitConcatResult digit_concatenate(const QRConstruction& c, unsigned n,
                                    const Int& cap = Int(1) << 22);

struct FUpperResult {
  IntSet set;
  CoverResult certificate;   // verified over {1, ..., N}
  unsigned n = 1;            // minimal n with Q^n > N
  Int q_pow_n;
  double exponent = 0.0;     // log #A / log N (0 when N < 2)
};

FUpperResult build_F_upper(int64_t k, const Int& n_cover, int64_t m,
                           const Int& cap = Int(1) << 22);

// V = {(u+v, uv)} ⊂ F_p^2, cardinality p(p+1)/2. For odd p exactly the p
// non-vertical directions carry full lines; p = 2 is degenerate (u^2 = u in
// characteristic 2 fills a column, so the vertical line appears as well).
FpSet mockenhaupt_tao(uint32_t p);

struct UnwrapResult {
  IntSet set;
  int64_t distinct_differences = 0;
  std::vector<Int> integer_differences;  // the unwrapped (and collapsed) d's
  CoverResult cover;                     // verified k-term cover of those d's
  bool size_ok = false;                  // #A2 <= k^n * #A1
};

// Lifts F_p^n points to {0,...,p-1}^n ⊂ Z^n, rebuilds each certified
// progression there, and (for n > 1) collapses digits to Z.
UnwrapResult fp_unwrap(const FpSet& a, int64_t k);

struct WrapResult {
  bool accepted = false;    // direction threshold met within the retry budget
  FpSet set;                // image in F_p^n (best attempt when !accepted)
  int64_t covered_directions = 0;  // exact count of nonzero covered directions
  int64_t threshold = 0;
  Int t;                    // accepted shift
  int attempts = 0;
  int64_t progression_length = 1;  // floor(k/2), the verified cover length
  std::vector<Int> bad_differences;  // nonempty iff the input cover fails
};

// Confines A to {1..10kN} (cut-and-move), samples shifts t, reads the window
// {0..M^n-1} in base M as digit vectors, and projects to F_p^n. Accepts once
// at least ceil(c*N) nonzero directions carry floor(k/2)-term progressions;
// the count is computed exhaustively, never estimated.
WrapResult wrap_to_fp(const IntSet& a, int64_t k, int64_t n_cover, uint32_t n_dim,
                      uint32_t p, uint64_t seed,
                      std::optional<Rat> accept_fraction = std::nullopt,
                      int retries = 64);

}  // namespace kakeya
