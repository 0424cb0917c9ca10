#pragma once

// Exact entropy computations. Probabilities are rationals end to end; natural
// logs are taken in 50-digit floats only at the final reduction, so entropies
// carry far more than the 12 significant digits the reports print. This
// matters: the finite-field gap ratios being measured differ from 1 by
// O(1/log p).

#include "kakeya/ap_cover.hpp"
#include "kakeya/fp.hpp"
#include "kakeya/int_set.hpp"
#include "kakeya/slope.hpp"

#include <map>
#include <vector>

namespace kakeya {

// H(weights) = -sum w ln w in nats; weights must be positive and sum to 1.
double entropy_nats(const std::vector<Rat>& weights);

// Joint law of a pair of Z-valued random variables with finite support.
struct JointZ {
  std::map<std::pair<Int, Int>, Rat> mass;

  void check() const;  // positive masses summing to 1
  // Pushforward of X + rY (values are exact rationals; Y when r = inf).
  std::map<Rat, Rat> project(const Slope& r) const;
  double projection_entropy(const Slope& r) const;
};

// Joint law of a pair of F_p^n-valued random variables.
struct JointFp {
  FpSpace space;
  std::map<std::pair<uint64_t, uint64_t>, Rat> mass;

  void check() const;
  std::map<uint64_t, Rat> project(const FpSlope& r) const;
  double projection_entropy(const FpSlope& r) const;
};

struct EntropyGap {
  double h_difference = 0.0;        // H(X - Y)
  double sup = 0.0;                 // sup_j H(X + r_j Y)
  double ratio = 0.0;               // h_difference / sup
  bool infinite = false;            // sup = 0 with H(X - Y) > 0
  size_t argmax = 0;                // index of the maximising slope
  std::vector<double> entropies;    // per-slope values, input order
};

// Slopes must exclude -1 (the difference projection is the numerator).
EntropyGap entropy_gap(const JointZ& j, const std::vector<Slope>& slopes);
EntropyGap entropy_gap(const JointFp& j, const std::vector<FpSlope>& slopes);

// Joint law of X = (a+b, ab), Y = (a+b', ab') with a, b, b' uniform in F_p.
// H(X - Y) = (2 - 1/p) ln p exactly; every slope other than -1 projects to a
// dilate of the (u+v, uv) law.
JointFp mt_joint(uint32_t p, uint64_t cap = 1u << 26);

struct MtSweep {
  double h_difference;   // enumerated H(X - Y)
  double closed_form;    // (2 - 1/p) ln p
  EntropyGap gap;        // over all slopes except -1
  double sup_bound;      // 2 ln p - ln 2 + 5 ln p / p
};
MtSweep mt_sweep(uint32_t p);

struct TypicalCount {
  double log_count_over_n;  // (1/n) ln ( n! / prod (n p_z)! ), exact multinomial
  double entropy;           // H(X + rY)
  double gap;               // entropy - log_count_over_n (always >= 0)
};

// Requires n * p_z integral for every atom of the projected law.
TypicalCount typical_logcount(const std::vector<Rat>& weights, const Int& n);
TypicalCount typical_logcount(const JointFp& j, const FpSlope& r, const Int& n);
TypicalCount typical_logcount(const JointZ& j, const Slope& r, const Int& n);

struct CoverRv {
  JointZ joint;
  int64_t atoms = 0;            // equals N: X - Y is uniform on {-Q,...,-NQ}
  bool diff_uniform_ok = false;
  bool support_ok = false;      // X + r_j Y lands in (1 + r_j)·A for every j
};

// X = a(d) + MQ d, Y = a(d) + (M+1)Q d with d uniform on {1..N}; requires a
// verified 2MQ-term certificate. Slopes must satisfy Q r/(1+r) integral with
// magnitude < QM (r = inf needs (M+1)Q <= k-1); violations report the
// offending slope and the minimal admissible Q and M.
CoverRv cover_to_rv(const IntSet& a, const CoverResult& cert, const std::vector<Slope>& slopes,
                    const Int& q_step, const Int& m_step, int64_t n_diffs);

struct KatzTao {
  double alpha;     // root of a^3 - 4a + 2 in (1, 2), bisected to 1e-12
  double epsilon;   // alpha - 1
  double residual;  // |alpha^3 - 4 alpha + 2|
};
KatzTao katz_tao_epsilon();

}  // namespace kakeya
