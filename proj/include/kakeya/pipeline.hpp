#pragma once

// Desk-scale replay of the finite-field entropy argument: joint law ->
// typical pair set -> union of lines -> random linear compression -> full
// Besicovitch extension, with exact sizes at every stage. Stage one computes
// the exact typical-set cardinality (a multinomial) before materialising
// anything and refuses honestly when it exceeds the cap: the count grows like
// e^(mq H), so only laws with small common denominators are materialisable.

#include "kakeya/compression.hpp"
#include "kakeya/covering.hpp"
#include "kakeya/entropy.hpp"
#include "kakeya/fp.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kakeya {

struct PairFpSet {
  FpSpace space;  // ambient F_p^(n*mq)
  std::vector<std::pair<uint64_t, uint64_t>> pairs;
};

struct TypicalPairSet {
  Int exact_count;         // n! / prod (n p_xy)!, computed before materialising
  bool materialized = false;
  std::string refusal;     // why materialisation was refused, when it was
  PairFpSet b;
  Int q;                   // common mass denominator
  int64_t positions = 0;   // m q
  // projection counts #pi_r(B) for r in F_p ∪ {inf}, index p = infinity;
  // each must equal the multinomial of the projected law.
  std::vector<Int> projection_counts;
  bool projections_ok = false;
};

TypicalPairSet typical_pair_set(const JointFp& j, int64_t m, const Int& cap = Int(2'000'000));

struct LinesUnion {
  FpSet set;                          // union of lines through off-diagonal pairs
  std::vector<uint64_t> directions;   // pi_{-1}(B) \ {0}
  FpCoverResult cert;                 // one full line per direction, verified
  bool size_ok = false;               // #A <= p * sup_{r != -1} #pi_r(B)
};

LinesUnion lines_union(const PairFpSet& b);

struct PipelineStage {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct PipelineReport {
  uint64_t seed = 0;
  int64_t m = 1;
  uint32_t p = 2;
  double entropy_ratio = 0.0;       // H(X-Y) / sup H(X+rY) of the input law
  double count_ratio = 0.0;         // ln #pi_{-1}(B) / ln sup_{r != -1} #pi_r(B):
                                    // the finite-m analogue of the entropy ratio
  std::vector<PipelineStage> stages;
  bool completed = false;

  Int typical_count;                // stage 1 exact size
  size_t lines_size = 0;            // stage 2 #A
  size_t direction_count = 0;       //         #directions
  uint32_t compressed_dim = 0;      // stage 3 n
  size_t compressed_size = 0;
  size_t surviving = 0;
  FpMatrix matrix;
  size_t final_size = 0;            // stage 4 Besicovitch set
  bool all_directions_ok = false;
  double dkss_reference = 0.0;      // (p/2)^n
  bool size_vs_reference_ok = false;
};

PipelineReport replay_entropy_pipeline(const JointFp& j, int64_t m, uint64_t seed,
                                       const Int& typical_cap = Int(2'000'000),
                                       int retries = 64);

}  // namespace kakeya
