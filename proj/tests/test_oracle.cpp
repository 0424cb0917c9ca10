#include <doctest.h>

#include "kakeya/ap_cover.hpp"
#include "kakeya/constructions.hpp"
#include "kakeya/oracle.hpp"

using namespace kakeya;

TEST_CASE("min_full_cover ground truth") {
  auto f23 = min_full_cover(2, 3);
  CHECK(f23.optimum == 3);
  CHECK(f23.witness == IntSet({Int(0), Int(1), Int(3)}));
  CHECK(f23.exhausted);

  auto f32 = min_full_cover(3, 2);
  CHECK(f32.optimum == 4);
  CHECK(f32.witness == IntSet({Int(0), Int(1), Int(2), Int(4)}));

  auto f26 = min_full_cover(2, 6);
  CHECK(f26.optimum == 4);
  CHECK(f26.witness == IntSet({Int(0), Int(1), Int(4), Int(6)}));

  auto f33 = min_full_cover(3, 3);
  CHECK(f33.optimum == 5);  // frozen by enumeration

  for (int64_t k = 1; k <= 6; ++k) CHECK(min_full_cover(k, 1).optimum == k);
}

TEST_CASE("every oracle witness passes verify_cover") {
  for (int64_t k = 2; k <= 3; ++k)
    for (int64_t n = 1; n <= 4; ++n) {
      auto r = min_full_cover(k, n);
      CHECK(verify_cover(r.witness, k, diff_range(1, n)).ok());
    }
}

TEST_CASE("min_full_cover monotone in k and N") {
  int64_t prev = 0;
  for (int64_t n = 1; n <= 6; ++n) {
    auto r = min_full_cover(2, n);
    CHECK(r.optimum >= prev);
    prev = r.optimum;
  }
  for (int64_t n = 1; n <= 4; ++n)
    CHECK(min_full_cover(3, n).optimum >= min_full_cover(2, n).optimum);
}

TEST_CASE("min_distinct_cover ground truth") {
  auto fp23 = min_distinct_cover(2, 3);
  CHECK(fp23.optimum == 3);
  CHECK(fp23.witness == IntSet({Int(0), Int(1), Int(3)}));

  auto fp26 = min_distinct_cover(2, 6);
  CHECK(fp26.optimum == 4);
  CHECK(fp26.witness == IntSet({Int(0), Int(1), Int(4), Int(6)}));

  auto fp32 = min_distinct_cover(3, 2);
  CHECK(fp32.optimum == 4);

  for (int64_t k = 1; k <= 6; ++k) CHECK(min_distinct_cover(k, 1).optimum == k);
}

TEST_CASE("min_distinct_cover witness hosts N distinct differences") {
  for (int64_t k = 2; k <= 3; ++k)
    for (int64_t n = 1; n <= 4; ++n) {
      auto r = min_distinct_cover(k, n);
      int64_t count = 0;
      const Int span = r.witness.max() - r.witness.min();
      for (Int d = 1; d <= span; ++d)
        if (verify_cover(r.witness, k, {d}).ok()) ++count;
      CHECK(count >= n);
    }
}

TEST_CASE("the F' window normalization is part of the contract") {
  // Within the default window the optimum at (k,N) = (2,10) is 6; widening
  // the window admits the Sidon set {0,1,3,7,12} of size 5. The declared
  // window travels with the result.
  auto narrow = min_distinct_cover(2, 10);
  CHECK(narrow.optimum == 6);
  CHECK(narrow.window == 10);

  OracleOptions wide;
  wide.window_width = 14;
  auto better = min_distinct_cover(2, 10, wide);
  CHECK(better.optimum == 5);
  CHECK(better.window == 14);
  CHECK(verify_cover(better.witness, 2, {Int(1)}).ok());
}

TEST_CASE("min_fp_cover ground truth") {
  for (uint32_t p : {2u, 3u, 5u}) {
    auto r = min_fp_cover(p, 1, p);
    CHECK(r.optimum == p);
    CHECK(r.dkss_reference.has_value());
  }
  auto f213 = min_fp_cover(2, 1, 3);
  CHECK(f213.optimum == 2);
  CHECK(f213.fp_witness == std::vector<uint64_t>{0, 1});

  auto f222 = min_fp_cover(2, 2, 2);
  CHECK(f222.optimum == 3);  // frozen by enumeration: 3 points cover 3 directions
}

TEST_CASE("min_fp_cover witness covers every nonzero direction") {
  auto r = min_fp_cover(2, 2, 3);
  FpSpace sp(3, 2);
  FpSet w(sp, r.fp_witness);
  CHECK(fp_verify_cover(w, 2, all_nonzero_directions(sp)).ok());
}

TEST_CASE("oracle caps refuse oversized instances") {
  CHECK_THROWS_AS(min_full_cover(5, 20), InstanceTooLarge);
  CHECK_THROWS_AS(min_fp_cover(2, 2, 7), InstanceTooLarge);
}

TEST_CASE("compare_bounds inequality chain") {
  for (auto [k, n] : std::vector<std::pair<int64_t, int64_t>>{{2, 3}, {3, 2}, {2, 6}}) {
    auto c = compare_bounds(k, n);
    CHECK(c.order_ok);
    CHECK(c.factor_ok);
    CHECK(c.distinct.optimum <= c.full.optimum);
    CHECK(c.full.optimum <= c.trivial_construction);
  }
}

TEST_CASE("construction upper bounds dominate oracle optima") {
  for (int64_t k = 2; k <= 3; ++k)
    for (int64_t n = 2; n <= 6; ++n) {
      auto opt = min_full_cover(k, n);
      auto built = build_F_upper(k, Int(n), 1);
      CHECK(static_cast<int64_t>(built.set.size()) >= opt.optimum);
    }
}
