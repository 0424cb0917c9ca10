#include <doctest.h>

#include "kakeya/ap_cover.hpp"
#include "kakeya/erdos_selfridge.hpp"
#include "kakeya/rng.hpp"

using namespace kakeya;

TEST_CASE("interval_multiple_count examples") {
  // primes {3,5}, I = {1..10}: multiples 3,5,6,9,10
  ESInstance a{{Int(3), Int(5)}, 2, Int(0)};
  CHECK(interval_multiple_count(a) == 5);

  // I = {14..23}: multiples 15,18,20,21
  ESInstance b{{Int(3), Int(5)}, 2, Int(13)};
  CHECK(interval_multiple_count(b) == 4);

  // single prime: exactly k multiples in any window of length k*p
  for (int64_t w = -20; w <= 20; w += 7) {
    ESInstance c{{Int(7)}, 3, Int(w)};
    CHECK(interval_multiple_count(c) == 3);
  }
}

TEST_CASE("interval count is periodic in the shift") {
  std::vector<Int> primes{Int(3), Int(5)};
  for (int64_t w = 0; w < 15; ++w) {
    ESInstance a{primes, 2, Int(w)};
    ESInstance b{primes, 2, Int(w + 15)};
    ESInstance c{primes, 2, Int(w - 45)};
    Int base = interval_multiple_count(a);
    CHECK(interval_multiple_count(b) == base);
    CHECK(interval_multiple_count(c) == base);
  }
}

TEST_CASE("min_over_intervals: exact sweeps") {
  auto r = min_over_intervals({Int(3), Int(5)}, 2);
  CHECK(r.exhaustive);
  CHECK(r.count == 4);
  CHECK(r.period == 15);
  CHECK(interval_multiple_count({{Int(3), Int(5)}, 2, r.w}) == r.count);

  auto single = min_over_intervals({Int(11)}, 4);
  CHECK(single.count == 4);

  auto r23 = min_over_intervals({Int(2), Int(3)}, 2);
  CHECK(r23.exhaustive);
  CHECK(r23.period == 6);
  CHECK(interval_multiple_count({{Int(2), Int(3)}, 2, r23.w}) == r23.count);
}

TEST_CASE("min_over_intervals: sampling mode flags non-exhaustive") {
  auto r = min_over_intervals({Int(3), Int(5)}, 2, Int(10), 9, 200);
  CHECK_FALSE(r.exhaustive);
  CHECK(r.count >= 4);  // sampling can only overshoot the true minimum
}

TEST_CASE("prime_pattern_search: single difference") {
  auto r = prime_pattern_search({Int(1)}, 0.5, Int(1000), 2);
  REQUIRE(r.found);
  CHECK(is_prime_u64(to_i64(r.v)));
  CHECK(is_prime_u64(to_i64(r.u + r.v)));
  CHECK(Rat(r.v) >= Rat(1, 2) * Rat(r.x));
  CHECK(r.claim_ok);
}

TEST_CASE("prime_pattern_search: two differences") {
  auto r = prime_pattern_search({Int(1), Int(2)}, 0.5, Int(10000), 2);
  REQUIRE(r.found);
  CHECK(is_prime_u64(to_i64(r.v)));
  CHECK(is_prime_u64(to_i64(r.u + r.v)));
  CHECK(is_prime_u64(to_i64(2 * r.u + r.v)));
  CHECK(r.claim_ok);
}

TEST_CASE("prime_pattern_search: impossible window fails as a value") {
  auto r = prime_pattern_search({Int(1)}, 0.5, Int(2), 2);
  CHECK_FALSE(r.found);
}

TEST_CASE("sandwich_check at the three desk instances") {
  for (auto [k, n] : std::vector<std::pair<int64_t, int64_t>>{{2, 1}, {2, 2}, {3, 2}}) {
    auto rep = sandwich_check(k, n);
    REQUIRE(rep.right_demonstrated);
    CHECK(rep.left_ok);
    CHECK(rep.right_ok);
    CHECK(rep.sweep.exhaustive);
    CHECK(rep.f_prime.optimum <= rep.sweep.count);
    CHECK(rep.sweep.count <= Int(k) * rep.f_prime.optimum);
    // the constructed interval realises exactly k multiples of each prime
    CHECK(rep.pattern.claim_ok);
  }
}

TEST_CASE("any instance's point set certifies its primes as distinct differences") {
  Rng rng(314);
  const std::vector<std::vector<Int>> prime_sets{
      {Int(3), Int(5)}, {Int(5), Int(7)}, {Int(3), Int(7), Int(11)}};
  for (const auto& primes : prime_sets) {
    for (int trial = 0; trial < 20; ++trial) {
      const int64_t k = 2 + static_cast<int64_t>(rng.below(3));
      ESInstance inst{primes, k, Int(rng.range(-500, 500))};
      std::vector<Int> pts;
      const Int len = inst.interval_length();
      for (Int x = inst.w + 1; x <= inst.w + len; ++x)
        for (const Int& p : primes)
          if (floor_mod(x, p) == 0) {
            pts.push_back(x);
            break;
          }
      IntSet extracted(std::move(pts));
      CoverResult c = verify_cover(extracted, k, primes);
      CHECK(c.ok());
      CHECK(Int(extracted.size()) == interval_multiple_count(inst));
    }
  }
}
