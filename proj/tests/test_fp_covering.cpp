#include <doctest.h>

#include "kakeya/covering.hpp"
#include "kakeya/fp.hpp"
#include "kakeya/rng.hpp"

using namespace kakeya;

TEST_CASE("primality") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(31));
  CHECK(is_prime_u64(1'000'000'007ull));
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64(91));
  CHECK(next_prime_at_least(14) == 17);
  CHECK_THROWS_AS(FpSpace(4, 1), ConfigError);
}

TEST_CASE("FpSpace arithmetic round-trips") {
  FpSpace sp(5, 3);
  CHECK(sp.card == 125);
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    uint64_t a = rng.below(sp.card), b = rng.below(sp.card);
    CHECK(sp.encode(sp.decode(a)) == a);
    CHECK(sp.sub(sp.add(a, b), b) == a);
    CHECK(sp.add(a, sp.neg(a)) == 0);
    CHECK(sp.scale(2, a) == sp.add(a, a));
  }
}

TEST_CASE("fp_verify_cover on a line") {
  FpSpace sp(5, 1);
  FpSet line(sp, {0, 1, 2, 3, 4});
  auto r = fp_verify_cover(line, 5, all_nonzero_directions(sp));
  CHECK(r.ok());
  FpSet partial(sp, {0, 1, 2});
  auto r2 = fp_verify_cover(partial, 3, {1, 2});
  CHECK(r2.entries.count(1) == 1);   // {0,1,2}
  CHECK(r2.entries.count(2) == 0);   // every {a, a+2, a+4} leaves the set
  CHECK(r2.uncovered == std::vector<uint64_t>{2});
}

TEST_CASE("greedy int cover: full set needs one translate") {
  auto r = greedy_translate_cover_int(IntSet::range(1, 8), Int(8));
  CHECK(r.translates.size() == 1);
  CHECK(r.translates.contains(Int(0)));
  CHECK(r.bound_ok);
  CHECK(r.contraction_ok);
}

TEST_CASE("greedy int cover: singleton forces X translates") {
  auto r = greedy_translate_cover_int(IntSet({Int(1)}), Int(3));
  CHECK(r.translates.size() == 3);
  CHECK(r.translates == IntSet({Int(0), Int(1), Int(2)}));
}

TEST_CASE("greedy int cover: two-element set covers {1..4} with 2 translates") {
  auto r = greedy_translate_cover_int(IntSet({Int(1), Int(3)}), Int(4));
  CHECK(r.translates.size() == 2);
  // exhaustive: S + T covers {1,2,3,4}
  for (Int v = 1; v <= 4; ++v) {
    bool covered = false;
    for (const Int& t : r.translates)
      if (v - t == 1 || v - t == 3) covered = true;
    CHECK(covered);
  }
}

TEST_CASE("greedy int cover: random suites satisfy coverage, bounds, contraction") {
  Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int64_t x = 5 + static_cast<int64_t>(rng.below(60));
    std::vector<Int> elems;
    const int64_t size = 1 + static_cast<int64_t>(rng.below(static_cast<uint64_t>(x)));
    for (int64_t i = 0; i < size; ++i) elems.emplace_back(rng.range(1, x));
    IntSet s(std::move(elems));
    auto r = greedy_translate_cover_int(s, Int(x));
    CHECK(r.bound_ok);
    CHECK(r.contraction_ok);
    std::vector<char> covered(static_cast<size_t>(x) + 1, 0);
    for (const Int& e : s)
      for (const Int& t : r.translates) {
        Int v = e + t;
        if (v >= 1 && v <= x) covered[static_cast<size_t>(to_i64(v))] = 1;
      }
    for (int64_t v = 1; v <= x; ++v) CHECK(covered[static_cast<size_t>(v)] == 1);
  }
}

TEST_CASE("greedy fp cover: whole space and singleton") {
  FpSpace sp(3, 1);
  FpSet full(sp, {0, 1, 2});
  auto r = greedy_translate_cover_fp(full);
  CHECK(r.translates == std::vector<uint64_t>{0});

  FpSet single(sp, {0});
  auto r2 = greedy_translate_cover_fp(single);
  CHECK(r2.translates == std::vector<uint64_t>{0, 1, 2});
}

TEST_CASE("greedy fp cover: a line in F_3^2 takes 3 translates") {
  FpSpace sp(3, 2);
  // the line {(0,0),(1,0),(2,0)}
  FpSet line(sp, {sp.encode({0, 0}), sp.encode({1, 0}), sp.encode({2, 0})});
  auto r = greedy_translate_cover_fp(line);
  CHECK(r.translates.size() == 3);
  std::vector<char> covered(sp.card, 0);
  for (uint64_t e : line)
    for (uint64_t t : r.translates) covered[sp.add(e, t)] = 1;
  for (uint64_t v = 0; v < sp.card; ++v) CHECK(covered[v] == 1);
}

TEST_CASE("greedy fp cover: random suites") {
  Rng rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const uint32_t p = (trial % 2) ? 3 : 5;
    const uint32_t n = (trial % 3) ? 2 : 1;
    FpSpace sp(p, n);
    std::vector<uint64_t> pts;
    const uint64_t size = 1 + rng.below(sp.card);
    for (uint64_t i = 0; i < size; ++i) pts.push_back(rng.below(sp.card));
    FpSet s(sp, std::move(pts));
    auto r = greedy_translate_cover_fp(s);
    CHECK(r.bound_ok);
    CHECK(r.contraction_ok);
    std::vector<char> covered(sp.card, 0);
    for (uint64_t e : s)
      for (uint64_t t : r.translates) covered[sp.add(e, t)] = 1;
    for (uint64_t v = 0; v < sp.card; ++v) CHECK(covered[v] == 1);
  }
}

TEST_CASE("extend_full_difference_cover: already-complete cover needs T = {0}") {
  FpSpace sp(3, 1);
  FpSet full(sp, {0, 1, 2});
  FpCoverResult cert = fp_verify_cover(full, 3, all_nonzero_directions(sp));
  REQUIRE(cert.ok());
  auto ext = extend_full_difference_cover(full, cert, 3);
  CHECK(ext.input_ok);
  CHECK(ext.translates == std::vector<uint64_t>{0});
  CHECK(ext.extended.size() == full.size());
  CHECK(ext.full_cover.ok());
  CHECK(ext.size_ok);
}

TEST_CASE("extend_full_difference_cover: single direction in F_5^1") {
  FpSpace sp(5, 1);
  FpSet line(sp, {0, 1, 2, 3, 4});
  FpCoverResult cert = fp_verify_cover(line, 5, {1});
  REQUIRE(cert.ok());
  auto ext = extend_full_difference_cover(line, cert, 5);
  CHECK(ext.input_ok);
  CHECK(ext.full_cover.ok());
  CHECK(ext.extended.size() == 5);  // already all of F_5
}

TEST_CASE("extend_full_difference_cover rejects an invalid certificate") {
  FpSpace sp(3, 1);
  FpSet partial(sp, {0, 1});
  FpCoverResult bogus;
  bogus.k = 3;
  bogus.entries[1] = 0;  // claims the full line, which is absent
  auto ext = extend_full_difference_cover(partial, bogus, 3);
  CHECK_FALSE(ext.input_ok);
}

TEST_CASE("extend_full_difference_cover: the (u+v,uv) set at p = 3 reaches all 8 directions") {
  FpSpace sp(3, 2);
  std::vector<uint64_t> pts;
  for (uint32_t u = 0; u < 3; ++u)
    for (uint32_t v = 0; v < 3; ++v)
      pts.push_back(sp.encode({(u + v) % 3, (u * v) % 3}));
  FpSet a(sp, std::move(pts));
  FpCoverResult cert = fp_verify_cover(a, 3, all_nonzero_directions(sp));
  CHECK(cert.entries.size() == 6);  // both multiples of each of the 3 line directions
  FpCoverResult partial;
  partial.k = 3;
  partial.entries = cert.entries;
  auto ext = extend_full_difference_cover(a, partial, 3);
  CHECK(ext.input_ok);
  CHECK(ext.full_cover.ok());
  CHECK(ext.full_cover.entries.size() == 8);
  CHECK(ext.size_ok);
}
