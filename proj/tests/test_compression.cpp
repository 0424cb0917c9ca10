#include <doctest.h>

#include "kakeya/compression.hpp"
#include "kakeya/rng.hpp"

using namespace kakeya;

TEST_CASE("phi_theta examples") {
  ThetaMap m(Rat(1, 3), Int(10));
  CHECK(phi_theta(Int(1), m) == 3);   // floor(10/3)
  CHECK(phi_theta(Int(3), m) == 0);   // {1} = 0
  CHECK(phi_theta(Int(-1), m) == 6);  // {-1/3} = 2/3
}

TEST_CASE("phi_theta quasi-morphism property") {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    Int n(2 + rng.below(50));
    Rat theta(Int(1 + rng.below(999)), Int(1000));
    if (theta >= 1) continue;
    ThetaMap m(theta, n);
    for (int i = 0; i < 100; ++i) {
      Int x(rng.range(-5000, 5000)), y(rng.range(-5000, 5000));
      Int diff = phi_theta(x + y, m) - phi_theta(x, m) - phi_theta(y, m);
      bool in =
          diff == 0 || diff == 1 || diff == -n || diff == Int(1) - n;  // {0,1} - {0,N}
      CHECK(in);
    }
  }
}

namespace {
// A0 from a difference->base certificate map.
IntSet instance_from_cert(const std::map<Int, Int>& cert, int64_t k) {
  std::vector<Int> elems;
  for (const auto& [d, a] : cert)
    for (int64_t j = 0; j < k; ++j) elems.push_back(a + j * d);
  return IntSet(std::move(elems));
}
}

TEST_CASE("distinct_to_full: the three-point example") {
  // {0,1,3} carries 2-term progressions with differences 1, 2, 3.
  std::map<Int, Int> cert{{Int(1), Int(0)}, {Int(2), Int(1)}, {Int(3), Int(0)}};
  IntSet a0({Int(0), Int(1), Int(3)});
  auto r = distinct_to_full(a0, cert, 2, 3, 1234);
  REQUIRE(r.ok);
  CHECK(r.cover.ok());
  CHECK(r.collisions <= 2);
  CHECK(3 * r.distinct_images >= 3);
  CHECK(r.size_ok);
}

TEST_CASE("distinct_to_full: N = 1") {
  std::map<Int, Int> cert{{Int(7), Int(0)}};
  IntSet a0 = instance_from_cert(cert, 3);
  auto r = distinct_to_full(a0, cert, 3, 1, 99);
  REQUIRE(r.ok);
  CHECK(r.cover.ok());
  CHECK(r.size_ok);
}

TEST_CASE("distinct_to_full: already-full input still verifies") {
  // A0 = {0..9} covers 1..5 with pairs; certificate lists d -> 0.
  std::map<Int, Int> cert;
  for (int64_t d = 1; d <= 5; ++d) cert[Int(d)] = 0;
  auto r = distinct_to_full(IntSet::range(0, 9), cert, 2, 5, 31);
  REQUIRE(r.ok);
  CHECK(r.cover.ok());
  CHECK(r.size_ok);
}

TEST_CASE("distinct_to_full: random certified instances verify and meet the bound") {
  Rng rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const int64_t k = 2 + static_cast<int64_t>(rng.below(3));  // 2..4
    const int64_t n = 1 + static_cast<int64_t>(rng.below(12)); // 1..12
    std::map<Int, Int> cert;
    while (static_cast<int64_t>(cert.size()) < n) {
      Int d(1 + rng.below(40));
      Int base(rng.range(0, 150));
      cert.emplace(d, base);
    }
    IntSet a0 = instance_from_cert(cert, k);
    auto r = distinct_to_full(a0, cert, k, n, 7000 + trial);
    REQUIRE(r.ok);
    CHECK(r.attempts <= 64);
    CHECK(r.cover.ok());
    CHECK(r.size_ok);
    CHECK(3 * r.distinct_images >= n);
  }
}

TEST_CASE("distinct_to_full rejects an invalid certificate") {
  std::map<Int, Int> cert{{Int(1), Int(0)}};
  IntSet a0({Int(0)});  // too small to hold a 2-term progression
  CHECK_THROWS_AS(distinct_to_full(a0, cert, 2, 1, 1), ConfigError);
}

namespace {
FpCoverResult line_cert(const FpSet& a, const std::vector<uint64_t>& dirs) {
  FpCoverResult c = fp_verify_cover(a, a.space().p, dirs);
  REQUIRE(c.ok());
  return c;
}
}

TEST_CASE("random_linear_compress: single line, single direction") {
  FpSpace sp(3, 4);
  // line through 0 in direction e1
  std::vector<uint64_t> pts;
  uint64_t d = sp.encode({1, 0, 0, 0});
  uint64_t x = 0;
  for (uint32_t j = 0; j < 3; ++j) {
    pts.push_back(x);
    x = sp.add(x, d);
  }
  FpSet line(sp, std::move(pts));
  auto cert = line_cert(line, {d});
  auto r = random_linear_compress(line, cert, 77);
  REQUIRE(r.accepted);
  CHECK(r.target_dim == 1);
  CHECK(r.surviving.size() == 1);
  CHECK(r.lines_ok);
  CHECK(r.image_cover.ok());
}

TEST_CASE("compress_with_matrix: identity keeps every direction") {
  FpSpace sp(3, 2);
  // two crossing lines
  std::vector<uint64_t> pts;
  for (uint32_t j = 0; j < 3; ++j) {
    pts.push_back(sp.encode({j, 0}));
    pts.push_back(sp.encode({0, j}));
  }
  FpSet a(sp, std::move(pts));
  auto cert = line_cert(a, {sp.encode({1, 0}), sp.encode({0, 1})});
  FpMatrix identity{{1, 0}, {0, 1}};
  auto r = compress_with_matrix(a, cert, 2, identity);
  CHECK(r.surviving.size() == 2);
  CHECK(r.lines_ok);
  CHECK(r.image.size() == a.size());
  CHECK(r.image_cover.ok());
}

TEST_CASE("random_linear_compress: subspace worth of directions survives at half rate") {
  // A = all of F_3^2 (lines in every direction), compressed from dim 2.
  FpSpace sp(3, 2);
  std::vector<uint64_t> pts;
  for (uint64_t v = 0; v < sp.card; ++v) pts.push_back(v);
  FpSet a(sp, std::move(pts));
  auto cert = line_cert(a, all_nonzero_directions(sp));
  auto r = random_linear_compress(a, cert, 11);
  REQUIRE(r.accepted);
  CHECK(2 * r.surviving.size() >= 8);
  CHECK(r.lines_ok);
  CHECK(r.image_cover.ok());
}
