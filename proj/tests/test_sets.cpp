#include <doctest.h>

#include <algorithm>

#include "kakeya/ap_cover.hpp"
#include "kakeya/planar.hpp"
#include "kakeya/rng.hpp"

using namespace kakeya;

namespace {
PlanarPoint pp(int64_t x, int64_t y) { return {Int(x), Int(y)}; }
}

TEST_CASE("slope normalization and equality") {
  CHECK(Slope(Int(2), Int(4)) == Slope(Int(1), Int(2)));
  CHECK(Slope(Int(-2), Int(4)) == Slope(Int(1), Int(-2)));
  CHECK(Slope(Int(3), Int(1)).is_integral());
  CHECK(Slope::infinity() == Slope::infinity());
  CHECK_FALSE(Slope::infinity() == Slope(Int(0)));
  CHECK(Slope(Int(-1)).is_minus_one());
  CHECK(Slope::parse("inf").is_infinity());
  CHECK(Slope::parse("-1/2") == Slope(Int(1), Int(-2)));
  CHECK_THROWS_AS(Slope(Int(1), Int(0)), ConfigError);
}

TEST_CASE("project examples") {
  PlanarSet a({pp(0, 0), pp(1, 2)});
  auto v1 = project(a, Slope(Int(1)));
  CHECK(v1 == std::vector<Rat>{Rat(0), Rat(3)});
  auto vinf = project(a, Slope::infinity());
  CHECK(vinf == std::vector<Rat>{Rat(0), Rat(2)});

  PlanarSet b({pp(0, 1), pp(1, 0), pp(2, 2)});
  auto vm1 = project(b, Slope(Int(-1)));
  CHECK(vm1 == std::vector<Rat>{Rat(-1), Rat(0), Rat(1)});
}

TEST_CASE("projection count bounded by set size, equality iff injective") {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<PlanarPoint> pts;
    for (int i = 0; i < 6; ++i) pts.push_back(pp(rng.range(-5, 5), rng.range(-5, 5)));
    PlanarSet a(std::move(pts));
    for (int num = -3; num <= 3; ++num) {
      Slope r(Int(num), Int(2));
      auto vals = project(a, r);
      CHECK(vals.size() <= a.size());
      std::vector<Rat> images;
      for (const auto& [x, y] : a) images.push_back(Rat(x) + r.value() * Rat(y));
      std::sort(images.begin(), images.end());
      images.erase(std::unique(images.begin(), images.end()), images.end());
      CHECK(vals.size() == images.size());
    }
  }
}

TEST_CASE("difference projection of a swap-symmetric set is negation-symmetric") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<PlanarPoint> pts;
    for (int i = 0; i < 5; ++i) {
      int64_t x = rng.range(-4, 4), y = rng.range(-4, 4);
      pts.push_back(pp(x, y));
      pts.push_back(pp(y, x));
    }
    auto vals = project(PlanarSet(std::move(pts)), Slope(Int(-1)));
    for (const Rat& v : vals)
      CHECK(std::binary_search(vals.begin(), vals.end(), Rat(-v)));
  }
}

TEST_CASE("tensor power: singleton and counts") {
  PlanarSet single({pp(0, 0)});
  auto t3 = tensor_power(single, 3);
  CHECK(t3.size() == 1);
  CHECK(t3.dimension() == 3);

  PlanarSet a({pp(0, 0), pp(1, 2)});
  auto t2 = tensor_power(a, 2);
  CHECK(t2.size() == 4);
  CHECK(projection_count_nd(t2, Slope(Int(1))) == 4);  // (#pi_1)^2 = 2^2
}

TEST_CASE("tensor power multiplies projection counts") {
  PlanarSet a({pp(0, 1), pp(1, 0), pp(2, 2)});
  auto t2 = tensor_power(a, 2);
  std::vector<Slope> slopes{Slope(Int(-1)), Slope(Int(0)), Slope(Int(1)), Slope(Int(2)),
                            Slope(Int(1), Int(2)), Slope::infinity()};
  for (const auto& r : slopes) {
    size_t base = project(a, r).size();
    CHECK(projection_count_nd(t2, r) == base * base);
  }
}

TEST_CASE("tensor power refuses over cap") {
  PlanarSet a({pp(0, 0), pp(1, 2), pp(2, 1)});
  CHECK_THROWS_AS(tensor_power(a, 2, Int(8)), InstanceTooLarge);
}

TEST_CASE("collapse_to_plane: n = 1 is the identity scale") {
  PlanarSet a({pp(0, 0), pp(1, 2)});
  auto b = tensor_power(a, 1);
  auto col = collapse_to_plane(b, {Slope(Int(-1)), Slope(Int(1)), Slope::infinity()});
  CHECK(col.t == 1);
  CHECK(col.set.size() == 2);
}

TEST_CASE("collapse_to_plane preserves counts for the requested slopes") {
  PlanarSet a({pp(0, 0), pp(1, 2)});
  auto b = tensor_power(a, 2);
  std::vector<Slope> slopes{Slope(Int(-1)), Slope(Int(0)), Slope(Int(1)), Slope::infinity()};
  auto col = collapse_to_plane(b, slopes);
  CHECK(col.set.size() == 4);
  for (const auto& r : slopes)
    CHECK(project(col.set, r).size() == projection_count_nd(b, r));
}

TEST_CASE("collapse_to_plane skips a colliding t = 1") {
  // x-parts (0,1) and (1,0) collide under weights (1,1) at slope 0.
  PairSetN b(2, {{{Int(0), Int(1)}, {Int(0), Int(0)}}, {{Int(1), Int(0)}, {Int(0), Int(0)}}});
  auto col = collapse_to_plane(b, {Slope(Int(0))});
  CHECK(col.t >= 2);
  CHECK(project(col.set, Slope(Int(0))).size() == 2);
}

TEST_CASE("verify_cover examples") {
  IntSet a({Int(0), Int(1), Int(3)});
  auto r = verify_cover(a, 2, diff_range(1, 3));
  REQUIRE(r.ok());
  CHECK(r.entries.at(Int(1)) == 0);
  CHECK(r.entries.at(Int(2)) == 1);
  CHECK(r.entries.at(Int(3)) == 0);

  IntSet b({Int(0), Int(1), Int(2), Int(4)});
  auto r2 = verify_cover(b, 3, diff_range(1, 2));
  REQUIRE(r2.ok());
  CHECK(r2.entries.at(Int(1)) == 0);
  CHECK(r2.entries.at(Int(2)) == 0);

  auto r3 = verify_cover(a, 3, {Int(2)});
  CHECK_FALSE(r3.ok());
  CHECK(r3.uncovered == std::vector<Int>{Int(2)});
}

TEST_CASE("verify_cover: d = 0 is trivially covered, matches double loop") {
  IntSet a({Int(5), Int(9)});
  auto r = verify_cover(a, 4, {Int(0)});
  REQUIRE(r.ok());
  CHECK(r.entries.at(Int(0)) == 5);

  Rng rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Int> elems;
    for (int i = 0; i < 8; ++i) elems.emplace_back(rng.range(0, 20));
    IntSet s(std::move(elems));
    for (int64_t k = 2; k <= 3; ++k) {
      auto res = verify_cover(s, k, diff_range(1, 6));
      for (Int d = 1; d <= 6; ++d) {
        bool brute = false;
        for (const Int& base : s) {
          bool all = true;
          for (int64_t j = 0; j < k; ++j)
            if (!s.contains(base + j * d)) all = false;
          if (all) brute = true;
        }
        CHECK(res.entries.count(d) == (brute ? 1u : 0u));
      }
    }
  }
}

TEST_CASE("certificate validity check") {
  IntSet a({Int(0), Int(2), Int(4)});
  ApCertificate good{3, {{Int(2), Int(0)}}};
  CHECK(good.valid_for(a));
  ApCertificate bad{3, {{Int(1), Int(0)}}};
  CHECK_FALSE(bad.valid_for(a));
}

TEST_CASE("cut_and_move: confined input is unchanged") {
  IntSet a({Int(1), Int(2), Int(3)});
  auto r = cut_and_move(a, 2, 2);
  REQUIRE(r.ok);
  CHECK(r.set == a);
  CHECK(r.half_cover.ok());
}

TEST_CASE("cut_and_move: straddling progression keeps half its length") {
  // k = 6, N = 1, block = {1..60}: a 6-AP with d = 1 straddling 60/61.
  IntSet a({Int(58), Int(59), Int(60), Int(61), Int(62), Int(63)});
  auto r = cut_and_move(a, 6, 1);
  REQUIRE(r.ok);
  CHECK(r.set.max() <= 60);
  CHECK(r.set.min() >= 1);
  CHECK(r.set.size() <= a.size());
  CHECK(r.half_cover.ok());  // a 3-term progression with d = 1 survives
}

TEST_CASE("cut_and_move: random certified instances") {
  Rng rng(99);
  const int64_t k = 6, n = 4;
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Int> elems;
    for (Int d = 1; d <= n; ++d) {
      Int base = rng.range(-100, 400);
      for (int64_t j = 0; j < k; ++j) elems.push_back(base + j * d);
    }
    for (int extra = 0; extra < 5; ++extra) elems.emplace_back(rng.range(-100, 500));
    IntSet a(std::move(elems));
    auto r = cut_and_move(a, k, n);
    REQUIRE(r.ok);
    CHECK(r.set.size() <= a.size());
    CHECK(r.set.min() >= 1);
    CHECK(r.set.max() <= 10 * k * n);
    CHECK(r.half_cover.ok());
  }
}

TEST_CASE("cut_and_move: precondition violation is a value naming the difference") {
  IntSet a({Int(0), Int(1)});
  auto r = cut_and_move(a, 3, 2);
  CHECK_FALSE(r.ok);
  CHECK_FALSE(r.bad_differences.empty());
}

TEST_CASE("freiman_collapse follows the digit formula") {
  // one coordinate: f(x) = base * x
  FreimanResult r1 = freiman_collapse({{Int(0)}, {Int(2)}}, 3, Int(100));
  REQUIRE(r1.ok);
  CHECK(r1.image == IntSet({Int(0), Int(200)}));

  // 3-AP with d = (1,2), base 6000 (>= 10*3*5*2 = 300): images form a 3-AP
  FreimanResult r2 =
      freiman_collapse({{Int(0), Int(0)}, {Int(1), Int(2)}, {Int(2), Int(4)}}, 3, Int(6000));
  REQUIRE(r2.ok);
  const auto& e = r2.image.elements();
  REQUIRE(e.size() == 3);
  CHECK(e[1] - e[0] == e[2] - e[1]);
  CHECK(e[0] == 0);
  CHECK(e[1] == Int(6000) + 2 * Int(6000) * Int(6000));  // b*x1 + b^2*x2

  // too-small base is rejected with the minimal admissible base
  FreimanResult r3 = freiman_collapse({{Int(0), Int(9)}}, 2, Int(10));
  CHECK_FALSE(r3.ok);
  CHECK(r3.minimal_base == Int(10) * 2 * 10 * 2);
}

TEST_CASE("freiman_collapse is injective on small boxes") {
  std::vector<VecInt> box;
  for (int x = 0; x < 10; ++x)
    for (int y = 0; y < 10; ++y) box.push_back({Int(x), Int(y)});
  FreimanResult r = freiman_collapse(box, 2, Int(400));
  REQUIRE(r.ok);
  CHECK(r.image.size() == 100);
}
