#include <doctest.h>

#include <cmath>

#include "kakeya/pipeline.hpp"

using namespace kakeya;

namespace {
JointFp point_mass(uint32_t p, uint32_t n) {
  JointFp j;
  j.space = FpSpace(p, n);
  j.mass[{0, 0}] = Rat(1);
  return j;
}

JointFp two_atoms_f3() {  // uniform on {(0,1),(1,2)} in F_3^1
  JointFp j;
  j.space = FpSpace(3, 1);
  j.mass[{0, 1}] = Rat(1, 2);
  j.mass[{1, 2}] = Rat(1, 2);
  return j;
}

JointFp independent_uniform_f3() {
  JointFp j;
  j.space = FpSpace(3, 1);
  for (uint64_t x = 0; x < 3; ++x)
    for (uint64_t y = 0; y < 3; ++y) j.mass[{x, y}] = Rat(1, 9);
  return j;
}
}

TEST_CASE("typical_pair_set: point mass") {
  auto t = typical_pair_set(point_mass(3, 1), 4);
  REQUIRE(t.materialized);
  CHECK(t.exact_count == 1);
  CHECK(t.b.pairs.size() == 1);
  CHECK(t.projections_ok);
}

TEST_CASE("typical_pair_set: two uniform atoms") {
  auto t1 = typical_pair_set(two_atoms_f3(), 1);  // q = 2, positions 2
  REQUIRE(t1.materialized);
  CHECK(t1.exact_count == 2);  // 2!/1!1!
  CHECK(t1.projections_ok);

  auto t2 = typical_pair_set(two_atoms_f3(), 2);  // positions 4
  REQUIRE(t2.materialized);
  CHECK(t2.exact_count == 6);  // 4!/2!2!
  CHECK(t2.b.pairs.size() == 6);
  CHECK(t2.projections_ok);
}

TEST_CASE("typical_pair_set refuses beyond the cap with the exact count") {
  auto t = typical_pair_set(two_atoms_f3(), 16, Int(100));  // C(32,16) = 601080390
  CHECK_FALSE(t.materialized);
  CHECK(t.exact_count == Int("601080390"));
  CHECK(t.refusal.find("601080390") != std::string::npos);
}

TEST_CASE("lines_union: diagonal pair contributes a single point") {
  PairFpSet b;
  b.space = FpSpace(3, 1);
  b.pairs = {{2, 2}};
  auto lu = lines_union(b);
  CHECK(lu.set.size() == 1);
  CHECK(lu.directions.empty());
  CHECK(lu.size_ok);
}

TEST_CASE("lines_union: one off-diagonal pair in F_3^1 spans the full line") {
  PairFpSet b;
  b.space = FpSpace(3, 1);
  b.pairs = {{0, 1}};
  auto lu = lines_union(b);
  CHECK(lu.set.size() == 3);
  REQUIRE(lu.directions.size() == 1);
  CHECK(lu.directions[0] == b.space.sub(0, 1));
  CHECK(lu.size_ok);
}

TEST_CASE("lines_union: two generic pairs in F_3^2") {
  PairFpSet b;
  b.space = FpSpace(3, 2);
  b.pairs = {{b.space.encode({0, 0}), b.space.encode({1, 0})},
             {b.space.encode({0, 0}), b.space.encode({0, 1})}};
  auto lu = lines_union(b);
  CHECK(lu.set.size() <= 6);
  CHECK(lu.directions.size() == 2);
  CHECK(lu.size_ok);
}

TEST_CASE("replay: point mass degenerates cleanly") {
  auto rep = replay_entropy_pipeline(point_mass(3, 1), 2, 5);
  CHECK(rep.completed);
  CHECK(rep.typical_count == 1);
  CHECK(rep.direction_count == 0);
  CHECK(rep.final_size <= 1);
}

TEST_CASE("replay: independent uniform on F_3 completes with hand-checked sizes") {
  auto rep = replay_entropy_pipeline(independent_uniform_f3(), 1, 12345);
  REQUIRE(rep.completed);
  CHECK(rep.typical_count == Int(362880));       // 9!
  CHECK(rep.direction_count == 1680);            // 9!/(3!)^3
  CHECK(std::fabs(rep.entropy_ratio - 1.0) <= 1e-9);
  CHECK(rep.compressed_dim == 7);                // 3^7 = 2187 >= 1680
  CHECK(2 * rep.surviving >= 1680);
  CHECK(rep.all_directions_ok);
  CHECK(rep.size_vs_reference_ok);
  CHECK(double(rep.final_size) >= std::pow(1.5, 7.0));
}

TEST_CASE("replay: the p^3-denominator law is refused honestly at stage one") {
  // The product-form law of (X,Y) built from uniform (a,b,b') has q = 27;
  // its typical set at m = 1 has 27!/8 elements.
  JointFp j = mt_joint(3);
  auto rep = replay_entropy_pipeline(j, 1, 1);
  CHECK_FALSE(rep.completed);
  REQUIRE(!rep.stages.empty());
  CHECK(rep.stages[0].name == "typical_pair_set");
  CHECK_FALSE(rep.stages[0].ok);
  CHECK(rep.typical_count == Int("1361108681302294020096000000"));  // 27!/8
}

TEST_CASE("replay reports the finite-m projection-count ratio") {
  // uniform on {(0,1),(1,0)}: the two atoms have distinct differences
  JointFp law;
  law.space = FpSpace(3, 1);
  law.mass[{0, 1}] = Rat(1, 2);
  law.mass[{1, 0}] = Rat(1, 2);
  auto r1 = replay_entropy_pipeline(law, 1, 3);
  auto r2 = replay_entropy_pipeline(law, 2, 3);
  REQUIRE(r1.completed);
  REQUIRE(r2.completed);
  CHECK(r1.count_ratio > 0.0);
  CHECK(r2.count_ratio > 0.0);

  // degenerate diagonal-difference law: the diff projection is a point mass
  // and the ratio is reported as 0
  auto deg = replay_entropy_pipeline(two_atoms_f3(), 1, 3);
  CHECK(deg.count_ratio == 0.0);
}
