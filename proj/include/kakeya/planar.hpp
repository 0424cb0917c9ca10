#pragma once

// Planar sets A ⊂ Z×Z, their projections pi_r(A) = {x + r*y}, coordinatewise
// tensor powers A^(n) ⊂ Z^n × Z^n, and the collapse psi_t back to the plane
// that preserves every requested projection count.

#include "kakeya/int_set.hpp"
#include "kakeya/slope.hpp"

#include <utility>
#include <vector>

namespace kakeya {

using PlanarPoint = std::pair<Int, Int>;

class PlanarSet {
 public:
  PlanarSet() = default;
  explicit PlanarSet(std::vector<PlanarPoint> pts);

  size_t size() const { return pts_.size(); }
  const std::vector<PlanarPoint>& points() const { return pts_; }
  bool contains(const PlanarPoint& p) const;

  auto begin() const { return pts_.begin(); }
  auto end() const { return pts_.end(); }

 private:
  std::vector<PlanarPoint> pts_;
};

using PairPoint = std::pair<VecInt, VecInt>;

// Finite subset of Z^n × Z^n.
class PairSetN {
 public:
  PairSetN() : n_(1) {}
  PairSetN(unsigned n, std::vector<PairPoint> pts);

  unsigned dimension() const { return n_; }
  size_t size() const { return pts_.size(); }
  const std::vector<PairPoint>& points() const { return pts_; }

 private:
  unsigned n_;
  std::vector<PairPoint> pts_;
};

// pi_r(A) as a set of exact rationals (second coordinates when r = inf).
std::vector<Rat> project(const PlanarSet& a, const Slope& r);

// Number of distinct values of the n-dimensional projection pi_r^(n)(B).
size_t projection_count_nd(const PairSetN& b, const Slope& r);

// Coordinatewise n-th power; refuses when #A^n exceeds `cap`.
PairSetN tensor_power(const PlanarSet& a, unsigned n, const Int& cap = Int(1) << 22);

struct CollapseResult {
  PlanarSet set;
  Int t = 0;  // smallest positive scale whose weights (t, t^2, ..., t^n)
              // preserve #pi_r for every requested slope
};

// psi_t(x, y) = ((t,...,t^n)·x, (t,...,t^n)·y) for the smallest admissible t,
// verified against the n-dimensional counts by direct enumeration.
CollapseResult collapse_to_plane(const PairSetN& b, const std::vector<Slope>& slopes);

}  // namespace kakeya
