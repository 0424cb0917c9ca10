#include "kakeya/ap_cover.hpp"

#include <algorithm>

namespace kakeya {

namespace {
bool progression_in(const IntSet& a, const Int& base, const Int& d, int64_t k) {
  Int x = base;
  for (int64_t j = 0; j < k; ++j) {
    if (!a.contains(x)) return false;
    x += d;
  }
  return true;
}
}  // namespace

bool ApCertificate::valid_for(const IntSet& set) const {
  for (const auto& [d, base] : entries)
    if (!progression_in(set, base, d, k)) return false;
  return true;
}

CoverResult verify_cover(const IntSet& a, int64_t k, const std::vector<Int>& diffs) {
  if (k < 1) throw ConfigError("verify_cover with k < 1");
  CoverResult res;
  res.k = k;
  for (const Int& d : diffs) {
    if (d == 0) {
      if (a.empty())
        res.uncovered.push_back(d);
      else
        res.entries[d] = a.min();
      continue;
    }
    bool found = false;
    for (const Int& base : a) {
      if (progression_in(a, base, d, k)) {
        res.entries[d] = base;
        found = true;
        break;
      }
    }
    if (!found) res.uncovered.push_back(d);
  }
  return res;
}

CutMoveResult cut_and_move(const IntSet& a, int64_t k, int64_t n_diffs) {
  if (k < 1 || n_diffs < 1) throw ConfigError("cut_and_move with k < 1 or N < 1");
  CutMoveResult res;

  CoverResult pre = verify_cover(a, k, diff_range(1, n_diffs));
  if (!pre.ok()) {
    res.bad_differences = pre.uncovered;
    return res;
  }

  const Int block = Int(10) * k * n_diffs;  // I_j = 10kjN + {1, ..., 10kN}
  std::vector<Int> moved;
  moved.reserve(a.size());
  for (const Int& x : a) moved.push_back(x - floor_div(x - 1, block) * block);
  res.set = IntSet(std::move(moved));

  const int64_t half = k / 2;
  res.half_cover = verify_cover(res.set, half, diff_range(1, n_diffs));
  res.ok = res.half_cover.ok();
  if (!res.ok) res.bad_differences = res.half_cover.uncovered;
  return res;
}

FreimanResult freiman_collapse(const std::vector<VecInt>& points, int64_t k, const Int& base) {
  FreimanResult res;
  if (points.empty()) throw ConfigError("freiman_collapse of an empty set");
  const size_t n = points.front().size();
  if (n == 0) throw ConfigError("freiman_collapse with zero-dimensional points");

  Int box = 0;  // B-1: largest coordinate
  for (const auto& p : points) {
    if (p.size() != n) throw ConfigError("freiman_collapse with mixed dimensions");
    for (const Int& c : p) {
      if (c < 0) throw ConfigError("freiman_collapse coordinates must be nonnegative");
      if (c > box) box = c;
    }
  }
  res.minimal_base = Int(10) * k * (box + 1) * Int(n);
  if (base < res.minimal_base) return res;  // ok stays false

  std::vector<VecInt> distinct = points;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  std::vector<Int> img;
  img.reserve(distinct.size());
  for (const auto& p : distinct) {
    Int v = 0, w = 1;
    for (size_t i = 0; i < n; ++i) {
      w *= base;
      v += w * p[i];
    }
    img.push_back(v);
  }
  res.image = IntSet(std::move(img));
  if (res.image.size() != distinct.size())
    throw ConfigError("freiman_collapse image collision despite admissible base");
  res.ok = true;
  return res;
}

}  // namespace kakeya
