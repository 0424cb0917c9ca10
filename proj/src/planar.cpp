#include "kakeya/planar.hpp"

#include <algorithm>

namespace kakeya {

PlanarSet::PlanarSet(std::vector<PlanarPoint> pts) : pts_(std::move(pts)) {
  std::sort(pts_.begin(), pts_.end());
  pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
}

bool PlanarSet::contains(const PlanarPoint& p) const {
  return std::binary_search(pts_.begin(), pts_.end(), p);
}

PairSetN::PairSetN(unsigned n, std::vector<PairPoint> pts) : n_(n), pts_(std::move(pts)) {
  if (n_ == 0) throw ConfigError("PairSetN with n = 0");
  for (const auto& [x, y] : pts_)
    if (x.size() != n_ || y.size() != n_)
      throw ConfigError("PairSetN point with wrong vector length");
  std::sort(pts_.begin(), pts_.end());
  pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
}

std::vector<Rat> project(const PlanarSet& a, const Slope& r) {
  std::vector<Rat> vals;
  vals.reserve(a.size());
  for (const auto& [x, y] : a) {
    if (r.is_infinity())
      vals.emplace_back(y);
    else
      vals.emplace_back(Rat(x) + r.value() * Rat(y));
  }
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  return vals;
}

size_t projection_count_nd(const PairSetN& b, const Slope& r) {
  std::vector<std::vector<Rat>> vals;
  vals.reserve(b.size());
  for (const auto& [x, y] : b.points()) {
    std::vector<Rat> v(b.dimension());
    for (unsigned i = 0; i < b.dimension(); ++i) {
      if (r.is_infinity())
        v[i] = Rat(y[i]);
      else
        v[i] = Rat(x[i]) + r.value() * Rat(y[i]);
    }
    vals.push_back(std::move(v));
  }
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  return vals.size();
}

PairSetN tensor_power(const PlanarSet& a, unsigned n, const Int& cap) {
  if (a.size() == 0) throw ConfigError("tensor_power of an empty set");
  if (n == 0) throw ConfigError("tensor_power with n = 0");
  Int total = int_pow(Int(a.size()), n);
  if (total > cap)
    throw InstanceTooLarge("tensor power has " + total.str() + " points, cap " + cap.str());

  std::vector<PairPoint> pts;
  pts.reserve(static_cast<size_t>(total));
  std::vector<size_t> idx(n, 0);
  const auto& base = a.points();
  for (;;) {
    VecInt x(n), y(n);
    for (unsigned i = 0; i < n; ++i) {
      x[i] = base[idx[i]].first;
      y[i] = base[idx[i]].second;
    }
    pts.emplace_back(std::move(x), std::move(y));
    unsigned pos = 0;
    while (pos < n && ++idx[pos] == base.size()) idx[pos++] = 0;
    if (pos == n) break;
  }
  return PairSetN(n, std::move(pts));
}

namespace {
PlanarSet apply_psi(const PairSetN& b, const Int& t) {
  const unsigned n = b.dimension();
  std::vector<Int> w(n);
  Int acc = 1;
  for (unsigned i = 0; i < n; ++i) {
    acc *= t;
    w[i] = acc;
  }
  std::vector<PlanarPoint> pts;
  pts.reserve(b.size());
  for (const auto& [x, y] : b.points()) {
    Int px = 0, py = 0;
    for (unsigned i = 0; i < n; ++i) {
      px += w[i] * x[i];
      py += w[i] * y[i];
    }
    pts.emplace_back(px, py);
  }
  return PlanarSet(std::move(pts));
}
}  // namespace

CollapseResult collapse_to_plane(const PairSetN& b, const std::vector<Slope>& slopes) {
  std::vector<size_t> want(slopes.size());
  for (size_t i = 0; i < slopes.size(); ++i) want[i] = projection_count_nd(b, slopes[i]);

  for (Int t = 1;; ++t) {
    PlanarSet c = apply_psi(b, t);
    bool ok = true;
    for (size_t i = 0; i < slopes.size() && ok; ++i)
      ok = project(c, slopes[i]).size() == want[i];
    if (ok) return {std::move(c), t};
  }
}

}  // namespace kakeya
