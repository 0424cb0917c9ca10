#include "kakeya/compression.hpp"

#include "kakeya/covering.hpp"

#include <algorithm>
#include <cmath>

namespace kakeya {

Int phi_theta(const Int& x, const ThetaMap& map) {
  return rat_floor(Rat(map.n) * rat_frac(map.theta * Rat(x)));
}

DistinctToFullResult distinct_to_full(const IntSet& a0, const std::map<Int, Int>& certificate,
                                      int64_t k, int64_t n_target, uint64_t seed, int retries) {
  if (n_target < 1) throw ConfigError("distinct_to_full with N < 1");
  if (static_cast<int64_t>(certificate.size()) < n_target)
    throw ConfigError("certificate carries fewer than N distinct differences");

  std::vector<Int> diffs;
  Int max_d = 0;
  for (const auto& [d, base] : certificate) {
    if (d < 1) throw ConfigError("certificate differences must be positive");
    Int x = base;
    for (int64_t j = 0; j < k; ++j) {
      if (!a0.contains(x)) throw ConfigError("input certificate invalid at d = " + d.str());
      x += d;
    }
    diffs.push_back(d);
    if (d > max_d) max_d = d;
  }

  DistinctToFullResult res;
  res.grid = (Int(1) << 16) * n_target * max_d;
  Rng rng(seed);

  const Int big_n(n_target);
  std::vector<Int> images(diffs.size());
  for (int attempt = 0; attempt < retries; ++attempt) {
    res.attempts = attempt + 1;
    Rat theta(1 + rng.below_int(res.grid - 1), res.grid);  // numerator in [1, grid-1]
    ThetaMap map(theta, big_n);
    for (size_t i = 0; i < diffs.size(); ++i) images[i] = phi_theta(diffs[i], map);

    std::map<Int, int64_t> freq;
    for (const Int& v : images) ++freq[v];
    int64_t pairs = 0;
    for (const auto& [v, f] : freq) pairs += f * (f - 1) / 2;
    if (pairs > n_target - 1) continue;

    res.theta = theta;
    res.collisions = pairs;
    res.distinct_images = static_cast<int64_t>(freq.size());
    if (3 * res.distinct_images < n_target)
      throw ConfigError("distinct_to_full: accepted theta kept fewer than N/3 images");

    // A2 = phi(A0); A3 = A2 + {0..k-1} - {0, N, ..., (k-1)N}.
    std::vector<Int> a2;
    for (const Int& x : a0) a2.push_back(phi_theta(x, map));
    IntSet a2set(std::move(a2));
    std::vector<Int> a3;
    for (const Int& x : a2set)
      for (int64_t u = 0; u < k; ++u)
        for (int64_t v = 0; v < k; ++v) a3.push_back(x + u - v * big_n);
    IntSet a3set(std::move(a3));

    // T with images + T ⊇ {1..N}, via the integer greedy cover shifted by 1.
    std::vector<Int> shifted;
    for (const auto& [v, f] : freq) shifted.push_back(v + 1);  // ⊆ {1..N}
    GreedyIntCover greedy = greedy_translate_cover_int(IntSet(std::move(shifted)), big_n);

    std::vector<Int> a1;
    for (const Int& x : a3set)
      for (int64_t j = 0; j < k; ++j)
        for (const Int& t : greedy.translates) a1.push_back(x + j * (t + 1));
    res.a1 = IntSet(std::move(a1));

    res.cover = verify_cover(res.a1, k, diff_range(1, big_n));
    if (!res.cover.ok())
      throw ConfigError("distinct_to_full: final cover failed verification");

    const double bound =
        12.0 * std::pow(double(k), 3) * (1.0 + ln_int(big_n)) * double(a0.size());
    res.size_bound = Int(static_cast<long long>(std::ceil(bound)));
    res.size_ok = Int(res.a1.size()) <= res.size_bound;
    res.ok = true;
    return res;
  }
  return res;  // budget exhausted, ok = false
}

namespace {
uint64_t apply_matrix(const FpSpace& src, const FpSpace& dst, const FpMatrix& m, uint64_t v) {
  auto coords = src.decode(v);
  std::vector<uint32_t> out(dst.n, 0);
  for (uint32_t row = 0; row < dst.n; ++row) {
    uint64_t acc = 0;
    for (uint32_t col = 0; col < src.n; ++col)
      acc += static_cast<uint64_t>(m[row][col]) * coords[col];
    out[row] = static_cast<uint32_t>(acc % src.p);
  }
  return dst.encode(out);
}
}  // namespace

LinearCompressResult compress_with_matrix(const FpSet& a, const FpCoverResult& cert,
                                          uint32_t target_dim, const FpMatrix& matrix) {
  const FpSpace& src = a.space();
  FpSpace dst(src.p, target_dim);
  LinearCompressResult res;
  res.target_dim = target_dim;
  res.matrix = matrix;

  std::vector<uint64_t> img;
  img.reserve(a.size());
  for (uint64_t v : a) img.push_back(apply_matrix(src, dst, matrix, v));
  res.image = FpSet(dst, std::move(img));

  std::vector<uint64_t> surv;
  std::map<uint64_t, uint64_t> surv_base;  // image dir -> image base
  for (const auto& [d, base] : cert.entries) {
    if (d == 0) continue;
    uint64_t di = apply_matrix(src, dst, matrix, d);
    if (di == 0) continue;
    surv.push_back(di);
    auto it = surv_base.find(di);
    if (it == surv_base.end()) surv_base[di] = apply_matrix(src, dst, matrix, base);
  }
  std::sort(surv.begin(), surv.end());
  surv.erase(std::unique(surv.begin(), surv.end()), surv.end());
  res.surviving = surv;

  // Linearity check: the image of each certified progression is the full
  // progression through the image base in the image direction.
  res.lines_ok = true;
  for (const auto& [di, bi] : surv_base) {
    uint64_t x = bi;
    for (int64_t j = 0; j < cert.k; ++j) {
      if (!res.image.contains(x)) {
        res.lines_ok = false;
        break;
      }
      x = dst.add(x, di);
    }
  }
  res.image_cover = fp_verify_cover(res.image, cert.k, surv);
  return res;
}

LinearCompressResult random_linear_compress(const FpSet& a, const FpCoverResult& cert,
                                            uint64_t seed, int retries) {
  const FpSpace& src = a.space();
  int64_t n_dirs = 0;
  for (const auto& [d, base] : cert.entries)
    if (d != 0) ++n_dirs;

  uint32_t target = 1;
  uint64_t pw = src.p;
  while (Int(pw) < Int(n_dirs)) {
    pw *= src.p;
    ++target;
  }

  Rng rng(seed);
  LinearCompressResult best;
  for (int attempt = 0; attempt < retries; ++attempt) {
    FpMatrix m(target, std::vector<uint32_t>(src.n));
    for (uint32_t row = 0; row < target; ++row)
      for (uint32_t col = 0; col < src.n; ++col)
        m[row][col] = static_cast<uint32_t>(rng.below(src.p));
    LinearCompressResult cur = compress_with_matrix(a, cert, target, m);
    cur.attempts = attempt + 1;
    if (attempt == 0 || cur.surviving.size() > best.surviving.size()) best = cur;
    if (2 * static_cast<int64_t>(cur.surviving.size()) >= n_dirs) {
      best = cur;
      best.accepted = true;
      break;
    }
  }
  if (!best.accepted) best.attempts = retries;
  return best;
}

}  // namespace kakeya
