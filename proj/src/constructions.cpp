#include "kakeya/constructions.hpp"

#include <algorithm>

namespace kakeya {

QRConstruction quadratic_residue_cover(int64_t k, int64_t m, const Int& cap) {
  if (k < 1 || m < 1) throw ConfigError("quadratic_residue_cover needs k, m >= 1");
  QRConstruction c;
  c.k = k;
  c.m = m;
  uint64_t prime = 3;
  c.q = 1;
  c.size_bound = Int(k) * k;
  for (int64_t i = 0; i < m; ++i) {
    c.odd_primes.emplace_back(prime);
    c.q *= prime;
    c.size_bound *= Int(prime + 1) / 2;
    prime = next_prime_at_least(prime + 1);
  }
  if (Int(k) * c.q > cap)
    throw InstanceTooLarge("quadratic_residue_cover: k*Q = " + (Int(k) * c.q).str() +
                           " exceeds cap " + cap.str());

  std::vector<Int> elems;
  for (Int d = 1; d < c.q; ++d) {
    Int xd = floor_mod(d * d - 1, c.q) + 1;  // unique element of {1..Q}, xd ≡ d^2
    for (int64_t j = 0; j < k; ++j) elems.push_back(xd + j * d);
  }
  c.s = IntSet(std::move(elems));

  std::vector<Int> diffs;
  for (Int d = 1; d < c.q; ++d) diffs.push_back(d);
  c.certificate = verify_cover(c.s, k, diffs);
  if (!c.certificate.ok())
    throw ConfigError("quadratic_residue_cover: certificate failed to verify");
  c.size_ok = Int(c.s.size()) <= c.size_bound;
  return c;
}

DigitConcatResult digit_concatenate(const QRConstruction& c, unsigned n, const Int& cap) {
  if (n < 1) throw ConfigError("digit_concatenate with n = 0");
  Int count = int_pow(Int(c.s.size()), n);
  Int q_pow_n = int_pow(c.q, n);
  if (count > cap || q_pow_n > cap)
    throw InstanceTooLarge("digit_concatenate: (#S)^n = " + count.str() + " exceeds cap " +
                           cap.str());

  const auto& digits = c.s.elements();
  std::vector<Int> elems;
  elems.reserve(static_cast<size_t>(count));
  std::vector<size_t> idx(n, 0);
  for (;;) {
    Int v = 0, w = 1;
    for (unsigned i = 0; i < n; ++i) {
      v += digits[idx[i]] * w;
      w *= c.q;
    }
    elems.push_back(v);
    unsigned pos = 0;
    while (pos < n && ++idx[pos] == digits.size()) idx[pos++] = 0;
    if (pos == n) break;
  }

  DigitConcatResult res;
  res.q_pow_n = q_pow_n;
  res.set = IntSet(std::move(elems));
  res.size_ok = Int(res.set.size()) <= count;
  std::vector<Int> diffs;
  for (Int d = 0; d < q_pow_n; ++d) diffs.push_back(d);
  res.certificate = verify_cover(res.set, c.k, diffs);
  if (!res.certificate.ok())
    throw ConfigError("digit_concatenate: certificate failed to verify");
  return res;
}

FUpperResult build_F_upper(int64_t k, const Int& n_cover, int64_t m, const Int& cap) {
  if (n_cover < 1) throw ConfigError("build_F_upper with N < 1");
  QRConstruction c = quadratic_residue_cover(k, m, cap);
  unsigned n = 1;
  Int q_pow_n = c.q;
  while (q_pow_n <= n_cover) {
    q_pow_n *= c.q;
    ++n;
  }
  DigitConcatResult d = digit_concatenate(c, n, cap);

  FUpperResult res;
  res.set = d.set;
  res.n = n;
  res.q_pow_n = q_pow_n;
  res.certificate = verify_cover(res.set, k, diff_range(1, n_cover));
  if (!res.certificate.ok()) throw ConfigError("build_F_upper: cover of {1..N} failed");
  res.exponent = n_cover >= 2 ? ln_int(Int(res.set.size())) / ln_int(n_cover) : 0.0;
  return res;
}

FpSet mockenhaupt_tao(uint32_t p) {
  FpSpace sp(p, 2);
  std::vector<uint64_t> pts;
  for (uint32_t u = 0; u < p; ++u)
    for (uint32_t v = 0; v < p; ++v)
      pts.push_back(sp.encode({(u + v) % p, static_cast<uint32_t>((uint64_t(u) * v) % p)}));
  return FpSet(sp, std::move(pts));
}

UnwrapResult fp_unwrap(const FpSet& a, int64_t k) {
  if (a.empty()) throw ConfigError("fp_unwrap of an empty set");
  const FpSpace& sp = a.space();

  // Certificate over every direction of F_p^n that the set actually covers.
  std::vector<uint64_t> dirs;
  for (uint64_t d = 0; d < sp.card; ++d) dirs.push_back(d);
  FpCoverResult cert = fp_verify_cover(a, k, dirs);

  // Unwrap each certified progression into {0, ..., k(p-1)}^n.
  std::vector<VecInt> pts;
  std::vector<VecInt> int_dirs;
  for (const auto& [d, base] : cert.entries) {
    auto dc = sp.decode(d);
    auto bc = sp.decode(base);
    VecInt dz(sp.n), bz(sp.n);
    for (uint32_t i = 0; i < sp.n; ++i) {
      dz[i] = dc[i];
      bz[i] = bc[i];
    }
    for (int64_t j = 0; j < k; ++j) {
      VecInt x(sp.n);
      for (uint32_t i = 0; i < sp.n; ++i) x[i] = bz[i] + j * dz[i];
      pts.push_back(std::move(x));
    }
    int_dirs.push_back(std::move(dz));
  }

  UnwrapResult res;
  if (sp.n == 1) {
    std::vector<Int> flat;
    flat.reserve(pts.size());
    for (auto& v : pts) flat.push_back(v[0]);
    res.set = IntSet(std::move(flat));
    for (auto& d : int_dirs) res.integer_differences.push_back(d[0]);
  } else {
    Int box = 0;
    for (const auto& v : pts)
      for (const Int& coord : v)
        if (coord > box) box = coord;
    const Int base = Int(10) * k * (box + 1) * Int(sp.n);
    FreimanResult f = freiman_collapse(pts, k, base);
    if (!f.ok) throw ConfigError("fp_unwrap: digit base rejected unexpectedly");
    res.set = f.image;
    for (auto& dvec : int_dirs) {
      Int v = 0, w = 1;
      for (uint32_t i = 0; i < sp.n; ++i) {
        w *= base;
        v += w * dvec[i];
      }
      res.integer_differences.push_back(v);
    }
  }
  std::sort(res.integer_differences.begin(), res.integer_differences.end());
  res.integer_differences.erase(
      std::unique(res.integer_differences.begin(), res.integer_differences.end()),
      res.integer_differences.end());
  res.distinct_differences = static_cast<int64_t>(res.integer_differences.size());
  res.cover = verify_cover(res.set, k, res.integer_differences);
  if (!res.cover.ok()) throw ConfigError("fp_unwrap: rebuilt cover failed to verify");
  res.size_ok = Int(res.set.size()) <= int_pow(Int(k), sp.n) * Int(a.size());
  return res;
}

WrapResult wrap_to_fp(const IntSet& a, int64_t k, int64_t n_cover, uint32_t n_dim, uint32_t p,
                      uint64_t seed, std::optional<Rat> accept_fraction, int retries) {
  if (n_dim < 1) throw ConfigError("wrap_to_fp with n = 0");
  WrapResult res;

  CutMoveResult cm = cut_and_move(a, k, n_cover);
  if (!cm.ok) {
    res.bad_differences = cm.bad_differences;
    return res;
  }
  const int64_t half_k = std::max<int64_t>(k / 2, 1);
  res.progression_length = half_k;

  const Int m_side = nth_root_floor(Int(n_cover), n_dim);
  if (m_side < 1) throw ConfigError("wrap_to_fp: M = floor(N^(1/n)) < 1");
  if (Int(p) < m_side || Int(p) >= 2 * m_side)
    throw ConfigError("wrap_to_fp: p must lie in [M, 2M) with M = " + m_side.str());
  FpSpace sp(p, n_dim);

  const Rat c = accept_fraction.value_or(Rat(1, Int(30) * k * int_pow(Int(2), n_dim)));
  Rat needed = c * Rat(n_cover);
  Int thr = rat_floor(needed);
  if (Rat(thr) < needed) thr += 1;  // ceil
  if (thr < 1) thr = 1;
  res.threshold = to_i64(thr);

  const Int m_pow_n = int_pow(m_side, n_dim);
  const Int lo = Int(-10) * k * n_cover;
  const Int width = Int(30) * k * n_cover;  // t in {-10kN, ..., 20kN - 1}
  Rng rng(seed);

  for (int attempt = 0; attempt < retries; ++attempt) {
    res.attempts = attempt + 1;
    Int t = lo + rng.below_int(width);

    // A3(t): base-M digit vectors of (A2 + t) ∩ {0, ..., M^n - 1}.
    std::vector<uint64_t> pts;
    for (const Int& v : cm.set) {
      Int w = v + t;
      if (w < 0 || w >= m_pow_n) continue;
      std::vector<uint32_t> coords(n_dim);
      Int rem = w;
      for (uint32_t i = 0; i < n_dim; ++i) {
        coords[i] = static_cast<uint32_t>(to_i64(floor_mod(rem, m_side)));
        rem = floor_div(rem, m_side);
      }
      pts.push_back(sp.encode(coords));  // coords < M <= p: injective
    }
    FpSet image(sp, std::move(pts));

    FpCoverResult cover = fp_verify_cover(image, half_k, all_nonzero_directions(sp));
    const int64_t count = static_cast<int64_t>(cover.entries.size());
    if (count > res.covered_directions || attempt == 0) {
      res.covered_directions = count;
      res.set = image;
      res.t = t;
    }
    if (count >= res.threshold) {
      res.accepted = true;
      res.set = image;
      res.t = t;
      res.covered_directions = count;
      break;
    }
  }
  return res;
}

}  // namespace kakeya
