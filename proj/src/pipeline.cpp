#include "kakeya/pipeline.hpp"

#include <algorithm>
#include <cmath>

namespace kakeya {

namespace {
Int factorial(const Int& n) {
  Int r = 1;
  for (Int i = 2; i <= n; ++i) r *= i;
  return r;
}

Int multinomial_for(const std::vector<Rat>& weights, const Int& n) {
  Int result = factorial(n);
  for (const Rat& w : weights) {
    Rat c = w * Rat(n);
    if (boost::multiprecision::denominator(c) != 1)
      throw ConfigError("typical set: n * mass is not integral");
    result /= factorial(boost::multiprecision::numerator(c));
  }
  return result;
}

Int lcm_int(const Int& a, const Int& b) { return a / boost::multiprecision::gcd(a, b) * b; }
}  // namespace

TypicalPairSet typical_pair_set(const JointFp& j, int64_t m, const Int& cap) {
  if (m < 1) throw ConfigError("typical_pair_set with m < 1");
  j.check();

  TypicalPairSet res;
  res.q = 1;
  for (const auto& [xy, w] : j.mass)
    res.q = lcm_int(res.q, boost::multiprecision::denominator(w));
  const Int positions = Int(m) * res.q;
  res.positions = to_i64(positions);

  std::vector<Rat> weights;
  for (const auto& [xy, w] : j.mass) weights.push_back(w);
  res.exact_count = multinomial_for(weights, positions);
  if (res.exact_count > cap) {
    res.refusal = "exact count " + res.exact_count.str() + " exceeds cap " + cap.str();
    return res;
  }

  const uint32_t p = j.space.p;
  const uint64_t dim64 = static_cast<uint64_t>(res.positions) * j.space.n;
  if (dim64 > 40 || std::pow(double(p), double(dim64)) > 9e18) {
    res.refusal = "ambient dimension n*m*q = " + std::to_string(dim64) +
                  " overflows the 64-bit point encoding";
    return res;
  }

  const uint32_t dim = static_cast<uint32_t>(dim64);
  FpSpace big(p, dim);
  res.b.space = big;

  // Atoms with multiplicities n * p_xy, in deterministic (map) order.
  struct AtomSlot {
    uint64_t x, y;
    int64_t remaining;
  };
  std::vector<AtomSlot> slots;
  for (const auto& [xy, w] : j.mass) {
    Rat c = w * Rat(positions);
    slots.push_back({xy.first, xy.second, to_i64(boost::multiprecision::numerator(c))});
  }

  // Enumerate all arrangements of the atom multiset over the positions,
  // building the concatenated coordinates incrementally.
  const uint64_t block = j.space.card;  // p^n per position
  std::vector<uint64_t> xstack(res.positions + 1, 0), ystack(res.positions + 1, 0);
  std::vector<uint64_t> mult(res.positions + 1, 1);
  for (int64_t i = 0; i < res.positions; ++i) mult[i + 1] = mult[i] * block;

  std::vector<std::pair<uint64_t, uint64_t>> out;
  auto rec = [&](auto&& self, int64_t pos) -> void {
    if (pos == res.positions) {
      out.emplace_back(xstack[pos], ystack[pos]);
      return;
    }
    for (auto& slot : slots) {
      if (slot.remaining == 0) continue;
      --slot.remaining;
      xstack[pos + 1] = xstack[pos] + slot.x * mult[pos];
      ystack[pos + 1] = ystack[pos] + slot.y * mult[pos];
      self(self, pos + 1);
      ++slot.remaining;
    }
  };
  rec(rec, 0);
  if (Int(out.size()) != res.exact_count)
    throw ConfigError("typical_pair_set: arrangement count mismatch");
  res.b.pairs = std::move(out);
  res.materialized = true;

  // #pi_r(B) must match the multinomial of each projected law.
  res.projections_ok = true;
  for (uint32_t ri = 0; ri <= p; ++ri) {
    FpSlope r = (ri == p) ? FpSlope::inf() : FpSlope::of(ri);
    std::vector<uint64_t> img;
    img.reserve(res.b.pairs.size());
    for (const auto& [x, y] : res.b.pairs)
      img.push_back(r.infinite ? y : big.add(x, big.scale(r.r, y)));
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    res.projection_counts.push_back(Int(img.size()));

    std::vector<Rat> pw;
    for (const auto& [v, w] : j.project(r)) pw.push_back(w);
    if (Int(img.size()) != multinomial_for(pw, positions)) res.projections_ok = false;
  }
  return res;
}

LinesUnion lines_union(const PairFpSet& b) {
  const FpSpace& sp = b.space;
  LinesUnion res;

  std::vector<uint64_t> pts;
  std::map<uint64_t, uint64_t> dir_base;
  for (const auto& [x, y] : b.pairs) {
    if (x == y) {
      pts.push_back(x);  // diagonal pair: the single point, no direction claimed
      continue;
    }
    uint64_t d = sp.sub(x, y);
    // line through x and y: {y + s d : s in F_p}
    uint64_t cur = y;
    for (uint32_t s = 0; s < sp.p; ++s) {
      pts.push_back(cur);
      cur = sp.add(cur, d);
    }
    dir_base.emplace(d, y);
  }
  res.set = FpSet(sp, std::move(pts));
  for (const auto& [d, base] : dir_base) res.directions.push_back(d);

  res.cert.k = sp.p;
  for (const auto& [d, base] : dir_base) res.cert.entries[d] = base;
  for (const auto& [d, base] : res.cert.entries) {
    uint64_t cur = base;
    for (uint32_t s = 0; s < sp.p; ++s) {
      if (!res.set.contains(cur)) throw ConfigError("lines_union: line verification failed");
      cur = sp.add(cur, d);
    }
  }

  // #A <= p * sup_{r != -1} #pi_r(B)
  size_t sup = 0;
  for (uint32_t ri = 0; ri <= sp.p; ++ri) {
    if (ri == sp.p - 1) continue;  // r = -1
    FpSlope r = (ri == sp.p) ? FpSlope::inf() : FpSlope::of(ri);
    std::vector<uint64_t> img;
    img.reserve(b.pairs.size());
    for (const auto& [x, y] : b.pairs)
      img.push_back(r.infinite ? y : sp.add(x, sp.scale(r.r, y)));
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    sup = std::max(sup, img.size());
  }
  res.size_ok = res.set.size() <= static_cast<size_t>(sp.p) * sup;
  return res;
}

PipelineReport replay_entropy_pipeline(const JointFp& j, int64_t m, uint64_t seed,
                                       const Int& typical_cap, int retries) {
  PipelineReport rep;
  rep.seed = seed;
  rep.m = m;
  rep.p = j.space.p;
  rep.entropy_ratio = entropy_gap(j, fp_slopes_excluding_minus_one(j.space.p)).ratio;

  // Stage 1: typical pair set.
  TypicalPairSet typ = typical_pair_set(j, m, typical_cap);
  rep.typical_count = typ.exact_count;
  PipelineStage s1{"typical_pair_set", typ.materialized && typ.projections_ok, ""};
  if (!typ.materialized)
    s1.detail = "materialization refused: " + typ.refusal;
  else if (!typ.projections_ok)
    s1.detail = "projection counts disagree with multinomials";
  rep.stages.push_back(s1);
  if (!s1.ok) return rep;

  // Finite-m analogue of the entropy ratio, from the exact projection counts
  // (index order: r = 0, 1, ..., p-1, infinity).
  {
    const Int& diff_count = typ.projection_counts[j.space.p - 1];
    Int sup = 0;
    for (uint32_t ri = 0; ri <= j.space.p; ++ri) {
      if (ri == j.space.p - 1) continue;
      if (typ.projection_counts[ri] > sup) sup = typ.projection_counts[ri];
    }
    if (diff_count > 1 && sup > 1) rep.count_ratio = ln_int(diff_count) / ln_int(sup);
  }

  // Stage 2: union of lines.
  LinesUnion lines = lines_union(typ.b);
  rep.lines_size = lines.set.size();
  rep.direction_count = lines.directions.size();
  rep.stages.push_back({"lines_union", lines.size_ok,
                        lines.size_ok ? "" : "size bound #A <= p sup #pi_r(B) failed"});
  if (!lines.size_ok) return rep;

  // Stage 3: random linear compression (skipped when no direction exists).
  FpSet compressed = lines.set;
  FpCoverResult surviving_cert = lines.cert;
  if (!lines.directions.empty()) {
    LinearCompressResult comp = random_linear_compress(lines.set, lines.cert, seed, retries);
    rep.compressed_dim = comp.target_dim;
    rep.compressed_size = comp.image.size();
    rep.surviving = comp.surviving.size();
    rep.matrix = comp.matrix;
    rep.stages.push_back({"random_linear_compress", comp.accepted && comp.lines_ok,
                          comp.accepted ? "" : "retry budget exhausted"});
    if (!(comp.accepted && comp.lines_ok)) return rep;
    compressed = comp.image;
    surviving_cert = comp.image_cover;
  } else {
    rep.compressed_dim = 1;
    FpSpace tiny(j.space.p, 1);
    std::vector<uint64_t> single;
    for (uint64_t v : lines.set) single.push_back(v % j.space.p);
    compressed = FpSet(tiny, std::move(single));
    surviving_cert = FpCoverResult{};
    surviving_cert.k = j.space.p;
    rep.compressed_size = compressed.size();
    rep.surviving = 0;
    rep.stages.push_back({"random_linear_compress", true, "degenerate: no directions"});
  }

  // Stage 4: extension to a full Besicovitch set.
  ExtendResult ext = extend_full_difference_cover(compressed, surviving_cert,
                                                  static_cast<int64_t>(j.space.p));
  rep.final_size = ext.extended.size();
  rep.all_directions_ok = ext.full_cover.ok();
  rep.dkss_reference = std::pow(j.space.p / 2.0, double(rep.compressed_dim));
  rep.size_vs_reference_ok =
      !rep.all_directions_ok || double(rep.final_size) >= rep.dkss_reference;
  const bool degenerate = lines.directions.empty();
  rep.stages.push_back({"extend_full_difference_cover",
                        degenerate ? true : (ext.input_ok && rep.all_directions_ok),
                        degenerate ? "degenerate: nothing to extend" : ""});
  rep.completed = rep.stages.back().ok;
  return rep;
}

}  // namespace kakeya
