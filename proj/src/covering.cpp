#include "kakeya/covering.hpp"

#include <algorithm>
#include <cmath>

namespace kakeya {

GreedyIntCover greedy_translate_cover_int(const IntSet& s, const Int& x) {
  if (s.empty()) throw ConfigError("greedy_translate_cover_int with empty S");
  if (x < 1) throw ConfigError("greedy_translate_cover_int with X < 1");
  for (const Int& e : s)
    if (e < 1 || e > x) throw ConfigError("S must be a subset of {1,...,X}");

  const int64_t xi = to_i64(x);
  std::vector<char> covered(static_cast<size_t>(xi) + 1, 0);
  int64_t remaining = xi;

  GreedyIntCover res;
  std::vector<Int> ts;
  while (remaining > 0) {
    int64_t best_gain = -1;
    Int best_t = 0;
    for (Int t = -x + 1; t <= x; ++t) {
      int64_t gain = 0;
      for (const Int& e : s) {
        Int v = e + t;
        if (v >= 1 && v <= x && !covered[static_cast<size_t>(to_i64(v))]) ++gain;
      }
      if (gain > best_gain) {
        best_gain = gain;
        best_t = t;
      }
    }
    GreedyStep step{best_t, Int(remaining), Int(remaining - best_gain)};
    res.steps.push_back(step);
    for (const Int& e : s) {
      Int v = e + best_t;
      if (v >= 1 && v <= x) {
        auto& c = covered[static_cast<size_t>(to_i64(v))];
        if (!c) {
          c = 1;
          --remaining;
        }
      }
    }
    ts.push_back(best_t);
  }
  res.translates = IntSet(std::move(ts));

  const double lnx = ln_int(x);
  res.size_bound = Int(static_cast<long long>(
                       std::ceil(2.0 * to_i64(x) / static_cast<double>(s.size()) * lnx))) +
                   1;
  res.bound_ok = Int(res.translates.size()) <= res.size_bound;
  res.contraction_ok = true;
  const Int two_x = 2 * x;
  for (const auto& st : res.steps)
    if (two_x * st.uncovered_after > st.uncovered_before * (two_x - Int(s.size())))
      res.contraction_ok = false;
  return res;
}

namespace {
GreedyFpCover greedy_fp_impl(const FpSet& s, const std::vector<char>& target_mask,
                             uint64_t target_count) {
  if (s.empty()) throw ConfigError("greedy_translate_cover_fp with empty S");
  const FpSpace& sp = s.space();

  std::vector<char> covered(sp.card, 0);
  uint64_t remaining = 0;
  for (uint64_t v = 0; v < sp.card; ++v)
    if (!target_mask[v]) covered[v] = 1;
  remaining = target_count;

  GreedyFpCover res;
  while (remaining > 0) {
    int64_t best_gain = -1;
    uint64_t best_t = 0;
    for (uint64_t t = 0; t < sp.card; ++t) {
      int64_t gain = 0;
      for (uint64_t e : s)
        if (!covered[sp.add(e, t)]) ++gain;
      if (gain > best_gain) {
        best_gain = gain;
        best_t = t;
      }
    }
    res.steps.push_back({Int(best_t), Int(remaining), Int(remaining - best_gain)});
    for (uint64_t e : s) {
      auto& c = covered[sp.add(e, best_t)];
      if (!c) {
        c = 1;
        --remaining;
      }
    }
    res.translates.push_back(best_t);
  }
  std::sort(res.translates.begin(), res.translates.end());

  const double bound =
      static_cast<double>(sp.card) / static_cast<double>(s.size()) * sp.n * std::log(sp.p);
  res.size_bound = 2 * Int(static_cast<long long>(std::ceil(bound))) + 1;
  res.bound_ok = Int(res.translates.size()) <= res.size_bound;
  res.contraction_ok = true;
  for (const auto& st : res.steps)
    if (Int(sp.card) * st.uncovered_after > st.uncovered_before * (Int(sp.card) - Int(s.size())))
      res.contraction_ok = false;
  return res;
}
}  // namespace

GreedyFpCover greedy_translate_cover_fp(const FpSet& s) {
  std::vector<char> mask(s.space().card, 1);
  return greedy_fp_impl(s, mask, s.space().card);
}

GreedyFpCover greedy_translate_cover_fp_target(const FpSet& s,
                                               const std::vector<uint64_t>& target) {
  std::vector<char> mask(s.space().card, 0);
  uint64_t count = 0;
  for (uint64_t v : target) {
    if (v >= s.space().card) throw ConfigError("target point out of range");
    if (!mask[v]) {
      mask[v] = 1;
      ++count;
    }
  }
  return greedy_fp_impl(s, mask, count);
}

ExtendResult extend_full_difference_cover(const FpSet& a, const FpCoverResult& cert, int64_t k) {
  ExtendResult res;
  const FpSpace& sp = a.space();

  // Re-verify the supplied certificate before building on it.
  for (const auto& [d, base] : cert.entries) {
    uint64_t x = base;
    for (int64_t j = 0; j < cert.k; ++j) {
      if (!a.contains(x)) return res;
      x = sp.add(x, d);
    }
  }
  if (cert.k < k) return res;
  res.input_ok = true;

  std::vector<uint64_t> dirs;
  for (const auto& [d, base] : cert.entries)
    if (d != 0) dirs.push_back(d);

  std::vector<uint64_t> translates;
  if (dirs.empty()) {
    res.extended = a;  // nothing to extend from; caller sees the empty cover
    res.full_cover = fp_verify_cover(res.extended, k, all_nonzero_directions(sp));
    res.size_ok = true;
    return res;
  }

  GreedyFpCover greedy =
      greedy_translate_cover_fp_target(FpSet(sp, dirs), all_nonzero_directions(sp));
  translates = greedy.translates;
  res.translates = translates;

  std::vector<uint64_t> pts;
  for (int64_t j = 0; j < k; ++j) {
    for (uint64_t t : translates) {
      uint64_t shift = sp.scale(static_cast<uint64_t>(j % sp.p), t);
      for (uint64_t x : a) pts.push_back(sp.add(x, shift));
    }
  }
  res.extended = FpSet(sp, std::move(pts));
  res.full_cover = fp_verify_cover(res.extended, k, all_nonzero_directions(sp));
  res.size_ok = Int(res.extended.size()) <= Int(k) * Int(translates.size()) * Int(a.size());
  return res;
}

}  // namespace kakeya
