#include "kakeya/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>

namespace kakeya {

namespace {
using Clock = std::chrono::steady_clock;

struct Deadline {
  Clock::time_point start = Clock::now();
  int64_t budget_ms = 0;
  bool expired = false;
  uint64_t checks = 0;

  bool over() {
    if (budget_ms <= 0) return false;
    if (expired) return true;
    if ((++checks & 0xFFF) != 0) return false;
    expired = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
                  .count() > budget_ms;
    return expired;
  }
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  }
};

std::vector<Int> mask_to_elems(uint64_t mask) {
  std::vector<Int> v;
  for (int b = 0; b < 64; ++b)
    if (mask >> b & 1u) v.emplace_back(b);
  return v;
}

// Lexicographic order on the ascending element sequences.
bool lex_less(uint64_t a, uint64_t b) {
  while (a && b) {
    int ta = std::countr_zero(a), tb = std::countr_zero(b);
    if (ta != tb) return ta < tb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

// Branch and bound over placements: `placements[i]` lists the point masks
// that cover requirement i. A state is the chosen point mask; requirement i
// is met when some placement is a subset of the chosen points.
struct PlacementSearch {
  const std::vector<std::vector<uint64_t>>& placements;
  Deadline& deadline;
  uint64_t nodes = 0;
  int64_t best = INT64_MAX;
  uint64_t best_mask = 0;
  bool lex_pass = false;  // second pass: enumerate optima, keep lex-least

  bool met(size_t i, uint64_t pts) const {
    for (uint64_t m : placements[i])
      if ((m & ~pts) == 0) return true;
    return false;
  }

  void dfs(uint64_t pts) {
    ++nodes;
    if (deadline.over()) return;
    // Pick the unmet requirement with the fewest placements.
    size_t pick = placements.size();
    size_t pick_count = SIZE_MAX;
    for (size_t i = 0; i < placements.size(); ++i) {
      if (met(i, pts)) continue;
      size_t c = placements[i].size();
      if (c < pick_count) {
        pick_count = c;
        pick = i;
      }
    }
    const int64_t size_now = std::popcount(pts);
    if (pick == placements.size()) {  // everything covered
      if (size_now < best || (lex_pass && size_now == best &&
                              (best_mask == 0 || lex_less(pts, best_mask)))) {
        best = size_now;
        best_mask = pts;
      }
      return;
    }
    for (uint64_t m : placements[pick]) {
      uint64_t np = pts | m;
      int64_t ns = std::popcount(np);
      if (lex_pass ? ns > best : ns >= best) continue;
      dfs(np);
    }
  }
};

uint64_t greedy_incumbent(const std::vector<std::vector<uint64_t>>& placements) {
  uint64_t pts = 0;
  for (const auto& opts : placements) {
    bool already = false;
    for (uint64_t m : opts)
      if ((m & ~pts) == 0) already = true;
    if (already) continue;
    uint64_t pick = opts.front();
    int best_new = std::popcount(pick & ~pts);
    for (uint64_t m : opts) {
      int nw = std::popcount(m & ~pts);
      if (nw < best_new) {
        best_new = nw;
        pick = m;
      }
    }
    pts |= pick;
  }
  return pts;
}

OracleResult solve_placements(std::vector<std::vector<uint64_t>> placements,
                              const OracleOptions& opt) {
  Deadline deadline{Clock::now(), opt.time_budget_ms};
  OracleResult res;

  PlacementSearch search{placements, deadline};
  uint64_t inc = greedy_incumbent(placements);
  search.best = std::popcount(inc);
  search.best_mask = inc;
  search.dfs(0);

  if (!deadline.expired) {
    // Second pass: smallest witness in lexicographic order among the optima.
    PlacementSearch lex{placements, deadline};
    lex.best = search.best;
    lex.best_mask = 0;
    lex.lex_pass = true;
    lex.dfs(0);
    if (lex.best_mask != 0 || search.best == 0) search.best_mask = lex.best_mask;
    search.nodes += lex.nodes;
  }

  res.optimum = search.best;
  res.witness = IntSet(mask_to_elems(search.best_mask));
  res.exhausted = !deadline.expired;
  res.nodes = search.nodes;
  res.wall_ms = deadline.elapsed_ms();
  return res;
}
}  // namespace

OracleResult min_full_cover(int64_t k, int64_t n, const OracleOptions& opt) {
  if (k < 1 || n < 1) throw ConfigError("min_full_cover needs k, N >= 1");
  const int64_t window = std::max((k - 1) * n, opt.window_width);
  if (window > opt.window_cap)
    throw InstanceTooLarge("min_full_cover: window " + std::to_string(window) +
                           " exceeds cap " + std::to_string(opt.window_cap));

  std::vector<std::vector<uint64_t>> placements;
  for (int64_t d = 1; d <= n; ++d) {
    std::vector<uint64_t> opts;
    for (int64_t a = 0; a + (k - 1) * d <= window; ++a) {
      uint64_t m = 0;
      for (int64_t j = 0; j < k; ++j) m |= 1ull << (a + j * d);
      opts.push_back(m);
    }
    if (opts.empty()) throw ConfigError("min_full_cover: no placement fits the window");
    placements.push_back(std::move(opts));
  }
  OracleResult res = solve_placements(std::move(placements), opt);
  res.quantity = OracleQuantity::FullCover;
  res.k = k;
  res.n_param = n;
  res.window = window;
  return res;
}

namespace {
// F' branch and bound: choose N strictly increasing differences with one
// placement each inside the window.
struct DistinctSearch {
  const std::vector<std::vector<uint64_t>>& placements_by_d;  // index d-1
  int64_t needed;
  Deadline& deadline;
  uint64_t nodes = 0;
  int64_t best = INT64_MAX;
  uint64_t best_mask = 0;
  bool lex_pass = false;

  void dfs(uint64_t pts, int64_t last_d, int64_t chosen) {
    ++nodes;
    if (deadline.over()) return;
    if (chosen == needed) {
      int64_t size_now = std::popcount(pts);
      if (size_now < best || (lex_pass && size_now == best &&
                              (best_mask == 0 || lex_less(pts, best_mask)))) {
        best = size_now;
        best_mask = pts;
      }
      return;
    }
    const int64_t dmax = static_cast<int64_t>(placements_by_d.size());
    for (int64_t d = last_d + 1; d + (needed - chosen - 1) <= dmax; ++d) {
      for (uint64_t m : placements_by_d[d - 1]) {
        uint64_t np = pts | m;
        int64_t ns = std::popcount(np);
        if (lex_pass ? ns > best : ns >= best) continue;
        dfs(np, d, chosen + 1);
      }
    }
  }
};
}  // namespace

OracleResult min_distinct_cover(int64_t k, int64_t n, const OracleOptions& opt) {
  if (k < 1 || n < 1) throw ConfigError("min_distinct_cover needs k, N >= 1");
  OracleResult res;
  res.quantity = OracleQuantity::DistinctCover;
  res.k = k;
  res.n_param = n;
  if (k == 1) {  // a single point is a 1-term progression for every difference
    res.optimum = 1;
    res.witness = IntSet({Int(0)});
    return res;
  }
  const int64_t window = std::max((k - 1) * n, opt.window_width);
  if (window > opt.window_cap)
    throw InstanceTooLarge("min_distinct_cover: window exceeds cap");
  res.window = window;

  std::vector<std::vector<uint64_t>> by_d;
  for (int64_t d = 1; (k - 1) * d <= window; ++d) {
    std::vector<uint64_t> opts;
    for (int64_t a = 0; a + (k - 1) * d <= window; ++a) {
      uint64_t m = 0;
      for (int64_t j = 0; j < k; ++j) m |= 1ull << (a + j * d);
      opts.push_back(m);
    }
    by_d.push_back(std::move(opts));
  }
  if (static_cast<int64_t>(by_d.size()) < n)
    throw ConfigError("min_distinct_cover: window admits fewer than N differences");

  Deadline deadline{Clock::now(), opt.time_budget_ms};
  DistinctSearch search{by_d, n, deadline};
  // Incumbent: the first N differences placed at 0.
  uint64_t inc = 0;
  for (int64_t d = 1; d <= n; ++d) inc |= by_d[d - 1].front();
  search.best = std::popcount(inc);
  search.best_mask = inc;
  search.dfs(0, 0, 0);
  uint64_t nodes = search.nodes;

  if (!deadline.expired) {
    DistinctSearch lex{by_d, n, deadline};
    lex.best = search.best;
    lex.best_mask = 0;
    lex.lex_pass = true;
    lex.dfs(0, 0, 0);
    if (lex.best_mask != 0) search.best_mask = lex.best_mask;
    nodes += lex.nodes;
  }

  res.optimum = search.best;
  res.witness = IntSet(mask_to_elems(search.best_mask));
  res.exhausted = !deadline.expired;
  res.nodes = nodes;
  res.wall_ms = deadline.elapsed_ms();
  return res;
}

OracleResult min_fp_cover(int64_t k, uint32_t dim, uint32_t p, const OracleOptions& opt) {
  if (k < 1) throw ConfigError("min_fp_cover needs k >= 1");
  FpSpace sp(p, dim);
  if (sp.card > opt.fp_cap)
    throw InstanceTooLarge("min_fp_cover: p^n = " + std::to_string(sp.card) +
                           " exceeds cap " + std::to_string(opt.fp_cap));

  std::vector<std::vector<uint64_t>> placements;
  for (uint64_t d = 1; d < sp.card; ++d) {
    std::vector<uint64_t> opts;
    for (uint64_t a = 0; a < sp.card; ++a) {
      uint64_t m = 0, x = a;
      for (int64_t j = 0; j < k; ++j) {
        m |= 1ull << x;
        x = sp.add(x, d);
      }
      opts.push_back(m);
    }
    std::sort(opts.begin(), opts.end());
    opts.erase(std::unique(opts.begin(), opts.end()), opts.end());
    placements.push_back(std::move(opts));
  }

  OracleResult res = solve_placements(std::move(placements), opt);
  res.quantity = OracleQuantity::FpCover;
  res.k = k;
  res.n_param = dim;
  res.p = p;
  res.fp_witness.clear();
  for (const Int& e : res.witness) res.fp_witness.push_back(to_i64(e));
  if (k == static_cast<int64_t>(p))
    res.dkss_reference = std::pow(p / 2.0, static_cast<double>(dim));
  return res;
}

BoundComparison compare_bounds(int64_t k, int64_t n, const OracleOptions& opt) {
  BoundComparison cmp;
  cmp.full = min_full_cover(k, n, opt);
  cmp.distinct = min_distinct_cover(k, n, opt);
  cmp.order_ok = cmp.distinct.optimum <= cmp.full.optimum;
  cmp.factor_bound =
      12.0 * std::pow(double(k), 3) * (1.0 + std::log(double(n))) * double(cmp.distinct.optimum);
  cmp.factor_ok = double(cmp.full.optimum) <= cmp.factor_bound;

  std::vector<Int> triv;
  for (int64_t d = 1; d <= n; ++d)
    for (int64_t j = 0; j < k; ++j) triv.emplace_back(j * d);
  cmp.trivial_construction = static_cast<int64_t>(IntSet(std::move(triv)).size());
  return cmp;
}

}  // namespace kakeya
