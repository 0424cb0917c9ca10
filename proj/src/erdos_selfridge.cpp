#include "kakeya/erdos_selfridge.hpp"

#include "kakeya/ap_cover.hpp"
#include "kakeya/fp.hpp"
#include "kakeya/parallel.hpp"
#include "kakeya/rng.hpp"

#include <algorithm>

namespace kakeya {

void ESInstance::check() const {
  if (primes.empty()) throw ConfigError("ESInstance without primes");
  if (k < 1) throw ConfigError("ESInstance with k < 1");
  Int prev = 0;
  for (const Int& p : primes) {
    if (p <= prev) throw ConfigError("ESInstance primes must be strictly increasing");
    if (p > Int(UINT64_MAX) || !is_prime_u64(static_cast<uint64_t>(p)))
      throw ConfigError("ESInstance entry is not prime: " + p.str());
    prev = p;
  }
}

Int interval_multiple_count(const ESInstance& inst) {
  inst.check();
  const Int len = inst.interval_length();
  Int count = 0;
  for (Int x = inst.w + 1; x <= inst.w + len; ++x) {
    for (const Int& p : inst.primes) {
      if (floor_mod(x, p) == 0) {
        ++count;
        break;
      }
    }
  }
  return count;
}

IntervalMin min_over_intervals(const std::vector<Int>& primes, int64_t k, const Int& exact_cap,
                               uint64_t seed, int64_t samples) {
  ESInstance probe{primes, k, 0};
  probe.check();
  Int period = 1;
  for (const Int& p : primes) period *= p;  // distinct primes: lcm = product

  const Int len = probe.interval_length();

  IntervalMin res;
  res.period = period;
  if (period <= exact_cap) {
    res.exhaustive = true;
    // Incremental sweep in 64-bit arithmetic: moving the window by one
    // exchanges two endpoints. Chunked for --threads, reduced in chunk order.
    const int64_t period64 = to_i64(period);
    const int64_t len64 = to_i64(len);
    std::vector<int64_t> ps;
    for (const Int& p : primes) ps.push_back(to_i64(p));
    auto div64 = [&](int64_t x) {
      for (int64_t p : ps)
        if (x % p == 0) return true;
      return false;
    };
    auto count_at = [&](int64_t w) {
      int64_t c = 0;
      for (int64_t x = w + 1; x <= w + len64; ++x)
        if (div64(x)) ++c;
      return c;
    };
    const unsigned chunks =
        static_cast<unsigned>(std::min<int64_t>(thread_budget(), std::max<int64_t>(period64 / 64, 1)));
    const int64_t per = (period64 + chunks - 1) / chunks;
    std::vector<int64_t> chunk_best(chunks), chunk_w(chunks);
    parallel_for(chunks, [&](size_t ci) {
      const int64_t lo = static_cast<int64_t>(ci) * per;
      const int64_t hi = std::min<int64_t>(lo + per, period64);
      int64_t count = count_at(lo);
      int64_t best = count, best_w = lo;
      for (int64_t w = lo + 1; w < hi; ++w) {
        if (div64(w)) --count;            // element w leaves the window
        if (div64(w + len64)) ++count;    // element w + len enters
        if (count < best) {
          best = count;
          best_w = w;
        }
      }
      chunk_best[ci] = best;
      chunk_w[ci] = best_w;
    });
    int64_t best = chunk_best[0], best_w = chunk_w[0];
    for (unsigned ci = 1; ci < chunks; ++ci)
      if (chunk_best[ci] < best) {
        best = chunk_best[ci];
        best_w = chunk_w[ci];
      }
    res.count = best;
    res.w = best_w;
  } else {
    res.exhaustive = false;
    Rng rng(seed);
    Int best = len + 1, best_w = 0;
    for (int64_t i = 0; i < samples; ++i) {
      Int w = rng.below_int(period);
      Int c = interval_multiple_count({primes, k, w});
      if (c < best || (c == best && w < best_w)) {
        best = c;
        best_w = w;
      }
    }
    res.count = best;
    res.w = best_w;
  }
  return res;
}

namespace {
// Smallest w >= floor(p_N/2) with p_i | w + u a_i for all i (CRT).
Int crt_shift(const std::vector<Int>& primes, const Int& u, const std::vector<Int>& bases) {
  Int mod = 1, w = 0;
  for (size_t i = 0; i < primes.size(); ++i) {
    const Int p = primes[i];
    const Int want = floor_mod(-u * bases[i], p);  // w ≡ -u a_i (mod p_i)
    // solve w + t*mod ≡ want (mod p)
    Int t = 0;
    while (floor_mod(w + t * mod, p) != want) ++t;  // p is tiny prime count; fine at desk scale
    w += t * mod;
    mod *= p;
  }
  const Int lo = primes.back() / 2;
  while (w < lo) w += mod;
  return w;
}

bool verify_interval_claim(const PrimePattern& pat, int64_t k, const std::vector<Int>& bases,
                           const Int& u) {
  const Int pn = pat.primes.back();
  const Int lo = pat.interval_start + 1;
  const Int hi = pat.interval_start + Int(k) * pn;
  for (size_t i = 0; i < pat.primes.size(); ++i) {
    const Int p = pat.primes[i];
    const Int anchor = pat.w + u * bases[i];
    if (floor_mod(anchor, p) != 0) return false;
    // I ∩ pZ must be exactly {anchor + j p : 0 <= j < k}.
    Int first = lo + floor_mod(-lo, p);  // smallest multiple of p in I
    std::vector<Int> multiples;
    for (Int x = first; x <= hi; x += p) multiples.push_back(x);
    if (static_cast<int64_t>(multiples.size()) != k) return false;
    for (int64_t j = 0; j < k; ++j)
      if (multiples[j] != anchor + j * p) return false;
  }
  return true;
}
}  // namespace

PrimePattern prime_pattern_search(const std::vector<Int>& diffs, double delta, const Int& x_max,
                                  int64_t k, const std::vector<Int>& bases_in, const Int& u_max) {
  if (diffs.empty()) throw ConfigError("prime_pattern_search without differences");
  if (delta <= 0 || delta >= 1) throw ConfigError("delta must lie in (0,1)");
  std::vector<Int> diffs_sorted = diffs;
  std::sort(diffs_sorted.begin(), diffs_sorted.end());
  if (diffs_sorted.front() < 1) throw ConfigError("differences must be positive");
  std::vector<Int> bases = bases_in;
  if (bases.empty()) bases.assign(diffs.size(), 0);
  if (bases.size() != diffs.size())
    throw ConfigError("bases must match the differences");

  PrimePattern res;
  const Int dn = diffs_sorted.back();
  for (Int u = 1; u <= u_max; ++u) {
    for (Int v = 2; dn * u + v <= x_max; v = Int(next_prime_at_least(to_i64(v) + 1))) {
      if (!is_prime_u64(static_cast<uint64_t>(v))) continue;
      const Int x = dn * u + v;
      // window condition v >= (1-delta) X, exact comparison
      if (Rat(v) < Rat(1 - delta) * Rat(x)) continue;
      bool all_prime = true;
      std::vector<Int> primes;
      for (const Int& d : diffs_sorted) {
        Int cand = d * u + v;
        if (!is_prime_u64(static_cast<uint64_t>(cand))) {
          all_prime = false;
          break;
        }
        primes.push_back(cand);
      }
      if (!all_prime) continue;
      // distinctness is automatic (diffs distinct, u > 0)
      res.found = true;
      res.u = u;
      res.v = v;
      res.x = x;
      res.primes = primes;
      res.w = crt_shift(primes, u, bases);
      res.interval_start = res.w - primes.back() / 2;
      res.claim_ok = verify_interval_claim(res, k, bases, u);
      if (res.claim_ok) return res;
      res = PrimePattern{};  // claim failed: keep searching
    }
  }
  return res;
}

SandwichReport sandwich_check(int64_t k, int64_t n, const Int& x_max,
                              const OracleOptions& oracle_opt) {
  SandwichReport rep;
  rep.f_prime = min_distinct_cover(k, n, oracle_opt);

  // Translate the witness to positive integers and read off its certificate.
  IntSet a = rep.f_prime.witness.translated(1 - rep.f_prime.witness.min());
  std::vector<Int> diffs;
  std::vector<Int> bases;
  {
    // N distinct differences realised by the witness, smallest first.
    const Int max_d = a.max() - a.min();
    for (Int d = 1; d <= max_d && static_cast<int64_t>(diffs.size()) < n; ++d) {
      CoverResult c = verify_cover(a, k, {d});
      if (c.ok()) {
        diffs.push_back(d);
        bases.push_back(c.entries.at(d));
      }
    }
  }
  if (static_cast<int64_t>(diffs.size()) < n)
    throw ConfigError("sandwich_check: witness lost differences (internal error)");

  const Int max_a = a.max();
  // The three window conditions the interval claim rests on, searched
  // directly instead of tuning delta: v/u > 4 max A (eq32-type),
  // p_1 >= (1 - 1/4k) p_N (eq35-type), p_i > p_N/2 + u max A (eq34-type).
  PrimePattern best;
  std::string binding;
  for (Int u = 1; u <= 512 && !best.found; ++u) {
    for (Int v = 2; diffs.back() * u + v <= x_max;
         v = Int(next_prime_at_least(to_i64(v) + 1))) {
      bool all_prime = true;
      std::vector<Int> primes;
      for (const Int& d : diffs) {
        Int cand = d * u + v;
        if (cand > Int(UINT64_MAX) || !is_prime_u64(static_cast<uint64_t>(cand))) {
          all_prime = false;
          break;
        }
        primes.push_back(cand);
      }
      if (!all_prime) continue;
      const Int pn = primes.back();
      if (Rat(v) <= Rat(4) * Rat(max_a) * Rat(u)) {
        binding = "v/u > 4 max A";
        continue;
      }
      if (Rat(primes.front()) < (Rat(1) - Rat(1, 4 * k)) * Rat(pn)) {
        binding = "p_1 >= (1 - 1/4k) p_N";
        continue;
      }
      bool ok34 = true;
      for (const Int& p : primes)
        if (2 * p <= pn + 2 * u * max_a) ok34 = false;
      if (!ok34) {
        binding = "p_i > p_N/2 + u max A";
        continue;
      }
      best.found = true;
      best.u = u;
      best.v = v;
      best.x = diffs.back() * u + v;
      best.primes = primes;
      best.w = crt_shift(primes, u, bases);
      best.interval_start = best.w - pn / 2;
      best.claim_ok = verify_interval_claim(best, k, bases, u);
      break;
    }
  }
  rep.pattern = best;
  rep.binding_condition = binding;
  rep.right_demonstrated = best.found && best.claim_ok;

  if (rep.right_demonstrated) {
    rep.instance = ESInstance{best.primes, k, best.interval_start};
    rep.instance_count = interval_multiple_count(rep.instance);
    rep.sweep = min_over_intervals(best.primes, k);
    // Left: any instance's point set certifies N distinct prime differences.
    std::vector<Int> pts;
    const Int len = rep.instance.interval_length();
    for (Int x = rep.instance.w + 1; x <= rep.instance.w + len; ++x)
      for (const Int& p : best.primes)
        if (floor_mod(x, p) == 0) {
          pts.push_back(x);
          break;
        }
    IntSet extracted(std::move(pts));
    CoverResult c = verify_cover(extracted, k, best.primes);
    rep.left_ok = c.ok() && rep.f_prime.optimum <= static_cast<int64_t>(extracted.size()) &&
                  rep.f_prime.optimum <= rep.sweep.count;
    rep.right_ok = rep.instance_count <= Int(k) * rep.f_prime.optimum &&
                   rep.sweep.count <= Int(k) * rep.f_prime.optimum;
  }
  return rep;
}

}  // namespace kakeya
