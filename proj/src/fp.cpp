#include "kakeya/fp.hpp"

#include <algorithm>

namespace kakeya {

namespace {
uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1u) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1u;
  }
  return r;
}
}  // namespace

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1u) == 0) {
    d >>= 1u;
    ++s;
  }
  // These bases decide primality for all n < 2^64.
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

uint64_t next_prime_at_least(uint64_t n) {
  if (n <= 2) return 2;
  if ((n & 1u) == 0) ++n;
  while (!is_prime_u64(n)) n += 2;
  return n;
}

FpSpace::FpSpace(uint32_t p_, uint32_t n_) : p(p_), n(n_) {
  if (!is_prime_u64(p)) throw ConfigError("FpSpace with non-prime p = " + std::to_string(p));
  if (n == 0) throw ConfigError("FpSpace with n = 0");
  card = 1;
  for (uint32_t i = 0; i < n; ++i) {
    if (card > UINT64_MAX / p) throw InstanceTooLarge("p^n does not fit in 64 bits");
    card *= p;
  }
}

std::vector<uint32_t> FpSpace::decode(uint64_t idx) const {
  std::vector<uint32_t> c(n);
  for (uint32_t i = 0; i < n; ++i) {
    c[i] = static_cast<uint32_t>(idx % p);
    idx /= p;
  }
  return c;
}

uint64_t FpSpace::encode(const std::vector<uint32_t>& coords) const {
  if (coords.size() != n) throw ConfigError("encode with wrong coordinate count");
  uint64_t idx = 0;
  for (uint32_t i = n; i-- > 0;) {
    if (coords[i] >= p) throw ConfigError("coordinate not reduced mod p");
    idx = idx * p + coords[i];
  }
  return idx;
}

uint64_t FpSpace::add(uint64_t a, uint64_t b) const {
  uint64_t r = 0, w = 1;
  for (uint32_t i = 0; i < n; ++i) {
    uint64_t da = a % p, db = b % p;
    uint64_t s = da + db;
    if (s >= p) s -= p;
    r += w * s;
    a /= p;
    b /= p;
    w *= p;
  }
  return r;
}

uint64_t FpSpace::sub(uint64_t a, uint64_t b) const {
  uint64_t r = 0, w = 1;
  for (uint32_t i = 0; i < n; ++i) {
    uint64_t da = a % p, db = b % p;
    uint64_t s = da + p - db;
    if (s >= p) s -= p;
    r += w * s;
    a /= p;
    b /= p;
    w *= p;
  }
  return r;
}

uint64_t FpSpace::scale(uint64_t c, uint64_t a) const {
  uint64_t r = 0, w = 1;
  for (uint32_t i = 0; i < n; ++i) {
    r += w * ((c * (a % p)) % p);
    a /= p;
    w *= p;
  }
  return r;
}

FpSet::FpSet(FpSpace space, std::vector<uint64_t> pts) : space_(space), pts_(std::move(pts)) {
  for (uint64_t v : pts_)
    if (v >= space_.card) throw ConfigError("FpSet point out of range");
  std::sort(pts_.begin(), pts_.end());
  pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
}

bool FpSet::contains(uint64_t idx) const {
  return std::binary_search(pts_.begin(), pts_.end(), idx);
}

FpSet FpSet::united(const FpSet& other) const {
  if (!(space_ == other.space_)) throw ConfigError("union of FpSets over different spaces");
  std::vector<uint64_t> v;
  v.reserve(pts_.size() + other.pts_.size());
  std::merge(pts_.begin(), pts_.end(), other.pts_.begin(), other.pts_.end(),
             std::back_inserter(v));
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return FpSet(space_, std::move(v));
}

FpSet FpSet::translated(uint64_t t) const {
  std::vector<uint64_t> v;
  v.reserve(pts_.size());
  for (uint64_t x : pts_) v.push_back(space_.add(x, t));
  return FpSet(space_, std::move(v));
}

std::vector<FpSlope> fp_slopes_excluding_minus_one(uint32_t p) {
  std::vector<FpSlope> s;
  for (uint32_t r = 0; r < p; ++r)
    if (r != p - 1) s.push_back(FpSlope::of(r));
  s.push_back(FpSlope::inf());
  return s;
}

FpCoverResult fp_verify_cover(const FpSet& a, int64_t k, const std::vector<uint64_t>& dirs) {
  if (k < 1) throw ConfigError("fp_verify_cover with k < 1");
  FpCoverResult res;
  res.k = k;
  const FpSpace& sp = a.space();
  for (uint64_t d : dirs) {
    if (d == 0) {
      if (a.empty())
        res.uncovered.push_back(d);
      else
        res.entries[d] = a.points().front();
      continue;
    }
    bool found = false;
    for (uint64_t base : a) {
      bool all = true;
      uint64_t x = base;
      for (int64_t j = 0; j < k; ++j) {
        if (!a.contains(x)) {
          all = false;
          break;
        }
        x = sp.add(x, d);
      }
      if (all) {
        res.entries[d] = base;
        found = true;
        break;
      }
    }
    if (!found) res.uncovered.push_back(d);
  }
  return res;
}

std::vector<uint64_t> all_nonzero_directions(const FpSpace& space) {
  std::vector<uint64_t> d;
  d.reserve(space.card - 1);
  for (uint64_t i = 1; i < space.card; ++i) d.push_back(i);
  return d;
}

std::vector<uint64_t> full_line_directions(const FpSet& a) {
  const FpSpace& sp = a.space();
  std::vector<uint64_t> reps;
  // Projective representatives: leading nonzero coordinate equal to 1.
  for (uint64_t d = 1; d < sp.card; ++d) {
    auto c = sp.decode(d);
    uint32_t lead = 0;
    while (lead < sp.n && c[lead] == 0) ++lead;
    if (c[lead] != 1) continue;
    reps.push_back(d);
  }
  std::vector<uint64_t> covered;
  for (uint64_t d : reps) {
    for (uint64_t base : a) {
      bool full = true;
      uint64_t x = base;
      for (uint32_t j = 0; j < sp.p; ++j) {
        if (!a.contains(x)) {
          full = false;
          break;
        }
        x = sp.add(x, d);
      }
      if (full) {
        covered.push_back(d);
        break;
      }
    }
  }
  return covered;
}

}  // namespace kakeya
