#include "kakeya/entropy.hpp"

#include "kakeya/parallel.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>

namespace kakeya {

namespace {
using Real = boost::multiprecision::cpp_bin_float_50;

Real ln_real_int(const Int& x) { return boost::multiprecision::log(Real(x)); }

template <class Map>
double entropy_of_pushforward(const Map& push) {
  // Group equal masses: H = sum over distinct w of (#atoms) * w * ln(1/w).
  std::map<Rat, int64_t> groups;
  Rat total = 0;
  for (const auto& [value, w] : push) {
    if (w <= 0) throw ConfigError("distribution with non-positive mass");
    ++groups[w];
    total += w;
  }
  if (total != 1) throw ConfigError("distribution masses must sum to 1");
  Real h = 0;
  for (const auto& [w, count] : groups) {
    const Int num = boost::multiprecision::numerator(w);
    const Int den = boost::multiprecision::denominator(w);
    Real lw = ln_real_int(num) - ln_real_int(den);
    h -= Real(count) * Real(num) / Real(den) * lw;
  }
  return h.convert_to<double>();
}
}  // namespace

double entropy_nats(const std::vector<Rat>& weights) {
  std::map<int, Rat> fake;
  int i = 0;
  for (const Rat& w : weights) fake[i++] = w;
  return entropy_of_pushforward(fake);
}

void JointZ::check() const {
  Rat total = 0;
  for (const auto& [xy, w] : mass) {
    if (w <= 0) throw ConfigError("JointZ with non-positive mass");
    total += w;
  }
  if (total != 1) throw ConfigError("JointZ masses must sum to 1");
}

std::map<Rat, Rat> JointZ::project(const Slope& r) const {
  std::map<Rat, Rat> push;
  for (const auto& [xy, w] : mass) {
    Rat v = r.is_infinity() ? Rat(xy.second) : Rat(xy.first) + r.value() * Rat(xy.second);
    push[v] += w;
  }
  return push;
}

double JointZ::projection_entropy(const Slope& r) const {
  return entropy_of_pushforward(project(r));
}

void JointFp::check() const {
  Rat total = 0;
  for (const auto& [xy, w] : mass) {
    if (xy.first >= space.card || xy.second >= space.card)
      throw ConfigError("JointFp atom out of range");
    if (w <= 0) throw ConfigError("JointFp with non-positive mass");
    total += w;
  }
  if (total != 1) throw ConfigError("JointFp masses must sum to 1");
}

std::map<uint64_t, Rat> JointFp::project(const FpSlope& r) const {
  std::map<uint64_t, Rat> push;
  for (const auto& [xy, w] : mass) {
    uint64_t v = r.infinite ? xy.second : space.add(xy.first, space.scale(r.r, xy.second));
    push[v] += w;
  }
  return push;
}

double JointFp::projection_entropy(const FpSlope& r) const {
  return entropy_of_pushforward(project(r));
}

namespace {
template <class Joint, class SlopeT>
EntropyGap gap_impl(const Joint& j, const std::vector<SlopeT>& slopes, double h_diff) {
  if (slopes.empty()) throw ConfigError("entropy_gap with an empty slope list");
  EntropyGap g;
  g.h_difference = h_diff;
  g.entropies.resize(slopes.size());
  parallel_for(slopes.size(),
               [&](size_t i) { g.entropies[i] = j.projection_entropy(slopes[i]); });
  g.argmax = 0;
  for (size_t i = 1; i < g.entropies.size(); ++i)
    if (g.entropies[i] > g.entropies[g.argmax]) g.argmax = i;
  g.sup = g.entropies[g.argmax];
  if (g.sup > 0) {
    g.ratio = g.h_difference / g.sup;
  } else if (g.h_difference > 0) {
    g.infinite = true;
    g.ratio = std::numeric_limits<double>::infinity();
  } else {
    g.ratio = 0.0;
  }
  return g;
}
}  // namespace

EntropyGap entropy_gap(const JointZ& j, const std::vector<Slope>& slopes) {
  for (const auto& r : slopes)
    if (r.is_minus_one()) throw ConfigError("entropy_gap slope list must exclude -1");
  return gap_impl(j, slopes, j.projection_entropy(Slope(Int(-1))));
}

EntropyGap entropy_gap(const JointFp& j, const std::vector<FpSlope>& slopes) {
  for (const auto& r : slopes)
    if (!r.infinite && r.r == j.space.p - 1)
      throw ConfigError("entropy_gap slope list must exclude -1");
  FpSlope minus_one = FpSlope::of(j.space.p - 1);
  return gap_impl(j, slopes, j.projection_entropy(minus_one));
}

JointFp mt_joint(uint32_t p, uint64_t cap) {
  FpSpace sp(p, 2);
  if (uint64_t(p) * p * p > cap) throw InstanceTooLarge("mt_joint: p^3 exceeds the cap");
  JointFp j;
  j.space = sp;
  const Rat unit(1, int_pow(Int(p), 3));
  for (uint32_t a = 0; a < p; ++a)
    for (uint32_t b = 0; b < p; ++b)
      for (uint32_t bp = 0; bp < p; ++bp) {
        uint64_t x = sp.encode({(a + b) % p, static_cast<uint32_t>((uint64_t(a) * b) % p)});
        uint64_t y = sp.encode({(a + bp) % p, static_cast<uint32_t>((uint64_t(a) * bp) % p)});
        j.mass[{x, y}] += unit;
      }
  return j;
}

MtSweep mt_sweep(uint32_t p) {
  JointFp j = mt_joint(p);
  MtSweep s{};
  s.gap = entropy_gap(j, fp_slopes_excluding_minus_one(p));
  s.h_difference = s.gap.h_difference;
  const double lp = std::log(double(p));
  s.closed_form = (2.0 - 1.0 / p) * lp;
  s.sup_bound = 2.0 * lp - std::log(2.0) + 5.0 * lp / p;
  return s;
}

namespace {
Int factorial(const Int& n) {
  Int r = 1;
  for (Int i = 2; i <= n; ++i) r *= i;
  return r;
}
}  // namespace

TypicalCount typical_logcount(const std::vector<Rat>& weights, const Int& n) {
  if (n < 1) throw ConfigError("typical_logcount with n < 1");
  Rat total = 0;
  Int denom_prod = 1;
  std::vector<Int> counts;
  for (const Rat& w : weights) {
    if (w <= 0) throw ConfigError("typical_logcount with non-positive mass");
    Rat c = w * Rat(n);
    if (boost::multiprecision::denominator(c) != 1)
      throw ConfigError("typical_logcount: n * p_z is not integral for some atom");
    counts.push_back(boost::multiprecision::numerator(c));
    total += w;
  }
  if (total != 1) throw ConfigError("typical_logcount weights must sum to 1");

  Int multinomial = factorial(n);
  for (const Int& c : counts) multinomial /= factorial(c);

  TypicalCount t{};
  t.log_count_over_n = ln_int(multinomial) / static_cast<double>(to_i64(n));
  t.entropy = entropy_nats(weights);
  t.gap = t.entropy - t.log_count_over_n;
  return t;
}

TypicalCount typical_logcount(const JointFp& j, const FpSlope& r, const Int& n) {
  std::vector<Rat> w;
  for (const auto& [v, m] : j.project(r)) w.push_back(m);
  return typical_logcount(w, n);
}

TypicalCount typical_logcount(const JointZ& j, const Slope& r, const Int& n) {
  std::vector<Rat> w;
  for (const auto& [v, m] : j.project(r)) w.push_back(m);
  return typical_logcount(w, n);
}

CoverRv cover_to_rv(const IntSet& a, const CoverResult& cert, const std::vector<Slope>& slopes,
                    const Int& q_step, const Int& m_step, int64_t n_diffs) {
  if (q_step < 1 || m_step < 1) throw ConfigError("cover_to_rv needs Q, M >= 1");
  const Int k = 2 * m_step * q_step;
  if (cert.k != k)
    throw ConfigError("cover_to_rv: certificate length must equal k = 2MQ = " + k.str());
  if (n_diffs < 1) throw ConfigError("cover_to_rv with N < 1");

  // Validate the slopes and name the minimal admissible parameters on failure.
  for (const Slope& r : slopes) {
    if (r.is_minus_one()) throw ConfigError("cover_to_rv: slope -1 is excluded");
    if (r.is_infinity()) {
      if ((m_step + 1) * q_step > k - 1)
        throw ConfigError("cover_to_rv: slope inf requires (M+1)Q <= k-1; minimal M = 2");
      continue;
    }
    const Int num = r.numerator(), den = r.denominator();
    const Int s = num + den;  // Q r/(1+r) = Q num/(num+den)
    if (s == 0) throw ConfigError("cover_to_rv: slope -1 is excluded");
    const Int abs_s = s < 0 ? Int(-s) : s;
    if (q_step % abs_s != 0) {
      throw ConfigError("cover_to_rv: Q r/(1+r) not integral for r = " + r.str() +
                        "; minimal Q = " + abs_s.str());
    }
    const Int shift = q_step * num / s;
    const Int abs_shift = shift < 0 ? Int(-shift) : shift;
    if (abs_shift >= q_step * m_step) {
      Int min_m = abs_shift / q_step + 1;
      throw ConfigError("cover_to_rv: |Q r/(1+r)| >= QM for r = " + r.str() +
                        "; minimal M = " + min_m.str());
    }
  }

  CoverRv res;
  const Rat unit(1, Int(n_diffs));
  for (Int d = 1; d <= n_diffs; ++d) {
    auto it = cert.entries.find(d);
    if (it == cert.entries.end())
      throw ConfigError("cover_to_rv: certificate misses d = " + d.str());
    const Int base = it->second;
    Int x_val = base + m_step * q_step * d;
    Int y_val = base + (m_step + 1) * q_step * d;
    res.joint.mass[{x_val, y_val}] += unit;
  }
  res.joint.check();
  res.atoms = static_cast<int64_t>(res.joint.mass.size());

  // X - Y must be exactly uniform on {-Q, -2Q, ..., -NQ}.
  auto diff = res.joint.project(Slope(Int(-1)));
  res.diff_uniform_ok = static_cast<int64_t>(diff.size()) == n_diffs;
  for (const auto& [v, w] : diff) {
    if (w != unit) res.diff_uniform_ok = false;
    Rat quotient = v / Rat(q_step);
    if (boost::multiprecision::denominator(quotient) != 1) {
      res.diff_uniform_ok = false;
      continue;
    }
    Int steps = -boost::multiprecision::numerator(quotient);
    if (steps < 1 || steps > n_diffs) res.diff_uniform_ok = false;
  }

  // Support inclusion: X + rY lands in (1+r)·A.
  res.support_ok = true;
  for (const Slope& r : slopes) {
    for (const auto& [xy, w] : res.joint.mass) {
      if (r.is_infinity()) {
        if (!a.contains(xy.second)) res.support_ok = false;
        continue;
      }
      Rat v = Rat(xy.first) + r.value() * Rat(xy.second);
      Rat scaled = v / (Rat(1) + r.value());
      if (boost::multiprecision::denominator(scaled) != 1 ||
          !a.contains(boost::multiprecision::numerator(scaled)))
        res.support_ok = false;
    }
  }
  return res;
}

KatzTao katz_tao_epsilon() {
  auto f = [](double a) { return a * a * a - 4.0 * a + 2.0; };
  double lo = 1.0, hi = 2.0;  // f(1) = -1 < 0 < 2 = f(2)
  while (hi - lo > 1e-12) {
    double mid = 0.5 * (lo + hi);
    if (f(mid) < 0)
      lo = mid;
    else
      hi = mid;
  }
  KatzTao kt{};
  kt.alpha = 0.5 * (lo + hi);
  kt.epsilon = kt.alpha - 1.0;
  kt.residual = std::fabs(f(kt.alpha));
  return kt;
}

}  // namespace kakeya
