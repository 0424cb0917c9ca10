#include "kakeya/numbers.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cstdio>

namespace kakeya {

namespace {
using Real = boost::multiprecision::cpp_bin_float_50;

Real to_real(const Int& x) { return Real(x); }

Real ln_real(const Rat& x) {
  if (x <= 0) throw ConfigError("log of non-positive rational");
  const Int num = boost::multiprecision::numerator(x);
  const Int den = boost::multiprecision::denominator(x);
  return boost::multiprecision::log(to_real(num)) - boost::multiprecision::log(to_real(den));
}
}  // namespace

Int nth_root_floor(const Int& x, unsigned n) {
  if (x < 0) throw ConfigError("nth_root_floor of negative value");
  if (n == 0) throw ConfigError("nth_root_floor with n = 0");
  if (x == 0) return 0;
  Int lo = 1, hi = 1;
  while (int_pow(hi, n) <= x) hi <<= 1;
  // invariant: lo^n <= x < hi^n
  while (hi - lo > 1) {
    Int mid = (lo + hi) / 2;
    if (int_pow(mid, n) <= x) lo = mid; else hi = mid;
  }
  return lo;
}

double ln_rat(const Rat& x) { return ln_real(x).convert_to<double>(); }

double ln_int(const Int& x) {
  if (x <= 0) throw ConfigError("log of non-positive integer");
  return boost::multiprecision::log(to_real(x)).convert_to<double>();
}

double mul_ln(const Rat& x, const Rat& y) {
  Real r = Real(boost::multiprecision::numerator(x)) / Real(boost::multiprecision::denominator(x));
  return (r * ln_real(y)).convert_to<double>();
}

std::string rat_to_string(const Rat& r) {
  const Int num = boost::multiprecision::numerator(r);
  const Int den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  Int num(s.substr(0, slash));
  Int den(s.substr(slash + 1));
  if (den == 0) throw ConfigError("rational with zero denominator: " + s);
  if (den < 0) { num = -num; den = -den; }
  return Rat(num, den);
}

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace kakeya
