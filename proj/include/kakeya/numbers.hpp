#pragma once

// Exact arithmetic used throughout the library. All set elements, slopes,
// probabilities and thresholds are arbitrary-precision integers or rationals;
// floating point appears only in final entropy/exponent reductions.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace kakeya {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using VecInt = std::vector<Int>;

// Thrown when an instance exceeds a configured enumeration cap.
struct InstanceTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown on invalid parameters (bad slope lists, non-prime p, ...).
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int floor_mod(const Int& a, const Int& b) { return a - floor_div(a, b) * b; }

inline Int rat_floor(const Rat& r) {
  return floor_div(boost::multiprecision::numerator(r),
                   boost::multiprecision::denominator(r));
}

// Fractional part {t} = t - floor(t), always in [0,1).
inline Rat rat_frac(const Rat& r) { return r - Rat(rat_floor(r)); }

inline Int int_pow(Int base, unsigned exp) {
  Int r = 1;
  while (exp) {
    if (exp & 1u) r *= base;
    base *= base;
    exp >>= 1u;
  }
  return r;
}

// Largest m with m^n <= x (x >= 0).
Int nth_root_floor(const Int& x, unsigned n);

inline int64_t to_i64(const Int& x) {
  if (x > std::numeric_limits<int64_t>::max() || x < std::numeric_limits<int64_t>::min())
    throw InstanceTooLarge("integer does not fit in 64 bits: " + x.str());
  return static_cast<int64_t>(x);
}

// Natural log of a positive rational / integer, evaluated in 50-digit
// floats and rounded to double. Relative error is far below 1e-12.
double ln_rat(const Rat& x);
double ln_int(const Int& x);

// x * ln(y) for positive rationals, same precision contract.
double mul_ln(const Rat& x, const Rat& y);

std::string rat_to_string(const Rat& r);  // "num/den", or plain integer
Rat rat_from_string(const std::string& s);

// Formats a double with 12 significant digits (the report convention).
std::string fmt12(double v);

}  // namespace kakeya
