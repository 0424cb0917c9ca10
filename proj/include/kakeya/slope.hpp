#pragma once

// A projection parameter r in Q ∪ {∞}, kept in lowest terms. The projection
// family is pi_r(A) = {x + r*y}; pi_inf takes second coordinates, and r = -1
// is the difference projection.

#include "kakeya/numbers.hpp"

#include <compare>
#include <string>

namespace kakeya {

class Slope {
 public:
  Slope() : inf_(false), v_(0) {}
  explicit Slope(const Int& n) : inf_(false), v_(n) {}
  Slope(const Int& num, const Int& den) : inf_(false) {
    if (den == 0) throw ConfigError("slope with zero denominator");
    v_ = den < 0 ? Rat(-num, -den) : Rat(num, den);  // cpp_rational reduces the gcd
  }
  explicit Slope(const Rat& r) : inf_(false), v_(r) {}

  static Slope infinity() {
    Slope s;
    s.inf_ = true;
    return s;
  }

  bool is_infinity() const { return inf_; }
  const Rat& value() const {
    if (inf_) throw ConfigError("value() of the infinite slope");
    return v_;
  }
  Int numerator() const { return boost::multiprecision::numerator(value()); }
  Int denominator() const { return boost::multiprecision::denominator(value()); }

  bool is_minus_one() const { return !inf_ && v_ == -1; }
  bool is_integral() const { return !inf_ && denominator() == 1; }

  friend bool operator==(const Slope& a, const Slope& b) {
    if (a.inf_ != b.inf_) return false;
    return a.inf_ || a.v_ == b.v_;
  }
  // Finite slopes ordered by value; infinity sorts last.
  friend bool operator<(const Slope& a, const Slope& b) {
    if (a.inf_) return false;
    if (b.inf_) return true;
    return a.v_ < b.v_;
  }

  std::string str() const { return inf_ ? "inf" : rat_to_string(v_); }

  static Slope parse(const std::string& s) {
    if (s == "inf" || s == "oo" || s == "infinity") return infinity();
    return Slope(rat_from_string(s));
  }

 private:
  bool inf_;
  Rat v_;
};

}  // namespace kakeya
