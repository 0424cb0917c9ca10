#pragma once

// Finite set of integers, stored sorted and duplicate-free.

#include "kakeya/numbers.hpp"

#include <algorithm>
#include <vector>

namespace kakeya {

class IntSet {
 public:
  IntSet() = default;
  explicit IntSet(std::vector<Int> elems) : v_(std::move(elems)) {
    std::sort(v_.begin(), v_.end());
    v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
  }

  static IntSet range(const Int& lo, const Int& hi) {  // {lo, ..., hi}
    std::vector<Int> v;
    for (Int x = lo; x <= hi; ++x) v.push_back(x);
    return IntSet(std::move(v));
  }

  bool contains(const Int& x) const {
    return std::binary_search(v_.begin(), v_.end(), x);
  }
  size_t size() const { return v_.size(); }
  bool empty() const { return v_.empty(); }
  const Int& min() const { return v_.front(); }
  const Int& max() const { return v_.back(); }
  const std::vector<Int>& elements() const { return v_; }

  IntSet translated(const Int& t) const {
    std::vector<Int> v = v_;
    for (auto& x : v) x += t;
    IntSet r;
    r.v_ = std::move(v);  // order preserved
    return r;
  }

  IntSet united(const IntSet& other) const {
    std::vector<Int> v;
    v.reserve(v_.size() + other.v_.size());
    std::merge(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
               std::back_inserter(v));
    v.erase(std::unique(v.begin(), v.end()), v.end());
    IntSet r;
    r.v_ = std::move(v);
    return r;
  }

  friend bool operator==(const IntSet& a, const IntSet& b) { return a.v_ == b.v_; }

  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }

 private:
  std::vector<Int> v_;
};

}  // namespace kakeya
