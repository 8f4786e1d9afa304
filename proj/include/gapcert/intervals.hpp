#pragma once

// Closed integer intervals [lo, hi] and normalized finite unions of them.
//
// A basic_interval_set keeps its parts sorted by lo and pairwise separated
// (parts[i].hi + 1 < parts[i+1].lo). Overlapping or adjacent inputs are
// merged on construction, so equal membership always means equal parts.

#include "gapcert/integer.hpp"

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace gapcert {

template <class T>
class basic_interval {
 public:
  basic_interval(T lo, T hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (hi_ < lo_) throw std::invalid_argument("interval: lo must not exceed hi");
  }

  const T& lo() const noexcept { return lo_; }
  const T& hi() const noexcept { return hi_; }

  bool contains(const T& x) const { return lo_ <= x && x <= hi_; }

  friend bool operator==(const basic_interval&, const basic_interval&) = default;

 private:
  T lo_;
  T hi_;
};

template <class T>
class basic_interval_set {
 public:
  using interval_type = basic_interval<T>;

  basic_interval_set() = default;
  basic_interval_set(std::initializer_list<interval_type> parts)
      : parts_(parts.begin(), parts.end()) {
    normalize();
  }
  explicit basic_interval_set(std::vector<interval_type> parts) : parts_(std::move(parts)) {
    normalize();
  }

  const std::vector<interval_type>& parts() const noexcept { return parts_; }
  bool empty() const noexcept { return parts_.empty(); }
  std::size_t size() const noexcept { return parts_.size(); }

  /// Number of integers in the set.
  T cardinality() const {
    T total = 0;
    for (const auto& p : parts_) total += p.hi() - p.lo() + 1;
    return total;
  }

  friend bool operator==(const basic_interval_set&, const basic_interval_set&) = default;

 private:
  void normalize() {
    std::sort(parts_.begin(), parts_.end(),
              [](const interval_type& a, const interval_type& b) { return a.lo() < b.lo(); });
    std::vector<interval_type> merged;
    merged.reserve(parts_.size());
    for (auto& p : parts_) {
      if (!merged.empty() && p.lo() <= merged.back().hi() + 1) {
        if (merged.back().hi() < p.hi()) merged.back() = interval_type(merged.back().lo(), p.hi());
      } else {
        merged.push_back(std::move(p));
      }
    }
    parts_ = std::move(merged);
  }

  std::vector<interval_type> parts_;
};

template <class T>
basic_interval_set<T> unite(const basic_interval_set<T>& a, const basic_interval_set<T>& b) {
  std::vector<basic_interval<T>> all(a.parts());
  all.insert(all.end(), b.parts().begin(), b.parts().end());
  return basic_interval_set<T>(std::move(all));
}

template <class T>
basic_interval_set<T> operator|(const basic_interval_set<T>& a, const basic_interval_set<T>& b) {
  return unite(a, b);
}

/// bound \ s
template <class T>
basic_interval_set<T> complement_within(const basic_interval_set<T>& s, const basic_interval<T>& bound) {
  std::vector<basic_interval<T>> out;
  T cursor = bound.lo();
  for (const auto& p : s.parts()) {
    if (p.hi() < cursor) continue;
    if (bound.hi() < p.lo()) break;
    if (cursor < p.lo()) out.emplace_back(cursor, p.lo() - 1);
    cursor = p.hi() + 1;
    if (bound.hi() < cursor) break;
  }
  if (cursor <= bound.hi()) out.emplace_back(cursor, bound.hi());
  return basic_interval_set<T>(std::move(out));
}

template <class T>
basic_interval_set<T> intersect(const basic_interval_set<T>& a, const basic_interval_set<T>& b) {
  std::vector<basic_interval<T>> out;
  std::size_t i = 0, j = 0;
  const auto& pa = a.parts();
  const auto& pb = b.parts();
  while (i < pa.size() && j < pb.size()) {
    const T& lo = std::max(pa[i].lo(), pb[j].lo());
    const T& hi = std::min(pa[i].hi(), pb[j].hi());
    if (lo <= hi) out.emplace_back(lo, hi);
    if (pa[i].hi() < pb[j].hi()) ++i; else ++j;
  }
  return basic_interval_set<T>(std::move(out));
}

/// Membership by binary search over the sorted parts.
template <class T>
bool contains(const basic_interval_set<T>& s, const T& g) {
  const auto& parts = s.parts();
  auto it = std::upper_bound(parts.begin(), parts.end(), g,
                             [](const T& x, const basic_interval<T>& p) { return x < p.lo(); });
  if (it == parts.begin()) return false;
  return g <= std::prev(it)->hi();
}

using Interval = basic_interval<Integer>;
using IntervalSet = basic_interval_set<Integer>;

}  // namespace gapcert
