/**
 * @file interval.hpp
 * @brief Finite unions of closed φ-intervals inside an admissible range.
 */

#ifndef CONEAPPROX_INTERVAL_HPP
#define CONEAPPROX_INTERVAL_HPP

#include <algorithm>
#include <vector>

#include "common.hpp"

namespace coneapprox {

struct PhiInterval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const noexcept { return hi - lo; }
  bool contains(double phi) const noexcept { return lo <= phi && phi <= hi; }
  bool operator==(const PhiInterval&) const = default;
};

/**
 * @brief Sorted, pairwise disjoint closed intervals clipped to an ambient range.
 *
 * Intervals closer than `Tolerance::angle` are merged on insertion, so two
 * stored intervals are always separated by more than that tolerance.
 */
class PhiIntervalSet {
 public:
  explicit PhiIntervalSet(PhiInterval ambient, Tolerance tol = {})
      : ambient_(ambient), tol_(tol) {}

  static PhiIntervalSet full(PhiInterval ambient, Tolerance tol = {}) {
    PhiIntervalSet set(ambient, tol);
    set.add(ambient);
    return set;
  }

  const PhiInterval& ambient() const noexcept { return ambient_; }
  const std::vector<PhiInterval>& intervals() const noexcept { return intervals_; }
  const Tolerance& tolerance() const noexcept { return tol_; }

  bool empty() const noexcept { return intervals_.empty(); }

  bool is_full() const noexcept {
    return intervals_.size() == 1 &&
           intervals_.front().lo <= ambient_.lo + tol_.angle &&
           intervals_.front().hi >= ambient_.hi - tol_.angle;
  }

  /// `slack` widens every interval on both sides before testing membership.
  bool contains(double phi, double slack = 0.0) const noexcept {
    return std::any_of(intervals_.begin(), intervals_.end(), [&](const PhiInterval& iv) {
      return iv.lo - slack <= phi && phi <= iv.hi + slack;
    });
  }

  double measure() const noexcept {
    double total = 0.0;
    for (const auto& iv : intervals_) total += iv.length();
    return total;
  }

  double longest() const noexcept {
    double best = 0.0;
    for (const auto& iv : intervals_) best = std::max(best, iv.length());
    return best;
  }

  /// Inserts `iv` clipped to the ambient range; empty intersections are dropped.
  void add(PhiInterval iv) {
    iv.lo = std::max(iv.lo, ambient_.lo);
    iv.hi = std::min(iv.hi, ambient_.hi);
    if (iv.lo > iv.hi) return;
    intervals_.push_back(iv);
    normalize();
  }

  void add_all(const PhiIntervalSet& other) {
    for (const auto& iv : other.intervals_) {
      PhiInterval clipped{std::max(iv.lo, ambient_.lo), std::min(iv.hi, ambient_.hi)};
      if (clipped.lo <= clipped.hi) intervals_.push_back(clipped);
    }
    normalize();
  }

  /**
   * @brief Ambient range minus this set.
   *
   * Interior gaps are open in exact arithmetic; they are reported as closed
   * intervals spanning the gap. End pieces keep the ambient endpoint.
   */
  PhiIntervalSet complement() const {
    PhiIntervalSet out(ambient_, tol_);
    if (intervals_.empty()) {
      out.intervals_.push_back(ambient_);
      return out;
    }
    if (intervals_.front().lo > ambient_.lo) {
      out.intervals_.push_back({ambient_.lo, intervals_.front().lo});
    }
    for (std::size_t i = 0; i + 1 < intervals_.size(); ++i) {
      out.intervals_.push_back({intervals_[i].hi, intervals_[i + 1].lo});
    }
    if (intervals_.back().hi < ambient_.hi) {
      out.intervals_.push_back({intervals_.back().hi, ambient_.hi});
    }
    return out;
  }

 private:
  void normalize() {
    std::sort(intervals_.begin(), intervals_.end(),
              [](const PhiInterval& a, const PhiInterval& b) {
                return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
              });
    std::vector<PhiInterval> merged;
    merged.reserve(intervals_.size());
    for (const auto& iv : intervals_) {
      if (!merged.empty() && iv.lo <= merged.back().hi + tol_.angle) {
        merged.back().hi = std::max(merged.back().hi, iv.hi);
      } else {
        merged.push_back(iv);
      }
    }
    intervals_ = std::move(merged);
  }

  PhiInterval ambient_;
  Tolerance tol_;
  std::vector<PhiInterval> intervals_;
};

}  // namespace coneapprox

#endif  // CONEAPPROX_INTERVAL_HPP
