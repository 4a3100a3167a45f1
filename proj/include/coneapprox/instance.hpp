/**
 * @file instance.hpp
 * @brief Finite biobjective instances, Pareto dominance and efficient sets.
 */

#ifndef CONEAPPROX_INSTANCE_HPP
#define CONEAPPROX_INSTANCE_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "common.hpp"
#include "cone.hpp"

namespace coneapprox {

enum class Sense { kMin, kMax };

struct ObjectiveVector {
  double f1 = 0.0;
  double f2 = 0.0;

  constexpr Vector2 vec() const noexcept { return {f1, f2}; }
  friend constexpr bool operator==(ObjectiveVector, ObjectiveVector) = default;
};

struct Solution {
  std::string id;
  ObjectiveVector objectives;
};

using IdSet = std::set<std::string>;

/**
 * @brief An ordered list of labeled solutions with a common optimization sense.
 *
 * Construction never throws on bad data; `validate` reports the problems.
 * Id lookups resolve to the first solution carrying that id.
 */
class Instance {
 public:
  Instance() = default;
  Instance(Sense sense, std::vector<Solution> solutions)
      : sense_(sense), solutions_(std::move(solutions)) {
    for (std::size_t i = 0; i < solutions_.size(); ++i) {
      index_.emplace(solutions_[i].id, i);
    }
  }

  Sense sense() const noexcept { return sense_; }
  const std::vector<Solution>& solutions() const noexcept { return solutions_; }
  std::size_t size() const noexcept { return solutions_.size(); }
  bool empty() const noexcept { return solutions_.empty(); }

  bool contains(const std::string& id) const { return index_.count(id) != 0; }

  std::size_t index_of(const std::string& id) const {
    const auto it = index_.find(id);
    if (it == index_.end()) throw Error(ErrorCode::kUnknownId, "no solution with id '" + id + "'");
    return it->second;
  }

  const Solution& at(const std::string& id) const { return solutions_[index_of(id)]; }
  Vector2 f(std::size_t i) const { return solutions_[i].objectives.vec(); }
  Vector2 f(const std::string& id) const { return f(index_of(id)); }

  IdSet all_ids() const {
    IdSet ids;
    for (const auto& s : solutions_) ids.insert(s.id);
    return ids;
  }

 private:
  Sense sense_ = Sense::kMin;
  std::vector<Solution> solutions_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct Violation {
  enum class Kind { kEmptySet, kEmptyId, kDuplicateId, kNonpositiveObjective, kNonfiniteObjective };

  Kind kind;
  std::string id;
  int component = 0;  // 1 or 2 for objective violations, 0 otherwise

  std::string message() const {
    switch (kind) {
      case Kind::kEmptySet: return "instance has no solutions";
      case Kind::kEmptyId: return "solution #" + id + " has an empty id";
      case Kind::kDuplicateId: return "duplicate id '" + id + "'";
      case Kind::kNonpositiveObjective:
        return "solution '" + id + "': objective component " + std::to_string(component) +
               " is not positive";
      case Kind::kNonfiniteObjective:
        return "solution '" + id + "': objective component " + std::to_string(component) +
               " is not finite";
    }
    return "unknown violation";
  }

  friend bool operator==(const Violation&, const Violation&) = default;
};

inline std::vector<Violation> validate(const Instance& instance) {
  std::vector<Violation> out;
  if (instance.empty()) out.push_back({Violation::Kind::kEmptySet, "", 0});
  std::set<std::string> seen;
  const auto& sols = instance.solutions();
  for (std::size_t i = 0; i < sols.size(); ++i) {
    const auto& s = sols[i];
    if (s.id.empty()) out.push_back({Violation::Kind::kEmptyId, std::to_string(i), 0});
    if (!seen.insert(s.id).second) out.push_back({Violation::Kind::kDuplicateId, s.id, 0});
    const double comps[2] = {s.objectives.f1, s.objectives.f2};
    for (int c = 0; c < 2; ++c) {
      if (!std::isfinite(comps[c])) {
        out.push_back({Violation::Kind::kNonfiniteObjective, s.id, c + 1});
      } else if (comps[c] <= 0.0) {
        out.push_back({Violation::Kind::kNonpositiveObjective, s.id, c + 1});
      }
    }
  }
  return out;
}

/// Both components within the value tolerance.
inline bool tol_equal(Vector2 a, Vector2 b, const Tolerance& tol = {}) {
  return std::abs(a.c1 - b.c1) <= tol.value && std::abs(a.c2 - b.c2) <= tol.value;
}

/// a ≦ b componentwise, relaxed by the value tolerance.
inline bool weakly_leq(Vector2 a, Vector2 b, const Tolerance& tol = {}) {
  return a.c1 <= b.c1 + tol.value && a.c2 <= b.c2 + tol.value;
}

/// Images mapped so that "better" always means componentwise smaller.
inline Vector2 oriented(Sense sense, Vector2 y) {
  return sense == Sense::kMin ? y : Vector2{-y.c1, -y.c2};
}

inline bool dominates(const Instance& instance, const std::string& a, const std::string& b,
                      const Tolerance& tol = {}) {
  const Vector2 fa = oriented(instance.sense(), instance.f(a));
  const Vector2 fb = oriented(instance.sense(), instance.f(b));
  return !tol_equal(fa, fb, tol) && weakly_leq(fa, fb, tol);
}

namespace detail {

/**
 * Marks undominated points of `pts` (minimization) in O(n log n).
 *
 * q dominates p iff q ≤ p + τ componentwise and q, p are not τ-equal. After
 * sorting by the first component, every candidate q lies in a prefix; either
 * f₁(q) < f₁(p) − τ (so q is never τ-equal to p) and f₂(q) ≤ f₂(p) + τ, or
 * f₂(q) < f₂(p) − τ. Both conditions are prefix-minimum queries.
 */
inline std::vector<bool> undominated_mask(const std::vector<Vector2>& pts, const Tolerance& tol) {
  const std::size_t n = pts.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return pts[a].c1 < pts[b].c1 || (pts[a].c1 == pts[b].c1 && pts[a].c2 < pts[b].c2);
  });
  std::vector<double> firsts(n);
  std::vector<double> prefix_min(n);
  double running = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n; ++k) {
    firsts[k] = pts[order[k]].c1;
    running = std::min(running, pts[order[k]].c2);
    prefix_min[k] = running;
  }
  auto min_f2_below = [&](double bound, bool inclusive) {
    const auto it = inclusive ? std::upper_bound(firsts.begin(), firsts.end(), bound)
                              : std::lower_bound(firsts.begin(), firsts.end(), bound);
    const auto count = static_cast<std::size_t>(it - firsts.begin());
    return count == 0 ? std::numeric_limits<double>::infinity() : prefix_min[count - 1];
  };
  std::vector<bool> mask(n, true);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector2 p = pts[i];
    const bool strictly_left = min_f2_below(p.c1 - tol.value, false) <= p.c2 + tol.value;
    const bool strictly_below = min_f2_below(p.c1 + tol.value, true) < p.c2 - tol.value;
    mask[i] = !(strictly_left || strictly_below);
  }
  return mask;
}

inline IdSet ids_from_mask(const Instance& instance, const std::vector<bool>& mask) {
  IdSet ids;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) ids.insert(instance.solutions()[i].id);
  }
  return ids;
}

}  // namespace detail

/// Ids of solutions not dominated by any other solution.
inline IdSet efficient_set(const Instance& instance, const Tolerance& tol = {}) {
  std::vector<Vector2> pts;
  pts.reserve(instance.size());
  for (std::size_t i = 0; i < instance.size(); ++i) {
    pts.push_back(oriented(instance.sense(), instance.f(i)));
  }
  return detail::ids_from_mask(instance, detail::undominated_mask(pts, tol));
}

/// The instance with every image replaced by T(f(x)); minimization only.
inline Instance transform_instance(const Instance& instance, const ConeParams& params) {
  if (instance.sense() != Sense::kMin) {
    throw Error(ErrorCode::kUnsupportedSense, "transformed instances are defined for minimization");
  }
  std::vector<Solution> out;
  out.reserve(instance.size());
  for (const auto& s : instance.solutions()) {
    const Vector2 t = transform(params, s.objectives.vec());
    out.push_back({s.id, {t.c1, t.c2}});
  }
  return Instance(Sense::kMin, std::move(out));
}

/// True iff solution j dominates solution i with respect to the cone order.
inline bool cone_dominates(const Instance& instance, const ConeParams& params, std::size_t j,
                           std::size_t i, const Tolerance& tol = {}) {
  const Vector2 fi = instance.f(i);
  const Vector2 fj = instance.f(j);
  if (tol_equal(fi, fj, tol)) return false;
  const Vector2 d = instance.sense() == Sense::kMin ? fi - fj : fj - fi;
  // Equal images under T do not dominate; only reachable when γ = π.
  const Vector2 t = transform(params, d);
  if (std::abs(t.c1) <= tol.value && std::abs(t.c2) <= tol.value) return false;
  return cone_contains(params, d, tol);
}

/// Solutions optimal with respect to the cone order (min) or its reverse (max).
inline IdSet cone_efficient_set(const Instance& instance, const ConeParams& params,
                                const Tolerance& tol = {}) {
  const std::size_t n = instance.size();
  std::vector<bool> mask(n, true);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n && mask[i]; ++j) {
      if (j != i && cone_dominates(instance, params, j, i, tol)) mask[i] = false;
    }
  }
  return detail::ids_from_mask(instance, mask);
}

}  // namespace coneapprox

#endif  // CONEAPPROX_INSTANCE_HPP
