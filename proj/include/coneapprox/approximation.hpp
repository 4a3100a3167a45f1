/**
 * @file approximation.hpp
 * @brief Multiplicative α-approximation with respect to the Pareto cone or a
 *        cone order, set verification and the exact minimal α of a set.
 *
 * For minimization, x' is α-approximated by x iff f(x) ≤_C α·f(x'); with the
 * transform this reads T(f(x)) ≦ α·T(f(x')). For maximization the roles are
 * mirrored: α·f(x) ≥_C f(x').
 */

#ifndef CONEAPPROX_APPROXIMATION_HPP
#define CONEAPPROX_APPROXIMATION_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "cone.hpp"
#include "instance.hpp"
#include "interval.hpp"

namespace coneapprox {

struct ApproxWitness {
  std::string uncovered;
  std::string best;  // empty when the queried set is empty
  double ratio = std::numeric_limits<double>::infinity();
};

struct ApproxReport {
  bool is_valid = false;
  double alpha_queried = 1.0;
  double min_alpha = std::numeric_limits<double>::infinity();
  std::vector<ApproxWitness> witnesses;
};

namespace detail {

inline Vector2 image(const std::optional<ConeParams>& params, Vector2 y) {
  return params ? transform(*params, y) : y;
}

/// Smallest α for which `s` approximates `x` (ratio form; images are positive).
inline double pair_ratio(Sense sense, Vector2 ts, Vector2 tx) {
  if (sense == Sense::kMin) return std::max(ts.c1 / tx.c1, ts.c2 / tx.c2);
  return std::max(tx.c1 / ts.c1, tx.c2 / ts.c2);
}

inline std::vector<std::size_t> resolve(const Instance& instance, const IdSet& ids) {
  std::vector<std::size_t> out;
  out.reserve(ids.size());
  for (const auto& id : ids) out.push_back(instance.index_of(id));
  return out;
}

struct Coverage {
  double ratio = std::numeric_limits<double>::infinity();
  std::size_t best = 0;
};

inline std::vector<Coverage> best_coverage(const Instance& instance,
                                           const std::vector<std::size_t>& members,
                                           const std::optional<ConeParams>& params) {
  std::vector<Vector2> images(instance.size());
  for (std::size_t i = 0; i < instance.size(); ++i) images[i] = image(params, instance.f(i));
  std::vector<Coverage> out(instance.size());
  for (std::size_t x = 0; x < instance.size(); ++x) {
    for (const std::size_t s : members) {
      const double r = pair_ratio(instance.sense(), images[s], images[x]);
      if (r < out[x].ratio) out[x] = {r, s};
    }
  }
  return out;
}

}  // namespace detail

/// Whether x2 is α-approximated by x (params = none: the Pareto cone).
inline bool is_alpha_approx_pair(const Instance& instance, const std::optional<ConeParams>& params,
                                 const std::string& x, const std::string& x2, double alpha,
                                 const Tolerance& tol = {}) {
  require_alpha(alpha);
  const Vector2 fx = instance.f(x);
  const Vector2 fx2 = instance.f(x2);
  const ConeParams cone = params.value_or(ConeParams::pareto());
  if (instance.sense() == Sense::kMin) return cone_leq(cone, fx, alpha * fx2, tol);
  return cone_leq(cone, fx2, alpha * fx, tol);
}

/**
 * @brief Exact smallest α for which S approximates every solution.
 *
 * max over x of min over s ∈ S of max_i T_i(f(s)) / T_i(f(x)).
 */
inline double min_alpha(const Instance& instance, const IdSet& members,
                        const std::optional<ConeParams>& params = std::nullopt) {
  if (members.empty()) throw Error(ErrorCode::kEmptySet, "min_alpha needs a nonempty set");
  const auto coverage = detail::best_coverage(instance, detail::resolve(instance, members), params);
  double worst = 0.0;
  for (const auto& c : coverage) worst = std::max(worst, c.ratio);
  return worst;
}

/**
 * @brief Checks whether S is an α-approximation and lists uncovered solutions.
 *
 * A solution counts as covered when its best pair ratio is at most α + τ_val,
 * which keeps `is_valid` and `min_alpha` consistent by construction.
 */
inline ApproxReport verify_approx_set(const Instance& instance, const IdSet& members, double alpha,
                                      const std::optional<ConeParams>& params = std::nullopt,
                                      const Tolerance& tol = {}) {
  require_alpha(alpha);
  const auto indices = detail::resolve(instance, members);
  ApproxReport report;
  report.alpha_queried = alpha;
  const auto coverage = detail::best_coverage(instance, indices, params);
  report.min_alpha = instance.empty() ? 1.0 : 0.0;
  for (std::size_t x = 0; x < coverage.size(); ++x) {
    report.min_alpha = std::max(report.min_alpha, coverage[x].ratio);
    if (!(coverage[x].ratio <= alpha + tol.value)) {
      report.witnesses.push_back({instance.solutions()[x].id,
                                  indices.empty() ? "" : instance.solutions()[coverage[x].best].id,
                                  coverage[x].ratio});
    }
  }
  report.is_valid = report.witnesses.empty();
  return report;
}

/// α·(1 + max{q·tan φ, tan φ'/q}) with q = f₁(x')/f₂(x').
inline double lemma2_factor(const ConeParams& params, const ObjectiveVector& x2, double alpha) {
  require_alpha(alpha);
  const double q = x2.f1 / x2.f2;
  const double a = q * std::tan(params.phi().radians());
  const double b = std::tan(params.phi_prime().radians()) / q;
  return alpha * (1.0 + std::max(a, b));
}

/**
 * @brief Rotations at which S fails to be an α-approximation (minimization).
 *
 * For each x the rotations where some s ∈ S covers it form a union of
 * intervals (s covers x iff α·f(x) − f(s) lies in the cone). The result is
 * the union over x of the uncovered remainder; S is an α-approximation for
 * every admissible φ iff it is empty.
 */
inline PhiIntervalSet uncovered_phi_set(const Instance& instance, const IdSet& members,
                                        double alpha, Angle gamma, const Tolerance& tol = {}) {
  require_alpha(alpha);
  if (instance.sense() != Sense::kMin) {
    throw Error(ErrorCode::kUnsupportedSense, "uncovered_phi_set is defined for minimization");
  }
  if (!valid_gamma(gamma, tol)) throw Error(ErrorCode::kInvalidParams, "gamma outside [pi/2, pi]");
  const auto indices = detail::resolve(instance, members);
  const PhiInterval ambient = admissible_range(gamma, tol);
  PhiIntervalSet uncovered(ambient, tol);
  for (std::size_t x = 0; x < instance.size(); ++x) {
    PhiIntervalSet covered(ambient, tol);
    for (const std::size_t s : indices) {
      const Vector2 d = alpha * instance.f(x) - instance.f(s);
      if (tol_equal(d, {0.0, 0.0}, tol)) {
        covered = PhiIntervalSet::full(ambient, tol);
        break;
      }
      covered.add_all(dominating_phi_interval(gamma, d, tol));
      if (covered.is_full()) break;
    }
    if (!covered.is_full()) uncovered.add_all(covered.complement());
  }
  return uncovered;
}

}  // namespace coneapprox

#endif  // CONEAPPROX_APPROXIMATION_HPP
