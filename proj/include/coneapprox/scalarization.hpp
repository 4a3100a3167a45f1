/**
 * @file scalarization.hpp
 * @brief Weighted sum and weighted max-ordering scalarizations, the balanced
 *        max-ordering weights of a cone, and the approximating set X_Q.
 *
 * For a cone (γ, φ) with 0 < φ < γ − π/2 the weights
 *
 *     w₁ = √sin φ / √cos φ' + √cos φ / √sin φ'
 *     w₂ = √sin φ' / √cos φ + √cos φ' / √sin φ
 *
 * balance the two transformed objectives of any solution whose ratio
 * f₁/f₂ equals √tan φ' / √tan φ. X_Q collects, for every realized ratio, one
 * (α-approximately) optimal solution of the max-ordering scalarization of the
 * transformed instance with these weights.
 */

#ifndef CONEAPPROX_SCALARIZATION_HPP
#define CONEAPPROX_SCALARIZATION_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <vector>

#include "cone.hpp"
#include "instance.hpp"

namespace coneapprox {

struct MaxOrderingWeights {
  double w1 = 1.0;
  double w2 = 1.0;
};

namespace detail {

inline void require_positive_weights(double w1, double w2) {
  if (!(w1 > 0.0) || !(w2 > 0.0)) {
    throw Error(ErrorCode::kNonpositiveWeight, "weights must be strictly positive");
  }
}

inline void require_min(const Instance& instance) {
  if (instance.sense() != Sense::kMin) {
    throw Error(ErrorCode::kUnsupportedSense, "operation is defined for minimization");
  }
}

inline double max_ordering_value(const MaxOrderingWeights& w, Vector2 y) {
  return std::max(w.w1 * y.c1, w.w2 * y.c2);
}

template <typename Score>
IdSet ids_within(const Instance& instance, Score score, double threshold) {
  IdSet out;
  for (std::size_t i = 0; i < instance.size(); ++i) {
    if (score(i) <= threshold) out.insert(instance.solutions()[i].id);
  }
  return out;
}

}  // namespace detail

/// Arg-optimal set of w₁f₁ + w₂f₂ (argmin for minimization, argmax for maximization).
inline IdSet weighted_sum_optima(const Instance& instance, double w1, double w2,
                                 const Tolerance& tol = {}) {
  detail::require_positive_weights(w1, w2);
  const double sign = instance.sense() == Sense::kMin ? 1.0 : -1.0;
  auto score = [&](std::size_t i) {
    const Vector2 y = instance.f(i);
    return sign * (w1 * y.c1 + w2 * y.c2);
  };
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < instance.size(); ++i) best = std::min(best, score(i));
  return detail::ids_within(instance, score, best + tol.value);
}

/// Argmin set of max{w₁f₁, w₂f₂}.
inline IdSet max_ordering_optima(const Instance& instance, const MaxOrderingWeights& w,
                                 const Tolerance& tol = {}) {
  detail::require_min(instance);
  detail::require_positive_weights(w.w1, w.w2);
  auto score = [&](std::size_t i) { return detail::max_ordering_value(w, instance.f(i)); };
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < instance.size(); ++i) best = std::min(best, score(i));
  return detail::ids_within(instance, score, best + tol.value);
}

/// Solutions whose max-ordering value is within factor α of the optimum.
inline IdSet alpha_approximate_for_max_ordering(const Instance& instance,
                                                const MaxOrderingWeights& w, double alpha,
                                                const Tolerance& tol = {}) {
  require_alpha(alpha);
  detail::require_min(instance);
  detail::require_positive_weights(w.w1, w.w2);
  auto score = [&](std::size_t i) { return detail::max_ordering_value(w, instance.f(i)); };
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < instance.size(); ++i) best = std::min(best, score(i));
  return detail::ids_within(instance, score, alpha * best + tol.value);
}

/// Balanced max-ordering weights for a cone with strictly interior rotation.
inline MaxOrderingWeights theorem_weights(const ConeParams& params, const Tolerance& tol = {}) {
  if (params.phi().radians() < tol.angle || params.phi_prime().radians() < tol.angle) {
    throw Error(ErrorCode::kDegeneratePhi, "weights need 0 < phi < gamma - pi/2");
  }
  const double sp = std::sqrt(params.sin_phi());
  const double cp = std::sqrt(params.cos_phi());
  const double spp = std::sqrt(params.sin_phi_prime());
  const double cpp = std::sqrt(params.cos_phi_prime());
  return {sp / cpp + cp / spp, spp / cp + cpp / sp};
}

namespace detail {

/// log of √tan φ' / √tan φ; strictly decreasing in φ on (0, span).
inline double log_ratio_at(double gamma, double phi) {
  const double phi_prime = gamma - kHalfPi - phi;
  return 0.5 * (std::log(std::tan(phi_prime)) - std::log(std::tan(phi)));
}

inline double phi_for_ratio_bisection(double gamma, double q) {
  const double target = std::log(q);
  double lo = 0.0;
  double hi = gamma - kHalfPi;
  for (int iter = 0; iter < 200 && hi - lo > 0.0; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (log_ratio_at(gamma, mid) > target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace detail

inline constexpr double kSteepTangent = 1e6;

/**
 * @brief Rotation matched to an image ratio q = f₁/f₂.
 *
 * Returns φ with √tan φ' / √tan φ = q via
 * tan φ = (s·tan γ + √(1 + s²·tan²γ)) / q, s = (q + 1/q)/2. The numerator is
 * evaluated as 1 / (√(1 + s²tan²γ) − s·tan γ), which is the same quantity
 * without cancellation for tan γ < 0. γ = π uses tan γ = 0; very steep
 * tan γ (γ just above π/2) falls back to bisection on the defining property.
 */
inline Angle phi_for_ratio(Angle gamma, double q, const Tolerance& tol = {}) {
  if (!(q > 0.0) || !std::isfinite(q)) {
    throw Error(ErrorCode::kInvalidRatio, "ratio must be positive and finite");
  }
  if (!valid_gamma(gamma, tol) || is_gamma_half_pi(gamma, tol)) {
    throw Error(ErrorCode::kInvalidParams, "phi_for_ratio needs pi/2 < gamma <= pi");
  }
  const double g = is_gamma_pi(gamma, tol) ? kPi : gamma.radians();
  const double tan_gamma = is_gamma_pi(gamma, tol) ? 0.0 : std::tan(g);
  if (std::abs(tan_gamma) > kSteepTangent) {
    return Angle(detail::phi_for_ratio_bisection(g, q));
  }
  const double s = 0.5 * (q + 1.0 / q);
  const double st = s * tan_gamma;
  const double numerator = 1.0 / (std::sqrt(1.0 + st * st) - st);
  return Angle(std::atan(numerator / q));
}

/**
 * @brief Builds X_Q for inner angle γ and scalarization accuracy α.
 *
 * Only the rotations matched to realized ratios f₁(x')/f₂(x') are needed: each
 * x' is covered through its own matched rotation. Among the α-approximate
 * solutions of each scalarization the lexicographically smallest id is taken.
 */
inline IdSet build_xq(const Instance& instance, Angle gamma, double alpha,
                      const Tolerance& tol = {}) {
  detail::require_min(instance);
  require_alpha(alpha);
  std::set<double> ratios;
  for (std::size_t i = 0; i < instance.size(); ++i) {
    const Vector2 y = instance.f(i);
    ratios.insert(y.c1 / y.c2);
  }
  IdSet out;
  for (const double q : ratios) {
    const Angle phi = phi_for_ratio(gamma, q, tol);
    const ConeParams params(gamma, phi, tol);
    const MaxOrderingWeights w = theorem_weights(params, tol);
    const Instance transformed = transform_instance(instance, params);
    const IdSet candidates = alpha_approximate_for_max_ordering(transformed, w, alpha, tol);
    out.insert(*candidates.begin());
  }
  return out;
}

}  // namespace coneapprox

#endif  // CONEAPPROX_SCALARIZATION_HPP
