/**
 * @file bounds.hpp
 * @brief Closed-form approximation guarantees as a function of the inner angle
 *        and numeric checks of the supporting trigonometric identities.
 *
 * Every formula is a template over the floating type so the identity checks
 * can run in extended precision: near γ = π/2 the forms (1 − sin γ)/(−cos γ)
 * and tan γ + √(1 + tan²γ) cancel catastrophically in double.
 */

#ifndef CONEAPPROX_BOUNDS_HPP
#define CONEAPPROX_BOUNDS_HPP

#include <cmath>
#include <concepts>
#include <numbers>
#include <utility>

#include "common.hpp"
#include "cone.hpp"

namespace coneapprox {

template <std::floating_point T>
struct AlternativeForms {
  T half_angle;    // tan((γ − π/2)/2)
  T sine_form;     // (1 − sin γ)/(−cos γ)
  T cosine_form;   // (−cos γ)/(1 + sin γ)
  T tangent_form;  // tan γ + √(1 + tan²γ)
};

template <std::floating_point T>
struct BoundTable {
  T gamma;
  T factor;
  AlternativeForms<T> forms;
  T rule_of_thumb;
};

/**
 * @brief 1 + tan(γ/2 − π/4), the guarantee of the γ-supported set.
 *
 * Evaluated as 1 + sin θ/(1 + cos θ) with θ = γ − π/2, which has no
 * cancellation on [π/2, π] and yields exactly 1 and 2 at the endpoints
 * (θ = π/2 is exact in floating point, unlike π).
 */
template <std::floating_point T = double>
T guarantee_factor(T gamma) {
  const T theta = gamma - std::numbers::pi_v<T> / T(2);
  return T(1) + std::sin(theta) / (T(1) + std::cos(theta));
}

template <std::floating_point T = double>
T guarantee_factor_direct(T gamma) {
  return T(1) + std::tan(gamma / T(2) - std::numbers::pi_v<T> / T(4));
}

/// The four equivalent expressions of tan φ̄_γ; all are 0 at γ = π/2 (limit).
template <std::floating_point T = double>
AlternativeForms<T> alternative_forms(T gamma) {
  const T half_pi = std::numbers::pi_v<T> / T(2);
  if (gamma <= half_pi) return {T(0), T(0), T(0), T(0)};
  const T s = std::sin(gamma);
  const T c = std::cos(gamma);
  const T t = std::tan(gamma);
  return {std::tan((gamma - half_pi) / T(2)), (T(1) - s) / (-c), (-c) / (T(1) + s),
          t + std::sqrt(T(1) + t * t)};
}

/// The two half-angle expansions of tan((γ − π/2)/2) in terms of θ = γ − π/2.
template <std::floating_point T = double>
std::pair<T, T> half_angle_forms(T gamma) {
  const T theta = gamma - std::numbers::pi_v<T> / T(2);
  if (theta <= T(0)) return {T(0), T(0)};
  return {std::sin(theta) / (T(1) + std::cos(theta)), (T(1) - std::cos(theta)) / std::sin(theta)};
}

template <std::floating_point T = double>
T rule_of_thumb(T gamma) {
  return T(2) * gamma / std::numbers::pi_v<T>;
}

template <std::floating_point T = double>
BoundTable<T> bound_table(T gamma) {
  return {gamma, guarantee_factor(gamma), alternative_forms(gamma), rule_of_thumb(gamma)};
}

/// tan φ̄_γ − √(tan φ · tan φ'); nonnegative, zero at φ = φ̄_γ.
inline double lemma4_gap(const ConeParams& params) {
  const double product =
      std::tan(params.phi().radians()) * std::tan(params.phi_prime().radians());
  return std::tan(params.phi_bar().radians()) - std::sqrt(product);
}

inline double lemma4_gap(Angle gamma, Angle phi) { return lemma4_gap(ConeParams(gamma, phi)); }

/**
 * @brief √(tan φ · tan φ') − (√(1 + s²tan²γ) + s·tan γ),
 *        s = (√(tan φ/tan φ') + √(tan φ'/tan φ))/2.
 */
template <std::floating_point T = double>
T appendix_a_residual(T gamma, T phi, const Tolerance& tol = {}) {
  const T half_pi = std::numbers::pi_v<T> / T(2);
  const T phi_prime = gamma - half_pi - phi;
  if (!(gamma > half_pi) || phi < T(tol.angle) || phi_prime < T(tol.angle)) {
    throw Error(ErrorCode::kDegeneratePhi, "residual needs gamma > pi/2 and interior phi");
  }
  const T tp = std::tan(phi);
  const T tpp = std::tan(phi_prime);
  const T tg = std::tan(gamma);
  const T r = std::sqrt(tp / tpp);
  const T s = (r + T(1) / r) / T(2);
  return std::sqrt(tp * tpp) - (std::sqrt(T(1) + s * s * tg * tg) + s * tg);
}

}  // namespace coneapprox

#endif  // CONEAPPROX_BOUNDS_HPP
