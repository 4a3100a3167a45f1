/**
 * @file cone.hpp
 * @brief Closed convex 2D ordering cones containing the nonnegative orthant.
 *
 * A cone is described by its inner angle γ ∈ [π/2, π] and a rotation
 * φ ∈ [0, γ − π/2] (open at both ends when γ = π). The cone is
 * { y : T(y) ≥ 0 } for the linear map
 *
 *     T(y) = ( cos φ'·y₁ + sin φ'·y₂ ,  sin φ·y₁ + cos φ·y₂ ),  φ' = γ − π/2 − φ.
 *
 * In direction terms, d with polar angle θ is in the cone iff θ ∈ [−φ, γ − φ].
 */

#ifndef CONEAPPROX_CONE_HPP
#define CONEAPPROX_CONE_HPP

#include <algorithm>
#include <cmath>
#include <string>

#include "common.hpp"
#include "interval.hpp"

namespace coneapprox {

struct Vector2 {
  double c1 = 0.0;
  double c2 = 0.0;

  friend constexpr Vector2 operator+(Vector2 a, Vector2 b) { return {a.c1 + b.c1, a.c2 + b.c2}; }
  friend constexpr Vector2 operator-(Vector2 a, Vector2 b) { return {a.c1 - b.c1, a.c2 - b.c2}; }
  friend constexpr Vector2 operator*(double s, Vector2 a) { return {s * a.c1, s * a.c2}; }
  friend constexpr bool operator==(Vector2, Vector2) = default;
};

inline bool is_gamma_pi(Angle gamma, const Tolerance& tol = {}) {
  return gamma.near(Angle(kPi), tol);
}

inline bool is_gamma_half_pi(Angle gamma, const Tolerance& tol = {}) {
  return gamma.near(Angle(kHalfPi), tol);
}

inline bool valid_gamma(Angle gamma, const Tolerance& tol = {}) {
  const double g = gamma.radians();
  return std::isfinite(g) && g >= kHalfPi - tol.angle && g <= kPi + tol.angle;
}

/**
 * @brief Admissible rotations for inner angle γ.
 *
 * [0, γ − π/2] for γ < π; for γ = π the open interval (0, π/2) is represented
 * by shrinking both ends by the angle tolerance.
 */
inline PhiInterval admissible_range(Angle gamma, const Tolerance& tol = {}) {
  if (is_gamma_half_pi(gamma, tol)) return {0.0, 0.0};
  if (is_gamma_pi(gamma, tol)) return {tol.angle, kHalfPi - tol.angle};
  return {0.0, gamma.radians() - kHalfPi};
}

inline bool admissible(Angle gamma, Angle phi, const Tolerance& tol = {}) {
  if (!valid_gamma(gamma, tol) || !std::isfinite(phi.radians())) return false;
  const PhiInterval range = admissible_range(gamma, tol);
  if (is_gamma_pi(gamma, tol)) {
    return phi.radians() >= range.lo && phi.radians() <= range.hi;
  }
  return phi.radians() >= range.lo - tol.angle && phi.radians() <= range.hi + tol.angle;
}

/**
 * @brief Validated (γ, φ) pair with the derived angles and the matrix of T.
 */
class ConeParams {
 public:
  ConeParams(Angle gamma, Angle phi, const Tolerance& tol = {}) {
    if (!admissible(gamma, phi, tol)) {
      throw Error(ErrorCode::kInvalidParams,
                  "inadmissible cone (gamma=" + std::to_string(gamma.radians()) +
                      ", phi=" + std::to_string(phi.radians()) + ")");
    }
    // Snap to the exact range so tolerance-admitted inputs stay inside it.
    double g = std::clamp(gamma.radians(), kHalfPi, kPi);
    if (is_gamma_half_pi(gamma, tol)) g = kHalfPi;
    if (is_gamma_pi(gamma, tol)) g = kPi;
    const double span = g - kHalfPi;
    const double p = std::clamp(phi.radians(), 0.0, span);
    gamma_ = Angle(g);
    phi_ = Angle(p);
    phi_prime_ = Angle(std::max(0.0, span - p));
    phi_bar_ = Angle(g / 2.0 - kPi / 4.0);
    cos_phi_prime_ = std::cos(phi_prime_.radians());
    sin_phi_prime_ = std::sin(phi_prime_.radians());
    sin_phi_ = std::sin(p);
    cos_phi_ = std::cos(p);
  }

  /// The Pareto cone: γ = π/2, φ = 0, T = identity.
  static ConeParams pareto() { return ConeParams(Angle(kHalfPi), Angle(0.0)); }

  Angle gamma() const noexcept { return gamma_; }
  Angle phi() const noexcept { return phi_; }
  Angle phi_prime() const noexcept { return phi_prime_; }
  Angle phi_bar() const noexcept { return phi_bar_; }

  double cos_phi_prime() const noexcept { return cos_phi_prime_; }
  double sin_phi_prime() const noexcept { return sin_phi_prime_; }
  double sin_phi() const noexcept { return sin_phi_; }
  double cos_phi() const noexcept { return cos_phi_; }

 private:
  Angle gamma_;
  Angle phi_;
  Angle phi_prime_;
  Angle phi_bar_;
  double cos_phi_prime_ = 1.0;
  double sin_phi_prime_ = 0.0;
  double sin_phi_ = 0.0;
  double cos_phi_ = 1.0;
};

inline Vector2 transform(const ConeParams& params, Vector2 y) {
  return {params.cos_phi_prime() * y.c1 + params.sin_phi_prime() * y.c2,
          params.sin_phi() * y.c1 + params.cos_phi() * y.c2};
}

inline bool cone_contains(const ConeParams& params, Vector2 d, const Tolerance& tol = {}) {
  const Vector2 t = transform(params, d);
  return t.c1 >= -tol.value && t.c2 >= -tol.value;
}

/// y ≤ y2 in the cone order, i.e. y2 − y lies in the cone.
inline bool cone_leq(const ConeParams& params, Vector2 y, Vector2 y2, const Tolerance& tol = {}) {
  return cone_contains(params, y2 - y, tol);
}

namespace detail {

inline PhiIntervalSet phi_interval(Angle gamma, Vector2 d, bool strict_at_halfplane, const Tolerance& tol) {
  if (d.c1 == 0.0 && d.c2 == 0.0) {
    throw Error(ErrorCode::kZeroDirection, "direction (0,0) has no polar angle");
  }
  if (!valid_gamma(gamma, tol)) {
    throw Error(ErrorCode::kInvalidParams, "gamma outside [pi/2, pi]");
  }
  const double g = std::clamp(gamma.radians(), kHalfPi, kPi);
  PhiIntervalSet result(admissible_range(gamma, tol), tol);
  const double norm = std::hypot(d.c1, d.c2);
  const double pad = std::asin(std::min(1.0, tol.value / norm)) + tol.angle;
  const double widen = strict_at_halfplane && kPi - g <= tol.angle ? -pad : pad;
  const double theta = std::atan2(d.c2, d.c1);
  for (const double shift : {-2.0 * kPi, 0.0, 2.0 * kPi}) {
    const double t = theta + shift;
    if (g - t + widen > -t - widen) result.add({-t - widen, g - t + widen});
  }
  return result;
}

}  // namespace detail

/**
 * @brief All admissible φ for which d lies in the cone of inner angle γ.
 *
 * The raw condition is φ ∈ [−θ, γ − θ] with θ the polar angle of d. Both
 * ends are widened by asin(τ_val/|d|) + τ_angle so the result agrees with
 * the tolerance-relaxed `cone_contains` test.
 */
inline PhiIntervalSet dominating_phi_interval(Angle gamma, Vector2 d, const Tolerance& tol = {}) {
  return detail::phi_interval(gamma, d, false, tol);
}

/**
 * @brief φ for which d ∈ C_γ^φ and T_γ^φ(d) ≠ 0, the strict dominance test.
 *
 * Differs from `dominating_phi_interval` only at γ = π: there both rows of T
 * equal w(φ)·d, the interval ends are exactly where T(d) = 0, and they are
 * shrunk by the padding instead of widened. For γ < π, T is invertible.
 */
inline PhiIntervalSet strictly_dominating_phi_interval(Angle gamma, Vector2 d, const Tolerance& tol = {}) {
  return detail::phi_interval(gamma, d, true, tol);
}

}  // namespace coneapprox

#endif  // CONEAPPROX_CONE_HPP
