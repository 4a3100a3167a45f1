/**
 * @file supportedness.hpp
 * @brief γ-supported solutions: optimal for at least one cone of inner angle γ.
 *
 * For a fixed γ every other solution y with f(y) ≠ f(x) rules out an
 * interval of rotations (those under which T_γ^φ(f(y)) ≤ T_γ^φ(f(x)) with
 * the two images distinct). The set of
 * rotations for which x is optimal is the admissible range minus the union of
 * these intervals, which is computed exactly up to the angle tolerance.
 */

#ifndef CONEAPPROX_SUPPORTEDNESS_HPP
#define CONEAPPROX_SUPPORTEDNESS_HPP

#include <string>

#include "cone.hpp"
#include "instance.hpp"
#include "interval.hpp"

namespace coneapprox {

namespace detail {

inline PhiIntervalSet optimal_phi_set_at(const Instance& instance, Angle gamma, std::size_t i,
                                         const Tolerance& tol) {
  if (!valid_gamma(gamma, tol)) throw Error(ErrorCode::kInvalidParams, "gamma outside [pi/2, pi]");
  PhiIntervalSet bad(admissible_range(gamma, tol), tol);
  const Vector2 fx = instance.f(i);
  for (std::size_t j = 0; j < instance.size(); ++j) {
    if (j == i) continue;
    const Vector2 fy = instance.f(j);
    if (tol_equal(fx, fy, tol)) continue;
    const Vector2 d = instance.sense() == Sense::kMin ? fx - fy : fy - fx;
    bad.add_all(strictly_dominating_phi_interval(gamma, d, tol));
    if (bad.is_full()) break;
  }
  if (bad.is_full()) return PhiIntervalSet(bad.ambient(), tol);
  return bad.complement();
}

}  // namespace detail

/// Rotations φ for which `x` is optimal w.r.t. the cone of inner angle γ.
inline PhiIntervalSet optimal_phi_set(const Instance& instance, Angle gamma, const std::string& x,
                                      const Tolerance& tol = {}) {
  return detail::optimal_phi_set_at(instance, gamma, instance.index_of(x), tol);
}

inline bool is_gamma_supported(const Instance& instance, Angle gamma, const std::string& x,
                               const Tolerance& tol = {}) {
  return !optimal_phi_set(instance, gamma, x, tol).empty();
}

inline IdSet gamma_supported_set(const Instance& instance, Angle gamma, const Tolerance& tol = {}) {
  IdSet out;
  for (std::size_t i = 0; i < instance.size(); ++i) {
    if (!detail::optimal_phi_set_at(instance, gamma, i, tol).empty()) {
      out.insert(instance.solutions()[i].id);
    }
  }
  return out;
}

/// Optimal solutions of some positive weighted sum, i.e. γ = π.
inline IdSet supported_set(const Instance& instance, const Tolerance& tol = {}) {
  return gamma_supported_set(instance, Angle(kPi), tol);
}

/// `steps` equally spaced rotations over the admissible range, both ends included.
inline std::vector<double> phi_grid(Angle gamma, std::size_t steps, const Tolerance& tol = {}) {
  const PhiInterval range = admissible_range(gamma, tol);
  std::vector<double> grid;
  grid.reserve(steps);
  if (range.length() <= 0.0) {
    grid.push_back(range.lo);
    return grid;
  }
  for (std::size_t k = 0; k < steps; ++k) {
    grid.push_back(range.lo + range.length() * static_cast<double>(k) /
                                  static_cast<double>(steps - 1));
  }
  return grid;
}

/**
 * @brief Union of cone-efficient sets over a rotation grid.
 *
 * Under-approximates the γ-supported set; used as a test oracle.
 */
inline IdSet grid_oracle_gamma_supported(const Instance& instance, Angle gamma, std::size_t steps,
                                         const Tolerance& tol = {}) {
  if (steps < 2) throw Error(ErrorCode::kInvalidParams, "grid oracle needs at least 2 steps");
  IdSet out;
  for (const double phi : phi_grid(gamma, steps, tol)) {
    const IdSet at_phi = cone_efficient_set(instance, ConeParams(gamma, Angle(phi), tol), tol);
    out.insert(at_phi.begin(), at_phi.end());
    if (out.size() == instance.size()) break;
  }
  return out;
}

}  // namespace coneapprox

#endif  // CONEAPPROX_SUPPORTEDNESS_HPP
