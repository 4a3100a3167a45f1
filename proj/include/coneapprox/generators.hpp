/**
 * @file generators.hpp
 * @brief The constructed instances behind each structural claim, plus seeded
 *        random fronts and enumerated knapsack-style instances.
 *
 * Random families draw from std::mt19937_64 (its output sequence is fixed by
 * the C++ standard) and map 64-bit words to [0, 1) as (word >> 11)·2⁻⁵³, so an
 * instance is bit-reproducible from its seed on any conforming platform.
 */

#ifndef CONEAPPROX_GENERATORS_HPP
#define CONEAPPROX_GENERATORS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cone.hpp"
#include "instance.hpp"

namespace coneapprox {

struct GeneratorParams {
  double alpha = 1.0;
  Angle gamma{kPi};
  Angle phi{0.0};
  double epsilon = 0.1;
  std::uint64_t seed = 0;
};

enum class FrontShape { kConvex, kConcave, kMixed };

namespace detail {

class UnitRng {
 public:
  explicit UnitRng(std::uint64_t seed) : engine_(seed) {}
  double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

inline std::string padded_id(char prefix, std::size_t index, std::size_t total) {
  const std::size_t width = std::to_string(total).size();
  std::string digits = std::to_string(index);
  return std::string(1, prefix) + std::string(width - digits.size(), '0') + digits;
}

inline void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kInvalidParams, what);
}

}  // namespace detail

/// Two solutions where the single cone (γ, φ) keeps only x1, yet {x1} is no α-approximation.
inline Instance gen_example1(double alpha, Angle gamma, Angle phi, const Tolerance& tol = {}) {
  detail::require(alpha > 1.0, "example1 needs alpha > 1");
  detail::require(valid_gamma(gamma, tol) && gamma.radians() > kHalfPi + tol.angle,
                  "example1 needs gamma in (pi/2, pi]");
  detail::require(phi.radians() > 0.0 && admissible(gamma, phi, tol),
                  "example1 needs an admissible phi > 0 (phi = pi/2 excluded)");
  const double t = std::tan(phi.radians());
  return Instance(Sense::kMin, {{"x1", {1.0, (alpha - 1.0) * t}},
                                {"x2", {alpha, (alpha - 1.0) / (alpha + 1.0) * t}}});
}

/// x1 is optimal for every rotation of inner angle γ but does not α-approximate x2.
inline Instance gen_example2(double alpha, Angle gamma, const Tolerance& tol = {}) {
  detail::require(alpha >= 1.0, "example2 needs alpha >= 1");
  const double g = gamma.radians();
  detail::require(g > kHalfPi + tol.angle && g < kPi - tol.angle, "example2 needs gamma in (pi/2, pi)");
  return Instance(Sense::kMin,
                  {{"x1", {alpha + 1.0, 1.0}}, {"x2", {1.0, (-std::cos(g) / std::sin(g)) * (alpha + 1.0) + 1.0}}});
}

/// ε' = ½·min{ε/α, 1}, the fixed choice below the bound required by the construction.
inline double tightness_epsilon_prime(double alpha, double epsilon) {
  return 0.5 * std::min(epsilon / alpha, 1.0);
}

/// {x1, x2} approximates for every rotation but misses x3 by nearly α·(1 + tan φ̄_γ).
inline Instance gen_tightness(double alpha, Angle gamma, double epsilon, const Tolerance& tol = {}) {
  detail::require(alpha >= 1.0, "tightness needs alpha >= 1");
  detail::require(valid_gamma(gamma, tol), "tightness needs gamma in [pi/2, pi]");
  detail::require(epsilon > 0.0, "tightness needs epsilon > 0");
  const double g = std::clamp(gamma.radians(), kHalfPi, kPi);
  const double tan_bar = std::tan(g / 2.0 - kPi / 4.0);
  const double ep = tightness_epsilon_prime(alpha, epsilon);
  const double far = alpha * (1.0 + (1.0 - ep) * tan_bar);
  return Instance(Sense::kMin,
                  {{"x1", {far, alpha * ep}}, {"x2", {alpha * ep, far}}, {"x3", {1.0, 1.0}}});
}

/// Maximization instance whose γ-supported set {x1, x2} is no α-approximation.
inline Instance gen_maximization(double alpha, Angle gamma, const Tolerance& tol = {}) {
  detail::require(alpha >= 1.0, "maximization needs alpha >= 1");
  detail::require(valid_gamma(gamma, tol) && gamma.radians() > kHalfPi + tol.angle,
                  "maximization needs gamma in (pi/2, pi]");
  const double g = std::min(gamma.radians(), kPi);
  const double tan_bar = std::tan(g / 2.0 - kPi / 4.0);
  const double big = alpha + 2.0 + alpha / tan_bar;
  return Instance(Sense::kMax, {{"x1", {1.0, big}}, {"x2", {big, 1.0}}, {"x3", {alpha + 1.0, alpha + 1.0}}});
}

/**
 * @brief n seeded points on a decreasing front.
 *
 * convex: arc of the circle of radius 4 around (5, 5) (bulging to the origin);
 * concave: arc of radius 4 around (1, 1) (bulging away);
 * mixed: f₂ = 5 − 4t + 0.3·sin(3πt) over f₁ = 1 + 4t, with n/5 dominated
 * noise points (ids prefixed 'd') placed above and right of random front points.
 */
inline Instance gen_random_front(std::size_t n, std::uint64_t seed, FrontShape shape) {
  detail::require(n >= 1, "random front needs n >= 1");
  detail::UnitRng rng(seed);
  const std::size_t noise = shape == FrontShape::kMixed ? n / 5 : 0;
  const std::size_t front = n - noise;
  std::vector<Solution> sols;
  sols.reserve(n);
  constexpr double kMargin = 0.05;
  for (std::size_t i = 0; i < front; ++i) {
    const double u = rng.next();
    ObjectiveVector y;
    switch (shape) {
      case FrontShape::kConvex: {
        const double theta = kPi + kMargin + (kHalfPi - 2 * kMargin) * u;
        y = {5.0 + 4.0 * std::cos(theta), 5.0 + 4.0 * std::sin(theta)};
        break;
      }
      case FrontShape::kConcave: {
        const double theta = kMargin + (kHalfPi - 2 * kMargin) * u;
        y = {1.0 + 4.0 * std::cos(theta), 1.0 + 4.0 * std::sin(theta)};
        break;
      }
      case FrontShape::kMixed:
        y = {1.0 + 4.0 * u, 5.0 - 4.0 * u + 0.3 * std::sin(3.0 * kPi * u)};
        break;
    }
    sols.push_back({detail::padded_id('x', i + 1, n), y});
  }
  for (std::size_t i = 0; i < noise; ++i) {
    const auto anchor = static_cast<std::size_t>(rng.next() * static_cast<double>(front));
    const ObjectiveVector base = sols[std::min(anchor, front - 1)].objectives;
    const double du = 0.05 + rng.next();
    const double dv = 0.05 + rng.next();
    sols.push_back({detail::padded_id('d', i + 1, n), {base.f1 + du, base.f2 + dv}});
  }
  return Instance(Sense::kMin, std::move(sols));
}

inline constexpr std::size_t kMaxKnapsackItems = 20;

/**
 * @brief All 2^k item subsets with two additive costs.
 *
 * f₁ = 1 + Σ_{selected} a_i and f₂ = 1 + Σ_{not selected} b_i, with a_i, b_i
 * drawn from [1, 10). Ids are 's' followed by the selection bits, item 1 first.
 */
inline Instance gen_knapsack_enumeration(std::size_t k, std::uint64_t seed) {
  if (k > kMaxKnapsackItems) {
    throw Error(ErrorCode::kKTooLarge, "at most " + std::to_string(kMaxKnapsackItems) + " items");
  }
  detail::require(k >= 1, "knapsack needs k >= 1");
  detail::UnitRng rng(seed);
  std::vector<double> a(k);
  std::vector<double> b(k);
  for (std::size_t i = 0; i < k; ++i) {
    a[i] = 1.0 + 9.0 * rng.next();
    b[i] = 1.0 + 9.0 * rng.next();
  }
  const std::size_t count = std::size_t{1} << k;
  std::vector<Solution> sols;
  sols.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::string id(k + 1, '0');
    id[0] = 's';
    double f1 = 1.0;
    double f2 = 1.0;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (std::size_t{1} << i)) {
        id[i + 1] = '1';
        f1 += a[i];
      } else {
        f2 += b[i];
      }
    }
    sols.push_back({std::move(id), {f1, f2}});
  }
  return Instance(Sense::kMin, std::move(sols));
}

}  // namespace coneapprox

#endif  // CONEAPPROX_GENERATORS_HPP
