/**
 * @file common.hpp
 * @brief Tolerances, error type and angle helpers shared by every module.
 */

#ifndef CONEAPPROX_COMMON_HPP
#define CONEAPPROX_COMMON_HPP

#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

namespace coneapprox {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kHalfPi = std::numbers::pi / 2.0;

/**
 * @brief Absolute tolerances used by all real-valued comparisons.
 *
 * `value` applies to objective values and transformed components,
 * `angle` to rotation and inner angles (radians).
 */
struct Tolerance {
  double value = 1e-9;
  double angle = 1e-12;
};

enum class ErrorCode {
  kZeroDirection,
  kUnknownId,
  kUnsupportedSense,
  kNonpositiveWeight,
  kAlphaBelowOne,
  kDegeneratePhi,
  kInvalidRatio,
  kEmptySet,
  kInvalidParams,
  kKTooLarge,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kZeroDirection: return "ZeroDirection";
    case ErrorCode::kUnknownId: return "UnknownId";
    case ErrorCode::kUnsupportedSense: return "UnsupportedSense";
    case ErrorCode::kNonpositiveWeight: return "NonpositiveWeight";
    case ErrorCode::kAlphaBelowOne: return "AlphaBelowOne";
    case ErrorCode::kDegeneratePhi: return "DegeneratePhi";
    case ErrorCode::kInvalidRatio: return "InvalidRatio";
    case ErrorCode::kEmptySet: return "EmptySet";
    case ErrorCode::kInvalidParams: return "InvalidParams";
    case ErrorCode::kKTooLarge: return "KTooLarge";
  }
  return "Unknown";
}

/// Exception carrying a machine-readable code next to the message.
class Error : public std::invalid_argument {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::invalid_argument(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Radian value with tolerance-aware equality; a thin strong type for γ and φ.
class Angle {
 public:
  constexpr Angle() = default;
  constexpr explicit Angle(double radians) : radians_(radians) {}

  static constexpr Angle pi_fraction(double fraction) {
    return Angle(fraction * kPi);
  }

  constexpr double radians() const noexcept { return radians_; }

  bool near(Angle other, const Tolerance& tol = {}) const noexcept {
    const double diff = radians_ - other.radians_;
    return diff <= tol.angle && -diff <= tol.angle;
  }

  friend constexpr bool operator<(Angle a, Angle b) noexcept {
    return a.radians_ < b.radians_;
  }
  friend constexpr bool operator<=(Angle a, Angle b) noexcept {
    return a.radians_ <= b.radians_;
  }
  friend constexpr Angle operator-(Angle a, Angle b) noexcept {
    return Angle(a.radians_ - b.radians_);
  }
  friend constexpr Angle operator+(Angle a, Angle b) noexcept {
    return Angle(a.radians_ + b.radians_);
  }

 private:
  double radians_ = 0.0;
};

inline void require_alpha(double alpha) {
  if (!(alpha >= 1.0)) {
    throw Error(ErrorCode::kAlphaBelowOne,
                "alpha must be >= 1, got " + std::to_string(alpha));
  }
}

}  // namespace coneapprox

#endif  // CONEAPPROX_COMMON_HPP
