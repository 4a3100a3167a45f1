// Test-side reference implementations. Each one is written from the
// definitions, independently of the library code it is compared against.

#ifndef CONEAPPROX_TESTS_ORACLES_HPP
#define CONEAPPROX_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "coneapprox/instance.hpp"

namespace oracle {

using coneapprox::Instance;
using coneapprox::Sense;

inline constexpr double kTauValue = 1e-9;

struct Vec {
  double a;
  double b;
};

// T as [[sin γ, −cos γ], [0, 1]] · Rot(φ); equal to the row form by angle addition.
inline Vec transform(double gamma, double phi, Vec y) {
  const double r1 = std::cos(phi) * y.a - std::sin(phi) * y.b;
  const double r2 = std::sin(phi) * y.a + std::cos(phi) * y.b;
  return {std::sin(gamma) * r1 - std::cos(gamma) * r2, r2};
}

inline Vec image(const Instance& inst, std::size_t i) {
  return {inst.solutions()[i].objectives.f1, inst.solutions()[i].objectives.f2};
}

// Pairwise definition of dominance with the library's value tolerance.
inline bool dominates(Sense sense, Vec p, Vec q) {
  if (sense == Sense::kMax) {
    p = {-p.a, -p.b};
    q = {-q.a, -q.b};
  }
  const bool equal = std::abs(p.a - q.a) <= kTauValue && std::abs(p.b - q.b) <= kTauValue;
  return !equal && p.a <= q.a + kTauValue && p.b <= q.b + kTauValue;
}

inline std::set<std::string> efficient(const Instance& inst) {
  std::set<std::string> out;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < inst.size() && !dominated; ++j) {
      dominated = j != i && dominates(inst.sense(), image(inst, j), image(inst, i));
    }
    if (!dominated) out.insert(inst.solutions()[i].id);
  }
  return out;
}

// Cone-optimal set at one rotation via the product-form transform: x is
// dominated only by a y whose transformed image is distinct and no worse.
inline std::set<std::string> cone_efficient(const Instance& inst, double gamma, double phi) {
  std::set<std::string> out;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    const Vec ti = transform(gamma, phi, image(inst, i));
    bool dominated = false;
    for (std::size_t j = 0; j < inst.size() && !dominated; ++j) {
      if (j == i) continue;
      const Vec yi = image(inst, i);
      const Vec yj = image(inst, j);
      if (std::abs(yi.a - yj.a) <= kTauValue && std::abs(yi.b - yj.b) <= kTauValue) continue;
      const Vec tj = transform(gamma, phi, yj);
      if (std::abs(ti.a - tj.a) <= kTauValue && std::abs(ti.b - tj.b) <= kTauValue) continue;
      dominated = inst.sense() == Sense::kMin
                      ? (ti.a - tj.a >= -kTauValue && ti.b - tj.b >= -kTauValue)
                      : (tj.a - ti.a >= -kTauValue && tj.b - ti.b >= -kTauValue);
    }
    if (!dominated) out.insert(inst.solutions()[i].id);
  }
  return out;
}

// Double loop over x and s; gamma < 0 selects the identity (Pareto cone).
inline double min_alpha(const Instance& inst, const std::set<std::string>& members,
                        double gamma = -1.0, double phi = 0.0) {
  auto img = [&](std::size_t i) {
    return gamma < 0.0 ? image(inst, i) : transform(gamma, phi, image(inst, i));
  };
  double worst = 0.0;
  for (std::size_t x = 0; x < inst.size(); ++x) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < inst.size(); ++s) {
      if (!members.count(inst.solutions()[s].id)) continue;
      const Vec ts = img(s);
      const Vec tx = img(x);
      const double r = inst.sense() == Sense::kMin ? std::max(ts.a / tx.a, ts.b / tx.b)
                                                   : std::max(tx.a / ts.a, tx.b / ts.b);
      best = std::min(best, r);
    }
    worst = std::max(worst, best);
  }
  return worst;
}

// Bisection on the defining property tan φ' / tan φ = q², decreasing in φ.
inline double phi_for_ratio(double gamma, double q) {
  const double pi = std::acos(-1.0);
  const double span = gamma - pi / 2;
  double lo = 0.0;
  double hi = span;
  for (int i = 0; i < 400; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double lhs = std::tan(span - mid) / std::tan(mid);
    if (lhs > q * q) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

inline std::uint64_t splitmix(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Unstructured random instance, independent of the library generators.
inline Instance random_cloud(std::size_t n, std::uint64_t seed, Sense sense = Sense::kMin,
                             bool with_ties = false) {
  std::uint64_t state = seed;
  auto unit = [&] { return static_cast<double>(splitmix(state) >> 11) * 0x1.0p-53; };
  std::vector<coneapprox::Solution> sols;
  for (std::size_t i = 0; i < n; ++i) {
    double a = 0.5 + 9.5 * unit();
    double b = 0.5 + 9.5 * unit();
    if (with_ties) {
      a = std::round(a);
      b = std::round(b);
    }
    sols.push_back({"p" + std::to_string(i), {a, b}});
  }
  return Instance(sense, std::move(sols));
}

}  // namespace oracle

#endif  // CONEAPPROX_TESTS_ORACLES_HPP
