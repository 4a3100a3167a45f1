/**
 * @file sweep.hpp
 * @brief γ-sweeps comparing the empirical approximation factor of the
 *        γ-supported set with the closed-form bounds, and their CSV tables.
 */

#ifndef CONEAPPROX_SWEEP_HPP
#define CONEAPPROX_SWEEP_HPP

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "approximation.hpp"
#include "bounds.hpp"
#include "io.hpp"
#include "supportedness.hpp"

namespace coneapprox {

struct SweepRow {
  double gamma = 0.0;
  std::string instance_id;
  double empirical_alpha = 1.0;
  double theory_bound = 1.0;
  double rule_of_thumb = 1.0;
};

inline constexpr const char* kSweepHeader =
    "gamma,instance_id,empirical_alpha,theory_bound,rule_of_thumb";
inline constexpr const char* kBoundsHeader =
    "gamma,factor,half_angle,sine_form,cosine_form,tangent_form,rule_of_thumb";

/// `steps` equally spaced values from `from` to `to`; a single value when steps = 1.
inline std::vector<double> gamma_grid(Angle from, Angle to, std::size_t steps) {
  std::vector<double> out;
  if (steps == 0) return out;
  if (steps == 1) return {from.radians()};
  for (std::size_t i = 0; i < steps; ++i) {
    out.push_back(from.radians() +
                  (to.radians() - from.radians()) * static_cast<double>(i) / static_cast<double>(steps - 1));
  }
  out.back() = to.radians();
  return out;
}

inline SweepRow sweep_row(const Instance& instance, Angle gamma, std::string instance_id,
                          const Tolerance& tol = {}) {
  const IdSet supported = gamma_supported_set(instance, gamma, tol);
  return {gamma.radians(), std::move(instance_id), min_alpha(instance, supported),
          guarantee_factor(gamma.radians()), rule_of_thumb(gamma.radians())};
}

/**
 * @brief Runs every generator at every γ of the grid.
 *
 * A (γ, generator) pair whose parameters the generator rejects is skipped
 * with a note on `diag`. Rows come back sorted by (γ, instance_id).
 * Maximization families are rejected: no guarantee bounds their factor.
 */
inline std::vector<SweepRow> run_sweep(Angle from, Angle to, std::size_t steps,
                                       const std::vector<io::GeneratorSpec>& generators,
                                       std::ostream& diag, const Tolerance& tol = {}) {
  for (const auto& spec : generators) {
    if (spec.family == "maximization") {
      throw Error(ErrorCode::kUnsupportedSense, "sweep bounds hold for minimization families only");
    }
  }
  std::vector<SweepRow> rows;
  for (const double g : gamma_grid(from, to, steps)) {
    for (const auto& spec : generators) {
      try {
        const Instance instance = io::generate(spec, Angle(g));
        rows.push_back(sweep_row(instance, Angle(g), spec.canonical(), tol));
      } catch (const Error& e) {
        diag << "skipping " << spec.canonical() << " at gamma=" << g << ": " << e.what() << "\n";
      }
    }
  }
  std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
    return std::tie(a.gamma, a.instance_id) < std::tie(b.gamma, b.instance_id);
  });
  return rows;
}

namespace csv {

inline std::string number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (const char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

/// Splits one CSV record; supports double-quoted fields with "" escapes.
inline std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else if (c != '\r') {
      fields.back() += c;
    }
  }
  if (quoted) throw ParseError("unterminated quoted CSV field");
  return fields;
}

}  // namespace csv

inline void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
  out << kSweepHeader << "\n";
  for (const auto& r : rows) {
    out << csv::number(r.gamma) << "," << csv::quote(r.instance_id) << ","
        << csv::number(r.empirical_alpha) << "," << csv::number(r.theory_bound) << ","
        << csv::number(r.rule_of_thumb) << "\n";
  }
}

inline void write_bounds_csv(const std::vector<double>& gammas, std::ostream& out) {
  out << kBoundsHeader << "\n";
  for (const double g : gammas) {
    const auto t = bound_table(g);
    out << csv::number(t.gamma) << "," << csv::number(t.factor) << ","
        << csv::number(t.forms.half_angle) << "," << csv::number(t.forms.sine_form) << ","
        << csv::number(t.forms.cosine_form) << "," << csv::number(t.forms.tangent_form) << ","
        << csv::number(t.rule_of_thumb) << "\n";
  }
}

/// Curve samples and empirical points recovered from a sweep or bounds CSV.
struct PlotData {
  struct CurvePoint {
    double gamma;
    double factor;
    double rule_of_thumb;
  };
  struct EmpiricalPoint {
    double gamma;
    double alpha;
    std::string instance_id;
  };
  std::vector<CurvePoint> curve;
  std::vector<EmpiricalPoint> empirical;
};

/**
 * @brief Reads either table kind; curve points are deduplicated by γ and sorted.
 */
inline PlotData read_plot_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty CSV");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const bool sweep = line == kSweepHeader;
  if (!sweep && line != kBoundsHeader) throw ParseError("unrecognized CSV header '" + line + "'");
  const std::size_t width = sweep ? 5 : 7;
  PlotData data;
  std::size_t lineno = 1;
  auto num = [&](const std::string& field) {
    const auto v = io::parse_double(field);
    if (!v) throw ParseError("line " + std::to_string(lineno) + ": bad number '" + field + "'");
    return *v;
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (io::trim(line).empty()) continue;
    const auto fields = csv::split(line);
    if (fields.size() != width) {
      throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(width) + " fields");
    }
    if (sweep) {
      const double g = num(fields[0]);
      data.empirical.push_back({g, num(fields[2]), fields[1]});
      data.curve.push_back({g, num(fields[3]), num(fields[4])});
    } else {
      data.curve.push_back({num(fields[0]), num(fields[1]), num(fields[6])});
    }
  }
  std::stable_sort(data.curve.begin(), data.curve.end(),
                   [](const auto& a, const auto& b) { return a.gamma < b.gamma; });
  data.curve.erase(std::unique(data.curve.begin(), data.curve.end(),
                               [](const auto& a, const auto& b) { return a.gamma == b.gamma; }),
                   data.curve.end());
  return data;
}

}  // namespace coneapprox

#endif  // CONEAPPROX_SWEEP_HPP
