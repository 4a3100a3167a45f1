/**
 * @file cli.hpp
 * @brief Subcommand dispatch for the command-line tool.
 *
 * Exit codes: 0 success, 1 semantic failure (invalid instance or set,
 * rejected parameters), 2 usage, parse or I/O error.
 */

#ifndef CONEAPPROX_CLI_HPP
#define CONEAPPROX_CLI_HPP

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "approximation.hpp"
#include "bounds.hpp"
#include "instance.hpp"
#include "io.hpp"
#include "plot.hpp"
#include "supportedness.hpp"
#include "sweep.hpp"

namespace coneapprox::cli {

inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kInputError = 2;

namespace detail {

/// Writes `text` to `path`, or to `out` when the path is empty or "-".
inline void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ParseError("cannot write '" + path + "'");
  file << text;
  if (!file) throw ParseError("failed writing '" + path + "'");
}

inline Instance load_valid(const std::string& path, std::ostream& err, bool& ok) {
  Instance instance = io::load_instance(path);
  const auto violations = validate(instance);
  for (const auto& v : violations) err << path << ": " << v.message() << "\n";
  ok = violations.empty();
  return instance;
}

inline IdSet split_ids(const std::vector<std::string>& raw) {
  IdSet ids;
  for (const auto& item : raw) {
    std::stringstream ss(item);
    std::string id;
    while (std::getline(ss, id, ',')) {
      id = io::trim(id);
      if (!id.empty()) ids.insert(id);
    }
  }
  return ids;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cone-order approximation of biobjective solution sets"};
  app.require_subcommand(1);

  std::string path;
  std::string output;
  std::string gamma_text;
  std::string phi_text;

  auto* generate = app.add_subcommand("generate", "Write a generated instance as JSON");
  std::string family_text;
  std::string generate_gamma = "pi";
  generate->add_option("--family", family_text, "family[:key=value;...]")->required();
  generate->add_option("--gamma", generate_gamma, "Inner angle (radians or e.g. 0.75pi)")
      ->capture_default_str();
  generate->add_option("-o,--output", output, "Output path (stdout if omitted)");

  auto* validate_cmd = app.add_subcommand("validate", "Check an instance file");
  validate_cmd->add_option("instance", path)->required();

  auto* sets = app.add_subcommand("sets", "Print efficient, supported or gamma-supported ids");
  std::string mode = "efficient";
  sets->add_option("instance", path)->required();
  sets->add_option("--mode", mode)->check(CLI::IsMember({"efficient", "supported", "gamma-supported"}));
  sets->add_option("--gamma", gamma_text, "Inner angle, required for gamma-supported");

  auto* verify = app.add_subcommand("verify", "Check whether a set is an alpha-approximation");
  std::vector<std::string> set_raw;
  double alpha = 1.0;
  verify->add_option("instance", path)->required();
  verify->add_option("--set", set_raw, "Comma-separated ids")->required();
  verify->add_option("--alpha", alpha)->required();
  auto* vgamma = verify->add_option("--gamma", gamma_text, "Cone inner angle");
  auto* vphi = verify->add_option("--phi", phi_text, "Cone rotation");
  vgamma->needs(vphi);
  vphi->needs(vgamma);

  auto* bounds_cmd = app.add_subcommand("bounds", "Tabulate guarantee factors as CSV");
  std::string from_text = "pi/2";
  std::string to_text = "pi";
  std::size_t steps = 11;
  bounds_cmd->add_option("--from", from_text)->capture_default_str();
  bounds_cmd->add_option("--to", to_text)->capture_default_str();
  bounds_cmd->add_option("--steps", steps)->capture_default_str();
  bounds_cmd->add_option("-o,--output", output);

  auto* sweep_cmd = app.add_subcommand("sweep", "Empirical factor of the gamma-supported set over gamma");
  std::vector<std::string> generator_texts;
  sweep_cmd->add_option("--from", from_text)->capture_default_str();
  sweep_cmd->add_option("--to", to_text)->capture_default_str();
  sweep_cmd->add_option("--steps", steps)->capture_default_str();
  sweep_cmd->add_option("--generator", generator_texts, "Repeatable generator spec")->required();
  sweep_cmd->add_option("-o,--output", output);

  auto* plot_cmd = app.add_subcommand("plot", "Render a sweep or bounds CSV as SVG");
  plot_cmd->add_option("csv", path)->required();
  plot_cmd->add_option("-o,--output", output);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (generate->parsed()) {
      const auto spec = io::parse_generator_spec(family_text);
      detail::emit(output, io::dump_instance(io::generate(spec, io::parse_angle(generate_gamma))), out);
      return kOk;
    }
    if (validate_cmd->parsed()) {
      bool ok = false;
      detail::load_valid(path, err, ok);
      return ok ? kOk : kFailure;
    }
    if (sets->parsed()) {
      bool ok = false;
      const Instance instance = detail::load_valid(path, err, ok);
      if (!ok) return kFailure;
      IdSet ids;
      if (mode == "efficient") {
        ids = efficient_set(instance);
      } else if (mode == "supported") {
        ids = supported_set(instance);
      } else {
        if (gamma_text.empty()) {
          err << "--gamma is required for mode gamma-supported\n";
          return kInputError;
        }
        ids = gamma_supported_set(instance, io::parse_angle(gamma_text));
      }
      out << io::dump_ids(ids);
      return kOk;
    }
    if (verify->parsed()) {
      bool ok = false;
      const Instance instance = detail::load_valid(path, err, ok);
      if (!ok) return kFailure;
      const IdSet members = detail::split_ids(set_raw);
      for (const auto& id : members) {
        if (!instance.contains(id)) {
          err << "unknown id '" << id << "'\n";
          return kInputError;
        }
      }
      std::optional<ConeParams> params;
      if (!gamma_text.empty()) params.emplace(io::parse_angle(gamma_text), io::parse_angle(phi_text));
      const ApproxReport report = verify_approx_set(instance, members, alpha, params);
      out << io::report_to_json(report).dump(2) << "\n";
      return report.is_valid ? kOk : kFailure;
    }
    if (bounds_cmd->parsed()) {
      std::ostringstream csv;
      write_bounds_csv(gamma_grid(io::parse_angle(from_text), io::parse_angle(to_text), steps), csv);
      detail::emit(output, csv.str(), out);
      return kOk;
    }
    if (sweep_cmd->parsed()) {
      const Angle from = io::parse_angle(from_text);
      const Angle to = io::parse_angle(to_text);
      if (!valid_gamma(from) || !valid_gamma(to) || to < from || steps < 1) {
        err << "sweep needs pi/2 <= from <= to <= pi and steps >= 1\n";
        return kFailure;
      }
      std::vector<io::GeneratorSpec> specs;
      for (const auto& t : generator_texts) specs.push_back(io::parse_generator_spec(t));
      const auto rows = run_sweep(from, to, steps, specs, err);
      std::ostringstream csv;
      write_sweep_csv(rows, csv);
      detail::emit(output, csv.str(), out);
      return kOk;
    }
    if (plot_cmd->parsed()) {
      std::istringstream in(io::read_file(path));
      std::ostringstream svg;
      write_svg(read_plot_csv(in), svg);
      detail::emit(output, svg.str(), out);
      return kOk;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::kUnknownId ? kInputError : kFailure;
  }
  return kInputError;
}

}  // namespace coneapprox::cli

#endif  // CONEAPPROX_CLI_HPP
