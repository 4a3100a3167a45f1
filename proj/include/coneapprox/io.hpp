/**
 * @file io.hpp
 * @brief JSON instance files, report serialization, angle literals and
 *        generator specifications.
 *
 * Instance file format (UTF-8 JSON, unknown fields rejected):
 *
 *     {"sense": "min" | "max",
 *      "solutions": [{"id": <string>, "f": [<number>, <number>]}, ...]}
 */

#ifndef CONEAPPROX_IO_HPP
#define CONEAPPROX_IO_HPP

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "approximation.hpp"
#include "common.hpp"
#include "generators.hpp"
#include "instance.hpp"

namespace coneapprox {

/// Malformed input: bad JSON, schema violations, unreadable files.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace io {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

inline Instance instance_from_json(const Json& doc) {
  if (!doc.is_object()) throw ParseError("instance must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "sense" && key != "solutions") throw ParseError("unknown field '" + key + "'");
  }
  if (!doc.contains("sense") || !doc["sense"].is_string()) {
    throw ParseError("field 'sense' must be \"min\" or \"max\"");
  }
  const std::string sense_text = doc["sense"].get<std::string>();
  if (sense_text != "min" && sense_text != "max") {
    throw ParseError("field 'sense' must be \"min\" or \"max\"");
  }
  if (!doc.contains("solutions") || !doc["solutions"].is_array()) {
    throw ParseError("field 'solutions' must be an array");
  }
  std::vector<Solution> sols;
  for (const auto& entry : doc["solutions"]) {
    if (!entry.is_object()) throw ParseError("each solution must be an object");
    for (const auto& [key, _] : entry.items()) {
      if (key != "id" && key != "f") throw ParseError("unknown solution field '" + key + "'");
    }
    if (!entry.contains("id") || !entry["id"].is_string()) throw ParseError("solution 'id' must be a string");
    if (!entry.contains("f") || !entry["f"].is_array() || entry["f"].size() != 2 ||
        !entry["f"][0].is_number() || !entry["f"][1].is_number()) {
      throw ParseError("solution 'f' must be an array of two numbers");
    }
    sols.push_back({entry["id"].get<std::string>(),
                    {entry["f"][0].get<double>(), entry["f"][1].get<double>()}});
  }
  return Instance(sense_text == "min" ? Sense::kMin : Sense::kMax, std::move(sols));
}

inline Instance parse_instance(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return instance_from_json(doc);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Instance load_instance(const std::string& path) { return parse_instance(read_file(path)); }

inline OrderedJson instance_to_json(const Instance& instance) {
  OrderedJson doc;
  doc["sense"] = instance.sense() == Sense::kMin ? "min" : "max";
  doc["solutions"] = OrderedJson::array();
  for (const auto& s : instance.solutions()) {
    OrderedJson entry;
    entry["id"] = s.id;
    entry["f"] = {s.objectives.f1, s.objectives.f2};
    doc["solutions"].push_back(std::move(entry));
  }
  return doc;
}

inline std::string dump_instance(const Instance& instance) {
  return instance_to_json(instance).dump(2) + "\n";
}

inline OrderedJson number_or_null(double v) {
  return std::isfinite(v) ? OrderedJson(v) : OrderedJson(nullptr);
}

inline OrderedJson report_to_json(const ApproxReport& report) {
  OrderedJson doc;
  doc["is_valid"] = report.is_valid;
  doc["alpha_queried"] = report.alpha_queried;
  doc["min_alpha"] = number_or_null(report.min_alpha);
  doc["witnesses"] = OrderedJson::array();
  for (const auto& w : report.witnesses) {
    OrderedJson entry;
    entry["uncovered"] = w.uncovered;
    entry["best"] = w.best.empty() ? OrderedJson(nullptr) : OrderedJson(w.best);
    entry["ratio"] = number_or_null(w.ratio);
    doc["witnesses"].push_back(std::move(entry));
  }
  return doc;
}

inline std::string dump_ids(const IdSet& ids) { return Json(ids).dump() + "\n"; }

inline std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

inline std::optional<double> parse_double(std::string_view text) {
  const std::string t = trim(text);
  if (t.empty()) return std::nullopt;
  double value = 0.0;
  const char* first = t.data();
  const char* last = t.data() + t.size();
  if (*first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return value;
}

/**
 * @brief Parses radians ("2.35619") or multiples of π ("0.75pi", "pi", "3pi/4").
 */
inline Angle parse_angle(std::string_view text) {
  std::string t = trim(text);
  for (auto& ch : t) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  const auto pos = t.find("pi");
  if (pos == std::string::npos) {
    const auto v = parse_double(t);
    if (!v) throw ParseError("invalid angle '" + std::string(text) + "'");
    return Angle(*v);
  }
  const std::string head = trim(std::string_view(t).substr(0, pos));
  std::string tail = trim(std::string_view(t).substr(pos + 2));
  double factor = 1.0;
  if (!head.empty()) {
    const std::string h = head.back() == '*' ? trim(std::string_view(head).substr(0, head.size() - 1)) : head;
    const auto v = h == "-" ? std::optional<double>(-1.0) : parse_double(h);
    if (!v) throw ParseError("invalid angle '" + std::string(text) + "'");
    factor = *v;
  }
  if (!tail.empty()) {
    if (tail.front() != '/') throw ParseError("invalid angle '" + std::string(text) + "'");
    const auto d = parse_double(std::string_view(tail).substr(1));
    if (!d || *d == 0.0) throw ParseError("invalid angle '" + std::string(text) + "'");
    factor /= *d;
  }
  return Angle(factor * kPi);
}

inline std::optional<FrontShape> parse_shape(std::string_view text) {
  if (text == "convex") return FrontShape::kConvex;
  if (text == "concave") return FrontShape::kConcave;
  if (text == "mixed") return FrontShape::kMixed;
  return std::nullopt;
}

/**
 * @brief A generator family with its parameters, written
 *        `family[:key=value[;key=value...]]`.
 *
 * Families: example1 (alpha, phi; phi defaults to φ̄_γ), example2 (alpha),
 * tightness (alpha, epsilon), maximization (alpha), random (n, seed, shape),
 * knapsack (k, seed). γ is supplied separately.
 */
struct GeneratorSpec {
  std::string family;
  GeneratorParams params;
  std::optional<Angle> phi;
  std::size_t n = 50;
  FrontShape shape = FrontShape::kConvex;
  std::size_t k = 8;
  std::map<std::string, std::string> raw;

  /// Family plus its explicitly given parameters, sorted by key.
  std::string canonical() const {
    std::string out = family;
    char sep = ':';
    for (const auto& [key, value] : raw) {
      out += sep;
      out += key + "=" + value;
      sep = ';';
    }
    return out;
  }
};

inline std::uint64_t parse_count(const std::string& key, const std::string& value) {
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ParseError("parameter '" + key + "' must be a nonnegative integer");
  }
  return out;
}

inline GeneratorSpec parse_generator_spec(std::string_view text) {
  GeneratorSpec spec;
  const std::string t = trim(text);
  const auto colon = t.find(':');
  spec.family = t.substr(0, colon);
  static const std::map<std::string, std::vector<std::string>> kAllowed = {
      {"example1", {"alpha", "phi"}},     {"example2", {"alpha"}},
      {"tightness", {"alpha", "epsilon"}}, {"maximization", {"alpha"}},
      {"random", {"n", "seed", "shape"}}, {"knapsack", {"k", "seed"}}};
  const auto allowed = kAllowed.find(spec.family);
  if (allowed == kAllowed.end()) throw ParseError("unknown generator family '" + spec.family + "'");
  if (colon != std::string::npos) {
    std::stringstream rest(t.substr(colon + 1));
    std::string item;
    while (std::getline(rest, item, ';')) {
      item = trim(item);
      if (item.empty()) continue;
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw ParseError("expected key=value in '" + item + "'");
      const std::string key = trim(std::string_view(item).substr(0, eq));
      const std::string value = trim(std::string_view(item).substr(eq + 1));
      if (std::find(allowed->second.begin(), allowed->second.end(), key) == allowed->second.end()) {
        throw ParseError("generator '" + spec.family + "' has no parameter '" + key + "'");
      }
      spec.raw[key] = value;
    }
  }
  for (const auto& [key, value] : spec.raw) {
    if (key == "alpha" || key == "epsilon") {
      const auto v = parse_double(value);
      if (!v) throw ParseError("parameter '" + key + "' must be a number");
      (key == "alpha" ? spec.params.alpha : spec.params.epsilon) = *v;
    } else if (key == "phi") {
      spec.phi = parse_angle(value);
    } else if (key == "seed") {
      spec.params.seed = parse_count(key, value);
    } else if (key == "n") {
      spec.n = parse_count(key, value);
    } else if (key == "k") {
      spec.k = parse_count(key, value);
    } else if (key == "shape") {
      const auto shape = parse_shape(value);
      if (!shape) throw ParseError("shape must be convex, concave or mixed");
      spec.shape = *shape;
    }
  }
  if (spec.family == "example1" && !spec.raw.count("alpha")) spec.params.alpha = 2.0;
  return spec;
}

/// Materializes `spec` at inner angle γ; throws coneapprox::Error on bad parameters.
inline Instance generate(const GeneratorSpec& spec, Angle gamma) {
  const GeneratorParams& p = spec.params;
  if (spec.family == "example1") {
    const Angle phi = spec.phi.value_or(Angle(gamma.radians() / 2.0 - kPi / 4.0));
    return gen_example1(p.alpha, gamma, phi);
  }
  if (spec.family == "example2") return gen_example2(p.alpha, gamma);
  if (spec.family == "tightness") return gen_tightness(p.alpha, gamma, p.epsilon);
  if (spec.family == "maximization") return gen_maximization(p.alpha, gamma);
  if (spec.family == "random") return gen_random_front(spec.n, p.seed, spec.shape);
  if (spec.family == "knapsack") return gen_knapsack_enumeration(spec.k, p.seed);
  throw ParseError("unknown generator family '" + spec.family + "'");
}

}  // namespace io
}  // namespace coneapprox

#endif  // CONEAPPROX_IO_HPP
