#include <fstream>
#include <set>
#include <sstream>

#include "cyclicdd/error.hpp"
#include "cyclicdd/simulation.hpp"
#include "json.hpp"

namespace cyclicdd {

namespace {

using nlohmann::json;

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  fail(ErrorKind::ConfigError, "field '" + field + "': " + what);
}

void reject_unknown(const json& obj, const std::string& prefix, const std::set<std::string>& known) {
  for (const auto& [key, value] : obj.items())
    if (!known.contains(key)) field_error(prefix + key, "unknown field");
}

const json& require(const json& obj, const std::string& key, const std::string& prefix) {
  const auto it = obj.find(key);
  if (it == obj.end()) field_error(prefix + key, "required field is missing");
  return *it;
}

std::string as_string(const json& v, const std::string& field) {
  if (!v.is_string()) field_error(field, "expected a string");
  return v.get<std::string>();
}

std::uint64_t as_uint(const json& v, const std::string& field) {
  if (!v.is_number_unsigned()) field_error(field, "expected a non-negative integer");
  return v.get<std::uint64_t>();
}

bool as_bool(const json& v, const std::string& field) {
  if (!v.is_boolean()) field_error(field, "expected true or false");
  return v.get<bool>();
}

template <typename T, typename Convert>
void optional_field(const json& obj, const std::string& key, const std::string& prefix, T& out, Convert convert) {
  const auto it = obj.find(key);
  if (it != obj.end()) out = convert(*it, prefix + key);
}

unsigned as_unsigned(const json& v, const std::string& field) {
  const auto x = as_uint(v, field);
  if (x > 0xFFFFFFFFull) field_error(field, "value too large");
  return static_cast<unsigned>(x);
}

DecoderSettings parse_decoder(const json& obj) {
  const std::string prefix = "decoder.";
  if (!obj.is_object()) field_error("decoder", "expected an object");
  reject_unknown(obj, prefix,
                 {"algo", "directions", "dd_max_iter", "spa_max_iter", "osd_order", "hmatrix", "minimal"});
  DecoderSettings d;
  const auto algo = as_string(require(obj, "algo", prefix), prefix + "algo");
  try {
    d.algorithm = parse_algorithm(algo);
  } catch (const Error& e) {
    field_error(prefix + "algo", e.what());
  }
  optional_field(obj, "directions", prefix, d.directions, as_string);
  optional_field(obj, "dd_max_iter", prefix, d.dd_max_iterations, as_unsigned);
  optional_field(obj, "spa_max_iter", prefix, d.spa_max_iterations, as_unsigned);
  optional_field(obj, "osd_order", prefix, d.osd_order, as_unsigned);
  optional_field(obj, "hmatrix", prefix, d.hmatrix, as_string);
  optional_field(obj, "minimal", prefix, d.minimal, as_bool);
  return d;
}

}  // namespace

SimConfig parse_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::ConfigError, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail(ErrorKind::ConfigError, "config must be a JSON object");
  reject_unknown(doc, "",
                 {"code", "prim_poly", "decoder", "ebn0_db", "max_frames", "max_frame_errors", "seed", "workers",
                  "all_zero", "noiseless", "batch"});
  SimConfig c;
  c.workers = default_worker_count();
  c.code = as_string(require(doc, "code", ""), "code");
  c.decoder = parse_decoder(require(doc, "decoder", ""));
  const auto& points = require(doc, "ebn0_db", "");
  if (!points.is_array() || points.empty()) field_error("ebn0_db", "expected a nonempty array of numbers");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!points[i].is_number()) field_error("ebn0_db[" + std::to_string(i) + "]", "expected a number");
    c.ebn0_db.push_back(points[i].get<double>());
  }
  c.max_frames = as_uint(require(doc, "max_frames", ""), "max_frames");
  c.seed = as_uint(require(doc, "seed", ""), "seed");
  optional_field(doc, "prim_poly", "", c.prim_poly, as_unsigned);
  optional_field(doc, "max_frame_errors", "", c.max_frame_errors, as_uint);
  optional_field(doc, "workers", "", c.workers, as_unsigned);
  optional_field(doc, "all_zero", "", c.all_zero, as_bool);
  optional_field(doc, "noiseless", "", c.noiseless, as_bool);
  optional_field(doc, "batch", "", c.batch, as_uint);
  if (c.max_frames < 1) field_error("max_frames", "must be at least 1");
  if (c.max_frame_errors < 1) field_error("max_frame_errors", "must be at least 1");
  if (c.workers < 1) field_error("workers", "must be at least 1");
  if (c.batch < 1) field_error("batch", "must be at least 1");
  return c;
}

SimConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::IoError, "cannot open " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

std::string dump_config(const SimConfig& c) {
  json doc;
  doc["code"] = c.code;
  doc["prim_poly"] = c.prim_poly;
  doc["decoder"] = {{"algo", std::string(to_string(c.decoder.algorithm))},
                    {"directions", c.decoder.directions},
                    {"dd_max_iter", c.decoder.dd_max_iterations},
                    {"spa_max_iter", c.decoder.spa_max_iterations},
                    {"osd_order", c.decoder.osd_order},
                    {"hmatrix", c.decoder.hmatrix},
                    {"minimal", c.decoder.minimal}};
  doc["ebn0_db"] = c.ebn0_db;
  doc["max_frames"] = c.max_frames;
  doc["max_frame_errors"] = c.max_frame_errors;
  doc["seed"] = c.seed;
  doc["workers"] = c.workers;
  doc["all_zero"] = c.all_zero;
  doc["noiseless"] = c.noiseless;
  doc["batch"] = c.batch;
  return doc.dump(2);
}

void save_config(const std::filesystem::path& path, const SimConfig& config) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::IoError, "cannot write " + path.string());
  out << dump_config(config) << '\n';
  if (!out) fail(ErrorKind::IoError, "write failed for " + path.string());
}

}  // namespace cyclicdd
