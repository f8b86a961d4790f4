#include "mms/json_io.hpp"

#include <fstream>
#include <map>
#include <set>

#include "mms/error.hpp"

namespace mms::io {

namespace {

[[noreturn]] void parse_error(const std::string& what) {
  throw Error(ErrorCode::kParseError, what);
}

std::vector<std::string> labels(const nlohmann::json& json, const char* field) {
  if (!json.is_array()) parse_error(std::string("'") + field + "' must be an array");
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& entry : json) {
    std::string label;
    if (entry.is_string()) {
      label = entry.get<std::string>();
    } else if (entry.is_number_integer()) {
      label = entry.dump();
    } else {
      parse_error(std::string("labels in '") + field + "' must be strings");
    }
    if (!seen.insert(label).second) {
      parse_error(std::string("duplicate label '") + label + "' in '" + field + "'");
    }
    out.push_back(std::move(label));
  }
  return out;
}

RawInstance::Value utility_value(const nlohmann::json& json) {
  if (json.is_number_integer()) return Rational::parse(json.dump());
  if (json.is_number_float()) return json.get<double>();
  if (json.is_string()) return Rational::parse(json.get<std::string>());
  parse_error("utility must be an integer or a \"p/q\" string, got " + json.dump());
}

}  // namespace

Json to_json(const Instance& instance) {
  Json out;
  out["kind"] = std::string(to_string(instance.kind()));
  out["agents"] = instance.agents();
  out["items"] = instance.items();
  Json rows = Json::array();
  for (const auto& row : instance.utilities()) {
    Json values = Json::array();
    for (const Rational& u : row) values.push_back(u.to_string());
    rows.push_back(std::move(values));
  }
  out["utilities"] = std::move(rows);
  return out;
}

Instance instance_from_json(const nlohmann::json& json) {
  if (!json.is_object()) parse_error("instance must be a JSON object");
  for (const char* field : {"kind", "items", "utilities"}) {
    if (!json.contains(field)) parse_error(std::string("missing field '") + field + "'");
  }
  RawInstance raw;
  const auto& kind = json.at("kind");
  if (kind == "goods") {
    raw.kind = Kind::kGoods;
  } else if (kind == "chores") {
    raw.kind = Kind::kChores;
  } else {
    parse_error("'kind' must be \"goods\" or \"chores\"");
  }
  raw.items = labels(json.at("items"), "items");

  const auto& rows = json.at("utilities");
  if (!rows.is_array()) parse_error("'utilities' must be an array of rows");
  for (const auto& row : rows) {
    if (!row.is_array()) parse_error("each utility row must be an array");
    std::vector<RawInstance::Value> values;
    for (const auto& u : row) values.push_back(utility_value(u));
    raw.utilities.push_back(std::move(values));
  }
  if (json.contains("agents")) {
    raw.agents = labels(json.at("agents"), "agents");
    raw.n_agents = raw.agents.size();
  } else {
    raw.n_agents = raw.utilities.size();
  }
  return validate_instance(raw);
}

Json bundle_labels(const std::vector<std::size_t>& bundle, const Instance& instance) {
  Json out = Json::array();
  for (std::size_t item : bundle) out.push_back(instance.items().at(item));
  return out;
}

Json to_json(const Allocation& allocation, const Instance& instance) {
  Json bundles = Json::array();
  for (const auto& bundle : allocation.bundles()) {
    bundles.push_back(bundle_labels(bundle, instance));
  }
  Json out;
  out["bundles"] = std::move(bundles);
  return out;
}

Allocation allocation_from_json(const nlohmann::json& json, const Instance& instance) {
  if (!json.is_object() || !json.contains("bundles") || !json.at("bundles").is_array()) {
    throw Error(ErrorCode::kMalformedPartition, "allocation needs a 'bundles' array");
  }
  const auto& bundles_json = json.at("bundles");
  if (bundles_json.size() != instance.n_agents()) {
    throw Error(ErrorCode::kMalformedPartition,
                "expected " + std::to_string(instance.n_agents()) + " bundles, got " +
                    std::to_string(bundles_json.size()));
  }
  std::map<std::string, std::size_t> index;
  for (std::size_t j = 0; j < instance.n_items(); ++j) index[instance.items()[j]] = j;

  std::vector<std::vector<std::size_t>> bundles;
  for (const auto& bundle_json : bundles_json) {
    if (!bundle_json.is_array()) {
      throw Error(ErrorCode::kMalformedPartition, "each bundle must be an array");
    }
    std::vector<std::size_t> bundle;
    for (const auto& label_json : bundle_json) {
      const std::string label =
          label_json.is_string() ? label_json.get<std::string>() : label_json.dump();
      const auto it = index.find(label);
      if (it == index.end()) {
        throw Error(ErrorCode::kMalformedPartition, "unknown item '" + label + "'");
      }
      bundle.push_back(it->second);
    }
    bundles.push_back(std::move(bundle));
  }
  return Allocation::from_bundles(std::move(bundles), instance.n_items());
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open '" + path.string() + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    parse_error("'" + path.string() + "': " + e.what());
  }
}

Instance read_instance(const std::filesystem::path& path) {
  return instance_from_json(read_json_file(path));
}

Allocation read_allocation(const std::filesystem::path& path, const Instance& instance) {
  return allocation_from_json(read_json_file(path), instance);
}

}  // namespace mms::io
