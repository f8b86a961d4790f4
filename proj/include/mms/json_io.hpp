#pragma once

// JSON file formats.
//
// Instance:   {"kind": "goods"|"chores", "agents": [labels], "items": [labels],
//              "utilities": [[u, ...], ...]}
//             with u an integer or a "p/q" string.
// Allocation: {"bundles": [[item labels], ...]}, one bundle per agent.

#include <filesystem>
#include <string>

#include "json.hpp"
#include "mms/model.hpp"

namespace mms::io {

using Json = nlohmann::ordered_json;

Json to_json(const Instance& instance);
// Throws Error{kParseError} on malformed JSON structure, plus the
// validate_instance errors.
Instance instance_from_json(const nlohmann::json& json);

Json to_json(const Allocation& allocation, const Instance& instance);
// Throws Error{kMalformedPartition} on overlap, missing or unknown items, or
// a bundle count that differs from the agent count.
Allocation allocation_from_json(const nlohmann::json& json, const Instance& instance);

// Throws Error{kParseError} when the file cannot be read or parsed.
nlohmann::json read_json_file(const std::filesystem::path& path);
Instance read_instance(const std::filesystem::path& path);
Allocation read_allocation(const std::filesystem::path& path, const Instance& instance);

// Labels of the items in one bundle.
Json bundle_labels(const std::vector<std::size_t>& bundle, const Instance& instance);

}  // namespace mms::io
