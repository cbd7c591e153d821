#pragma once

// Rendering of invariant reports as key=value text or JSON documents.

#include <string>

#include <json.hpp>

#include "curves/nielsen.hpp"

namespace curves {

using Json = nlohmann::ordered_json;

Json to_json(const ClassInventory& inv);
Json to_json(const SelfReport& r, const std::string& surface, const std::string& word);
Json to_json(const PairReport& r, const std::string& surface, const std::string& w1,
             const std::string& w2);

// One `key=value` line per field; inventory fields are prefixed `inventory.`.
std::string to_text(const Json& doc);

}  // namespace curves
