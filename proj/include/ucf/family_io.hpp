#pragma once

// Family file formats.
//
//   JSON:  {"n": 3, "sets": [[], [1], [1, 2]]}
//   text:  one set per line, elements ascending and space-separated; a lone
//          "-" is the empty set; blank lines and lines starting with '#' are
//          skipped. n is the largest element mentioned.

#include <string>
#include <string_view>

#include <json.hpp>

#include "ucf/setfam.hpp"

namespace ucf {

enum class FamilyFormat { kAuto, kJson, kText };

/// Throws std::invalid_argument on malformed input.
SetFamily parse_family_json(std::string_view text);
SetFamily parse_family_text(std::string_view text);

nlohmann::json family_to_json(const SetFamily& family);
std::string format_family_json(const SetFamily& family);
std::string format_family_text(const SetFamily& family);

/// kAuto picks JSON for a ".json" extension and text otherwise. Throws
/// std::runtime_error if the file cannot be read.
SetFamily load_family(const std::string& path, FamilyFormat format = FamilyFormat::kAuto);

}  // namespace ucf
