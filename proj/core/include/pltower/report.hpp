#pragma once

#include <string>
#include <string_view>

#include "pltower/tower.hpp"

namespace pltower {

inline constexpr int report_schema_version = 1;

/// Versioned JSON form of a tower report. Numbers are exact strings, words
/// and generator expressions use the element grammar. Two-space indent, keys
/// in a fixed order, so serialize(parse(s)) == s for any s produced here.
std::string to_json(const TowerReport& r);

/// Throws SyntaxError on malformed JSON and SemanticError on schema
/// violations.
TowerReport report_from_json(std::string_view text);

}  // namespace pltower
