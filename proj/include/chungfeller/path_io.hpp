#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "chungfeller/core.hpp"
#include "chungfeller/enumeration.hpp"
#include "chungfeller/pointed.hpp"

namespace chungfeller {

/// Parses the shorthand "(1,1)(1,-2)(2,1)": one or more parenthesised
/// integer pairs, whitespace allowed between tokens. Throws Error(ParseError).
/// The result is not validated as a path.
std::vector<Step> parse_steps(std::string_view text);

/// parse_steps followed by validation.
LatticePath parse_path(std::string_view text);

std::string format_path(const LatticePath& path);

/// {"steps": [[x,y],...]}
nlohmann::ordered_json to_json(const LatticePath& path);
/// {"steps": [[x,y],...], "root_offset": j}
nlohmann::ordered_json to_json(const PointedLatticePath& q);

/// Accepts the object form above; throws Error(ParseError) on shape errors
/// and validation errors for invalid paths.
LatticePath path_from_json(const nlohmann::ordered_json& j);
PointedLatticePath pointed_from_json(const nlohmann::ordered_json& j);

/// Explicit step list [[x,y],...] as used for custom step sets.
std::vector<Step> steps_from_json(const nlohmann::ordered_json& j);

/// {"n":…, "m":…, "statistic":"PNPL", "counts": {"0": "…"}, "total": "…"}
/// Counts are decimal strings.
nlohmann::ordered_json to_json(const Distribution& d, int n, std::int64_t m, Statistic stat);

/// "r,count" header followed by one row per value.
std::string to_csv(const Distribution& d);

}  // namespace chungfeller
