#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "hamwalk/digraph.hpp"
#include "hamwalk/group.hpp"
#include "hamwalk/series.hpp"

namespace hamwalk::io {

using nlohmann::json;

inline constexpr std::size_t kDefaultCap = 1u << 14;

/// Group file schemas (unknown keys are rejected):
///   {"name": str, "labels": [str], "table": [[int]]}
///   {"name": str, "degree": int, "perm_gens": [[int]], "cap": int}
/// "name" and "labels" are optional; "cap" defaults to `default_cap`.
Group parse_group(const json& j, std::size_t default_cap = kDefaultCap);

/// "builtin:<name>" or a path to a group file.
Group load_group(std::string_view source, std::size_t cap = kDefaultCap);

/// Comma-separated labels (commas inside parentheses do not split); a token
/// that is not a label but is a decimal element index is accepted as one.
GenSet parse_gens(const Group& g, std::string_view list);
std::vector<std::string> split_gens(std::string_view list);

struct WalkFile {
  std::string group;               // source accepted by load_group
  std::vector<std::string> gens;   // generator labels, in order
  std::size_t start = 0;
  std::vector<std::string> steps;  // generator labels
  std::vector<std::size_t> vertices;
  WalkKind kind = WalkKind::Path;
  bool verified = false;
};

json walk_to_json(const WalkFile& w);
WalkFile walk_from_json(const json& j);
WalkFile make_walk_file(std::string group_source, const GenSet& s, const Walk& w, WalkKind kind,
                        bool verified);

json series_to_json(const Group& g, const SubnormalSeries& s);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

}  // namespace hamwalk::io
