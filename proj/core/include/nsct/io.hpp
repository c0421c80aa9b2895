#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nsct/group.hpp"

namespace nsct {

/// Reads the group JSON format ("cayley", "permutations" or "unitriangular").
/// Throws ParseError for malformed documents and the group_core errors for
/// tables that do not describe a group.
Group parse_group(std::string_view json_text, const Limits& limits = Limits::defaults());

/// Reads a whole file; throws InvalidArgument when it cannot be opened.
std::string read_file(const std::string& path);

/// Resolves one subgroup spec: "gen:3,5" (normal closure of the listed
/// element indices, as numbered in the group file), "pattern:(1,2),(1,3)"
/// or "all".
std::vector<NormalSubgroup> resolve_subgroup_spec(const Group& g, std::string_view spec,
                                                  const Limits& limits = Limits::defaults());

/// Parses "(1,2),(1,3)" into positions; the empty string is the empty set.
std::vector<std::pair<int, int>> parse_positions(std::string_view text);

}  // namespace nsct
