#pragma once

#include <string>

#include "nsct/chartab.hpp"
#include "nsct/lattice.hpp"
#include "nsct/theory.hpp"

namespace nsct {

/// For unitriangular groups, the position set of each node that is a pattern
/// subgroup, e.g. "{(1,3),(1,4)}"; empty strings elsewhere.
NodeCaptions pattern_captions(const Group& g, const NormalLattice& l);

std::string render_text(const Group& g, const SupercharacterTheory& th, const NodeCaptions& captions = {});
std::string render_json(const Group& g, const SupercharacterTheory& th);
std::string render_latex(const Group& g, const SupercharacterTheory& th, const NodeCaptions& captions = {});

std::string render_character_table(const Group& g, const CharacterTable& t);

}  // namespace nsct
