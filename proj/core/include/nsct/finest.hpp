#pragma once

#include <cstddef>
#include <vector>

#include "nsct/chartab.hpp"
#include "nsct/theory.hpp"

namespace nsct {

/// Elements grouped by equal normal closure of {g}.
Partition finest_by_closure(const Group& g);

/// Elements grouped by equal idempotent support E_g.
Partition finest_by_idempotents(const Group& g, const CharacterTable& t);

/// Result of the row/column grouping of a degree-normalized character table.
struct TableGrouping {
    std::vector<std::vector<std::size_t>> rows;     ///< irreducible indices, canonical order
    std::vector<std::vector<std::size_t>> columns;  ///< class ids, ordered by smallest element
    Partition column_elements;                      ///< `columns` expanded to elements
};

/// Normalizes each row by its degree, then groups columns by the set of rows
/// equal to 1 there, and rows by the set of columns where they equal 1.
TableGrouping finest_by_table_grouping(const CharacterTable& t);

struct FaithfulPart {
    NormalSubgroup kernel;
    std::vector<std::size_t> irreducibles;
};

/// Irreducibles grouped by kernel, in canonical kernel order.
std::vector<FaithfulPart> faithful_partition(const Group& g, const CharacterTable& t);

/// The theory of the lattice of all normal subgroups.
SupercharacterTheory finest_theory(const Group& g, const CharacterTable* t = nullptr,
                                   const Limits& limits = Limits::defaults());

}  // namespace nsct
