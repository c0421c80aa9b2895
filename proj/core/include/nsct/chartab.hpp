#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "nsct/cyclotomic.hpp"
#include "nsct/group.hpp"

namespace nsct {

/// A partition of element indices; canonical form has each part sorted and
/// parts ordered by their smallest member.
using Partition = std::vector<std::vector<Element>>;

Partition canonical(Partition p);

/// The complex irreducible character table of a group.
///
/// Rows are irreducible characters (trivial first, then by degree and the
/// lexicographic order of their value tuples); columns follow `classes`.
/// Every value is written over Q(ζ_m) with m = `conductor`, the exponent of G.
struct CharacterTable {
    std::size_t group_order = 0;
    unsigned conductor = 1;
    ClassPartition classes;
    std::vector<std::vector<CycNum>> values;
    std::vector<long long> degrees;

    std::size_t size() const noexcept { return values.size(); }
    const CycNum& value(std::size_t chi, Element g) const { return values[chi][classes.class_of[g]]; }
};

/// Checks every table invariant; throws InvariantViolation naming the first failure.
void validate_character_table(const CharacterTable& t);

/// Sorts rows into canonical order (in place).
void canonicalize_rows(CharacterTable& t);

CharacterTable dixon_character_table(const Group& g, std::size_t max_order = 2000);

/// Reads the JSON table format; class representatives are element indices of
/// the group file `g` was loaded from. Throws ParseError or InvariantViolation.
CharacterTable parse_character_table(const Group& g, std::string_view json_text);
std::string write_character_table(const Group& g, const CharacterTable& t);

/// {g : χ_i(g) = χ_i(1)}
NormalSubgroup kernel(const Group& g, const CharacterTable& t, std::size_t chi);

/// χ^N(g) = ρ_{G/N}(gN): |G|/|N| on N, zero elsewhere.
Rational quotient_regular_value(const Group& g, const NormalSubgroup& n, Element x);

/// For each element g, the irreducibles i with χ_i(g) ≠ χ_i(1); these index
/// the primitive central idempotents in E_g.
struct IdempotentSupport {
    std::vector<Mask> per_class;
    std::vector<std::size_t> class_of;

    const Mask& of(Element g) const { return per_class[class_of[g]]; }
};

IdempotentSupport idempotent_supports(const CharacterTable& t);

/// Elements grouped by equal idempotent support.
Partition k_classes(const CharacterTable& t);

/// Group-algebra check of the primitive central idempotents: e_χ·e_ψ = δ e_χ
/// and Ĉ_g = Σ_i (|C_g|/χ_i(1)) χ_i(g) e_{χ_i}. Returns the failures found.
std::vector<std::string> check_central_idempotents(const Group& g, const CharacterTable& t,
                                                   std::size_t max_order = 24);

}  // namespace nsct
