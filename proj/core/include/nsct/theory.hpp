#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nsct/chartab.hpp"
#include "nsct/lattice.hpp"

namespace nsct {

/// N° for a lattice node N: the elements of N lying in no smaller node.
struct Superclass {
    std::size_t node = 0;
    std::vector<Element> elements;
};

/// X^{N•}: irreducibles whose kernel contains N but no larger node.
struct CharPart {
    std::size_t node = 0;
    std::vector<std::size_t> irreducibles;
};

/// A normal supercharacter theory built from a lattice A(S).
///
/// Columns are the nonempty superclasses N°; rows are the nodes whose
/// supercharacter χ^{N•} is nonzero. The two node sets need not coincide
/// (in C3×C3, {1}° = {1} while no irreducible is faithful), only their sizes.
/// table[i][j] is χ^{row_nodes[i]•} on superclasses[j].
struct SupercharacterTheory {
    NormalLattice lattice;
    std::vector<Superclass> superclasses;
    std::vector<std::size_t> row_nodes;
    std::vector<CharPart> char_parts;  ///< aligned with row_nodes; empty unless a table was supplied
    bool has_characters = false;
    std::vector<std::vector<std::int64_t>> table;

    std::size_t size() const noexcept { return superclasses.size(); }
};

/// Nonempty N°, in node order.
std::vector<Superclass> superclasses(const Group& g, const NormalLattice& l);

/// For each element, the node N with g ∈ N° (the smallest node containing g).
std::vector<std::size_t> superclass_nodes(const Group& g, const NormalLattice& l);

/// Nonempty X^{N•}, in node order.
std::vector<CharPart> char_parts(const Group& g, const NormalLattice& l, const CharacterTable& t);

/// Σ μ(N,M)·|G|/|M| over nodes M ⊇ N with g ∈ M.
std::int64_t values_mobius(const Group& g, const NormalLattice& l, std::size_t node, Element x);

/// Evaluates χ^{N•} top-down: Σ_{ψ∈X^{N•}} ψ(1)² on N, and -Σ_{K⊃N} χ^{K•}
/// elsewhere. Results are memoized per (node, superclass).
class RecursiveValues {
public:
    RecursiveValues(const Group& g, const NormalLattice& l, const CharacterTable& t);

    std::int64_t operator()(std::size_t node, Element x);

private:
    std::int64_t at(std::size_t node, std::size_t home);

    const NormalLattice& l_;
    std::vector<std::size_t> home_;
    std::vector<std::int64_t> degree_sq_;  ///< Σψ(1)² over X^{N•}, per node
    std::vector<std::vector<std::optional<std::int64_t>>> memo_;
};

std::int64_t values_recursive(const Group& g, const NormalLattice& l, const CharacterTable& t, std::size_t node,
                              Element x);

/// Σ_{ψ∈X^{N•}} ψ(1)ψ(g), evaluated from the table.
CycNum values_direct(const CharacterTable& t, const std::vector<std::size_t>& part, Element x);

/// Builds the theory of A(S). With a table, the three evaluation routes are
/// compared cell by cell and any disagreement raises ConsistencyFailure.
SupercharacterTheory build_nsct(const Group& g, const std::vector<NormalSubgroup>& s,
                                const CharacterTable* t = nullptr, const Limits& limits = Limits::defaults());
SupercharacterTheory build_nsct(const Group& g, NormalLattice l, const CharacterTable* t = nullptr);

struct AxiomCheck {
    std::string name;
    bool passed = true;
    std::string witness;
};

struct SctReport {
    std::vector<AxiomCheck> checks;

    bool ok() const;
    std::string to_text() const;
};

/// Checks the supercharacter theory axioms against the character table.
SctReport verify_sct(const Group& g, const SupercharacterTheory& theory, const CharacterTable& t);

}  // namespace nsct
