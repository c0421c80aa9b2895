#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nsct/group.hpp"

namespace nsct {

/// A family of normal subgroups closed under product and intersection,
/// ordered by inclusion.
struct NormalLattice {
    std::vector<NormalSubgroup> nodes;  ///< canonical order; nodes.front() is {1}, nodes.back() is G
    std::vector<std::vector<bool>> leq;  ///< leq[a][b]: nodes[a] ⊆ nodes[b]
    std::vector<std::vector<std::int64_t>> mobius;
    std::vector<std::pair<std::size_t, std::size_t>> hasse;  ///< covering pairs (lower, upper)

    std::size_t size() const noexcept { return nodes.size(); }
    /// Index of `n` among the nodes, or size() when absent.
    std::size_t index_of(const NormalSubgroup& n) const;
};

/// A(S): the smallest family containing S, {1} and G closed under product
/// and intersection. Throws NotNormal naming the offending member of S.
NormalLattice closure(const Group& g, const std::vector<NormalSubgroup>& s,
                      const Limits& limits = Limits::defaults());

/// μ(s,s) = 1 and μ(s,u) = -Σ_{s<t≤u} μ(t,u); zero off the order relation.
std::vector<std::vector<std::int64_t>> mobius_matrix(const std::vector<std::vector<bool>>& leq);

std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(const std::vector<std::vector<bool>>& leq);

/// Optional per-node captions for the renderers (e.g. pattern position sets).
using NodeCaptions = std::vector<std::string>;

std::string to_dot(const NormalLattice& l, const NodeCaptions& captions = {});
/// Members are reported by the group's source indices.
std::string to_json(const Group& g, const NormalLattice& l);

}  // namespace nsct
