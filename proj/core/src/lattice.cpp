#include "nsct/lattice.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "nsct/error.hpp"

namespace nsct {

std::size_t NormalLattice::index_of(const NormalSubgroup& n) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), n);
    if (it == nodes.end() || !(*it == n)) return nodes.size();
    return static_cast<std::size_t>(it - nodes.begin());
}

NormalLattice closure(const Group& g, const std::vector<NormalSubgroup>& s, const Limits& limits) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        const Mask& m = s[i].mask();
        if (m.size() != g.order())
            throw InvalidArgument("generator " + std::to_string(i + 1) + " belongs to a different group");
        if (auto why = subgroup_violation(g, m))
            throw NotASubgroup("generator " + std::to_string(i + 1) + " is not a subgroup: " + *why);
        if (auto why = normality_violation(g, m))
            throw NotNormal("generator " + std::to_string(i + 1) + " is not normal: " + *why);
    }

    std::set<NormalSubgroup> seen;
    std::vector<NormalSubgroup> nodes;
    auto add = [&](NormalSubgroup n) {
        if (seen.insert(n).second) {
            nodes.push_back(std::move(n));
            if (nodes.size() > limits.max_lattice)
                throw GroupTooLarge("lattice exceeds " + std::to_string(limits.max_lattice) + " nodes");
        }
    };
    add(NormalSubgroup::trivial(g));
    add(NormalSubgroup::whole(g));
    for (const auto& n : s) add(n);

    // Each new node is paired with every earlier node exactly once.
    for (std::size_t j = 1; j < nodes.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) {
            add(subgroup_product(g, nodes[i], nodes[j]));
            add(subgroup_intersection(g, nodes[i], nodes[j]));
        }

    NormalLattice l;
    l.nodes.assign(seen.begin(), seen.end());
    const std::size_t r = l.nodes.size();
    l.leq.assign(r, std::vector<bool>(r, false));
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) l.leq[a][b] = l.nodes[a].is_subset_of(l.nodes[b]);
    l.mobius = mobius_matrix(l.leq);
    l.hasse = hasse_edges(l.leq);
    return l;
}

std::vector<std::vector<std::int64_t>> mobius_matrix(const std::vector<std::vector<bool>>& leq) {
    const std::size_t r = leq.size();
    // Nodes are processed so that every t strictly above s is done first:
    // sort by the number of nodes below, descending.
    std::vector<std::size_t> order(r);
    std::vector<std::size_t> below(r, 0);
    for (std::size_t a = 0; a < r; ++a) {
        order[a] = a;
        for (std::size_t b = 0; b < r; ++b) below[a] += leq[b][a];
    }
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return below[a] > below[b]; });

    std::vector<std::vector<std::int64_t>> mu(r, std::vector<std::int64_t>(r, 0));
    for (std::size_t u = 0; u < r; ++u) {
        for (std::size_t s : order) {
            if (!leq[s][u]) continue;
            if (s == u) {
                mu[s][u] = 1;
                continue;
            }
            std::int64_t sum = 0;
            for (std::size_t t = 0; t < r; ++t)
                if (t != s && leq[s][t] && leq[t][u]) sum += mu[t][u];
            mu[s][u] = -sum;
        }
    }
    return mu;
}

std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(const std::vector<std::vector<bool>>& leq) {
    const std::size_t r = leq.size();
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) {
            if (a == b || !leq[a][b]) continue;
            bool covers = true;
            for (std::size_t c = 0; c < r && covers; ++c)
                if (c != a && c != b && leq[a][c] && leq[c][b]) covers = false;
            if (covers) out.emplace_back(a, b);
        }
    return out;
}

std::string to_dot(const NormalLattice& l, const NodeCaptions& captions) {
    std::ostringstream os;
    os << "digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < l.size(); ++i) {
        os << "  n" << i << " [label=\"|N|=" << l.nodes[i].order();
        if (i < captions.size() && !captions[i].empty()) os << "\\n" << captions[i];
        os << "\"];\n";
    }
    for (auto [a, b] : l.hasse) os << "  n" << a << " -> n" << b << ";\n";
    os << "}\n";
    return os.str();
}

std::string to_json(const Group& g, const NormalLattice& l) {
    nlohmann::json doc;
    doc["nodes"] = nlohmann::json::array();
    for (const auto& n : l.nodes) {
        std::vector<Element> members;
        for (Element x : n.members()) members.push_back(g.source_index()[x]);
        std::sort(members.begin(), members.end());
        doc["nodes"].push_back({{"order", n.order()}, {"members", members}});
    }
    doc["hasse"] = nlohmann::json::array();
    for (auto [a, b] : l.hasse) doc["hasse"].push_back({a, b});
    doc["mobius"] = l.mobius;
    return doc.dump() + "\n";
}

}  // namespace nsct
