#include "nsct/finest.hpp"

#include <algorithm>
#include <map>

namespace nsct {

Partition finest_by_closure(const Group& g) {
    const ClassPartition cls = conjugacy_classes(g);
    std::map<NormalSubgroup, std::vector<Element>> groups;
    for (std::size_t c = 0; c < cls.count(); ++c) {
        auto& part = groups[normal_closure(g, cls, {cls.reps[c]})];
        part.insert(part.end(), cls.members[c].begin(), cls.members[c].end());
    }
    Partition p;
    for (auto& [n, elems] : groups) p.push_back(std::move(elems));
    return canonical(std::move(p));
}

Partition finest_by_idempotents(const Group&, const CharacterTable& t) { return k_classes(t); }

TableGrouping finest_by_table_grouping(const CharacterTable& t) {
    const std::size_t r = t.size();
    const std::size_t k = t.classes.count();
    std::vector<std::vector<bool>> one(r, std::vector<bool>(k));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t c = 0; c < k; ++c) one[i][c] = t.values[i][c] == CycNum(t.degrees[i]);

    TableGrouping out;
    std::map<std::vector<bool>, std::vector<std::size_t>> cols;
    for (std::size_t c = 0; c < k; ++c) {
        std::vector<bool> sig(r);
        for (std::size_t i = 0; i < r; ++i) sig[i] = one[i][c];
        cols[sig].push_back(c);
    }
    std::map<std::vector<bool>, std::vector<std::size_t>> rows;
    for (std::size_t i = 0; i < r; ++i) rows[one[i]].push_back(i);

    for (auto& [sig, cs] : cols) {
        out.columns.push_back(cs);
        std::vector<Element> elems;
        for (auto c : cs) elems.insert(elems.end(), t.classes.members[c].begin(), t.classes.members[c].end());
        out.column_elements.push_back(std::move(elems));
    }
    out.column_elements = canonical(std::move(out.column_elements));
    auto smallest = [&](const std::vector<std::size_t>& cs) {
        Element m = static_cast<Element>(t.group_order);
        for (auto c : cs) m = std::min(m, t.classes.reps[c]);
        return m;
    };
    std::sort(out.columns.begin(), out.columns.end(),
              [&](const auto& a, const auto& b) { return smallest(a) < smallest(b); });
    for (auto& [sig, is] : rows) out.rows.push_back(is);
    std::sort(out.rows.begin(), out.rows.end());
    return out;
}

std::vector<FaithfulPart> faithful_partition(const Group& g, const CharacterTable& t) {
    std::map<NormalSubgroup, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < t.size(); ++i) groups[kernel(g, t, i)].push_back(i);
    std::vector<FaithfulPart> out;
    for (auto& [k, is] : groups) out.push_back({k, std::move(is)});
    return out;
}

SupercharacterTheory finest_theory(const Group& g, const CharacterTable* t, const Limits& limits) {
    return build_nsct(g, all_normal_subgroups(g, limits), t, limits);
}

}  // namespace nsct
