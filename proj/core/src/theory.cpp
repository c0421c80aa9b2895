#include "nsct/theory.hpp"

#include <algorithm>
#include <sstream>

#include "nsct/error.hpp"

namespace nsct {

std::vector<std::size_t> superclass_nodes(const Group& g, const NormalLattice& l) {
    std::vector<std::size_t> home(g.order(), l.size());
    for (Element x = 0; x < g.order(); ++x)
        for (std::size_t i = 0; i < l.size(); ++i)
            if (l.nodes[i].contains(x)) {
                home[x] = i;
                break;
            }
    return home;
}

std::vector<Superclass> superclasses(const Group& g, const NormalLattice& l) {
    std::vector<Superclass> all(l.size());
    for (std::size_t i = 0; i < l.size(); ++i) all[i].node = i;
    const auto home = superclass_nodes(g, l);
    for (Element x = 0; x < g.order(); ++x) all[home[x]].elements.push_back(x);
    std::erase_if(all, [](const Superclass& s) { return s.elements.empty(); });
    return all;
}

namespace {

std::vector<std::size_t> character_homes(const Group& g, const NormalLattice& l, const CharacterTable& t) {
    std::vector<std::size_t> home(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        const NormalSubgroup k = kernel(g, t, i);
        for (std::size_t n = l.size(); n-- > 0;)
            if (l.nodes[n].is_subset_of(k)) {
                home[i] = n;
                break;
            }
    }
    return home;
}

std::string cell_name(std::size_t row, std::size_t col) {
    return "(" + std::to_string(row + 1) + "," + std::to_string(col + 1) + ")";
}

}  // namespace

std::vector<CharPart> char_parts(const Group& g, const NormalLattice& l, const CharacterTable& t) {
    std::vector<CharPart> all(l.size());
    for (std::size_t i = 0; i < l.size(); ++i) all[i].node = i;
    const auto home = character_homes(g, l, t);
    for (std::size_t i = 0; i < t.size(); ++i) all[home[i]].irreducibles.push_back(i);
    std::erase_if(all, [](const CharPart& p) { return p.irreducibles.empty(); });
    return all;
}

std::int64_t values_mobius(const Group& g, const NormalLattice& l, std::size_t node, Element x) {
    const auto n = static_cast<std::int64_t>(g.order());
    std::int64_t sum = 0;
    for (std::size_t m = 0; m < l.size(); ++m)
        if (l.leq[node][m] && l.nodes[m].contains(x))
            sum += l.mobius[node][m] * (n / static_cast<std::int64_t>(l.nodes[m].order()));
    return sum;
}

RecursiveValues::RecursiveValues(const Group& g, const NormalLattice& l, const CharacterTable& t)
    : l_(l), home_(superclass_nodes(g, l)), degree_sq_(l.size(), 0), memo_(l.size(), std::vector<std::optional<std::int64_t>>(l.size())) {
    const auto homes = character_homes(g, l, t);
    for (std::size_t i = 0; i < t.size(); ++i) degree_sq_[homes[i]] += t.degrees[i] * t.degrees[i];
}

std::int64_t RecursiveValues::operator()(std::size_t node, Element x) { return at(node, home_[x]); }

std::int64_t RecursiveValues::at(std::size_t node, std::size_t home) {
    auto& slot = memo_[node][home];
    if (slot) return *slot;
    std::int64_t v = 0;
    if (l_.leq[home][node]) {
        v = degree_sq_[node];
    } else {
        for (std::size_t k = 0; k < l_.size(); ++k)
            if (k != node && l_.leq[node][k]) v -= at(k, home);
    }
    slot = v;
    return v;
}

std::int64_t values_recursive(const Group& g, const NormalLattice& l, const CharacterTable& t, std::size_t node,
                              Element x) {
    return RecursiveValues(g, l, t)(node, x);
}

CycNum values_direct(const CharacterTable& t, const std::vector<std::size_t>& part, Element x) {
    CycNum sum(0);
    for (auto i : part) sum += CycNum(t.degrees[i]) * t.value(i, x);
    return sum;
}

SupercharacterTheory build_nsct(const Group& g, const std::vector<NormalSubgroup>& s, const CharacterTable* t,
                                const Limits& limits) {
    return build_nsct(g, closure(g, s, limits), t);
}

SupercharacterTheory build_nsct(const Group& g, NormalLattice l, const CharacterTable* t) {
    SupercharacterTheory th;
    th.lattice = std::move(l);
    const NormalLattice& lat = th.lattice;
    th.superclasses = superclasses(g, lat);
    const std::size_t cols = th.superclasses.size();

    for (std::size_t n = 0; n < lat.size(); ++n)
        if (values_mobius(g, lat, n, 0) != 0) th.row_nodes.push_back(n);
    if (th.row_nodes.size() != cols)
        throw ConsistencyFailure(std::to_string(th.row_nodes.size()) + " nonzero supercharacters but " +
                                 std::to_string(cols) + " superclasses");

    th.table.assign(cols, std::vector<std::int64_t>(cols));
    for (std::size_t i = 0; i < cols; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            th.table[i][j] = values_mobius(g, lat, th.row_nodes[i], th.superclasses[j].elements.front());
    if (!t) return th;

    if (t->group_order != g.order()) throw InvalidArgument("character table belongs to a different group");
    th.has_characters = true;
    th.char_parts = char_parts(g, lat, *t);
    for (std::size_t i = 0; i < std::max(th.char_parts.size(), cols); ++i) {
        const std::size_t a = i < th.char_parts.size() ? th.char_parts[i].node : lat.size();
        const std::size_t b = i < cols ? th.row_nodes[i] : lat.size();
        if (a != b)
            throw ConsistencyFailure("node " + std::to_string(std::min(a, b) + 1) +
                                     (a < b ? " has characters but a zero supercharacter"
                                            : " has a nonzero supercharacter but no characters"));
    }

    RecursiveValues recursive(g, lat, *t);
    for (std::size_t n = 0; n < lat.size(); ++n)
        for (std::size_t j = 0; j < cols; ++j) {
            const Element x = th.superclasses[j].elements.front();
            const auto a = values_mobius(g, lat, n, x);
            const auto b = recursive(n, x);
            if (a != b)
                throw ConsistencyFailure("node " + std::to_string(n + 1) + ", superclass " + std::to_string(j + 1) +
                                         ": Möbius value " + std::to_string(a) + " but recursive value " +
                                         std::to_string(b));
        }
    for (std::size_t i = 0; i < cols; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            for (Element x : th.superclasses[j].elements) {
                const CycNum d = values_direct(*t, th.char_parts[i].irreducibles, x);
                if (!(d == CycNum(th.table[i][j])))
                    throw ConsistencyFailure("cell " + cell_name(i, j) + " at element " + g.label(x) +
                                             ": Möbius value " + std::to_string(th.table[i][j]) +
                                             " but character sum " + format_cyc(d));
            }
    const SctReport report = verify_sct(g, th, *t);
    if (!report.ok()) throw ConsistencyFailure("axiom check failed:\n" + report.to_text());
    return th;
}

bool SctReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

std::string SctReport::to_text() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.witness.empty()) os << ": " << c.witness;
        os << "\n";
    }
    return os.str();
}

SctReport verify_sct(const Group& g, const SupercharacterTheory& theory, const CharacterTable& t) {
    SctReport rep;
    rep.checks.reserve(8);
    auto check = [&](std::string name) -> AxiomCheck& {
        rep.checks.push_back({std::move(name), true, {}});
        return rep.checks.back();
    };
    auto fail = [](AxiomCheck& c, std::string witness) {
        if (!c.passed) return;
        c.passed = false;
        c.witness = std::move(witness);
    };

    {
        AxiomCheck& c = check("identity is a superclass");
        const bool found = std::any_of(theory.superclasses.begin(), theory.superclasses.end(), [](const Superclass& s) {
            return s.elements.size() == 1 && s.elements.front() == 0;
        });
        if (!found) fail(c, "no superclass equals {" + g.label(0) + "}");
    }
    {
        AxiomCheck& c = check("part counts agree");
        if (theory.superclasses.size() != theory.char_parts.size())
            fail(c, std::to_string(theory.superclasses.size()) + " superclasses, " +
                        std::to_string(theory.char_parts.size()) + " character parts");
    }
    {
        AxiomCheck& c = check("superclasses partition G");
        std::vector<int> seen(g.order(), 0);
        for (std::size_t j = 0; j < theory.superclasses.size(); ++j)
            for (Element x : theory.superclasses[j].elements) {
                if (x >= g.order()) {
                    fail(c, "element index " + std::to_string(x) + " out of range");
                    continue;
                }
                if (seen[x]++) fail(c, "element " + g.label(x) + " lies in two superclasses");
            }
        for (Element x = 0; x < g.order(); ++x)
            if (!seen[x]) fail(c, "element " + g.label(x) + " lies in no superclass");
    }
    {
        AxiomCheck& c = check("character parts partition Irr(G)");
        std::vector<int> seen(t.size(), 0);
        for (const auto& p : theory.char_parts)
            for (auto i : p.irreducibles) {
                if (i >= t.size()) {
                    fail(c, "irreducible index " + std::to_string(i + 1) + " out of range");
                    continue;
                }
                if (seen[i]++) fail(c, "chi" + std::to_string(i + 1) + " lies in two parts");
            }
        for (std::size_t i = 0; i < t.size(); ++i)
            if (!seen[i]) fail(c, "chi" + std::to_string(i + 1) + " lies in no part");
    }

    AxiomCheck& constant = check("supercharacters constant on superclasses");
    AxiomCheck& integral = check("supercharacter values are integers");
    AxiomCheck& matches = check("value table matches the character sums");
    for (std::size_t i = 0; i < theory.char_parts.size(); ++i) {
        const auto& part = theory.char_parts[i].irreducibles;
        std::vector<std::optional<CycNum>> per_class(t.classes.count());
        auto value = [&](Element x) -> const CycNum& {
            auto& slot = per_class[t.classes.class_of[x]];
            if (!slot) slot = values_direct(t, part, x);
            return *slot;
        };
        for (std::size_t j = 0; j < theory.superclasses.size(); ++j) {
            const auto& elems = theory.superclasses[j].elements;
            if (elems.empty()) continue;
            const CycNum& first = value(elems.front());
            for (Element x : elems)
                if (!(value(x) == first))
                    fail(constant, "part " + std::to_string(i + 1) + " takes " + format_cyc(first) + " at " +
                                       g.label(elems.front()) + " but " + format_cyc(value(x)) + " at " +
                                       g.label(x) + " in superclass " + std::to_string(j + 1));
            if (!first.is_rational() || !is_integer(first.as_rational()))
                fail(integral, "part " + std::to_string(i + 1) + " takes " + format_cyc(first) + " at " +
                                   g.label(elems.front()));
            else if (i < theory.table.size() && j < theory.table[i].size() &&
                     first.as_rational() != theory.table[i][j])
                fail(matches, "cell " + cell_name(i, j) + " holds " + std::to_string(theory.table[i][j]) +
                                  " but the character sum is " + format_cyc(first));
        }
    }
    return rep;
}

}  // namespace nsct
