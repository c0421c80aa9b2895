#include <gtest/gtest.h>

#include <cstdlib>

#include "nsct/catalog.hpp"
#include "nsct/error.hpp"
#include "nsct/group.hpp"
#include "oracles.hpp"

using namespace nsct;

namespace {

std::vector<std::vector<Element>> to_elements(const std::vector<std::vector<int>>& t) {
    std::vector<std::vector<Element>> out;
    for (const auto& row : t) out.emplace_back(row.begin(), row.end());
    return out;
}

std::vector<std::size_t> class_sizes(const ClassPartition& c) { return c.sizes; }

}  // namespace

TEST(Cayley, TrivialGroup) {
    const Group g = build_from_cayley({{0}});
    EXPECT_EQ(g.order(), 1u);
    EXPECT_EQ(g.exponent(), 1u);
}

TEST(Cayley, CyclicThree) {
    const Group g = build_from_cayley({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
    EXPECT_EQ(g.order(), 3u);
    EXPECT_EQ(g.inv(1), 2u);
    EXPECT_EQ(g.element_order(1), 3u);
    EXPECT_EQ(g.element_order(0), 1u);
}

TEST(Cayley, NonAssociativeTableIsRejected) {
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) t[a][b] = (a + b) % 6;
    // Swap an intercalate: identity and inverses survive, associativity does not.
    std::swap(t[1][1], t[1][4]);
    std::swap(t[4][1], t[4][4]);
    ASSERT_TRUE(oracle::associativity_witness(t).has_value());
    try {
        build_from_cayley(to_elements(t));
        FAIL() << "expected NotAGroup";
    } catch (const NotAGroup& e) {
        EXPECT_NE(std::string(e.what()).find("associativ"), std::string::npos) << e.what();
    }
}

TEST(Cayley, MissingIdentityIsRejected) {
    EXPECT_THROW(build_from_cayley({{1, 1}, {1, 1}}), NotAGroup);
    EXPECT_THROW(build_from_cayley({{0, 1}, {1, 1}}), NotAGroup);
}

TEST(Cayley, IdentityElsewhereIsRelabeled) {
    // C3 with identity stored at index 2.
    const Group g = build_from_cayley({{1, 2, 0}, {2, 0, 1}, {0, 1, 2}});
    EXPECT_EQ(g.source_index()[0], 2u);
    for (Element x = 0; x < 3; ++x) {
        EXPECT_EQ(g.mul(0, x), x);
        EXPECT_EQ(g.mul(x, 0), x);
    }
}

TEST(Permutations, SymmetricThree) {
    const Group g = build_from_permutations(3, {{1, 2, 0}, {1, 0, 2}});
    EXPECT_EQ(g.order(), 6u);
    EXPECT_EQ(g.label(0), "()");
}

TEST(Permutations, FourCycle) { EXPECT_EQ(build_from_permutations(4, {{1, 2, 3, 0}}).order(), 4u); }

TEST(Permutations, DihedralFourteenMatchesBruteForce) {
    const std::vector<std::vector<std::size_t>> gens = {{1, 2, 3, 4, 5, 6, 0}, {0, 6, 5, 4, 3, 2, 1}};
    EXPECT_EQ(build_from_permutations(7, gens).order(), oracle::generated(gens).size());
    EXPECT_EQ(oracle::generated(gens).size(), 14u);
}

TEST(Permutations, RejectsNonBijection) {
    EXPECT_THROW(build_from_permutations(3, {{0, 0, 1}}), NotABijection);
    EXPECT_THROW(build_from_permutations(3, {{0, 1}}), NotABijection);
}

TEST(Permutations, RespectsOrderCap) {
    Limits l = Limits::defaults();
    l.max_order = 100;
    EXPECT_THROW(build_from_permutations(5, {{1, 2, 3, 4, 0}, {1, 0, 2, 3, 4}}, l), GroupTooLarge);
}

TEST(Unitriangular, Orders) {
    EXPECT_EQ(build_unitriangular(2, 3).order(), 3u);
    EXPECT_EQ(build_unitriangular(3, 2).order(), 8u);
    EXPECT_EQ(build_unitriangular(4, 2).order(), 64u);
    EXPECT_EQ(build_unitriangular(3, 3).order(), 27u);
}

TEST(Unitriangular, Errors) {
    EXPECT_THROW(build_unitriangular(3, 4), NotPrime);
    EXPECT_THROW(build_unitriangular(5, 5), GroupTooLarge);
    EXPECT_THROW(build_unitriangular(6, 2), InvalidArgument);
}

TEST(Unitriangular, ElementOrderIsLexicographic) {
    const Group g = build_unitriangular(3, 3);
    const auto& ut = *g.unitriangular();
    for (Element x = 1; x < g.order(); ++x) EXPECT_LT(ut.coords[x - 1], ut.coords[x]);
}

TEST(PatternSubgroup, Examples) {
    const Group g = build_unitriangular(4, 2);
    EXPECT_EQ(pattern_subgroup(g, {}).order(), 1u);
    EXPECT_EQ(pattern_subgroup(g, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}).order(), 64u);
    EXPECT_EQ(pattern_subgroup(g, {{1, 4}}).order(), 2u);
}

TEST(PatternSubgroup, Violations) {
    const Group g = build_unitriangular(4, 2);
    EXPECT_THROW(pattern_subgroup(g, {{1, 2}}), NotNormal);
    EXPECT_THROW(pattern_subgroup(g, {{1, 2}, {2, 3}}), NotASubgroup);
    EXPECT_THROW(pattern_subgroup(g, {{2, 1}}), InvalidArgument);
    EXPECT_THROW(pattern_subgroup(catalog::cyclic(4), {}), InvalidArgument);
}

TEST(ConjugacyClasses, MatchBruteForceOnCatalog) {
    for (const auto& [name, g] : catalog::standard()) {
        const ClassPartition c = conjugacy_classes(g);
        std::set<oracle::ElementSet> mine;
        for (const auto& m : c.members) mine.insert({m.begin(), m.end()});
        EXPECT_EQ(mine, oracle::classes(g)) << name;
        EXPECT_EQ(c.reps[0], 0u) << name;
        EXPECT_EQ(c.sizes[0], 1u) << name;
        for (std::size_t k = 1; k < c.count(); ++k)
            EXPECT_TRUE(c.sizes[k - 1] < c.sizes[k] || (c.sizes[k - 1] == c.sizes[k] && c.reps[k - 1] < c.reps[k]))
                << name;
        for (Element x = 0; x < g.order(); ++x) EXPECT_EQ(c.members[c.class_of[x]].front(), c.reps[c.class_of[x]]);
    }
}

TEST(ConjugacyClasses, Examples) {
    EXPECT_EQ(conjugacy_classes(catalog::cyclic(6)).count(), 6u);
    EXPECT_EQ(class_sizes(conjugacy_classes(catalog::symmetric(3))), (std::vector<std::size_t>{1, 2, 3}));
    EXPECT_EQ(class_sizes(conjugacy_classes(build_unitriangular(3, 2))), (std::vector<std::size_t>{1, 1, 2, 2, 2}));
}

TEST(NormalClosure, Examples) {
    const Group s3 = catalog::symmetric(3);
    EXPECT_EQ(normal_closure(s3, {0}).order(), 1u);
    // Element 1 is the 3-cycle generator, element 2 the transposition.
    EXPECT_EQ(normal_closure(s3, {1}).order(), 3u);
    EXPECT_EQ(normal_closure(s3, {2}).order(), 6u);
}

TEST(NormalClosure, MatchesBruteForce) {
    for (const auto& [name, g] : catalog::standard()) {
        if (g.order() > 24) continue;
        const auto normals = oracle::normal_subgroups(g);
        for (Element x = 0; x < g.order(); ++x)
            EXPECT_EQ(oracle::members(normal_closure(g, {x})), oracle::normal_closure(g, normals, {x})) << name;
        if (g.order() >= 3)
            EXPECT_EQ(oracle::members(normal_closure(g, {1, 2})), oracle::normal_closure(g, normals, {1, 2})) << name;
    }
}

TEST(AllNormalSubgroups, MatchBruteForce) {
    for (const auto& [name, g] : catalog::standard()) {
        if (g.order() > 24) continue;
        std::set<oracle::ElementSet> mine, expected;
        const auto normals = all_normal_subgroups(g);
        for (const auto& n : normals) {
            mine.insert(oracle::members(n));
            EXPECT_FALSE(normality_violation(g, n.mask())) << name;
        }
        for (const auto& n : oracle::normal_subgroups(g)) expected.insert(n);
        EXPECT_EQ(normals.size(), mine.size()) << name << ": duplicates";
        EXPECT_EQ(mine, expected) << name;
        EXPECT_TRUE(std::is_sorted(normals.begin(), normals.end())) << name;
    }
}

TEST(AllNormalSubgroups, Examples) {
    EXPECT_EQ(all_normal_subgroups(catalog::direct_product(catalog::cyclic(3), catalog::cyclic(3))).size(), 6u);
    EXPECT_EQ(all_normal_subgroups(catalog::symmetric(3)).size(), 3u);
}

TEST(AllNormalSubgroups, LatticeCap) {
    Limits l = Limits::defaults();
    l.max_lattice = 3;
    EXPECT_THROW(all_normal_subgroups(catalog::direct_product(catalog::cyclic(3), catalog::cyclic(3)), l),
                 GroupTooLarge);
}

TEST(ProductIntersection, OrderIdentityOnCatalog) {
    for (const auto& [name, g] : catalog::standard()) {
        const auto normals = all_normal_subgroups(g);
        for (const auto& a : normals)
            for (const auto& b : normals) {
                const auto p = subgroup_product(g, a, b);
                const auto i = subgroup_intersection(g, a, b);
                EXPECT_EQ(p.order() * i.order(), a.order() * b.order()) << name;
                EXPECT_FALSE(normality_violation(g, p.mask())) << name;
                EXPECT_TRUE(a.is_subset_of(p) && b.is_subset_of(p)) << name;
                EXPECT_TRUE(i.is_subset_of(a) && i.is_subset_of(b)) << name;
            }
        for (const auto& a : normals) {
            EXPECT_EQ(subgroup_product(g, a, NormalSubgroup::trivial(g)), a);
            EXPECT_EQ(subgroup_product(g, a, a), a);
            EXPECT_EQ(subgroup_intersection(g, a, NormalSubgroup::whole(g)), a);
            EXPECT_EQ(subgroup_intersection(g, a, a), a);
        }
    }
}

TEST(ProductIntersection, FactorsOfC3xC4) {
    const Group g = catalog::direct_product(catalog::cyclic(3), catalog::cyclic(4));
    const auto c3 = normal_closure(g, {4});
    const auto c4 = normal_closure(g, {3});
    EXPECT_EQ(c3.order(), 3u);
    EXPECT_EQ(c4.order(), 4u);
    EXPECT_EQ(subgroup_product(g, c3, c4), NormalSubgroup::whole(g));
    EXPECT_EQ(subgroup_intersection(g, c3, c4), NormalSubgroup::trivial(g));
}

TEST(NormalSubgroupChecked, Witnesses) {
    const Group s3 = catalog::symmetric(3);
    Mask m(6);
    m.set(0);
    m.set(2);
    EXPECT_THROW(NormalSubgroup::checked(s3, m), NotNormal);
    Mask bad(6);
    bad.set(0);
    bad.set(1);
    EXPECT_THROW(NormalSubgroup::checked(s3, bad), NotASubgroup);
}

TEST(Limits, EnvironmentOverride) {
    ::setenv("NSCT_MAX_ORDER", "10", 1);
    const Limits l = Limits::defaults();
    ::unsetenv("NSCT_MAX_ORDER");
    EXPECT_EQ(l.max_order, 10u);
    EXPECT_THROW(build_unitriangular(3, 3, l), GroupTooLarge);
}
