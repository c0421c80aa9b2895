#include <gtest/gtest.h>

#include "nsct/catalog.hpp"
#include "nsct/error.hpp"
#include "nsct/io.hpp"
#include "nsct/render.hpp"
#include "nsct/theory.hpp"

using namespace nsct;

namespace {

std::string path(const std::string& rel) { return std::string(NSCT_SOURCE_DIR) + "/" + rel; }

}  // namespace

TEST(GroupFile, Kinds) {
    EXPECT_EQ(parse_group(read_file(path("data/c3.json"))).order(), 3u);
    EXPECT_EQ(parse_group(read_file(path("data/s3.json"))).order(), 6u);
    EXPECT_EQ(parse_group(read_file(path("data/ut4_2.json"))).order(), 64u);
    EXPECT_EQ(parse_group(read_file(path("data/c3xc4.json"))).order(), 12u);
    EXPECT_EQ(parse_group(read_file(path("data/trivial.json"))).order(), 1u);
}

TEST(GroupFile, Malformed) {
    EXPECT_THROW(parse_group("{"), ParseError);
    EXPECT_THROW(parse_group("[]"), ParseError);
    EXPECT_THROW(parse_group(R"({"kind":"klein"})"), ParseError);
    EXPECT_THROW(parse_group(R"({"kind":"cayley","order":2,"table":"x"})"), ParseError);
    EXPECT_THROW(parse_group(R"({"kind":"cayley","order":2,"table":[[0,1],[1]]})"), NotAGroup);
    EXPECT_THROW(parse_group(R"({"kind":"permutations","degree":3,"generators":[[0,0,1]]})"), NotABijection);
    EXPECT_THROW(parse_group(R"({"kind":"unitriangular","n":3,"p":6})"), NotPrime);
}

TEST(GroupFile, MissingFile) { EXPECT_THROW(read_file(path("data/does_not_exist.json")), InvalidArgument); }

TEST(SubgroupSpec, Generators) {
    const Group g = parse_group(read_file(path("data/c3xc4.json")));
    const auto c3 = resolve_subgroup_spec(g, "gen:4");
    ASSERT_EQ(c3.size(), 1u);
    EXPECT_EQ(c3[0].order(), 3u);
    EXPECT_EQ(resolve_subgroup_spec(g, "gen:3")[0].order(), 4u);
    EXPECT_EQ(resolve_subgroup_spec(g, "gen:3,4")[0].order(), 12u);
    EXPECT_EQ(resolve_subgroup_spec(g, "all").size(), 6u);
    EXPECT_THROW(resolve_subgroup_spec(g, "gen:12"), ParseError);
    EXPECT_THROW(resolve_subgroup_spec(g, "gen:x"), ParseError);
    EXPECT_THROW(resolve_subgroup_spec(g, "bogus"), ParseError);
}

TEST(SubgroupSpec, GeneratorsUseSourceIndices) {
    // Identity stored at index 2 in the file.
    const Group g = parse_group(R"({"kind":"cayley","order":3,"table":[[1,2,0],[2,0,1],[0,1,2]]})");
    EXPECT_EQ(resolve_subgroup_spec(g, "gen:2")[0].order(), 1u);
    EXPECT_EQ(resolve_subgroup_spec(g, "gen:0")[0].order(), 3u);
}

TEST(SubgroupSpec, Patterns) {
    const Group g = parse_group(read_file(path("data/ut4_2.json")));
    EXPECT_EQ(resolve_subgroup_spec(g, "pattern:(1,3),(1,4)")[0].order(), 4u);
    EXPECT_THROW(resolve_subgroup_spec(g, "pattern:(1,2)"), NotNormal);
    EXPECT_THROW(resolve_subgroup_spec(catalog::cyclic(3), "pattern:(1,2)"), InvalidArgument);
}

TEST(Positions, Parse) {
    EXPECT_EQ(parse_positions(""), (std::vector<std::pair<int, int>>{}));
    EXPECT_EQ(parse_positions("(1,2), (3,4)"), (std::vector<std::pair<int, int>>{{1, 2}, {3, 4}}));
    EXPECT_THROW(parse_positions("(1,2"), ParseError);
    EXPECT_THROW(parse_positions("1,2"), ParseError);
}

TEST(Render, FormatsAgreeOnTheTable) {
    const Group g = catalog::direct_product(catalog::cyclic(3), catalog::cyclic(3));
    const CharacterTable t = dixon_character_table(g);
    const SupercharacterTheory th = build_nsct(g, all_normal_subgroups(g), &t);
    const std::string text = render_text(g, th);
    const std::string json = render_json(g, th);
    const std::string latex = render_latex(g, th);
    EXPECT_EQ(text, render_text(g, th));
    EXPECT_NE(json.find("\"table\""), std::string::npos);
    EXPECT_NE(json.find("\"superclasses\""), std::string::npos);
    EXPECT_NE(latex.find("\\begin{array}"), std::string::npos);
    EXPECT_NE(latex.find("\\chi^{N_"), std::string::npos);
    EXPECT_NE(text.find("-1"), std::string::npos);
}

TEST(Render, PatternCaptions) {
    const Group g = build_unitriangular(4, 2);
    const auto l = closure(g, {pattern_subgroup(g, {{1, 4}}), pattern_subgroup(g, {{1, 3}, {1, 4}})});
    const NodeCaptions c = pattern_captions(g, l);
    ASSERT_EQ(c.size(), l.size());
    EXPECT_EQ(c[l.index_of(pattern_subgroup(g, {{1, 3}, {1, 4}}))], "{(1,3),(1,4)}");
    EXPECT_TRUE(pattern_captions(catalog::cyclic(3), closure(catalog::cyclic(3), {}))[0].empty());
}
