#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"

namespace {

std::string path(const std::string& rel) { return std::string(NSCT_SOURCE_DIR) + "/" + rel; }

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = nsct::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, Info) {
    const Result r = run({"info", path("data/c3xc3.json")});
    EXPECT_EQ(r.code, nsct::cli::kOk);
    EXPECT_NE(r.out.find("order: 9"), std::string::npos);
    EXPECT_NE(r.out.find("normal subgroups: 6"), std::string::npos);
    EXPECT_EQ(run({"info", path("data/c3xc3.json"), "--seed", "42"}).out, r.out);
}

TEST(Cli, FinestAllAgreesOnC3xC3) {
    const Result r = run({"finest", path("data/c3xc3.json"), "--method", "all", "--dixon"});
    EXPECT_EQ(r.code, nsct::cli::kOk) << r.err;
    EXPECT_EQ(r.out.find("DISAGREE"), std::string::npos);
    EXPECT_NE(r.out.find("agree"), std::string::npos);
}

TEST(Cli, FinestMethods) {
    for (const std::string m : {"closure", "idempotents", "grouping"})
        EXPECT_EQ(run({"finest", path("data/s3.json"), "--method", m}).code, nsct::cli::kOk) << m;
    EXPECT_EQ(run({"finest", path("data/s3.json"), "--method", "idempotents", "--no-characters"}).code,
              nsct::cli::kInputError);
}

TEST(Cli, NsctFormats) {
    for (const std::string f : {"text", "json", "latex"}) {
        const Result a = run({"nsct", path("data/c3xc4.json"), "--subgroups", "gen:3", "gen:4", "--format", f});
        const Result b = run({"nsct", path("data/c3xc4.json"), "--subgroups", "gen:3", "gen:4", "--format", f});
        EXPECT_EQ(a.code, nsct::cli::kOk) << f << a.err;
        EXPECT_EQ(a.out, b.out) << f;
        EXPECT_FALSE(a.out.empty()) << f;
    }
}

TEST(Cli, NsctWithTableFile) {
    const Result r = run({"nsct", path("data/c3xc3.json"), "--subgroups", "all", "--chartab",
                          path("tests/data/c3xc3_table.json")});
    EXPECT_EQ(r.code, nsct::cli::kOk) << r.err;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos) << r.out;
}

TEST(Cli, NsctWithoutCharacters) {
    EXPECT_EQ(run({"nsct", path("data/ut4_2.json"), "--no-characters", "--subgroups", "pattern:(1,4)"}).code,
              nsct::cli::kOk);
}

TEST(Cli, Lattice) {
    const Result dot = run({"lattice", path("data/c3xc3.json"), "--subgroups", "all", "--dot"});
    EXPECT_EQ(dot.code, nsct::cli::kOk);
    EXPECT_EQ(dot.out.rfind("digraph", 0), 0u);
    const Result text = run({"lattice", path("data/c3xc3.json"), "--subgroups", "all"});
    EXPECT_NE(text.out.find("nodes: 6"), std::string::npos);
    EXPECT_EQ(run({"lattice", path("data/c3xc3.json"), "--format", "json"}).code, nsct::cli::kOk);
}

TEST(Cli, Chartab) {
    EXPECT_EQ(run({"chartab", path("data/s3.json")}).code, nsct::cli::kOk);
    EXPECT_EQ(run({"chartab", path("data/s3.json"), "--format", "json"}).code, nsct::cli::kOk);
    EXPECT_EQ(run({"chartab", path("data/s3.json"), "--idempotents"}).code, nsct::cli::kOk);
    const Result good = run({"chartab", path("data/s3.json"), "--check", path("tests/data/s3_table.json")});
    EXPECT_EQ(good.code, nsct::cli::kOk);
    EXPECT_NE(good.out.find("valid: 3"), std::string::npos);
    const Result bad = run({"chartab", path("data/s3.json"), "--check", path("tests/data/s3_bad_degrees.json")});
    EXPECT_EQ(bad.code, nsct::cli::kVerificationFailed);
    EXPECT_NE(bad.out.find("invalid"), std::string::npos);
}

TEST(Cli, InputErrors) {
    EXPECT_EQ(run({}).code, nsct::cli::kInputError);
    EXPECT_EQ(run({"info", path("data/missing.json")}).code, nsct::cli::kInputError);
    EXPECT_EQ(run({"nsct", path("data/c3.json"), "--subgroups", "gen:7"}).code, nsct::cli::kInputError);
    EXPECT_EQ(run({"nsct", path("data/c3.json"), "--format", "yaml"}).code, nsct::cli::kInputError);
    EXPECT_EQ(run({"nsct", path("data/ut4_2.json"), "--subgroups", "pattern:(1,2)"}).code, nsct::cli::kInputError);
    EXPECT_EQ(run({"info", path("data/ut4_2.json"), "--max-order", "10"}).code, nsct::cli::kInputError);
    EXPECT_EQ(run({"info", path("data/c3.json"), "--seed", "x"}).code, nsct::cli::kInputError);
}
