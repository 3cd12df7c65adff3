#include "alw/commands.hpp"
#include "alw/io.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace alw;

namespace {

std::string load_error(const std::string& text) {
    try {
        parse_structure(text);
    } catch (const LoadError& e) {
        return e.what();
    }
    return "";
}

GenParams family(const std::string& name) {
    GenParams p;
    p.family = name;
    return p;
}

}  // namespace

TEST(RoundTrip, SaveLoadSaveIsByteIdentical) {
    for (const char* fam : {"monk", "split", "rainbow", "split-blur"}) {
        auto f = generate(family(fam));
        std::string a = structure_text(f);
        std::string b = structure_text(parse_structure(a));
        EXPECT_EQ(a, b) << fam;
    }
}

TEST(RoundTrip, LoadedRaMatchesOriginalTable) {
    auto s = monk_ra(3, 2);
    auto g = parse_structure(structure_text(ra_file(s)));
    ASSERT_TRUE(g.ra);
    ASSERT_EQ(g.ra->size(), s.size());
    for (int a = 0; a < int(s.size()); ++a) {
        EXPECT_EQ(g.ra->converse[a], s.converse[a]);
        for (int b = 0; b < int(s.size()); ++b)
            for (int c = 0; c < int(s.size()); ++c) EXPECT_EQ(g.ra->consistent(a, b, c), s.consistent(a, b, c));
    }
}

TEST(RoundTrip, StreamAndStringLoadersAgree) {
    std::string text = structure_text(generate(family("monk")));
    std::istringstream in(text);
    EXPECT_EQ(structure_text(load_structure(in)), text);
}

TEST(LoadErrors, InvalidJson) { EXPECT_NE(load_error("{ nope").find("not valid JSON"), std::string::npos); }

TEST(LoadErrors, MissingFieldIsLocated) { EXPECT_EQ(load_error(R"({"kind":"ra"})"), "$: missing field 'atoms'"); }

TEST(LoadErrors, UnknownKind) { EXPECT_NE(load_error(R"({"kind":"graph"})").find("$.kind"), std::string::npos); }

TEST(LoadErrors, BadAtomReferenceIsLocated) {
    json j = structure_json(generate(family("monk")));
    j["forbidden"][2][1] = "nobody";
    EXPECT_NE(load_error(j.dump()).find("$.forbidden[2][1]"), std::string::npos);
}

TEST(LoadErrors, ConverseMustBeAnInvolution) {
    json j = structure_json(ra_file(monk_ra(1, 1)));
    // Id ↦ g0, g0 ↦ g0 is not an involution
    j["converse"][0] = j["atoms"][1];
    EXPECT_NE(load_error(j.dump()).find("involution"), std::string::npos);
}

TEST(LoadErrors, ValidationRunsOnLoad) {
    json j = structure_json(ra_file(monk_ra(1, 1)));
    j["identity"] = json::array();
    EXPECT_FALSE(load_error(j.dump()).empty());
}

TEST(LoadErrors, SplitBlurLambdaMustBePositive) {
    json j = structure_json(generate(family("split-blur")));
    j["lambda"] = 0;
    EXPECT_NE(load_error(j.dump()).find("$.lambda"), std::string::npos);
}

TEST(LoadErrors, FormatVersionIsChecked) {
    json j = structure_json(generate(family("monk")));
    j["format"] = 2;
    EXPECT_NE(load_error(j.dump()).find("$.format"), std::string::npos);
}

TEST(LoadErrors, MissingFileNamesThePath) {
    try {
        load_structure(std::string("/nonexistent/x.json"));
        FAIL();
    } catch (const LoadError& e) {
        EXPECT_NE(std::string(e.what()).find("/nonexistent/x.json"), std::string::npos);
    }
}

TEST(Generator, RainbowForRebuildsAndDetectsEdits) {
    auto f = generate(family("rainbow"));
    EXPECT_EQ(rainbow_for(f).at.size(), f.ca->size());
    auto g = f;
    g.generator["greens"] = 5;
    EXPECT_THROW(rainbow_for(g), LoadError);
    EXPECT_THROW(rainbow_for(generate(family("monk"))), LoadError);
}

TEST(Generator, UnknownFamilyThrows) { EXPECT_THROW(generate(family("tree")), std::invalid_argument); }

TEST(Commands, CheckExitCodes) {
    EXPECT_EQ(cmd_check(generate(family("rainbow")), "ca", 1).exit, kExitPass);
    EXPECT_EQ(cmd_check(ra_file(monk_ra(1, 1)), "ra", 1).exit, kExitPass);
    // the default monk file has three greens and one red: not associative
    EXPECT_EQ(cmd_check(generate(family("monk")), "ra", 1).exit, kExitFail);
}

TEST(Commands, SolveExitCodesFollowTheVerdict) {
    auto f = generate(family("monk"));
    SolveParams sp;
    sp.nodes = 5;
    sp.rounds = 6;
    EXPECT_EQ(cmd_solve(f, sp, 1).exit, kExitFail);
    auto one = ra_file(monk_ra(1, 1));
    sp.nodes = 3;
    sp.rounds = 3;
    EXPECT_EQ(cmd_solve(one, sp, 1).exit, kExitPass);
    sp.nodes = 5;
    sp.rounds = 6;
    sp.budget = 1;
    EXPECT_EQ(cmd_solve(f, sp, 1).exit, kExitBudget);
}

TEST(Commands, ReportsDoNotDependOnThreadCount) {
    auto f = generate(family("monk"));
    SolveParams sp;
    sp.nodes = 5;
    sp.rounds = 6;
    EXPECT_EQ(cmd_solve(f, sp, 1).report, cmd_solve(f, sp, 4).report);
    EXPECT_EQ(cmd_check(f, "ra", 1).report, cmd_check(f, "ra", 4).report);
    EXPECT_EQ(cmd_lyndon(f, 3, 4, 2000000, 1).report, cmd_lyndon(f, 3, 4, 2000000, 4).report);
}

TEST(Commands, EfDistinguishesCliques) {
    EXPECT_EQ(cmd_ef("K4", "K3", 4, 4).exit, kExitFail);
    EXPECT_EQ(cmd_ef("K3", "K3", 3, 3).exit, kExitPass);
}
