#include <gtest/gtest.h>

#include "linrank/forest.hpp"
#include "linrank/shannon.hpp"
#include "linrank/text_io.hpp"

using namespace linrank;

namespace {

const char* kIngletonTree = "vars A B C D\nnode r I(C;D)\nnode x I(A;B|C)\nnode y I(A;B|D)\n"
                            "left x of r\nright y of r\n";

bool has_clause(const std::vector<ForestViolation>& v, const std::string& clause)
{
    for (const auto& x : v)
        if (x.clause == clause)
            return true;
    return false;
}

} // namespace

TEST(Tree, IngletonFromThreeNodes)
{
    ForestSpec f = parse_forest_spec(kIngletonTree);
    EXPECT_TRUE(validate_tree(f).empty());
    EXPECT_EQ(tree_inequality(f),
              parse_inequality("I(A;B) <= I(A;B|C)+I(A;B|D)+I(C;D)", f.universe));
}

TEST(Tree, ChildMustBeConditionedOnItsSide)
{
    ForestSpec f = parse_forest_spec("vars A B C D\nnode r I(C;D)\nnode x I(A;B|D)\n"
                                     "node y I(A;B|D)\nleft x of r\nright y of r\n");
    auto v = validate_tree(f);
    EXPECT_TRUE(has_clause(v, "b"));
    EXPECT_THROW(tree_inequality(f), std::invalid_argument);
}

TEST(Tree, LeafSideMustBeDesignated)
{
    ForestSpec f = parse_forest_spec("vars A B C D\nnode r I(C;D)\nnode x I(A;B|C)\n"
                                     "left x of r\n");
    auto v = validate_tree(f);
    EXPECT_TRUE(has_clause(v, "a'"));
    EXPECT_FALSE(has_clause(v, "a"));
}

TEST(Tree, RootMustBeUnconditioned)
{
    ForestSpec f = parse_forest_spec("vars A B C\nnode r I(A;B|C)\n");
    EXPECT_TRUE(has_clause(validate_tree(f), "root"));
}

TEST(Tree, PointersAreForestOnly)
{
    ForestSpec f = parse_forest_spec("vars A B C D\nnode r I(C;D)\nnode x I(A;B|C)\n"
                                     "node r2 I(A;B)\nleft x of r\nrptr r -> x\n");
    EXPECT_FALSE(validate_tree(f).empty());
}

TEST(Forest, CycleIsStructural)
{
    ForestSpec f;
    f.universe = VarUniverse::letters(3);
    f.a = VarSet(1);
    f.b = VarSet(2);
    InfoTerm t = InfoTerm::mutual(VarSet(1), VarSet(2));
    f.nodes = {{t, 1, -1, -1, -1}, {t, 0, -1, -1, -1}};
    EXPECT_TRUE(has_clause(check_structure(f), "structure"));
}

TEST(Forest, SingleTreeCountsOnce)
{
    ForestSpec f = parse_forest_spec(kIngletonTree);
    EXPECT_EQ(forest_inequality(f), tree_inequality(f));
}

TEST(TermList, BuildsIngletonTree)
{
    VarUniverse u = VarUniverse::letters(4);
    TermList list{u, VarSet(1), VarSet(2),
                  {parse_info_term("I(C;D)", u), parse_info_term("I(A;B|C)", u),
                   parse_info_term("I(A;B|D)", u)}};
    ForestSpec f = list_to_tree(list);
    EXPECT_TRUE(validate_tree(f).empty());
    EXPECT_EQ(tree_inequality(f), tree_inequality(parse_forest_spec(kIngletonTree)));
}

TEST(TermList, RejectsBadLists)
{
    VarUniverse u = VarUniverse::letters(4);
    auto t = [&](const char* s) { return parse_info_term(s, u); };
    EXPECT_THROW(check_term_list({u, VarSet(1), VarSet(2), {t("I(A;B|C)")}}), std::invalid_argument);
    EXPECT_THROW(check_term_list({u, VarSet(1), VarSet(2), {t("I(C;D)"), t("I(A;B|C)")}}),
                 std::invalid_argument);
    EXPECT_THROW(check_term_list({u, VarSet(1), VarSet(2), {t("I(C;D)"), t("I(C;B|A)")}}),
                 std::invalid_argument);
}

TEST(RandomForest, DeterministicAndValid)
{
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        ForestSpec f = random_valid_forest(seed);
        EXPECT_TRUE(validate_forest(f).empty()) << "seed " << seed;
        EXPECT_LE(f.nodes.size(), 8u);
        EXPECT_LE(f.universe.size(), 6);
        EXPECT_EQ(random_valid_forest(seed), f);
    }
}

TEST(RandomForest, InequalitiesFollowFromCommonInformation)
{
    auto decls = parse_hypotheses("Z = CI(A ; B)");
    for (std::uint64_t seed = 1000; seed < 1020; ++seed) {
        ForestSpec f = random_valid_forest(seed);
        auto r = prove_with_common_informations(forest_inequality(f), decls);
        EXPECT_EQ(r.status, ProofResult::Status::proved) << format_forest_spec(f);
    }
}
