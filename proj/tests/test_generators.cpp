#include <gtest/gtest.h>

#include "linrank/generators.hpp"
#include "linrank/polymatroid.hpp"
#include "linrank/shannon.hpp"
#include "linrank/text_io.hpp"

using namespace linrank;

TEST(Families, Names)
{
    for (const char* n : {"starone", "startwo", "npvar", "indep", "kinser"})
        EXPECT_EQ(family_name(*parse_family_kind(n)), n);
    EXPECT_FALSE(parse_family_kind("nope"));
}

TEST(Families, RangeChecks)
{
    EXPECT_THROW(family(FamilyKind::kinser, 3), std::invalid_argument);
    EXPECT_THROW(family(FamilyKind::npvar, 1), std::invalid_argument);
    EXPECT_THROW(family(FamilyKind::starone, 0), std::invalid_argument);
    EXPECT_THROW(family(FamilyKind::npvar, 30), std::invalid_argument);
    EXPECT_NO_THROW(family(FamilyKind::kinser, 4));
}

TEST(Families, NpvarTwoIsIngleton)
{
    LinearInequality q = family(FamilyKind::npvar, 2);
    LinearInequality ing =
        parse_inequality("I(A;B) <= I(A;B|C1)+I(A;B|C2)+I(C1;C2)", q.universe);
    EXPECT_TRUE(linear_identical(q.expr, ing.expr));
}

TEST(Families, IndepEqualsNpvar)
{
    for (int n = 2; n <= 6; ++n)
        EXPECT_TRUE(linear_identical(family(FamilyKind::indep, n).expr,
                                     family(FamilyKind::npvar, n).expr))
            << n;
}

TEST(Families, IndepWrittenOut)
{
    // (n-1) I(A;B) + H(C1..Cn) <= sum I(A,Ci;B,Ci) for n = 3, by hand.
    LinearInequality q = family(FamilyKind::indep, 3);
    LinearInequality byhand = parse_inequality(
        "2I(A;B)+H(C1,C2,C3) <= I(A,C1;B,C1)+I(A,C2;B,C2)+I(A,C3;B,C3)", q.universe);
    EXPECT_EQ(q, byhand);
}

TEST(Families, ViolatedByIndependenceVector)
{
    // Slack is exactly -1: LHS 5, RHS 4 when n = 2.
    for (int n = 2; n <= 6; ++n) {
        IndependenceFamily fam = independence_vectors(n);
        EXPECT_EQ(evaluate(family(FamilyKind::indep, n), fam.v), -1) << n;
        EXPECT_FALSE(validate_polymatroid(fam.v));
    }
}

TEST(Families, SmallInstancesAreLinearRank)
{
    // Each instance follows from Shannon plus a common information of the
    // designated pair.
    struct Case {
        FamilyKind kind;
        int n;
        const char* ci;
    };
    // starone(1) is I(A0;B0) <= I(B0;B1) + I(A0;B0|B1), already Shannon.
    EXPECT_EQ(prove(family(FamilyKind::starone, 1)).status, ProofResult::Status::proved);
    for (const Case& c : {Case{FamilyKind::starone, 2, "Z = CI(A0 ; B0)"},
                          Case{FamilyKind::starone, 3, "Z = CI(A0 ; B0)"},
                          Case{FamilyKind::startwo, 1, "Z = CI(A0 ; B0)"},
                          Case{FamilyKind::npvar, 3, "Z = CI(A ; B)"}}) {
        LinearInequality q = family(c.kind, c.n);
        EXPECT_EQ(prove(q).status, ProofResult::Status::not_provable) << q.label;
        EXPECT_EQ(prove_with_common_informations(q, parse_hypotheses(c.ci)).status,
                  ProofResult::Status::proved)
            << q.label;
    }
}

TEST(Trees, ChainAndCompleteAreValid)
{
    for (int n = 1; n <= 4; ++n) {
        EXPECT_TRUE(validate_tree(chain_tree(n)).empty()) << n;
        EXPECT_TRUE(validate_tree(complete_tree(n)).empty()) << n;
        EXPECT_EQ(chain_tree(n).nodes.size(), static_cast<std::size_t>(n + 1));
        EXPECT_EQ(complete_tree(n).nodes.size(), (std::size_t{1} << (n + 1)) - 1);
    }
}

TEST(Trees, FamiliesComeFromTrees)
{
    EXPECT_EQ(family(FamilyKind::starone, 3), tree_inequality(chain_tree(3)));
    EXPECT_EQ(family(FamilyKind::startwo, 2), tree_inequality(complete_tree(2)));
}
