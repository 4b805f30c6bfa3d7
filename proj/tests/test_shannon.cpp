#include <gtest/gtest.h>

#include "linrank/catalog.hpp"
#include "linrank/polymatroid.hpp"
#include "linrank/shannon.hpp"

using namespace linrank;

namespace {

LinearInequality ineq(const char* text, int n)
{
    return parse_inequality(text, VarUniverse::letters(n));
}

} // namespace

TEST(Elementals, Counts)
{
    // n + C(n,2) 2^(n-2)
    for (int n = 1; n <= 6; ++n) {
        std::size_t expect = n + (n * (n - 1) / 2) * (n >= 2 ? (1u << (n - 2)) : 0);
        EXPECT_EQ(elemental_count(n), expect);
        EXPECT_EQ(elemental_inequalities(VarUniverse::letters(n)).size(), expect);
    }
    EXPECT_EQ(elemental_count(5), 85u);
}

TEST(Elementals, OrderAndForm)
{
    auto e = elemental_inequalities(VarUniverse::letters(3));
    // H(A|B,C) first
    EXPECT_EQ(e[0].inequality.expr, parse_expression("H(A|B,C)", VarUniverse::letters(3)));
    EXPECT_TRUE(e[0].conditional_entropy);
    // then I(A;B), I(A;B|C), I(A;C), I(A;C|B), ...
    EXPECT_EQ(e[3].inequality.expr, parse_expression("I(A;B)", VarUniverse::letters(3)));
    EXPECT_EQ(e[4].inequality.expr, parse_expression("I(A;B|C)", VarUniverse::letters(3)));
    EXPECT_EQ(e[5].inequality.expr, parse_expression("I(A;C)", VarUniverse::letters(3)));
}

TEST(Elementals, HoldOnMatroidRanks)
{
    RankVector v = parse_rank_vector("1 1 2 1 2 2 3 1 2 2 3 2 3 3 3 2 3 3 3 2 3 3 3 2 3 3 3 2 3 3 3");
    for (const auto& e : elemental_inequalities(v.universe()))
        EXPECT_GE(evaluate(e.inequality, v), 0);
}

TEST(Prove, ShannonInequality)
{
    auto r = prove(ineq("I(A;B|C) <= H(A)", 3));
    ASSERT_EQ(r.status, ProofResult::Status::proved);
    ASSERT_TRUE(r.certificate);
    EXPECT_TRUE(verify_certificate(*r.certificate));
}

TEST(Prove, IngletonNeedsCommonInformation)
{
    auto q = ineq("I(A;B) <= I(A;B|C)+I(A;B|D)+I(C;D)", 4);
    auto r = prove(q);
    ASSERT_EQ(r.status, ProofResult::Status::not_provable);
    ASSERT_TRUE(r.witness);
    EXPECT_LT(evaluate(q, *r.witness), 0);
    EXPECT_FALSE(validate_polymatroid(*r.witness));
    EXPECT_TRUE(verify_witness(*r.witness, q, {}));

    auto with = prove_with_common_informations(q, parse_hypotheses("Z = CI(A ; B)"));
    ASSERT_EQ(with.status, ProofResult::Status::proved);
    EXPECT_TRUE(verify_certificate(*with.certificate));
    EXPECT_EQ(with.certificate->equalities.size(), 3u);
}

TEST(Prove, WrongCommonInformationFails)
{
    auto q = ineq("I(A;B) <= I(A;B|C)+I(A;B|D)+I(C;D)", 4);
    auto r = prove_with_common_informations(q, parse_hypotheses("Z = CI(C ; D)"));
    EXPECT_EQ(r.status, ProofResult::Status::not_provable);
}

TEST(Certificate, TamperingIsCaught)
{
    auto r = prove(ineq("I(A;B|C) <= H(A)", 3));
    ASSERT_TRUE(r.certificate);
    ProofCertificate c = *r.certificate;
    ASSERT_FALSE(c.lambda.empty());
    c.lambda.begin()->second += 1;
    EXPECT_FALSE(verify_certificate(c));
    ProofCertificate neg = *r.certificate;
    neg.lambda.begin()->second = -neg.lambda.begin()->second;
    EXPECT_FALSE(verify_certificate(neg));
}

TEST(Certificate, TextRoundTrip)
{
    auto q = ineq("I(A;B) <= I(A;B|C)+I(A;B|D)+I(C;D)", 4);
    auto r = prove_with_common_informations(q, parse_hypotheses("Z = CI(A ; B)"));
    ASSERT_TRUE(r.certificate);
    ProofCertificate back = parse_certificate(format_certificate(*r.certificate));
    EXPECT_EQ(back.target, r.certificate->target);
    EXPECT_EQ(back.lambda, r.certificate->lambda);
    EXPECT_EQ(back.mu, r.certificate->mu);
    EXPECT_TRUE(verify_certificate(back));
}

TEST(KSlack, TrivialAndFailing)
{
    VarUniverse u = VarUniverse::letters(2).extended({"Z"});
    auto decls = parse_hypotheses("Z = CI(A ; B)");
    // H(Z) <= H(Z) holds with no slack at all.
    auto t = prove_k_slack(parse_inequality("H(Z) <= H(Z)", u), decls, 0);
    EXPECT_EQ(t.status, ProofResult::Status::proved);
    // H(Z) <= I(A;B) needs slack: with k=1, H(Z) <= I(A;B)+H(Z|A)+H(Z|B) is Shannon.
    auto q = parse_inequality("H(Z) <= I(A;B)", u);
    EXPECT_EQ(prove_k_slack(q, decls, 0).status, ProofResult::Status::not_provable);
    EXPECT_EQ(prove_k_slack(q, decls, 1).status, ProofResult::Status::proved);
}

TEST(KSlack, FormAddsBothTerms)
{
    VarUniverse u = VarUniverse::letters(2).extended({"Z"});
    auto decls = parse_hypotheses("Z = CI(A ; B)");
    auto q = parse_inequality("H(Z) <= I(A;B)", u);
    auto s = k_slack_form(q, decls, 3);
    EXPECT_EQ(s.expr, q.expr + Rational(3) * parse_expression("H(Z|A)+H(Z|B)", u));
}

TEST(Lemmas, AllProved)
{
    for (const auto& l : lemma_suite()) {
        auto r = prove(l.inequality, l.equalities);
        EXPECT_EQ(r.status, ProofResult::Status::proved) << l.name;
        if (r.certificate)
            EXPECT_TRUE(verify_certificate(*r.certificate)) << l.name;
    }
}

TEST(Lemmas, CorollaryNeedsItsEquality)
{
    for (const auto& l : lemma_suite())
        if (l.name == "corollary-2")
            EXPECT_EQ(prove(l.inequality).status, ProofResult::Status::not_provable);
}
