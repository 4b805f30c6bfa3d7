#include <gtest/gtest.h>

#include <random>

#include "linrank/farkas.hpp"

using namespace linrank;

namespace {

// Residual of sum lambda_i a_i + sum mu_j h_j - t, computed directly.
std::vector<Rational> residual(const FarkasProblem& p, const FarkasResult& r)
{
    std::vector<Rational> res(p.rows);
    for (int i = 0; i < p.rows; ++i)
        res[i] = -p.target[i];
    for (std::size_t i = 0; i < p.nonneg.size(); ++i)
        for (const auto& [row, a] : p.nonneg[i])
            res[row] += r.lambda[i] * a;
    for (std::size_t j = 0; j < p.free.size(); ++j)
        for (const auto& [row, a] : p.free[j])
            res[row] += r.mu[j] * a;
    return res;
}

Rational dot(const std::vector<Rational>& y, const SparseColumn& c)
{
    Rational s = 0;
    for (const auto& [row, a] : c)
        s += y[row] * a;
    return s;
}

void check(const FarkasProblem& p, const FarkasResult& r)
{
    if (r.status == FarkasResult::Status::feasible) {
        for (const auto& l : r.lambda)
            EXPECT_GE(l, 0);
        for (const auto& x : residual(p, r))
            EXPECT_EQ(x, 0);
    } else {
        ASSERT_EQ(r.status, FarkasResult::Status::infeasible);
        for (const auto& c : p.nonneg)
            EXPECT_GE(dot(r.dual, c), 0);
        for (const auto& c : p.free)
            EXPECT_EQ(dot(r.dual, c), 0);
        Rational yt = 0;
        for (int i = 0; i < p.rows; ++i)
            yt += r.dual[i] * p.target[i];
        EXPECT_LT(yt, 0);
    }
}

FarkasProblem random_problem(std::mt19937_64& rng, int rows, int cols, int frees)
{
    std::uniform_int_distribution<int> d(-3, 3);
    FarkasProblem p;
    p.rows = rows;
    auto column = [&] {
        SparseColumn c;
        for (int i = 0; i < rows; ++i)
            if (int x = d(rng))
                c.push_back({i, x});
        return c;
    };
    for (int j = 0; j < cols; ++j)
        p.nonneg.push_back(column());
    for (int j = 0; j < frees; ++j)
        p.free.push_back(column());
    p.target.resize(rows);
    for (auto& t : p.target)
        t = d(rng);
    return p;
}

} // namespace

TEST(Farkas, FeasibleByHand)
{
    // lambda1 (1,0) + lambda2 (1,1) = (2,1): lambda = (1,1)
    FarkasProblem p;
    p.rows = 2;
    p.nonneg = {{{0, 1}}, {{0, 1}, {1, 1}}};
    p.target = {2, 1};
    auto r = solve_farkas(p);
    ASSERT_EQ(r.status, FarkasResult::Status::feasible);
    EXPECT_EQ(r.lambda[0], 1);
    EXPECT_EQ(r.lambda[1], 1);
}

TEST(Farkas, InfeasibleByHand)
{
    // lambda (1) = (-1) has no nonnegative solution.
    FarkasProblem p;
    p.rows = 1;
    p.nonneg = {{{0, 1}}};
    p.target = {-1};
    auto r = solve_farkas(p);
    ASSERT_EQ(r.status, FarkasResult::Status::infeasible);
    check(p, r);
}

TEST(Farkas, FreeColumnAbsorbsSign)
{
    FarkasProblem p;
    p.rows = 1;
    p.nonneg = {{{0, 1}}};
    p.free = {{{0, 1}}};
    p.target = {-5};
    auto r = solve_farkas(p);
    ASSERT_EQ(r.status, FarkasResult::Status::feasible);
    check(p, r);
}

TEST(Farkas, DualIsIntegralWithUnitGcd)
{
    FarkasProblem p;
    p.rows = 2;
    p.nonneg = {{{0, 2}}, {{1, 2}}};
    p.target = {-1, 3};
    auto r = solve_farkas(p);
    ASSERT_EQ(r.status, FarkasResult::Status::infeasible);
    Integer g = 0;
    for (const auto& y : r.dual) {
        EXPECT_EQ(y.get_den(), 1);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), y.get_num_mpz_t());
    }
    EXPECT_EQ(g, 1);
}

TEST(Farkas, RandomProblemsBothRoutesAgree)
{
    std::mt19937_64 rng(3);
    int feasible = 0;
    for (int trial = 0; trial < 200; ++trial) {
        FarkasProblem p = random_problem(rng, 2 + trial % 5, 1 + trial % 7, trial % 3);
        FarkasOptions exact;
        exact.float_start = false;
        auto a = solve_farkas(p);
        auto b = solve_farkas(p, exact);
        EXPECT_EQ(a.status, b.status) << "trial " << trial;
        check(p, a);
        check(p, b);
        feasible += a.status == FarkasResult::Status::feasible;
    }
    EXPECT_GT(feasible, 0);
    EXPECT_LT(feasible, 200);
}

TEST(Farkas, DegenerateSystem)
{
    // Many parallel copies of the same column force degenerate pivots.
    FarkasProblem p;
    p.rows = 3;
    for (int k = 0; k < 60; ++k)
        p.nonneg.push_back({{0, 1}, {1, 1}});
    p.nonneg.push_back({{2, 1}});
    p.target = {1, 1, 0};
    FarkasOptions exact;
    exact.float_start = false;
    auto r = solve_farkas(p, exact);
    ASSERT_EQ(r.status, FarkasResult::Status::feasible);
    check(p, r);
}

TEST(Farkas, PerturbedFloatPhaseMatchesUnperturbed)
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        FarkasProblem p = random_problem(rng, 2 + trial % 6, 1 + trial % 8, trial % 3);
        // Zero targets make every vertex degenerate.
        if (trial % 4 == 0)
            for (int i = 0; i < p.rows; i += 2)
                p.target[i] = 0;
        FarkasOptions plain;
        plain.perturbation = 0;
        auto a = solve_farkas(p);
        auto b = solve_farkas(p, plain);
        EXPECT_EQ(a.status, b.status) << "trial " << trial;
        check(p, a);
        check(p, b);
    }
}
