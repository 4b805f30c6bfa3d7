#include <gtest/gtest.h>

#include <random>

#include "linrank/linalg.hpp"

using namespace linrank;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, int r, int c, int lo, int hi)
{
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix m(r, c);
    for (auto& x : m.data)
        x = d(rng);
    return m;
}

Integer det(std::vector<std::vector<Integer>> a)
{
    // Cofactor expansion; only used on tiny minors.
    const std::size_t n = a.size();
    if (n == 0)
        return 1;
    Integer s = 0;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<Integer>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Integer> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j)
                    row.push_back(a[i][k]);
            minor.push_back(row);
        }
        Integer t = a[0][j] * det(minor);
        s += (j % 2 ? -t : t);
    }
    return s;
}

// Largest k with a nonzero k x k minor (mod p when p > 0).
int rank_by_minors(const IntMatrix& m, std::uint64_t p = 0)
{
    int best = 0;
    for (std::uint32_t rs = 1; rs < (1u << m.rows); ++rs)
        for (std::uint32_t cs = 1; cs < (1u << m.cols); ++cs) {
            int k = std::popcount(rs);
            if (k != std::popcount(cs) || k <= best)
                continue;
            std::vector<std::vector<Integer>> a;
            for (int i = 0; i < m.rows; ++i)
                if (rs >> i & 1) {
                    std::vector<Integer> row;
                    for (int j = 0; j < m.cols; ++j)
                        if (cs >> j & 1)
                            row.push_back(m.at(i, j));
                    a.push_back(row);
                }
            Integer d = det(a);
            if (p)
                d %= static_cast<unsigned long>(p);
            if (d != 0)
                best = k;
        }
    return best;
}

} // namespace

TEST(Primes, Small)
{
    EXPECT_FALSE(is_prime(0));
    EXPECT_FALSE(is_prime(1));
    EXPECT_TRUE(is_prime(2));
    EXPECT_TRUE(is_prime(2147483647));
    EXPECT_FALSE(is_prime(2147483649ull));
}

TEST(Rank, AgreesWithMinors)
{
    std::mt19937_64 rng(5);
    for (int t = 0; t < 150; ++t) {
        IntMatrix m = random_matrix(rng, 1 + t % 4, 1 + (t / 4) % 4, -2, 2);
        EXPECT_EQ(rank(m), rank_by_minors(m));
        for (std::uint64_t p : {2, 3, 5})
            EXPECT_EQ(rank_mod_p(m, p), rank_by_minors(m, p)) << "p=" << p;
    }
}

TEST(Rank, ZeroRows)
{
    EXPECT_EQ(rank(IntMatrix(0, 3)), 0);
    EXPECT_EQ(rank_mod_p(IntMatrix(0, 3), 7), 0);
}

TEST(Rank, RejectsLargeModulus)
{
    EXPECT_THROW(rank_mod_p(IntMatrix(1, 1), 4294967311ull), std::invalid_argument);
}

TEST(SmithForm, KnownExample)
{
    // diag(2, 6) after mixing rows and columns.
    IntMatrix m(2, 2);
    m.at(0, 0) = 2;
    m.at(0, 1) = 4;
    m.at(1, 0) = 6;
    m.at(1, 1) = 6;
    auto f = invariant_factors(m);
    ASSERT_EQ(f.size(), 2u);
    EXPECT_EQ(f[0], 2);
    EXPECT_EQ(f[1], 6);
}

TEST(SmithForm, FactorsPredictModularRank)
{
    std::mt19937_64 rng(9);
    for (int t = 0; t < 60; ++t) {
        IntMatrix m = random_matrix(rng, 3, 3, -4, 4);
        auto f = invariant_factors(m);
        EXPECT_EQ(static_cast<int>(f.size()), rank(m));
        for (std::size_t i = 1; i < f.size(); ++i)
            EXPECT_EQ(f[i] % f[i - 1], 0);
        for (std::uint64_t p : {2, 3, 5, 7}) {
            int expect = 0;
            for (const auto& x : f)
                expect += x % static_cast<unsigned long>(p) != 0;
            EXPECT_EQ(rank_mod_p(m, p), expect);
        }
    }
}

TEST(RowSpace, Incremental)
{
    RowSpace s(3);
    EXPECT_TRUE(s.insert({1, 2, 3}));
    EXPECT_FALSE(s.insert({2, 4, 6}));
    EXPECT_TRUE(s.insert({0, 1, 0}));
    EXPECT_FALSE(s.insert({1, 3, 3}));
    EXPECT_EQ(s.rank(), 2);
}

TEST(ModularSpaces, IntersectionDimension)
{
    // dim(U cap W) = dim U + dim W - dim(U + W)
    const std::uint64_t p = 2147483647;
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<std::uint64_t> d(0, 3);
    for (int t = 0; t < 50; ++t) {
        std::vector<ModRow> a(1 + t % 3, ModRow(4)), b(1 + t % 4, ModRow(4));
        for (auto* rows : {&a, &b})
            for (auto& r : *rows)
                for (auto& x : r)
                    x = d(rng);
        auto ba = row_basis_mod_p(a, p), bb = row_basis_mod_p(b, p);
        std::vector<ModRow> both = a;
        both.insert(both.end(), b.begin(), b.end());
        auto sum = row_basis_mod_p(both, p);
        auto cap = intersect_mod_p(a, b, 4, p);
        EXPECT_EQ(cap.size() + sum.size(), ba.size() + bb.size());
        // every intersection vector lies in both spaces
        for (const auto& v : cap) {
            auto ta = ba, tb = bb;
            ta.push_back(v);
            tb.push_back(v);
            EXPECT_EQ(row_basis_mod_p(ta, p).size(), ba.size());
            EXPECT_EQ(row_basis_mod_p(tb, p).size(), bb.size());
        }
    }
}
