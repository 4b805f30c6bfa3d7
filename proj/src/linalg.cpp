#include "linrank/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace linrank {

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

int rank(const IntMatrix& m)
{
    std::vector<Integer> a = m.data;
    const int rows = m.rows, cols = m.cols;
    auto at = [&](int r, int c) -> Integer& { return a[static_cast<std::size_t>(r) * cols + c]; };
    Integer prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = r;
        while (p < rows && sgn(at(p, c)) == 0)
            ++p;
        if (p == rows)
            continue;
        if (p != r)
            for (int j = 0; j < cols; ++j)
                std::swap(at(p, j), at(r, j));
        // Bareiss step: entries stay integral and exact.
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                at(i, j) = at(r, c) * at(i, j) - at(i, c) * at(r, j);
                mpz_divexact(at(i, j).get_mpz_t(), at(i, j).get_mpz_t(), prev.get_mpz_t());
            }
            at(i, c) = 0;
        }
        prev = at(r, c);
        ++r;
    }
    return r;
}

int rank_mod_p(const IntMatrix& m, std::uint64_t p)
{
    if (p >= (std::uint64_t{1} << 32) || !is_prime(p))
        throw std::invalid_argument("modulus must be a prime below 2^32");
    const int rows = m.rows, cols = m.cols;
    std::vector<std::uint64_t> a(m.data.size());
    Integer mod(static_cast<unsigned long>(p));
    for (std::size_t i = 0; i < a.size(); ++i) {
        Integer r;
        mpz_fdiv_r(r.get_mpz_t(), m.data[i].get_mpz_t(), mod.get_mpz_t());
        a[i] = r.get_ui();
    }
    auto at = [&](int r, int c) -> std::uint64_t& {
        return a[static_cast<std::size_t>(r) * cols + c];
    };
    auto power = [p](std::uint64_t b, std::uint64_t e) {
        std::uint64_t x = 1;
        for (; e; e >>= 1, b = b * b % p)
            if (e & 1)
                x = x * b % p;
        return x;
    };
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int q = r;
        while (q < rows && at(q, c) == 0)
            ++q;
        if (q == rows)
            continue;
        if (q != r)
            for (int j = 0; j < cols; ++j)
                std::swap(at(q, j), at(r, j));
        std::uint64_t inv = power(at(r, c), p - 2);
        for (int j = c; j < cols; ++j)
            at(r, j) = at(r, j) * inv % p;
        for (int i = r + 1; i < rows; ++i) {
            std::uint64_t f = at(i, c);
            if (f == 0)
                continue;
            for (int j = c; j < cols; ++j)
                at(i, j) = (at(i, j) + (p - f) * at(r, j)) % p;
        }
        ++r;
    }
    return r;
}

std::vector<Integer> invariant_factors(const IntMatrix& m)
{
    const int rows = m.rows, cols = m.cols;
    std::vector<Integer> a = m.data;
    auto at = [&](int r, int c) -> Integer& { return a[static_cast<std::size_t>(r) * cols + c]; };
    auto swap_rows = [&](int x, int y) {
        for (int j = 0; j < cols; ++j)
            std::swap(at(x, j), at(y, j));
    };
    auto swap_cols = [&](int x, int y) {
        for (int i = 0; i < rows; ++i)
            std::swap(at(i, x), at(i, y));
    };

    std::vector<Integer> out;
    for (int t = 0; t < std::min(rows, cols); ++t) {
        while (true) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            int pr = -1, pc = -1;
            for (int i = t; i < rows; ++i)
                for (int j = t; j < cols; ++j)
                    if (sgn(at(i, j)) != 0 &&
                        (pr < 0 || mpz_cmpabs(at(i, j).get_mpz_t(), at(pr, pc).get_mpz_t()) < 0)) {
                        pr = i;
                        pc = j;
                    }
            if (pr < 0)
                return out;
            swap_rows(t, pr);
            swap_cols(t, pc);

            bool clean = true;
            Integer q;
            for (int i = t + 1; i < rows; ++i) {
                if (sgn(at(i, t)) == 0)
                    continue;
                mpz_fdiv_q(q.get_mpz_t(), at(i, t).get_mpz_t(), at(t, t).get_mpz_t());
                for (int j = t; j < cols; ++j)
                    at(i, j) -= q * at(t, j);
                clean = clean && sgn(at(i, t)) == 0;
            }
            for (int j = t + 1; j < cols; ++j) {
                if (sgn(at(t, j)) == 0)
                    continue;
                mpz_fdiv_q(q.get_mpz_t(), at(t, j).get_mpz_t(), at(t, t).get_mpz_t());
                for (int i = t; i < rows; ++i)
                    at(i, j) -= q * at(i, t);
                clean = clean && sgn(at(t, j)) == 0;
            }
            if (!clean)
                continue;
            // The pivot must divide the rest; otherwise fold a bad row in.
            int bad = -1;
            for (int i = t + 1; i < rows && bad < 0; ++i)
                for (int j = t + 1; j < cols; ++j)
                    if (!mpz_divisible_p(at(i, j).get_mpz_t(), at(t, t).get_mpz_t())) {
                        bad = i;
                        break;
                    }
            if (bad < 0)
                break;
            for (int j = t; j < cols; ++j)
                at(t, j) += at(bad, j);
        }
        out.push_back(abs(at(t, t)));
    }
    return out;
}

bool RowSpace::insert(std::vector<Rational> row)
{
    if (static_cast<int>(row.size()) != cols_)
        throw std::invalid_argument("row length does not match");
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        int c = pivots_[k];
        if (sgn(row[c]) == 0)
            continue;
        Rational f = row[c];
        for (int j = 0; j < cols_; ++j)
            if (sgn(rows_[k][j]) != 0)
                row[j] -= f * rows_[k][j];
    }
    int c = 0;
    while (c < cols_ && sgn(row[c]) == 0)
        ++c;
    if (c == cols_)
        return false;
    Rational inv = 1 / row[c];
    for (auto& x : row)
        x *= inv;
    // Keep the echelon reduced so later inserts need one pass.
    for (auto& r : rows_) {
        if (sgn(r[c]) == 0)
            continue;
        Rational f = r[c];
        for (int j = 0; j < cols_; ++j)
            if (sgn(row[j]) != 0)
                r[j] -= f * row[j];
    }
    rows_.push_back(std::move(row));
    pivots_.push_back(c);
    return true;
}

int rank(const std::vector<std::vector<Rational>>& rows, int cols)
{
    RowSpace s(cols);
    for (const auto& r : rows) {
        s.insert(r);
        if (s.rank() == cols)
            break;
    }
    return s.rank();
}

namespace {

std::uint64_t inverse_mod(std::uint64_t b, std::uint64_t p)
{
    std::uint64_t x = 1, e = p - 2;
    for (; e; e >>= 1, b = b * b % p)
        if (e & 1)
            x = x * b % p;
    return x;
}

} // namespace

std::vector<ModRow> row_basis_mod_p(std::vector<ModRow> rows, std::uint64_t p)
{
    std::vector<ModRow> basis;
    std::vector<std::size_t> pivots;
    for (auto& row : rows) {
        for (std::size_t k = 0; k < basis.size(); ++k) {
            std::uint64_t f = row[pivots[k]];
            if (f == 0)
                continue;
            for (std::size_t j = 0; j < row.size(); ++j)
                row[j] = (row[j] + (p - f) * basis[k][j]) % p;
        }
        std::size_t c = 0;
        while (c < row.size() && row[c] == 0)
            ++c;
        if (c == row.size())
            continue;
        std::uint64_t inv = inverse_mod(row[c], p);
        for (auto& x : row)
            x = x * inv % p;
        for (auto& b : basis) {
            std::uint64_t f = b[c];
            if (f == 0)
                continue;
            for (std::size_t j = 0; j < b.size(); ++j)
                b[j] = (b[j] + (p - f) * row[j]) % p;
        }
        basis.push_back(std::move(row));
        pivots.push_back(c);
    }
    return basis;
}

std::vector<ModRow> intersect_mod_p(const std::vector<ModRow>& a, const std::vector<ModRow>& b,
                                    std::size_t cols, std::uint64_t p)
{
    // Zassenhaus: reduce [a a; b 0]; rows whose left half vanishes span the
    // intersection in their right half.
    std::vector<ModRow> stacked;
    for (const auto& r : a) {
        ModRow x(r);
        x.insert(x.end(), r.begin(), r.end());
        stacked.push_back(std::move(x));
    }
    for (const auto& r : b) {
        ModRow x(r);
        x.resize(2 * cols, 0);
        stacked.push_back(std::move(x));
    }
    std::vector<ModRow> out;
    for (auto& r : row_basis_mod_p(std::move(stacked), p)) {
        bool left_zero = true;
        for (std::size_t j = 0; j < cols && left_zero; ++j)
            left_zero = r[j] == 0;
        if (left_zero)
            out.emplace_back(r.begin() + static_cast<std::ptrdiff_t>(cols), r.end());
    }
    return out;
}

} // namespace linrank
