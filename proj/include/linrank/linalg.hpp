#ifndef LINRANK_LINALG_HPP
#define LINRANK_LINALG_HPP

// Exact ranks over the rationals and prime fields, and Smith normal form.

#include <cstdint>
#include <vector>

#include "linrank/matrix.hpp"
#include "linrank/rational.hpp"

namespace linrank {

bool is_prime(std::uint64_t n);

/// Rank over the rationals (fraction-free elimination).
int rank(const IntMatrix& m);

/// Rank over GF(p); p must be a prime below 2^32.
int rank_mod_p(const IntMatrix& m, std::uint64_t p);

/// Nonzero diagonal of the Smith normal form, positive, each dividing the
/// next.  Its length is the rational rank; the product of the first k
/// entries is the gcd of all k x k minors.
std::vector<Integer> invariant_factors(const IntMatrix& m);

/// Growing set of rational rows kept in reduced echelon form.
class RowSpace {
public:
    explicit RowSpace(int cols) : cols_(cols) {}

    /// Adds the row; true when it was independent of the rows so far.
    bool insert(std::vector<Rational> row);
    int rank() const { return static_cast<int>(rows_.size()); }
    int cols() const { return cols_; }

private:
    int cols_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<int> pivots_;
};

int rank(const std::vector<std::vector<Rational>>& rows, int cols);

// Row vectors over GF(p), entries in [0, p).
using ModRow = std::vector<std::uint64_t>;

/// Reduced echelon basis of the row span.
std::vector<ModRow> row_basis_mod_p(std::vector<ModRow> rows, std::uint64_t p);

/// Basis of span(a) intersected with span(b); rows share one length.
std::vector<ModRow> intersect_mod_p(const std::vector<ModRow>& a, const std::vector<ModRow>& b,
                                    std::size_t cols, std::uint64_t p);

} // namespace linrank

#endif
