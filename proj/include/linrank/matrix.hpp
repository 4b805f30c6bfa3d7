#ifndef LINRANK_MATRIX_HPP
#define LINRANK_MATRIX_HPP

#include <vector>

#include "linrank/core.hpp"
#include "linrank/rational.hpp"

namespace linrank {

/// Dense row-major integer matrix; zero rows are allowed.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Integer> data;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c) {}

    Integer& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
    const Integer& at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }

    void append_row(const std::vector<Integer>& row);

    bool operator==(const IntMatrix&) const = default;
};

/// One integer matrix per variable; the row space of matrix i is the
/// subspace assigned to variable i.  All matrices share `cols`.
struct SubspaceRepresentation {
    VarUniverse universe;
    int cols = 0;
    std::vector<IntMatrix> matrices;

    /// Rows of every matrix in `subset`, stacked in variable order.
    IntMatrix stacked(Mask subset) const;

    bool operator==(const SubspaceRepresentation&) const = default;
};

} // namespace linrank

#endif
