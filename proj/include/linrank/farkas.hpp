#ifndef LINRANK_FARKAS_HPP
#define LINRANK_FARKAS_HPP

// Exact feasibility of  sum_i lambda_i a_i + sum_j mu_j h_j = t,  lambda >= 0,
// mu free, by a phase-one rational simplex.  An infeasible system comes
// back with y such that y.a_i >= 0, y.h_j = 0 and y.t < 0.

#include <utility>
#include <vector>

#include "linrank/rational.hpp"

namespace linrank {

using SparseColumn = std::vector<std::pair<int, Rational>>;

struct FarkasProblem {
    int rows = 0;
    std::vector<SparseColumn> nonneg;
    std::vector<SparseColumn> free;
    std::vector<Rational> target; // dense, size rows
};

struct FarkasResult {
    enum class Status { feasible, infeasible, pivot_limit };

    Status status = Status::pivot_limit;
    std::vector<Rational> lambda; // feasible: size nonneg.size()
    std::vector<Rational> mu;     // feasible: size free.size()
    std::vector<Rational> dual;   // infeasible: size rows, integral, gcd 1
    long pivots = 0;
    bool used_float_start = false; // answer recovered from the float basis
};

struct FarkasOptions {
    long pivot_limit = 10'000'000;
    /// Consecutive degenerate pivots under the largest-coefficient rule
    /// before switching to Bland's rule until the objective moves again.
    int degenerate_switch = 50;
    /// Locate the final basis in double precision first; the answer is
    /// always rebuilt and checked exactly, falling back to the exact
    /// simplex when the floating-point basis does not certify.
    bool float_start = true;
    /// Scale of the random right-hand-side shift used by the float phase.
    double perturbation = 1e-6;
};

FarkasResult solve_farkas(const FarkasProblem& problem, const FarkasOptions& options = {});

} // namespace linrank

#endif
