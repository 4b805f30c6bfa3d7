#ifndef LINRANK_REPR_SEARCH_HPP
#define LINRANK_REPR_SEARCH_HPP

// Dimension-counting search for a linear representation of a rank vector.
// Variables are placed one at a time; each basis vector of the variable
// being placed is put in general position inside a sum of placed subspaces
// (or an intersection of two such sums), and every sum is then quotiented
// by it.  Only dimensions are tracked, never actual vectors.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linrank/core.hpp"
#include "linrank/matrix.hpp"

namespace linrank {

enum class Decision { yes, no, unknown };

/// Is R cap S contained in T?  dims[m] is the dimension of the sum of the
/// placed subspaces in mask m (dims.size() == 2^k).
Decision subset_decision(Mask r, Mask s, Mask t, const std::vector<long>& dims);

/// subset_decision for every T at once, with answers propagated along
/// inclusions between sums.
std::vector<Decision> intersection_membership(Mask r, Mask s, const std::vector<long>& dims);

/// Arrays for placing `var` over `placed`: dims[m] = v(U(m)) and
/// need[m] = v(U(m) + var) - v(U(m)), where bit j of m is placed[j].
struct SearchState {
    std::vector<int> placed;
    int var = -1;
    std::vector<long> dims;
    std::vector<long> need;
};

SearchState initial_state(const RankVector& v, const std::vector<int>& placed, int var);

struct TraceStep {
    enum class Kind { fresh, sum, intersection };
    Kind kind = Kind::fresh;
    Mask r = 0, s = 0;
    std::vector<int> member;
    std::vector<long> dims, need;
    // When the plain sum r was tried first and rejected because of s.
    bool retried = false;
    std::vector<int> tried_member;
    std::vector<long> tried_dims, tried_need;
};

struct StepOutcome {
    enum class Status { chosen, complete, stuck, contradiction };
    Status status = Status::complete;
    TraceStep step;
    std::string reason;
};

/// One vector for the variable being placed; updates `state` on success.
StepOutcome choose_and_quotient(SearchState& state);

struct VariableTrace {
    int var = -1;
    std::vector<int> placed;
    std::vector<long> dims, need; // initial arrays
    std::vector<TraceStep> steps;
};

struct SearchTrace {
    VarUniverse universe;
    std::vector<int> order;
    std::vector<VariableTrace> variables;
};

struct SearchOptions {
    /// Orders tried; 0 means all n! orders when n <= 6 and 720 otherwise.
    std::size_t permutation_cap = 0;
};

struct SearchResult {
    enum class Status { success, failure, unknown };
    Status status = Status::unknown;
    SearchTrace trace; // the successful order, or the last attempt
    std::size_t orders_tried = 0;
    std::string message;
};

/// Throws std::invalid_argument for non-integer or non-polymatroid input.
SearchResult search_representation(const RankVector& v, const SearchOptions& options = {});

/// Places the variables in the given order only.
SearchResult search_order(const RankVector& v, const std::vector<int>& order);

std::string format_trace(const SearchTrace& trace);

/// Re-applies every recorded subtraction from the initial arrays and checks
/// the intermediate arrays and the final all-zero need rows.
bool replay_trace(const RankVector& v, const SearchTrace& trace);

/// Follows the trace with random general-position vectors over
/// GF(2^31 - 1); nullopt when the resulting ranks differ from v.
std::optional<SubspaceRepresentation> realize_trace(const RankVector& v, const SearchTrace& trace,
                                                    std::uint64_t seed);

} // namespace linrank

#endif
