#ifndef LINRANK_FOREST_HPP
#define LINRANK_FOREST_HPP

// Labeled binary forests whose node labels sum to an upper bound on
// m*I(A;B), and the term-list form of the single-tree case.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linrank/core.hpp"

namespace linrank {

struct ForestNode {
    InfoTerm label; // always a mutual-information term
    int left = -1;
    int right = -1;
    int lptr = -1;
    int rptr = -1;

    bool operator==(const ForestNode&) const = default;
};

struct ForestSpec {
    VarUniverse universe;
    VarSet a, b; // the designated pair
    std::vector<ForestNode> nodes;
    std::vector<std::string> ids; // display names only; not compared

    /// Index of the node holding `child` as a left or right child, or -1.
    int parent(int child) const;
    /// Nodes without a parent, in node order.
    std::vector<int> roots() const;

    friend bool operator==(const ForestSpec& x, const ForestSpec& y)
    {
        return x.universe == y.universe && x.a == y.a && x.b == y.b && x.nodes == y.nodes;
    }
};

struct ForestViolation {
    int node = -1;
    std::string clause; // "a", "a'", "root", "pointer", "structure"
    std::string message;
};

/// Structural problems (cycles, shared children, doubly-targeted pointers,
/// dangling indices).  Empty when the forest is well-formed.
std::vector<ForestViolation> check_structure(const ForestSpec& spec);

/// Single tree, no pointers, every node satisfies (a)/(b) and (a')/(b').
std::vector<ForestViolation> validate_tree(const ForestSpec& spec);

/// Clauses (a)-(c) and (a')-(c') at every node, plus empty conditioning at
/// each root and the single-incoming-pointer rule.
std::vector<ForestViolation> validate_forest(const ForestSpec& spec);

/// I(A;B) <= sum of labels.  Throws std::invalid_argument when invalid.
LinearInequality tree_inequality(const ForestSpec& spec);

/// m*I(A;B) <= sum of labels, m = number of roots.
LinearInequality forest_inequality(const ForestSpec& spec);

std::string describe(const ForestViolation& v, const ForestSpec& spec);

/// Terms I(x_i;y_i|w_i), w_1 empty, over the named pair a,b.
struct TermList {
    VarUniverse universe;
    VarSet a, b;
    std::vector<InfoTerm> terms;
};

/// Throws std::invalid_argument when some auxiliary value is not used
/// exactly once as a w and once as an x or y, or a/b appear as a w.
void check_term_list(const TermList& list);

/// Root is the first term; a side that is not A or B gets the unique term
/// conditioned on it as its child.  Unused terms are dropped.
ForestSpec list_to_tree(const TermList& list);

/// A random forest satisfying validate_forest, on variables A,B,... with
/// designated pair A,B.  Deterministic in `seed`.
ForestSpec random_valid_forest(std::uint64_t seed, int max_nodes = 8, int max_vars = 6);

} // namespace linrank

#endif
