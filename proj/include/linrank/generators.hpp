#ifndef LINRANK_GENERATORS_HPP
#define LINRANK_GENERATORS_HPP

// Infinite families of linear rank inequalities and the trees behind them.

#include <optional>
#include <string_view>

#include "linrank/core.hpp"
#include "linrank/forest.hpp"

namespace linrank {

enum class FamilyKind {
    starone, // chain tree on A0,B0,B1..Bn                     n >= 1
    startwo, // complete tree on A0,B0,...,An,Bn               n >= 1
    npvar,   // (n-1)I(A;B) <= sum I(A;B|Ci) + [C1..Cn bracket]  n >= 2
    indep,   // (n-1)I(A;B) + H(C1..Cn) <= sum I(A,Ci;B,Ci)     n >= 2
    kinser,  // on A1..An                                       n >= 4
};

std::optional<FamilyKind> parse_family_kind(std::string_view name);
std::string_view family_name(FamilyKind kind);
int family_min_n(FamilyKind kind);

/// Throws std::invalid_argument for n out of range or more than 26 variables.
LinearInequality family(FamilyKind kind, int n);

/// Root I(B0;Bn); right children I(A0;B_{i-1}|B_i) down to I(A0;B0|B1).
ForestSpec chain_tree(int n);

/// Complete binary tree of height n: root I(An;Bn), and a node labeled
/// I(Ai;Bi|X) gets children I(A_{i-1};B_{i-1}|Ai) and I(A_{i-1};B_{i-1}|Bi).
ForestSpec complete_tree(int n);

} // namespace linrank

#endif
