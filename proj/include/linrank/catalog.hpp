#ifndef LINRANK_CATALOG_HPP
#define LINRANK_CATALOG_HPP

// Built-in linear rank inequalities with the common informations that
// prove them, the forests that generate some of them, and a handful of
// Shannon lemmas about an auxiliary Z.

#include <string>
#include <string_view>
#include <vector>

#include "linrank/core.hpp"
#include "linrank/forest.hpp"
#include "linrank/text_io.hpp"

namespace linrank {

enum class CatalogGroup {
    ingleton,     // the Ingleton inequality and its five-variable instances
    five,         // (1)-(24)
    moved,        // (12a) (17a) (24a): first right-hand term moved left
    enlarged,     // (18b)-(24b): left terms enlarged to a common form
    rewritten,    // (1c)-(24c): non-obvious rewrites
    substituted,  // (3d)-(17d): substitution instances of tree inequalities
    six,          // six-variable samples (25)-(41) and the (2CI*) entries
};

std::string_view group_name(CatalogGroup g);

struct CatalogEntry {
    std::string tag; // "(1)", "(19b)", "(inginst2)", "(2CIa)", "(Ingleton)"
    CatalogGroup group;
    LinearInequality inequality;
    std::vector<HypothesisDecl> recipe;
    /// The recipe was found by searching rather than read off the left side.
    bool recipe_inferred = false;
    std::string text; // source form "lhs <= rhs"
};

const std::vector<CatalogEntry>& catalog();
/// nullptr when the tag is unknown.  Accepts "(1)" or "1".
const CatalogEntry* find_entry(std::string_view tag);

/// Forests whose inequality is linearly identical to a catalog entry.
struct CatalogForest {
    std::string entry_tag;
    std::string text; // forest-spec format
    ForestSpec forest;
};
const std::vector<CatalogForest>& catalog_forests();

/// A Shannon statement about an auxiliary Z, optionally under equalities.
struct ShannonLemma {
    std::string name;
    LinearInequality inequality;
    std::vector<EntropyExpr> equalities;
};
std::vector<ShannonLemma> lemma_suite();

/// Inequalities for extremality checks on n variables, with duplicates
/// removed:
///   shannon           the elementals
///   shannon+ingleton  plus every permuted Ingleton instance (n = 4 or 5)
///   full-catalog      plus, for n = 5, every permuted form of (1)-(24)
/// Throws std::invalid_argument for an unknown name or unsupported n.
std::vector<LinearInequality> inequality_set(std::string_view name, int n);

} // namespace linrank

#endif
