#ifndef LINRANK_TEXT_IO_HPP
#define LINRANK_TEXT_IO_HPP

// Line-oriented ASCII formats: entropy expressions and inequalities,
// common-information declarations, rank vectors, integer matrices and
// forest descriptions.  '#' starts a comment in every file format.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "linrank/core.hpp"
#include "linrank/forest.hpp"
#include "linrank/matrix.hpp"

namespace linrank {

/// 1-based, end inclusive of the last character (end == start for a point).
struct SourceSpan {
    int line = 1;
    int column = 1;
    int end_line = 1;
    int end_column = 1;

    bool operator==(const SourceSpan&) const = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, SourceSpan span);

    const SourceSpan& span() const { return span_; }
    /// Message without the "line:col:" prefix.
    const std::string& detail() const { return detail_; }

private:
    SourceSpan span_;
    std::string detail_;
};

// Expressions:
//   expr := term (('+'|'-') term)*      term := [rational ['*']] atom
//   atom := H(vlist[|vlist]) | I(vlist;vlist[|vlist])
//   vlist := var (',' var)*
// The conditioning list after '|' may be empty.  A lone 0 is accepted as
// a term so that "H(A) >= 0" parses.

EntropyExpr parse_expression(std::string_view text, const VarUniverse& universe);

/// Variables named in the text, sorted by name.
VarUniverse infer_universe(std::string_view text);

std::string format_expression(const EntropyExpr& e, const VarUniverse& universe);

struct Relation {
    LinearInequality inequality; // lhs >= rhs normalized to (lhs - rhs) >= 0
    bool equality = false;       // '=' : both directions hold
};

Relation parse_relation(std::string_view text, const VarUniverse& universe);

/// As parse_relation, but '=' is rejected.
LinearInequality parse_inequality(std::string_view text, const VarUniverse& universe);

/// "<expr> >= 0"
std::string format_inequality(const LinearInequality& q);

// Common-information declarations, one per line:  Z = CI(X ; Y)

struct HypothesisDecl {
    std::string new_var;
    std::vector<std::string> left;
    std::vector<std::string> right;
    SourceSpan span;

    friend bool operator==(const HypothesisDecl& a, const HypothesisDecl& b)
    {
        return a.new_var == b.new_var && a.left == b.left && a.right == b.right;
    }
};

std::vector<HypothesisDecl> parse_hypotheses(std::string_view text);
std::string format_hypothesis(const HypothesisDecl& d);

struct ExpandedHypotheses {
    VarUniverse universe;             // ground variables then auxiliaries
    std::vector<EntropyExpr> equalities; // 3 per declaration, each "= 0"
};

/// Declaration i contributes H(Z|X), H(Z|Y) and H(Z)-I(X;Y) at 3i..3i+2.
ExpandedHypotheses expand_hypotheses(const std::vector<HypothesisDecl>& decls,
                                     const VarUniverse& ground);

/// Ground names referenced by the declarations (auxiliaries excluded).
std::vector<std::string> referenced_ground_names(const std::vector<HypothesisDecl>& decls);

// Rank vectors: 2^n - 1 whitespace-separated nonnegative rationals.

RankVector parse_rank_vector(std::string_view text, const VarUniverse& universe);
/// Universe A,B,C,... sized from the entry count.
RankVector parse_rank_vector(std::string_view text);
std::string format_rank_vector(const RankVector& v);

/// One vector per non-blank line.
std::vector<RankVector> parse_rank_vectors(std::string_view text, const VarUniverse& universe);

// Matrices:  "matrix <Var> <rows> <cols>" followed by <rows> integer rows.

SubspaceRepresentation parse_matrices(std::string_view text, const VarUniverse& universe);
/// Universe taken from the block headers in order of appearance.
SubspaceRepresentation parse_matrices(std::string_view text);
std::string format_matrices(const SubspaceRepresentation& rep);

// Forests:
//   vars A B C D            (optional; otherwise inferred, sorted)
//   special A B             (designated pair, vlists; default A and B)
//   node <id> I(x;y|z)
//   left <child> of <parent>      right <child> of <parent>
//   lptr <from> -> <to>           rptr <from> -> <to>

ForestSpec parse_forest_spec(std::string_view text);
std::string format_forest_spec(const ForestSpec& spec);

/// Parses a single I(...) or H(...) term.
InfoTerm parse_info_term(std::string_view text, const VarUniverse& universe);

} // namespace linrank

#endif
