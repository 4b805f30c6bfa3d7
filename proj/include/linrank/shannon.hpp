#ifndef LINRANK_SHANNON_HPP
#define LINRANK_SHANNON_HPP

// Elemental Shannon inequalities and an exact prover over the cone they
// generate, optionally modulo linear equalities such as those asserting
// that an auxiliary variable is a common information.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "linrank/core.hpp"
#include "linrank/farkas.hpp"
#include "linrank/text_io.hpp"

namespace linrank {

struct ElementalInequality {
    LinearInequality inequality;
    bool conditional_entropy = false; // H(Xi | rest) rather than I(Xi;Xj|XK)
    int i = 0;
    int j = -1;
    Mask k = 0;
};

/// n H(Xi|rest) first, then I(Xi;Xj|XK) for i<j in lexicographic order with
/// K running over subsets of the other variables in increasing mask order.
std::vector<ElementalInequality> elemental_inequalities(const VarUniverse& universe);

/// Just the expressions, same order.
std::vector<EntropyExpr> elemental_expressions(int n);

std::size_t elemental_count(int n);

/// target = sum lambda_i elemental_i + sum mu_j equality_j, lambda >= 0.
struct ProofCertificate {
    LinearInequality target;             // over the (possibly extended) universe
    std::vector<EntropyExpr> equalities; // each asserted "= 0"
    std::map<int, Rational> lambda;
    std::map<int, Rational> mu;
};

struct ProofResult {
    enum class Status { proved, not_provable, undecided };

    Status status = Status::undecided;
    std::optional<ProofCertificate> certificate;
    /// Satisfies every elemental, zeroes every equality, and makes the
    /// target negative.
    std::optional<RankVector> witness;
    LinearInequality target;
    std::vector<EntropyExpr> equalities;
    long pivots = 0;
};

struct ProveOptions {
    long pivot_limit = 10'000'000;
};

ProofResult prove(const LinearInequality& target, const std::vector<EntropyExpr>& equalities = {},
                  const ProveOptions& options = {});

/// Extends the universe with the declared auxiliaries and proves the target
/// modulo their common-information equalities.
ProofResult prove_with_common_informations(const LinearInequality& target,
                                           const std::vector<HypothesisDecl>& decls,
                                           const ProveOptions& options = {});

/// `replaced` lives on ground + auxiliaries already; for every declaration
/// Z = CI(X;Y) the terms k H(Z|X) + k H(Z|Y) are added and the result is
/// proved with no hypotheses.
LinearInequality k_slack_form(const LinearInequality& replaced,
                              const std::vector<HypothesisDecl>& decls, const Rational& k);

ProofResult prove_k_slack(const LinearInequality& replaced, const std::vector<HypothesisDecl>& decls,
                          const Rational& k, const ProveOptions& options = {});

/// Pure arithmetic re-check, independent of the solver.
bool verify_certificate(const ProofCertificate& cert);

/// All three witness conditions, by evaluation.
bool verify_witness(const RankVector& witness, const LinearInequality& target,
                    const std::vector<EntropyExpr>& equalities);

// Text forms:
//   target <expr> >= 0
//   universe A B ...
//   equality <expr> = 0
//   lambda <index> <rational>      mu <index> <rational>
//   witness <rank vector>
std::string format_certificate(const ProofCertificate& cert);
ProofCertificate parse_certificate(std::string_view text);

std::string format_witness(const ProofResult& result);

} // namespace linrank

#endif
