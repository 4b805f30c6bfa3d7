#ifndef LINRANK_POLYMATROID_HPP
#define LINRANK_POLYMATROID_HPP

// Rank vectors as polymatroids: axiom checks, ranks of subspace
// arrangements given by integer matrices, ray and face tests, and the
// vectors used to separate the independence family from smaller ones.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "linrank/core.hpp"
#include "linrank/matrix.hpp"

namespace linrank {

struct PolymatroidViolation {
    enum class Kind { negative, monotonicity, submodularity };
    Kind kind;
    Mask s = 0, t = 0;
    std::string message;
};

/// First violated axiom, scanning S then T in mask order.
std::optional<PolymatroidViolation> validate_polymatroid(const RankVector& v);

RankVector ranks_from_matrices(const SubspaceRepresentation& rep);
/// Throws std::invalid_argument unless p is a prime below 2^32.
RankVector ranks_mod_p(const SubspaceRepresentation& rep, std::uint64_t p);

/// Every stacked matrix keeps its rank over every field: all its Smith
/// invariant factors are 1.
bool all_fields_check(const SubspaceRepresentation& rep);
/// Subsets whose stacked matrix fails the check, in mask order.
std::vector<Mask> all_fields_failures(const SubspaceRepresentation& rep);

class ViolatedInequality : public std::runtime_error {
public:
    ViolatedInequality(std::size_t index, const std::string& what)
        : std::runtime_error(what), index_(index)
    {
    }
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

/// Indices of the inequalities holding with equality at v.  Throws
/// ViolatedInequality for the first one v violates.
std::vector<std::size_t> tight_set(const RankVector& v,
                                   const std::vector<LinearInequality>& inequalities);

struct ExtremalityReport {
    bool extreme = false;
    int tight_rank = 0; // rank of the tight coefficient rows
    int dimension = 0;  // 2^n - 1
    std::vector<std::size_t> tight;
};

/// v spans an extreme ray when the tight rows have rank dimension - 1.
ExtremalityReport extremality_check(const RankVector& v,
                                    const std::vector<LinearInequality>& inequalities);

/// Rank of the tight stockpile vectors (those with evaluate(q, .) == 0).
int face_rank(const LinearInequality& q, const std::vector<RankVector>& stockpile);
/// face_rank reaches 2^n - 2.
bool face_check(const LinearInequality& q, const std::vector<RankVector>& stockpile);

/// Rank vector v on A,B,C1..Cn and the single-coordinate modifications
/// wA, wB, w1..wn.
struct IndependenceFamily {
    int n = 0;
    VarUniverse universe;
    RankVector v, wA, wB;
    std::vector<RankVector> w; // w[i-1] = w_i
};

IndependenceFamily independence_vectors(int n);

/// Which w vector to represent: wA, wB, or w_i (1 <= i <= n).
struct WVector {
    enum class Kind { a, b, i };
    Kind kind = Kind::a;
    int i = 0;
};

struct WRepresentation {
    SubspaceRepresentation rep;
    std::uint64_t prime = 0;
    int attempts = 0;
};

inline constexpr std::uint64_t kGeneralPositionPrime = 2147483647; // 2^31 - 1
inline constexpr int kGeneralPositionRetries = 32;

/// Builds the general-position construction over GF(2^31 - 1), redrawing
/// until ranks_mod_p matches the target.  Throws std::runtime_error when
/// the retry budget runs out.
WRepresentation random_w_representation(int n, WVector which, std::uint64_t seed);

} // namespace linrank

#endif
