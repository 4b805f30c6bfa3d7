#ifndef LINRANK_CORE_HPP
#define LINRANK_CORE_HPP

// Variable universes, subsets, entropy expressions and the group actions on
// them.  Coordinates follow the binary subset order: the subset with bitmask
// m lives at index m-1, and variable 0 is the least significant bit.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "linrank/rational.hpp"

namespace linrank {

using Mask = std::uint32_t;

inline constexpr int kMaxVariables = 26;

class VarUniverse {
public:
    VarUniverse() = default;
    explicit VarUniverse(std::vector<std::string> names);

    /// A, B, C, ... (n <= 26).
    static VarUniverse letters(int n);

    int size() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int i) const { return names_.at(i); }
    std::optional<int> index_of(std::string_view name) const;

    Mask full_mask() const { return names_.empty() ? 0 : ((Mask{1} << size()) - 1); }
    /// 2^n - 1.
    std::size_t coordinate_count() const { return full_mask(); }

    /// This universe followed by `extra` (names must be fresh).
    VarUniverse extended(const std::vector<std::string>& extra) const;

    bool operator==(const VarUniverse&) const = default;

private:
    std::vector<std::string> names_;
};

struct VarSet {
    Mask mask = 0;

    constexpr VarSet() = default;
    constexpr explicit VarSet(Mask m) : mask(m) {}

    static constexpr VarSet single(int i) { return VarSet(Mask{1} << i); }

    constexpr bool empty() const { return mask == 0; }
    constexpr bool contains(int i) const { return (mask >> i) & 1u; }
    constexpr bool subset_of(VarSet other) const { return (mask & ~other.mask) == 0; }
    int size() const { return std::popcount(mask); }

    friend constexpr VarSet operator|(VarSet a, VarSet b) { return VarSet(a.mask | b.mask); }
    friend constexpr VarSet operator&(VarSet a, VarSet b) { return VarSet(a.mask & b.mask); }
    friend constexpr bool operator==(VarSet, VarSet) = default;
    friend constexpr auto operator<=>(VarSet, VarSet) = default;
};

/// "A,B,C" (empty set prints as the empty string).
std::string format_varset(VarSet s, const VarUniverse& u);

/// Exact linear combination of joint-entropy coordinates H(S), S nonempty.
/// Zero coefficients are never stored and H(empty) is identically zero.
class EntropyExpr {
public:
    using Terms = std::map<Mask, Rational>;

    EntropyExpr() = default;

    static EntropyExpr entropy(VarSet s, const Rational& coefficient = 1);

    void add(Mask subset, const Rational& coefficient);

    const Terms& terms() const { return terms_; }
    Rational coefficient(Mask subset) const;
    bool is_zero() const { return terms_.empty(); }
    /// Union of every subset with a nonzero coefficient.
    Mask support() const;

    EntropyExpr& operator+=(const EntropyExpr& other);
    EntropyExpr& operator-=(const EntropyExpr& other);
    EntropyExpr& operator*=(const Rational& factor);

    friend EntropyExpr operator+(EntropyExpr a, const EntropyExpr& b) { return a += b; }
    friend EntropyExpr operator-(EntropyExpr a, const EntropyExpr& b) { return a -= b; }
    friend EntropyExpr operator*(const Rational& k, EntropyExpr e) { return e *= k; }
    friend EntropyExpr operator-(EntropyExpr e) { return e *= Rational(-1); }

    bool operator==(const EntropyExpr& other) const { return terms_ == other.terms_; }

private:
    Terms terms_;
};

/// H(x|z) or I(x;y|z).
struct InfoTerm {
    enum class Kind { conditional_entropy, mutual_information };

    Kind kind = Kind::mutual_information;
    VarSet x, y, z;

    static InfoTerm entropy(VarSet x, VarSet z = VarSet{})
    {
        return {Kind::conditional_entropy, x, VarSet{}, z};
    }
    static InfoTerm mutual(VarSet x, VarSet y, VarSet z = VarSet{})
    {
        return {Kind::mutual_information, x, y, z};
    }

    bool operator==(const InfoTerm&) const = default;
};

/// I(x;y|z) -> H(xz)+H(yz)-H(xyz)-H(z);  H(x|z) -> H(xz)-H(z).
EntropyExpr expand_info_term(const InfoTerm& t);

/// Same, but rejects terms mentioning variables outside `u`.
EntropyExpr expand_info_term(const InfoTerm& t, const VarUniverse& u);

std::string format_info_term(const InfoTerm& t, const VarUniverse& u);

/// The statement expr >= 0.
struct LinearInequality {
    VarUniverse universe;
    EntropyExpr expr;
    std::string label;

    /// Equal iff the coefficient maps are equal; labels are provenance only.
    friend bool operator==(const LinearInequality& a, const LinearInequality& b)
    {
        return a.expr == b.expr;
    }
};

class Permutation {
public:
    /// `image[i]` is where variable i goes; must be a bijection on 0..n-1.
    explicit Permutation(std::vector<int> image);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(image_.size()); }
    int operator()(int i) const { return image_[i]; }
    Mask apply(Mask subset) const;
    Permutation inverse() const;
    const std::vector<int>& image() const { return image_; }

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> image_;
};

/// All n! permutations in lexicographic order of their image vectors.
std::vector<Permutation> all_permutations(int n);

/// 2^n - 1 coordinates in binary subset order; v(empty) = 0 implicitly.
class RankVector {
public:
    RankVector() = default;
    RankVector(VarUniverse universe, std::vector<Rational> coords);

    static RankVector zero(VarUniverse universe);

    const VarUniverse& universe() const { return universe_; }
    const std::vector<Rational>& coords() const { return coords_; }

    /// v(S) for the subset with this mask; 0 for the empty set.
    const Rational& operator[](Mask subset) const;
    void set(Mask subset, Rational value);

    friend bool operator==(const RankVector& a, const RankVector& b)
    {
        return a.coords_ == b.coords_;
    }

private:
    VarUniverse universe_;
    std::vector<Rational> coords_;
};

RankVector operator+(const RankVector& a, const RankVector& b);
RankVector operator*(const Rational& k, const RankVector& v);

Rational evaluate(const EntropyExpr& e, const RankVector& v);
Rational evaluate(const LinearInequality& q, const RankVector& v);

/// Replaces each H(S) by H(union of f(t) for t in S); f has one entry per
/// variable of q's universe.
EntropyExpr substitute(const EntropyExpr& e, const std::vector<VarSet>& f);
LinearInequality substitute(const LinearInequality& q, const std::vector<VarSet>& f,
                            const VarUniverse& target);

EntropyExpr apply_permutation(const EntropyExpr& e, const Permutation& p);
LinearInequality apply_permutation(const LinearInequality& q, const Permutation& p);
/// (p v)(p(S)) = v(S), so evaluate(p q, p v) = evaluate(q, v).
RankVector apply_permutation(const RankVector& v, const Permutation& p);

/// Lexicographically least coordinate sequence over the permutation orbit.
RankVector orbit_canonical(const RankVector& v);

/// Distinct permuted forms of q, in order of first appearance.
std::vector<LinearInequality> orbit(const LinearInequality& q);

bool linear_identical(const EntropyExpr& a, const EntropyExpr& b);

} // namespace linrank

#endif
