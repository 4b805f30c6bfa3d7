#include "linrank/core.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace linrank {

// VarUniverse

VarUniverse::VarUniverse(std::vector<std::string> names) : names_(std::move(names))
{
    if (names_.empty())
        throw std::invalid_argument("variable universe must be nonempty");
    if (names_.size() > static_cast<std::size_t>(kMaxVariables))
        throw std::invalid_argument("variable universe larger than 26");
    std::set<std::string_view> seen;
    for (const auto& n : names_) {
        if (n.empty())
            throw std::invalid_argument("empty variable name");
        if (!seen.insert(n).second)
            throw std::invalid_argument("duplicate variable name '" + n + "'");
    }
}

VarUniverse VarUniverse::letters(int n)
{
    if (n < 1 || n > kMaxVariables)
        throw std::invalid_argument("letters(n) needs 1 <= n <= 26");
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i)
        names.emplace_back(1, static_cast<char>('A' + i));
    return VarUniverse(std::move(names));
}

std::optional<int> VarUniverse::index_of(std::string_view name) const
{
    for (int i = 0; i < size(); ++i)
        if (names_[i] == name)
            return i;
    return std::nullopt;
}

VarUniverse VarUniverse::extended(const std::vector<std::string>& extra) const
{
    std::vector<std::string> all = names_;
    all.insert(all.end(), extra.begin(), extra.end());
    return VarUniverse(std::move(all));
}

std::string format_varset(VarSet s, const VarUniverse& u)
{
    std::string out;
    for (int i = 0; i < u.size(); ++i) {
        if (!s.contains(i))
            continue;
        if (!out.empty())
            out += ',';
        out += u.name(i);
    }
    return out;
}

// EntropyExpr

EntropyExpr EntropyExpr::entropy(VarSet s, const Rational& coefficient)
{
    EntropyExpr e;
    e.add(s.mask, coefficient);
    return e;
}

void EntropyExpr::add(Mask subset, const Rational& coefficient)
{
    if (subset == 0 || sgn(coefficient) == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(subset, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (sgn(it->second) == 0)
            terms_.erase(it);
    }
}

Rational EntropyExpr::coefficient(Mask subset) const
{
    auto it = terms_.find(subset);
    return it == terms_.end() ? Rational(0) : it->second;
}

Mask EntropyExpr::support() const
{
    Mask m = 0;
    for (const auto& [s, c] : terms_)
        m |= s;
    return m;
}

EntropyExpr& EntropyExpr::operator+=(const EntropyExpr& other)
{
    for (const auto& [s, c] : other.terms_)
        add(s, c);
    return *this;
}

EntropyExpr& EntropyExpr::operator-=(const EntropyExpr& other)
{
    for (const auto& [s, c] : other.terms_)
        add(s, -c);
    return *this;
}

EntropyExpr& EntropyExpr::operator*=(const Rational& factor)
{
    if (sgn(factor) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [s, c] : terms_)
        c *= factor;
    return *this;
}

// InfoTerm

EntropyExpr expand_info_term(const InfoTerm& t)
{
    EntropyExpr e;
    if (t.kind == InfoTerm::Kind::conditional_entropy) {
        e.add((t.x | t.z).mask, 1);
        e.add(t.z.mask, -1);
        return e;
    }
    e.add((t.x | t.z).mask, 1);
    e.add((t.y | t.z).mask, 1);
    e.add((t.x | t.y | t.z).mask, -1);
    e.add(t.z.mask, -1);
    return e;
}

EntropyExpr expand_info_term(const InfoTerm& t, const VarUniverse& u)
{
    Mask all = (t.x | t.y | t.z).mask;
    if ((all & ~u.full_mask()) != 0)
        throw std::invalid_argument("information term mentions a variable outside the universe");
    return expand_info_term(t);
}

std::string format_info_term(const InfoTerm& t, const VarUniverse& u)
{
    std::string out;
    if (t.kind == InfoTerm::Kind::conditional_entropy)
        out = "H(" + format_varset(t.x, u);
    else
        out = "I(" + format_varset(t.x, u) + ";" + format_varset(t.y, u);
    if (!t.z.empty())
        out += "|" + format_varset(t.z, u);
    return out + ")";
}

// Permutation

Permutation::Permutation(std::vector<int> image) : image_(std::move(image))
{
    std::vector<bool> hit(image_.size(), false);
    for (int j : image_) {
        if (j < 0 || j >= size() || hit[j])
            throw std::invalid_argument("permutation is not a bijection");
        hit[j] = true;
    }
}

Permutation Permutation::identity(int n)
{
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    return Permutation(std::move(id));
}

Mask Permutation::apply(Mask subset) const
{
    Mask out = 0;
    for (int i = 0; i < size(); ++i)
        if ((subset >> i) & 1u)
            out |= Mask{1} << image_[i];
    return out;
}

Permutation Permutation::inverse() const
{
    std::vector<int> inv(image_.size());
    for (int i = 0; i < size(); ++i)
        inv[image_[i]] = i;
    return Permutation(std::move(inv));
}

std::vector<Permutation> all_permutations(int n)
{
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<Permutation> out;
    do {
        out.emplace_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// RankVector

RankVector::RankVector(VarUniverse universe, std::vector<Rational> coords)
    : universe_(std::move(universe)), coords_(std::move(coords))
{
    if (coords_.size() != universe_.coordinate_count())
        throw std::invalid_argument("rank vector needs 2^n - 1 coordinates, got " +
                                    std::to_string(coords_.size()));
}

RankVector RankVector::zero(VarUniverse universe)
{
    std::vector<Rational> coords(universe.coordinate_count());
    return RankVector(std::move(universe), std::move(coords));
}

const Rational& RankVector::operator[](Mask subset) const
{
    static const Rational kZero(0);
    if (subset == 0)
        return kZero;
    return coords_.at(subset - 1);
}

void RankVector::set(Mask subset, Rational value)
{
    if (subset == 0)
        throw std::invalid_argument("v(empty set) is fixed at 0");
    coords_.at(subset - 1) = std::move(value);
}

RankVector operator+(const RankVector& a, const RankVector& b)
{
    if (a.coords().size() != b.coords().size())
        throw std::invalid_argument("rank vector size mismatch");
    std::vector<Rational> c(a.coords().size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a.coords()[i] + b.coords()[i];
    return RankVector(a.universe(), std::move(c));
}

RankVector operator*(const Rational& k, const RankVector& v)
{
    std::vector<Rational> c(v.coords().size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = k * v.coords()[i];
    return RankVector(v.universe(), std::move(c));
}

Rational evaluate(const EntropyExpr& e, const RankVector& v)
{
    Mask full = v.universe().full_mask();
    if ((e.support() & ~full) != 0)
        throw std::invalid_argument("expression and rank vector universes do not match");
    Rational sum = 0;
    for (const auto& [s, c] : e.terms())
        sum += c * v[s];
    return sum;
}

Rational evaluate(const LinearInequality& q, const RankVector& v)
{
    if (q.universe.size() != v.universe().size())
        throw std::invalid_argument("inequality has " + std::to_string(q.universe.size()) +
                                    " variables but the vector has " +
                                    std::to_string(v.universe().size()));
    return evaluate(q.expr, v);
}

EntropyExpr substitute(const EntropyExpr& e, const std::vector<VarSet>& f)
{
    EntropyExpr out;
    for (const auto& [s, c] : e.terms()) {
        Mask image = 0;
        for (std::size_t i = 0; i < f.size(); ++i)
            if ((s >> i) & 1u)
                image |= f[i].mask;
        if ((s >> f.size()) != 0)
            throw std::invalid_argument("substitution map is not total on the expression");
        out.add(image, c);
    }
    return out;
}

LinearInequality substitute(const LinearInequality& q, const std::vector<VarSet>& f,
                            const VarUniverse& target)
{
    if (static_cast<int>(f.size()) != q.universe.size())
        throw std::invalid_argument("substitution map must cover every variable");
    for (VarSet s : f)
        if (!s.subset_of(VarSet(target.full_mask())))
            throw std::invalid_argument("substitution image outside the target universe");
    return {target, substitute(q.expr, f), q.label};
}

EntropyExpr apply_permutation(const EntropyExpr& e, const Permutation& p)
{
    EntropyExpr out;
    for (const auto& [s, c] : e.terms()) {
        if ((s >> p.size()) != 0)
            throw std::invalid_argument("permutation smaller than the expression universe");
        out.add(p.apply(s), c);
    }
    return out;
}

LinearInequality apply_permutation(const LinearInequality& q, const Permutation& p)
{
    if (p.size() != q.universe.size())
        throw std::invalid_argument("permutation size does not match the universe");
    return {q.universe, apply_permutation(q.expr, p), q.label};
}

RankVector apply_permutation(const RankVector& v, const Permutation& p)
{
    if (p.size() != v.universe().size())
        throw std::invalid_argument("permutation size does not match the universe");
    std::vector<Rational> c(v.coords().size());
    for (Mask s = 1; s <= v.universe().full_mask(); ++s)
        c[p.apply(s) - 1] = v[s];
    return RankVector(v.universe(), std::move(c));
}

RankVector orbit_canonical(const RankVector& v)
{
    const int n = v.universe().size();
    const Mask full = v.universe().full_mask();
    std::vector<int> image(n);
    std::iota(image.begin(), image.end(), 0);

    std::vector<const Rational*> best;
    std::vector<const Rational*> cur(full);
    do {
        Permutation p(image);
        for (Mask s = 1; s <= full; ++s)
            cur[p.apply(s) - 1] = &v[s];
        bool better = best.empty();
        if (!better) {
            for (Mask i = 0; i < full; ++i) {
                int c = cmp(*cur[i], *best[i]);
                if (c != 0) {
                    better = c < 0;
                    break;
                }
            }
        }
        if (better)
            best = cur;
    } while (std::next_permutation(image.begin(), image.end()));

    std::vector<Rational> c(full);
    for (Mask i = 0; i < full; ++i)
        c[i] = *best[i];
    return RankVector(v.universe(), std::move(c));
}

std::vector<LinearInequality> orbit(const LinearInequality& q)
{
    std::vector<LinearInequality> out;
    std::set<EntropyExpr::Terms> seen;
    for (const Permutation& p : all_permutations(q.universe.size())) {
        LinearInequality image = apply_permutation(q, p);
        if (seen.insert(image.expr.terms()).second)
            out.push_back(std::move(image));
    }
    return out;
}

bool linear_identical(const EntropyExpr& a, const EntropyExpr& b)
{
    return a == b;
}

} // namespace linrank
