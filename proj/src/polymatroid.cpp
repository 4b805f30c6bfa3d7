#include "linrank/polymatroid.hpp"

#include <random>

#include "linrank/linalg.hpp"
#include "linrank/text_io.hpp"

namespace linrank {

namespace {

std::string set_name(Mask m, const VarUniverse& u)
{
    return m == 0 ? "{}" : "{" + format_varset(VarSet(m), u) + "}";
}

} // namespace

std::optional<PolymatroidViolation> validate_polymatroid(const RankVector& v)
{
    const VarUniverse& u = v.universe();
    const Mask full = u.full_mask();
    using K = PolymatroidViolation::Kind;
    for (Mask s = 1; s <= full && full != 0; ++s)
        if (sgn(v[s]) < 0)
            return PolymatroidViolation{K::negative, s, 0,
                                        "v" + set_name(s, u) + " = " + to_string(v[s]) +
                                            " is negative"};
    for (Mask t = 1; t <= full && full != 0; ++t)
        for (Mask s = (t - 1) & t;; s = (s - 1) & t) {
            if (v[s] > v[t])
                return PolymatroidViolation{K::monotonicity, s, t,
                                            "v" + set_name(s, u) + " = " + to_string(v[s]) +
                                                " exceeds v" + set_name(t, u) + " = " +
                                                to_string(v[t])};
            if (s == 0)
                break;
        }
    for (Mask s = 1; s <= full && full != 0; ++s)
        for (Mask t = s + 1; t <= full; ++t) {
            if ((s & t) == s || (s & t) == t)
                continue;
            if (v[s] + v[t] < v[s | t] + v[s & t])
                return PolymatroidViolation{K::submodularity, s, t,
                                            "v" + set_name(s, u) + " + v" + set_name(t, u) +
                                                " < v" + set_name(s | t, u) + " + v" +
                                                set_name(s & t, u)};
        }
    return std::nullopt;
}

RankVector ranks_from_matrices(const SubspaceRepresentation& rep)
{
    RankVector out = RankVector::zero(rep.universe);
    for (Mask m = 1; m <= rep.universe.full_mask(); ++m)
        out.set(m, Rational(rank(rep.stacked(m))));
    return out;
}

RankVector ranks_mod_p(const SubspaceRepresentation& rep, std::uint64_t p)
{
    RankVector out = RankVector::zero(rep.universe);
    for (Mask m = 1; m <= rep.universe.full_mask(); ++m)
        out.set(m, Rational(rank_mod_p(rep.stacked(m), p)));
    return out;
}

std::vector<Mask> all_fields_failures(const SubspaceRepresentation& rep)
{
    std::vector<Mask> out;
    for (Mask m = 1; m <= rep.universe.full_mask(); ++m)
        for (const Integer& d : invariant_factors(rep.stacked(m)))
            if (d != 1) {
                out.push_back(m);
                break;
            }
    return out;
}

bool all_fields_check(const SubspaceRepresentation& rep)
{
    return all_fields_failures(rep).empty();
}

std::vector<std::size_t> tight_set(const RankVector& v,
                                   const std::vector<LinearInequality>& inequalities)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < inequalities.size(); ++i) {
        Rational x = evaluate(inequalities[i], v);
        if (sgn(x) < 0) {
            const auto& q = inequalities[i];
            throw ViolatedInequality(i, "violates " +
                                            (q.label.empty() ? format_inequality(q) : q.label) +
                                            " (value " + to_string(x) + ")");
        }
        if (sgn(x) == 0)
            out.push_back(i);
    }
    return out;
}

namespace {

std::vector<Rational> dense(const EntropyExpr& e, std::size_t size)
{
    std::vector<Rational> row(size);
    for (const auto& [s, c] : e.terms())
        row[s - 1] = c;
    return row;
}

} // namespace

ExtremalityReport extremality_check(const RankVector& v,
                                    const std::vector<LinearInequality>& inequalities)
{
    ExtremalityReport r;
    r.tight = tight_set(v, inequalities);
    const std::size_t dim = v.universe().coordinate_count();
    r.dimension = static_cast<int>(dim);
    RowSpace space(r.dimension);
    for (std::size_t i : r.tight) {
        space.insert(dense(inequalities[i].expr, dim));
        if (space.rank() == r.dimension)
            break;
    }
    r.tight_rank = space.rank();
    r.extreme = r.tight_rank == r.dimension - 1;
    return r;
}

int face_rank(const LinearInequality& q, const std::vector<RankVector>& stockpile)
{
    const int dim = static_cast<int>(q.universe.coordinate_count());
    RowSpace space(dim);
    for (const auto& w : stockpile) {
        if (w.universe().size() != q.universe.size())
            throw std::invalid_argument("stockpile vector has the wrong length");
        if (sgn(evaluate(q, w)) != 0)
            continue;
        space.insert(w.coords());
        if (space.rank() == dim)
            break;
    }
    return space.rank();
}

bool face_check(const LinearInequality& q, const std::vector<RankVector>& stockpile)
{
    return face_rank(q, stockpile) == static_cast<int>(q.universe.coordinate_count()) - 1;
}

IndependenceFamily independence_vectors(int n)
{
    if (n < 2)
        throw std::invalid_argument("independence vectors need n >= 2");
    if (n + 2 > kMaxVariables)
        throw std::invalid_argument("too many variables");
    std::vector<std::string> names{"A", "B"};
    for (int i = 1; i <= n; ++i)
        names.push_back("C" + std::to_string(i));
    IndependenceFamily f;
    f.n = n;
    f.universe = VarUniverse(names);
    f.v = RankVector::zero(f.universe);
    for (Mask m = 1; m <= f.universe.full_mask(); ++m) {
        int s = std::popcount(m >> 2);
        bool a = m & 1u, b = m & 2u;
        int value = !a && !b ? 2 * s
                    : a && !b ? n + s
                    : !a      ? std::min(2 * n - 2 + s, 2 * n)
                              : std::min(2 * n - 1 + s, 2 * n);
        f.v.set(m, Rational(value));
    }
    f.wA = f.v;
    f.wA.set(Mask{1}, Rational(n - 1));
    f.wB = f.v;
    f.wB.set(Mask{2}, Rational(2 * n - 3));
    for (int i = 1; i <= n; ++i) {
        RankVector w = f.v;
        w.set(Mask{2} | (Mask{1} << (i + 1)), Rational(2 * n));
        f.w.push_back(std::move(w));
    }
    return f;
}

WRepresentation random_w_representation(int n, WVector which, std::uint64_t seed)
{
    IndependenceFamily fam = independence_vectors(n);
    const RankVector* target = nullptr;
    switch (which.kind) {
    case WVector::Kind::a: target = &fam.wA; break;
    case WVector::Kind::b: target = &fam.wB; break;
    case WVector::Kind::i:
        if (which.i < 1 || which.i > n)
            throw std::invalid_argument("w_i needs 1 <= i <= n");
        target = &fam.w[which.i - 1];
        break;
    }

    const std::uint64_t p = kGeneralPositionPrime;
    const int dim = 2 * n; // basis x1..xn, y1..yn
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);

    auto unit = [&](int k) {
        std::vector<Integer> r(dim, Integer(0));
        r[k] = 1;
        return r;
    };
    auto random_in = [&](bool x_only) {
        std::vector<Integer> r(dim, Integer(0));
        for (int k = 0; k < (x_only ? n : dim); ++k)
            r[k] = Integer(static_cast<unsigned long>(coeff(rng)));
        return r;
    };

    for (int attempt = 1; attempt <= kGeneralPositionRetries; ++attempt) {
        SubspaceRepresentation rep;
        rep.universe = fam.universe;
        rep.cols = dim;
        rep.matrices.assign(n + 2, IntMatrix(0, dim));
        IntMatrix& a = rep.matrices[0];
        IntMatrix& b = rep.matrices[1];
        for (int j = 1; j <= n; ++j) {
            rep.matrices[j + 1].append_row(unit(j - 1));
            rep.matrices[j + 1].append_row(unit(n + j - 1));
        }
        switch (which.kind) {
        case WVector::Kind::i:
            for (int k = 0; k < n; ++k)
                a.append_row(unit(k));
            for (int k = 0; k < n; ++k)
                if (k != which.i - 1)
                    b.append_row(unit(k));
            for (int k = 0; k < n - 1; ++k)
                b.append_row(random_in(false));
            break;
        case WVector::Kind::b:
            for (int k = 0; k < n; ++k)
                a.append_row(unit(k));
            for (int k = 0; k < n - 2; ++k)
                b.append_row(random_in(true));
            for (int k = 0; k < n - 1; ++k)
                b.append_row(random_in(false));
            break;
        case WVector::Kind::a: {
            std::vector<std::vector<Integer>> z;
            for (int k = 0; k < n - 1; ++k)
                z.push_back(random_in(true));
            for (int k = 0; k < n - 1; ++k)
                a.append_row(z[k]);
            for (int k = 0; k < n - 2; ++k)
                b.append_row(z[k]);
            for (int k = 0; k < n; ++k)
                b.append_row(unit(n + k));
            break;
        }
        }
        if (ranks_mod_p(rep, p) == *target)
            return {std::move(rep), p, attempt};
    }
    throw std::runtime_error("no general-position draw matched the target within the retry budget");
}

} // namespace linrank
