#include "linrank/generators.hpp"

#include <stdexcept>
#include <string>

namespace linrank {

namespace {

constexpr FamilyKind kAllKinds[] = {FamilyKind::starone, FamilyKind::startwo, FamilyKind::npvar,
                                    FamilyKind::indep, FamilyKind::kinser};

VarSet v(int i) { return VarSet::single(i); }

EntropyExpr mi(VarSet x, VarSet y, VarSet z = VarSet{})
{
    return expand_info_term(InfoTerm::mutual(x, y, z));
}

// A0 B0 A1 B1 ... or A0 B0 B1 B2 ...
VarUniverse indexed_universe(const std::vector<std::string>& names)
{
    if (names.size() > static_cast<std::size_t>(kMaxVariables))
        throw std::invalid_argument("family instance needs more than 26 variables");
    return VarUniverse(names);
}

// rhs - lhs >= 0
LinearInequality make(const VarUniverse& u, const EntropyExpr& lhs, const EntropyExpr& rhs,
                      FamilyKind kind, int n)
{
    return {u, rhs - lhs, std::string(family_name(kind)) + "(" + std::to_string(n) + ")"};
}

} // namespace

std::optional<FamilyKind> parse_family_kind(std::string_view name)
{
    for (auto k : kAllKinds)
        if (family_name(k) == name)
            return k;
    return std::nullopt;
}

std::string_view family_name(FamilyKind kind)
{
    switch (kind) {
    case FamilyKind::starone: return "starone";
    case FamilyKind::startwo: return "startwo";
    case FamilyKind::npvar: return "npvar";
    case FamilyKind::indep: return "indep";
    case FamilyKind::kinser: return "kinser";
    }
    return "?";
}

int family_min_n(FamilyKind kind)
{
    switch (kind) {
    case FamilyKind::starone:
    case FamilyKind::startwo: return 1;
    case FamilyKind::npvar:
    case FamilyKind::indep: return 2;
    case FamilyKind::kinser: return 4;
    }
    return 1;
}

ForestSpec chain_tree(int n)
{
    if (n < 1)
        throw std::invalid_argument("chain tree needs n >= 1");
    std::vector<std::string> names{"A0", "B0"};
    for (int i = 1; i <= n; ++i)
        names.push_back("B" + std::to_string(i));
    ForestSpec spec;
    spec.universe = indexed_universe(names);
    spec.a = v(0);
    spec.b = v(1);
    auto b = [](int i) { return v(i + 1); }; // B_i
    spec.nodes.push_back({InfoTerm::mutual(b(0), b(n)), -1, -1, -1, -1});
    spec.ids.push_back("root");
    for (int i = n; i >= 1; --i) {
        spec.nodes.back().right = static_cast<int>(spec.nodes.size());
        spec.nodes.push_back({InfoTerm::mutual(v(0), b(i - 1), b(i)), -1, -1, -1, -1});
        spec.ids.push_back("c" + std::to_string(i));
    }
    return spec;
}

ForestSpec complete_tree(int n)
{
    if (n < 1)
        throw std::invalid_argument("complete tree needs n >= 1");
    std::vector<std::string> names;
    for (int i = 0; i <= n; ++i) {
        names.push_back("A" + std::to_string(i));
        names.push_back("B" + std::to_string(i));
    }
    ForestSpec spec;
    spec.universe = indexed_universe(names);
    spec.a = v(0);
    spec.b = v(1);
    auto a = [](int i) { return v(2 * i); };
    auto b = [](int i) { return v(2 * i + 1); };
    // Breadth-first: level d holds 2^d nodes labeled with index n-d.
    spec.nodes.push_back({InfoTerm::mutual(a(n), b(n)), -1, -1, -1, -1});
    std::vector<int> level{0};
    for (int i = n; i >= 1; --i) {
        std::vector<int> next;
        for (int p : level) {
            int l = static_cast<int>(spec.nodes.size());
            spec.nodes.push_back({InfoTerm::mutual(a(i - 1), b(i - 1), a(i)), -1, -1, -1, -1});
            spec.nodes.push_back({InfoTerm::mutual(a(i - 1), b(i - 1), b(i)), -1, -1, -1, -1});
            spec.nodes[p].left = l;
            spec.nodes[p].right = l + 1;
            next.push_back(l);
            next.push_back(l + 1);
        }
        level = std::move(next);
    }
    for (std::size_t i = 0; i < spec.nodes.size(); ++i)
        spec.ids.push_back("n" + std::to_string(i));
    return spec;
}

LinearInequality family(FamilyKind kind, int n)
{
    if (n < family_min_n(kind))
        throw std::invalid_argument(std::string(family_name(kind)) + " needs n >= " +
                                    std::to_string(family_min_n(kind)));
    switch (kind) {
    case FamilyKind::starone: {
        ForestSpec t = chain_tree(n);
        LinearInequality q = tree_inequality(t);
        q.label = "starone(" + std::to_string(n) + ")";
        return q;
    }
    case FamilyKind::startwo: {
        ForestSpec t = complete_tree(n);
        LinearInequality q = tree_inequality(t);
        q.label = "startwo(" + std::to_string(n) + ")";
        return q;
    }
    case FamilyKind::npvar:
    case FamilyKind::indep: {
        std::vector<std::string> names{"A", "B"};
        for (int i = 1; i <= n; ++i)
            names.push_back("C" + std::to_string(i));
        VarUniverse u = indexed_universe(names);
        VarSet a = v(0), b = v(1);
        auto c = [](int i) { return v(i + 1); }; // C_i
        EntropyExpr lhs = Rational(n - 1) * mi(a, b);
        EntropyExpr rhs;
        if (kind == FamilyKind::npvar) {
            VarSet prefix = c(1);
            for (int i = 1; i <= n; ++i)
                rhs += mi(a, b, c(i));
            for (int k = 2; k <= n; ++k) {
                rhs += mi(prefix, c(k));
                prefix = prefix | c(k);
            }
        } else {
            VarSet all;
            for (int i = 1; i <= n; ++i) {
                rhs += mi(a | c(i), b | c(i));
                all = all | c(i);
            }
            lhs += EntropyExpr::entropy(all);
        }
        return make(u, lhs, rhs, kind, n);
    }
    case FamilyKind::kinser: {
        std::vector<std::string> names;
        for (int i = 1; i <= n; ++i)
            names.push_back("A" + std::to_string(i));
        VarUniverse u = indexed_universe(names);
        auto a = [](int i) { return v(i - 1); }; // A_i
        EntropyExpr rhs = mi(a(1), a(2)) + mi(a(3), a(n), a(1));
        for (int i = 4; i <= n; ++i)
            rhs += mi(a(2), a(i - 1), a(i));
        return make(u, mi(a(2), a(3)), rhs, kind, n);
    }
    }
    throw std::invalid_argument("unknown family");
}

} // namespace linrank
