#include "linrank/forest.hpp"

#include <deque>
#include <map>
#include <random>
#include <stdexcept>

namespace linrank {

int ForestSpec::parent(int child) const
{
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
        if (nodes[i].left == child || nodes[i].right == child)
            return i;
    return -1;
}

std::vector<int> ForestSpec::roots() const
{
    std::vector<bool> has_parent(nodes.size(), false);
    for (const auto& n : nodes)
        for (int c : {n.left, n.right})
            if (c >= 0 && c < static_cast<int>(nodes.size()))
                has_parent[c] = true;
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
        if (!has_parent[i])
            out.push_back(i);
    return out;
}

namespace {

VarSet label_union(const InfoTerm& t)
{
    return t.x | t.y | t.z;
}

std::string node_name(const ForestSpec& spec, int i)
{
    if (i >= 0 && i < static_cast<int>(spec.ids.size()))
        return spec.ids[i];
    return "#" + std::to_string(i + 1);
}

void check_side(const ForestSpec& spec, int i, bool left, std::vector<ForestViolation>& out)
{
    const ForestNode& n = spec.nodes[i];
    VarSet x = left ? n.label.x : n.label.y;
    int child = left ? n.left : n.right;
    int ptr = left ? n.lptr : n.rptr;
    std::string side = left ? "left" : "right";
    std::string prime = left ? "" : "'";
    std::string xs = format_varset(x, spec.universe);

    if (child >= 0) {
        if (spec.nodes[child].label.z != x)
            out.push_back({i, "b" + prime,
                           side + " child " + node_name(spec, child) +
                               " is not conditioned on " + xs});
        return;
    }
    if (ptr >= 0) {
        if (label_union(spec.nodes[ptr].label) != x)
            out.push_back({i, "c" + prime,
                           side + " pointer target " + node_name(spec, ptr) +
                               " does not mention exactly " + xs});
        return;
    }
    if (x != spec.a && x != spec.b)
        out.push_back({i, "a" + prime,
                       xs + " is not A or B and there is no " + side + " child or pointer"});
}

std::vector<ForestViolation> clauses(const ForestSpec& spec)
{
    auto out = check_structure(spec);
    if (!out.empty())
        return out;
    for (int r : spec.roots())
        if (!spec.nodes[r].label.z.empty())
            out.push_back({r, "root", "root label has a nonempty conditioning set"});
    for (int i = 0; i < static_cast<int>(spec.nodes.size()); ++i) {
        check_side(spec, i, true, out);
        check_side(spec, i, false, out);
    }
    return out;
}

LinearInequality emit(const ForestSpec& spec, int m)
{
    EntropyExpr rhs;
    for (const auto& n : spec.nodes)
        rhs += expand_info_term(n.label, spec.universe);
    EntropyExpr lhs = Rational(m) * expand_info_term(InfoTerm::mutual(spec.a, spec.b));
    return {spec.universe, rhs - lhs, ""};
}

std::string joined(const std::vector<ForestViolation>& v, const ForestSpec& spec)
{
    std::string s;
    for (const auto& x : v)
        s += (s.empty() ? "" : "; ") + describe(x, spec);
    return s;
}

} // namespace

std::vector<ForestViolation> check_structure(const ForestSpec& spec)
{
    std::vector<ForestViolation> out;
    const int k = static_cast<int>(spec.nodes.size());
    if (k == 0) {
        out.push_back({-1, "structure", "forest has no nodes"});
        return out;
    }
    if (spec.a.empty() || spec.b.empty())
        out.push_back({-1, "structure", "designated pair must be nonempty"});
    std::vector<int> parents(k, 0), incoming(k, 0);
    for (int i = 0; i < k; ++i) {
        const ForestNode& n = spec.nodes[i];
        if (n.label.kind != InfoTerm::Kind::mutual_information)
            out.push_back({i, "structure", "label is not a mutual information term"});
        if (!n.label.x.subset_of(VarSet(spec.universe.full_mask())) ||
            !(n.label.y | n.label.z).subset_of(VarSet(spec.universe.full_mask())))
            out.push_back({i, "structure", "label mentions variables outside the universe"});
        for (int c : {n.left, n.right, n.lptr, n.rptr})
            if (c < -1 || c >= k) {
                out.push_back({i, "structure", "link to a nonexistent node"});
                return out;
            }
        for (int c : {n.left, n.right}) {
            if (c == i)
                out.push_back({i, "structure", "node is its own child"});
            else if (c >= 0 && ++parents[c] == 2)
                out.push_back({c, "structure", "node has more than one parent"});
        }
        for (int c : {n.lptr, n.rptr}) {
            if (c == i)
                out.push_back({i, "pointer", "node points to itself"});
            else if (c >= 0 && ++incoming[c] == 2)
                out.push_back({c, "pointer", "node is the destination of more than one pointer"});
        }
        if (n.left >= 0 && n.lptr >= 0)
            out.push_back({i, "structure", "node has both a left child and a left pointer"});
        if (n.right >= 0 && n.rptr >= 0)
            out.push_back({i, "structure", "node has both a right child and a right pointer"});
    }
    if (!out.empty())
        return out;

    // Every node must hang below some root; anything else sits on a cycle.
    std::vector<bool> seen(k, false);
    std::deque<int> queue;
    for (int r : spec.roots())
        queue.push_back(r);
    while (!queue.empty()) {
        int i = queue.front();
        queue.pop_front();
        seen[i] = true;
        for (int c : {spec.nodes[i].left, spec.nodes[i].right})
            if (c >= 0)
                queue.push_back(c);
    }
    for (int i = 0; i < k; ++i)
        if (!seen[i]) {
            out.push_back({i, "structure", "node lies on a cycle of child links"});
            break;
        }
    return out;
}

std::vector<ForestViolation> validate_tree(const ForestSpec& spec)
{
    auto out = check_structure(spec);
    if (!out.empty())
        return out;
    if (spec.roots().size() != 1)
        out.push_back({-1, "structure", "a tree has exactly one root"});
    for (int i = 0; i < static_cast<int>(spec.nodes.size()); ++i)
        if (spec.nodes[i].lptr >= 0 || spec.nodes[i].rptr >= 0)
            out.push_back({i, "pointer", "trees may not contain pointers"});
    if (!out.empty())
        return out;
    return clauses(spec);
}

std::vector<ForestViolation> validate_forest(const ForestSpec& spec)
{
    return clauses(spec);
}

std::string describe(const ForestViolation& v, const ForestSpec& spec)
{
    std::string where = "forest";
    if (v.node >= 0 && v.node < static_cast<int>(spec.nodes.size()))
        where = "node " + node_name(spec, v.node) + " " +
                format_info_term(spec.nodes[v.node].label, spec.universe);
    return where + ": clause (" + v.clause + "): " + v.message;
}

LinearInequality tree_inequality(const ForestSpec& spec)
{
    auto v = validate_tree(spec);
    if (!v.empty())
        throw std::invalid_argument(joined(v, spec));
    return emit(spec, 1);
}

LinearInequality forest_inequality(const ForestSpec& spec)
{
    auto v = validate_forest(spec);
    if (!v.empty())
        throw std::invalid_argument(joined(v, spec));
    return emit(spec, static_cast<int>(spec.roots().size()));
}

// Term lists

void check_term_list(const TermList& list)
{
    if (list.terms.empty())
        throw std::invalid_argument("term list is empty");
    for (const auto& t : list.terms)
        if (t.kind != InfoTerm::Kind::mutual_information || t.x.empty() || t.y.empty())
            throw std::invalid_argument("term list entries must be I(x;y|w) terms");
    if (!list.terms.front().z.empty())
        throw std::invalid_argument("the first term must be unconditioned");

    auto special = [&](VarSet s) { return s == list.a || s == list.b; };
    std::map<Mask, int> as_w, as_xy;
    for (std::size_t i = 0; i < list.terms.size(); ++i) {
        const auto& t = list.terms[i];
        if (i > 0) {
            if (t.z.empty())
                throw std::invalid_argument("only the first term may be unconditioned");
            if (special(t.z))
                throw std::invalid_argument("A and B may not be used as a w");
            ++as_w[t.z.mask];
        }
        for (VarSet s : {t.x, t.y})
            if (!special(s))
                ++as_xy[s.mask];
    }
    for (const auto& [m, c] : as_w)
        if (c != 1 || as_xy[m] != 1)
            throw std::invalid_argument("an auxiliary value is not used exactly once as a w and once "
                                        "as an x or y");
    for (const auto& [m, c] : as_xy)
        if (c != 1 || as_w[m] != 1)
            throw std::invalid_argument("an auxiliary value is not used exactly once as a w and once "
                                        "as an x or y");
}

ForestSpec list_to_tree(const TermList& list)
{
    check_term_list(list);
    ForestSpec spec;
    spec.universe = list.universe;
    spec.a = list.a;
    spec.b = list.b;

    std::map<Mask, int> by_w;
    for (std::size_t i = 1; i < list.terms.size(); ++i)
        by_w[list.terms[i].z.mask] = static_cast<int>(i);

    std::vector<bool> used(list.terms.size(), false);
    // Node index for a term, building the subtree below it.
    auto build = [&](auto&& self, int term) -> int {
        if (used[term])
            throw std::invalid_argument("term list reuses a term; the lists cannot form a tree");
        used[term] = true;
        int node = static_cast<int>(spec.nodes.size());
        spec.nodes.push_back(ForestNode{list.terms[term], -1, -1, -1, -1});
        spec.ids.push_back("t" + std::to_string(term + 1));
        const InfoTerm t = list.terms[term];
        for (bool left : {true, false}) {
            VarSet s = left ? t.x : t.y;
            if (s == list.a || s == list.b)
                continue;
            int child = self(self, by_w.at(s.mask));
            (left ? spec.nodes[node].left : spec.nodes[node].right) = child;
        }
        return node;
    };
    build(build, 0);
    return spec;
}

// Random valid forests

ForestSpec random_valid_forest(std::uint64_t seed, int max_nodes, int max_vars)
{
    if (max_nodes < 1 || max_vars < 2 || max_vars > 8)
        throw std::invalid_argument("random_valid_forest: bad size limits");
    std::mt19937_64 rng(seed);
    auto uniform = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };
    auto chance = [&](double p) { return std::uniform_real_distribution<double>(0, 1)(rng) < p; };

    const int n = uniform(std::min(3, max_vars), max_vars);
    const VarUniverse u = VarUniverse::letters(n);
    const VarSet a = VarSet::single(0), b = VarSet::single(1);

    for (;;) {
        ForestSpec spec;
        spec.universe = u;
        spec.a = a;
        spec.b = b;
        std::vector<int> incoming;

        auto random_side = [&]() {
            if (chance(0.4))
                return chance(0.5) ? a : b;
            if (!spec.nodes.empty() && chance(0.25))
                return label_union(spec.nodes[uniform(0, static_cast<int>(spec.nodes.size()) - 1)].label);
            Mask m = 0;
            while (m == 0)
                m = static_cast<Mask>(uniform(1, static_cast<int>(u.full_mask())));
            if (chance(0.6)) // prefer single variables
                m = Mask{1} << uniform(0, n - 1);
            return VarSet(m);
        };
        auto add_node = [&](VarSet z) {
            VarSet x = random_side();
            VarSet y = random_side();
            spec.nodes.push_back(ForestNode{InfoTerm::mutual(x, y, z), -1, -1, -1, -1});
            incoming.push_back(-1);
            return static_cast<int>(spec.nodes.size()) - 1;
        };

        std::deque<std::pair<int, bool>> pending;
        int roots = uniform(1, std::min(3, max_nodes));
        for (int r = 0; r < roots; ++r) {
            int i = add_node(VarSet{});
            pending.emplace_back(i, true);
            pending.emplace_back(i, false);
        }
        bool ok = true;
        while (ok && !pending.empty()) {
            auto [i, left] = pending.front();
            pending.pop_front();
            VarSet x = left ? spec.nodes[i].label.x : spec.nodes[i].label.y;

            std::vector<int> targets;
            for (int d = 0; d < static_cast<int>(spec.nodes.size()); ++d)
                if (d != i && incoming[d] < 0 && label_union(spec.nodes[d].label) == x)
                    targets.push_back(d);
            bool can_leaf = x == a || x == b;
            bool can_child = static_cast<int>(spec.nodes.size()) < max_nodes;

            if (can_leaf && (chance(0.6) || (!can_child && targets.empty())))
                continue;
            if (!targets.empty() && (chance(0.5) || !can_child)) {
                int d = targets[uniform(0, static_cast<int>(targets.size()) - 1)];
                (left ? spec.nodes[i].lptr : spec.nodes[i].rptr) = d;
                incoming[d] = i;
                continue;
            }
            if (can_child) {
                int c = add_node(x);
                (left ? spec.nodes[i].left : spec.nodes[i].right) = c;
                pending.emplace_back(c, true);
                pending.emplace_back(c, false);
                continue;
            }
            if (can_leaf)
                continue;
            ok = false;
        }
        if (ok && validate_forest(spec).empty()) {
            for (std::size_t i = 0; i < spec.nodes.size(); ++i)
                spec.ids.push_back("n" + std::to_string(i + 1));
            return spec;
        }
    }
}

} // namespace linrank
