#include "linrank/repr_search.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "linrank/linalg.hpp"
#include "linrank/polymatroid.hpp"

namespace linrank {

namespace {

struct Dims {
    const std::vector<long>& d;

    long cap(Mask x, Mask y) const { return d[x] + d[y] - d[x | y]; }
    bool within(Mask x, Mask t) const { return d[x | t] == d[t]; }
};

// Rules that look at T alone, in list order, each followed by its mirror.
Decision direct_rules(Mask r, Mask s, Mask t, const Dims& D)
{
    const Mask pairs[2][2] = {{r, s}, {s, r}};
    for (auto& [x, y] : pairs)
        if (D.within(x, t))
            return Decision::yes;
    for (auto& [x, y] : pairs)
        if (D.cap(x, y) == D.cap(x, t) && D.cap(x, t) == D.cap(x, y | t))
            return Decision::yes;
    if (D.cap(r, t) == D.cap(s, t) && D.cap(s, t) == D.cap(r | s, t) &&
        D.cap(r | s, t) == D.cap(r, s))
        return Decision::yes;
    for (auto& [x, y] : pairs)
        if (D.cap(x, t) < D.cap(x, y))
            return Decision::no;
    const Mask nominal = r & s;
    if (nominal != 0 && !D.within(nominal, t))
        return Decision::no;
    for (auto& [x, y] : pairs)
        if (D.cap(x, t) < D.cap(x, (x & t) | y))
            return Decision::no;
    return Decision::unknown;
}

// R cap S = (R \* S cap S \* R) + (R cap* S) when the nominal parts are
// independent of the shared part.
Decision nominal_difference_rule(Mask r, Mask s, Mask t, const Dims& D)
{
    const Mask nominal = r & s;
    if (nominal == 0)
        return Decision::unknown;
    const Mask rd = r & ~s, sd = s & ~r;
    if (D.cap(rd | sd, nominal) != 0 || !D.within(nominal, t))
        return Decision::unknown;
    if (rd == 0 || sd == 0)
        return Decision::yes;
    return direct_rules(rd, sd, t, D) == Decision::yes ? Decision::yes : Decision::unknown;
}

void propagate(std::vector<Decision>& table, const Dims& D)
{
    const Mask count = static_cast<Mask>(table.size());
    for (bool changed = true; changed;) {
        changed = false;
        for (Mask t = 0; t < count; ++t) {
            if (table[t] != Decision::unknown)
                continue;
            for (Mask u = 0; u < count; ++u) {
                if (table[u] == Decision::yes && D.within(u, t)) {
                    table[t] = Decision::yes;
                    break;
                }
                if (table[u] == Decision::no && D.within(t, u)) {
                    table[t] = Decision::no;
                    break;
                }
            }
            changed = changed || table[t] != Decision::unknown;
        }
    }
}

std::string sum_name(Mask m, const std::vector<int>& placed, const VarUniverse& u)
{
    std::string out;
    for (std::size_t j = 0; j < placed.size(); ++j)
        if ((m >> j) & 1u) {
            if (!out.empty())
                out += '+';
            out += u.name(placed[j]);
        }
    return out;
}

template <class T>
std::string row(const char* head, const std::vector<T>& xs)
{
    std::string out = head;
    for (const auto& x : xs)
        out += ' ' + std::to_string(x);
    return out + '\n';
}

void apply(const std::vector<int>& member, std::vector<long>& dims, std::vector<long>& need)
{
    for (std::size_t m = 0; m < dims.size(); ++m) {
        dims[m] -= member[m];
        need[m] -= 1 - member[m];
    }
}

long to_long(const Rational& q)
{
    if (q.get_den() != 1 || !q.get_num().fits_slong_p())
        throw std::invalid_argument("representation search needs integer ranks");
    return q.get_num().get_si();
}

} // namespace

std::vector<Decision> intersection_membership(Mask r, Mask s, const std::vector<long>& dims)
{
    const Dims D{dims};
    std::vector<Decision> table(dims.size());
    for (Mask t = 0; t < dims.size(); ++t)
        table[t] = direct_rules(r, s, t, D);
    propagate(table, D);
    bool changed = false;
    for (Mask t = 0; t < dims.size(); ++t)
        if (table[t] == Decision::unknown) {
            table[t] = nominal_difference_rule(r, s, t, D);
            changed = changed || table[t] != Decision::unknown;
        }
    if (changed)
        propagate(table, D);
    return table;
}

Decision subset_decision(Mask r, Mask s, Mask t, const std::vector<long>& dims)
{
    if (t >= dims.size() || r >= dims.size() || s >= dims.size())
        throw std::invalid_argument("sum outside the placed variables");
    return intersection_membership(r, s, dims)[t];
}

SearchState initial_state(const RankVector& v, const std::vector<int>& placed, int var)
{
    SearchState st;
    st.placed = placed;
    st.var = var;
    const Mask count = Mask{1} << placed.size();
    st.dims.resize(count);
    st.need.resize(count);
    for (Mask m = 0; m < count; ++m) {
        Mask u = 0;
        for (std::size_t j = 0; j < placed.size(); ++j)
            if ((m >> j) & 1u)
                u |= Mask{1} << placed[j];
        st.dims[m] = to_long(v[u]);
        st.need[m] = to_long(v[u | (Mask{1} << var)]) - st.dims[m];
    }
    return st;
}

StepOutcome choose_and_quotient(SearchState& st)
{
    using S = StepOutcome::Status;
    StepOutcome out;
    const Mask count = static_cast<Mask>(st.dims.size());
    if (st.need[0] <= 0) {
        for (long x : st.need)
            if (x != 0) {
                out.status = S::contradiction;
                out.reason = "need row not all zero";
                return out;
            }
        out.status = S::complete;
        return out;
    }

    Mask r = 0;
    for (Mask m = 1; m < count; ++m)
        if (st.need[m] < st.need[0]) {
            r = m;
            break;
        }

    TraceStep step;
    if (r == 0) {
        step.kind = TraceStep::Kind::fresh;
        step.member.assign(count, 0);
    } else {
        step.kind = TraceStep::Kind::sum;
        step.r = r;
        step.member.resize(count);
        for (Mask t = 0; t < count; ++t)
            step.member[t] = st.dims[r | t] == st.dims[t] ? 1 : 0;
    }
    step.dims = st.dims;
    step.need = st.need;
    apply(step.member, step.dims, step.need);

    Mask bad = count;
    for (Mask t = 0; t < count && bad == count; ++t)
        if (step.need[t] < 0)
            bad = t;
    if (bad != count) {
        if (r == 0) {
            out.status = S::contradiction;
            out.reason = "fresh vector overshoots";
            return out;
        }
        // Retry inside R cap S, S the first sum that went negative.
        const Mask s = bad;
        const Dims D{st.dims};
        if (D.cap(r, s) <= 0) {
            out.status = S::contradiction;
            out.reason = "intersection is zero";
            return out;
        }
        TraceStep retry;
        retry.kind = TraceStep::Kind::intersection;
        retry.r = r;
        retry.s = s;
        retry.retried = true;
        retry.tried_member = std::move(step.member);
        retry.tried_dims = std::move(step.dims);
        retry.tried_need = std::move(step.need);
        retry.member.resize(count);
        auto table = intersection_membership(r, s, st.dims);
        for (Mask t = 0; t < count; ++t) {
            if (table[t] == Decision::unknown) {
                out.status = S::stuck;
                out.reason = "undetermined membership";
                out.step = std::move(retry);
                return out;
            }
            retry.member[t] = table[t] == Decision::yes ? 1 : 0;
        }
        retry.dims = st.dims;
        retry.need = st.need;
        apply(retry.member, retry.dims, retry.need);
        for (Mask t = 0; t < count; ++t)
            if (retry.need[t] < 0 || retry.dims[t] < 0) {
                out.status = S::contradiction;
                out.reason = "intersection overshoots";
                out.step = std::move(retry);
                return out;
            }
        step = std::move(retry);
    }
    st.dims = step.dims;
    st.need = step.need;
    out.status = S::chosen;
    out.step = std::move(step);
    return out;
}

SearchResult search_order(const RankVector& v, const std::vector<int>& order)
{
    using R = SearchResult::Status;
    SearchResult res;
    res.trace.universe = v.universe();
    res.trace.order = order;
    res.orders_tried = 1;
    std::vector<int> placed;
    for (int var : order) {
        SearchState st = initial_state(v, placed, var);
        VariableTrace vt{var, placed, st.dims, st.need, {}};
        while (true) {
            StepOutcome o = choose_and_quotient(st);
            if (o.status == StepOutcome::Status::complete)
                break;
            if (o.status != StepOutcome::Status::chosen) {
                res.status = o.status == StepOutcome::Status::stuck ? R::unknown : R::failure;
                res.message = "placing " + v.universe().name(var) + ": " + o.reason;
                res.trace.variables.push_back(std::move(vt));
                return res;
            }
            vt.steps.push_back(std::move(o.step));
        }
        res.trace.variables.push_back(std::move(vt));
        placed.push_back(var);
    }
    res.status = R::success;
    return res;
}

SearchResult search_representation(const RankVector& v, const SearchOptions& options)
{
    if (auto bad = validate_polymatroid(v))
        throw std::invalid_argument("not a polymatroid: " + bad->message);
    for (const auto& q : v.coords())
        to_long(q);
    const int n = v.universe().size();
    std::size_t cap = options.permutation_cap;
    if (cap == 0)
        cap = 720;

    using R = SearchResult::Status;
    SearchResult last;
    bool any_stuck = false;
    std::size_t tried = 0;
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i)
        order[i] = i;
    bool truncated = false;
    do {
        if (tried == cap) {
            truncated = true;
            break;
        }
        ++tried;
        SearchResult r = search_order(v, order);
        if (r.status == R::success) {
            r.orders_tried = tried;
            return r;
        }
        any_stuck = any_stuck || r.status == R::unknown;
        last = std::move(r);
    } while (std::next_permutation(order.begin(), order.end()));
    last.orders_tried = tried;
    last.status = any_stuck || truncated ? R::unknown : R::failure;
    if (truncated)
        last.message = "stopped after " + std::to_string(tried) + " orders";
    return last;
}

std::string format_trace(const SearchTrace& trace)
{
    const VarUniverse& u = trace.universe;
    std::ostringstream out;
    for (const auto& vt : trace.variables) {
        out << "place " << u.name(vt.var);
        if (!vt.placed.empty()) {
            out << " over";
            for (int p : vt.placed)
                out << ' ' << u.name(p);
        }
        out << '\n' << row("dims", vt.dims) << row("need", vt.need);
        for (const auto& st : vt.steps) {
            auto name = [&](Mask m) { return sum_name(m, vt.placed, u); };
            if (st.retried) {
                out << "try " << name(st.r) << '\n'
                    << row("member", st.tried_member) << row("dims", st.tried_dims)
                    << row("need", st.tried_need) << "reject " << name(st.s) << '\n';
            }
            switch (st.kind) {
            case TraceStep::Kind::fresh: out << "choose new\n"; break;
            case TraceStep::Kind::sum: out << "choose " << name(st.r) << '\n'; break;
            case TraceStep::Kind::intersection:
                out << "choose (" << name(st.r) << ")&(" << name(st.s) << ")\n";
                break;
            }
            out << row("member", st.member) << row("dims", st.dims) << row("need", st.need);
        }
        out << "done " << u.name(vt.var) << '\n';
    }
    return out.str();
}

bool replay_trace(const RankVector& v, const SearchTrace& trace)
{
    std::vector<int> placed;
    if (trace.variables.size() != trace.order.size())
        return false;
    for (std::size_t k = 0; k < trace.order.size(); ++k) {
        const auto& vt = trace.variables[k];
        if (vt.var != trace.order[k] || vt.placed != placed)
            return false;
        SearchState st = initial_state(v, placed, vt.var);
        if (st.dims != vt.dims || st.need != vt.need)
            return false;
        for (const auto& step : vt.steps) {
            if (step.member.size() != st.dims.size())
                return false;
            apply(step.member, st.dims, st.need);
            if (st.dims != step.dims || st.need != step.need)
                return false;
        }
        for (long x : st.need)
            if (x != 0)
                return false;
        placed.push_back(vt.var);
    }
    return true;
}

std::optional<SubspaceRepresentation> realize_trace(const RankVector& v, const SearchTrace& trace,
                                                    std::uint64_t seed)
{
    const std::uint64_t p = kGeneralPositionPrime;
    const VarUniverse& u = v.universe();
    const std::size_t dim = static_cast<std::size_t>(to_long(v[u.full_mask()]));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);

    std::vector<std::vector<ModRow>> rows(u.size());
    auto sum_basis = [&](Mask m, const std::vector<int>& placed) {
        std::vector<ModRow> all;
        for (std::size_t j = 0; j < placed.size(); ++j)
            if ((m >> j) & 1u)
                all.insert(all.end(), rows[placed[j]].begin(), rows[placed[j]].end());
        return row_basis_mod_p(std::move(all), p);
    };
    auto combination = [&](const std::vector<ModRow>& basis) {
        ModRow x(dim, 0);
        for (const auto& b : basis) {
            std::uint64_t c = coeff(rng);
            for (std::size_t j = 0; j < dim; ++j)
                x[j] = (x[j] + c * b[j]) % p;
        }
        return x;
    };

    for (const auto& vt : trace.variables) {
        for (const auto& step : vt.steps) {
            ModRow x;
            switch (step.kind) {
            case TraceStep::Kind::fresh:
                x.resize(dim);
                for (auto& c : x)
                    c = coeff(rng);
                break;
            case TraceStep::Kind::sum: x = combination(sum_basis(step.r, vt.placed)); break;
            case TraceStep::Kind::intersection:
                x = combination(intersect_mod_p(sum_basis(step.r, vt.placed),
                                                sum_basis(step.s, vt.placed), dim, p));
                break;
            }
            rows[vt.var].push_back(std::move(x));
        }
    }

    SubspaceRepresentation rep;
    rep.universe = u;
    rep.cols = static_cast<int>(dim);
    for (const auto& rs : rows) {
        IntMatrix m(0, rep.cols);
        for (const auto& r : rs) {
            std::vector<Integer> ints;
            for (auto c : r)
                ints.emplace_back(static_cast<unsigned long>(c));
            m.append_row(ints);
        }
        rep.matrices.push_back(std::move(m));
    }
    if (ranks_mod_p(rep, p) != v)
        return std::nullopt;
    return rep;
}

} // namespace linrank
