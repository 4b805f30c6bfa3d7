#include "linrank/shannon.hpp"

#include <sstream>
#include <stdexcept>

namespace linrank {

namespace {

template <class F>
void for_each_elemental(int n, F&& f)
{
    const Mask full = (Mask{1} << n) - 1;
    for (int i = 0; i < n; ++i) {
        Mask rest = full & ~(Mask{1} << i);
        f(InfoTerm::entropy(VarSet::single(i), VarSet(rest)), true, i, -1, rest);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Mask others = full & ~(Mask{1} << i) & ~(Mask{1} << j);
            // Subsets of `others` in increasing numeric order.
            for (Mask k = 0;; k = (k - others) & others) {
                f(InfoTerm::mutual(VarSet::single(i), VarSet::single(j), VarSet(k)), false, i, j,
                  k);
                if (k == others)
                    break;
            }
        }
}

SparseColumn to_column(const EntropyExpr& e)
{
    SparseColumn col;
    for (const auto& [s, c] : e.terms())
        col.emplace_back(static_cast<int>(s) - 1, c);
    return col;
}

} // namespace

std::size_t elemental_count(int n)
{
    if (n < 2)
        return static_cast<std::size_t>(n);
    return static_cast<std::size_t>(n) +
           static_cast<std::size_t>(n) * (n - 1) / 2 * (std::size_t{1} << (n - 2));
}

std::vector<ElementalInequality> elemental_inequalities(const VarUniverse& universe)
{
    std::vector<ElementalInequality> out;
    for_each_elemental(universe.size(), [&](const InfoTerm& t, bool ce, int i, int j, Mask k) {
        ElementalInequality e;
        e.inequality = {universe, expand_info_term(t), format_info_term(t, universe)};
        e.conditional_entropy = ce;
        e.i = i;
        e.j = j;
        e.k = k;
        out.push_back(std::move(e));
    });
    return out;
}

std::vector<EntropyExpr> elemental_expressions(int n)
{
    std::vector<EntropyExpr> out;
    out.reserve(elemental_count(n));
    for_each_elemental(n, [&](const InfoTerm& t, bool, int, int, Mask) {
        out.push_back(expand_info_term(t));
    });
    return out;
}

bool verify_certificate(const ProofCertificate& cert)
{
    const int n = cert.target.universe.size();
    if (n < 1)
        return false;
    const Mask full = cert.target.universe.full_mask();
    auto elementals = elemental_expressions(n);
    EntropyExpr sum;
    for (const auto& [i, q] : cert.lambda) {
        if (i < 0 || i >= static_cast<int>(elementals.size()) || sgn(q) < 0)
            return false;
        sum += q * elementals[i];
    }
    for (const auto& [j, q] : cert.mu) {
        if (j < 0 || j >= static_cast<int>(cert.equalities.size()))
            return false;
        if ((cert.equalities[j].support() & ~full) != 0)
            return false;
        sum += q * cert.equalities[j];
    }
    return (cert.target.expr.support() & ~full) == 0 && sum == cert.target.expr;
}

bool verify_witness(const RankVector& witness, const LinearInequality& target,
                    const std::vector<EntropyExpr>& equalities)
{
    const int n = target.universe.size();
    if (witness.universe().size() != n)
        return false;
    for (const auto& e : elemental_expressions(n))
        if (sgn(evaluate(e, witness)) < 0)
            return false;
    for (const auto& h : equalities)
        if (sgn(evaluate(h, witness)) != 0)
            return false;
    return sgn(evaluate(target.expr, witness)) < 0;
}

ProofResult prove(const LinearInequality& target, const std::vector<EntropyExpr>& equalities,
                  const ProveOptions& options)
{
    const VarUniverse& u = target.universe;
    const int n = u.size();
    if (n < 1)
        throw std::invalid_argument("empty universe");
    if (n > 12)
        throw std::invalid_argument("prover is limited to 12 variables");
    const Mask full = u.full_mask();
    if ((target.expr.support() & ~full) != 0)
        throw std::invalid_argument("target mentions variables outside its universe");
    for (const auto& h : equalities)
        if ((h.support() & ~full) != 0)
            throw std::invalid_argument("hypothesis mentions variables outside the universe");

    FarkasProblem problem;
    problem.rows = static_cast<int>(full);
    auto elementals = elemental_expressions(n);
    for (const auto& e : elementals)
        problem.nonneg.push_back(to_column(e));
    for (const auto& h : equalities)
        problem.free.push_back(to_column(h));
    problem.target.assign(problem.rows, Rational(0));
    for (const auto& [s, c] : target.expr.terms())
        problem.target[s - 1] = c;

    FarkasOptions fo;
    fo.pivot_limit = options.pivot_limit;
    FarkasResult fr = solve_farkas(problem, fo);

    ProofResult result;
    result.target = target;
    result.equalities = equalities;
    result.pivots = fr.pivots;
    switch (fr.status) {
    case FarkasResult::Status::pivot_limit:
        result.status = ProofResult::Status::undecided;
        return result;
    case FarkasResult::Status::feasible: {
        ProofCertificate cert{target, equalities, {}, {}};
        for (std::size_t i = 0; i < fr.lambda.size(); ++i)
            if (sgn(fr.lambda[i]) != 0)
                cert.lambda[static_cast<int>(i)] = fr.lambda[i];
        for (std::size_t j = 0; j < fr.mu.size(); ++j)
            if (sgn(fr.mu[j]) != 0)
                cert.mu[static_cast<int>(j)] = fr.mu[j];
        if (!verify_certificate(cert))
            throw std::logic_error("solver produced a certificate that does not verify");
        result.status = ProofResult::Status::proved;
        result.certificate = std::move(cert);
        return result;
    }
    case FarkasResult::Status::infeasible: {
        RankVector w(u, fr.dual);
        if (!verify_witness(w, target, equalities))
            throw std::logic_error("solver produced a witness that does not verify");
        result.status = ProofResult::Status::not_provable;
        result.witness = std::move(w);
        return result;
    }
    }
    return result;
}

ProofResult prove_with_common_informations(const LinearInequality& target,
                                           const std::vector<HypothesisDecl>& decls,
                                           const ProveOptions& options)
{
    ExpandedHypotheses ex = expand_hypotheses(decls, target.universe);
    LinearInequality lifted{ex.universe, target.expr, target.label};
    return prove(lifted, ex.equalities, options);
}

LinearInequality k_slack_form(const LinearInequality& replaced,
                              const std::vector<HypothesisDecl>& decls, const Rational& k)
{
    const VarUniverse& u = replaced.universe;
    LinearInequality out = replaced;
    for (const auto& d : decls) {
        auto set_of = [&](const std::vector<std::string>& names) {
            VarSet s;
            for (const auto& nm : names) {
                auto i = u.index_of(nm);
                if (!i)
                    throw std::invalid_argument("'" + nm + "' is not in the universe");
                s = s | VarSet::single(*i);
            }
            return s;
        };
        VarSet z = set_of({d.new_var});
        out.expr += k * expand_info_term(InfoTerm::entropy(z, set_of(d.left)));
        out.expr += k * expand_info_term(InfoTerm::entropy(z, set_of(d.right)));
    }
    return out;
}

ProofResult prove_k_slack(const LinearInequality& replaced, const std::vector<HypothesisDecl>& decls,
                          const Rational& k, const ProveOptions& options)
{
    return prove(k_slack_form(replaced, decls, k), {}, options);
}

namespace {

std::string universe_line(const VarUniverse& u)
{
    std::string s = "universe";
    for (const auto& n : u.names())
        s += " " + n;
    return s;
}

} // namespace

std::string format_certificate(const ProofCertificate& cert)
{
    std::ostringstream out;
    out << "target " << format_inequality(cert.target) << '\n';
    out << universe_line(cert.target.universe) << '\n';
    for (const auto& h : cert.equalities)
        out << "equality " << format_expression(h, cert.target.universe) << " = 0\n";
    for (const auto& [i, q] : cert.lambda)
        out << "lambda " << i << ' ' << to_string(q) << '\n';
    for (const auto& [j, q] : cert.mu)
        out << "mu " << j << ' ' << to_string(q) << '\n';
    return out.str();
}

std::string format_witness(const ProofResult& result)
{
    std::ostringstream out;
    out << "target " << format_inequality(result.target) << '\n';
    out << universe_line(result.target.universe) << '\n';
    for (const auto& h : result.equalities)
        out << "equality " << format_expression(h, result.target.universe) << " = 0\n";
    if (result.witness)
        out << "witness " << format_rank_vector(*result.witness) << '\n';
    return out.str();
}

ProofCertificate parse_certificate(std::string_view text)
{
    struct Pending {
        std::string body;
        int line;
    };
    std::optional<Pending> target;
    std::vector<Pending> equalities;
    std::optional<VarUniverse> universe;
    ProofCertificate cert;

    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw))
            continue;
        std::string rest;
        std::getline(ls, rest);
        auto where = SourceSpan{line_no, 1, line_no, static_cast<int>(line.size())};
        if (kw == "target") {
            if (target)
                throw ParseError("second target line", where);
            target = Pending{rest, line_no};
        } else if (kw == "universe") {
            std::istringstream ns(rest);
            std::vector<std::string> names;
            for (std::string n; ns >> n;)
                names.push_back(n);
            try {
                universe = VarUniverse(names);
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what(), where);
            }
        } else if (kw == "equality") {
            equalities.push_back({rest, line_no});
        } else if (kw == "lambda" || kw == "mu") {
            std::istringstream vs(rest);
            long idx = -1;
            std::string value, extra;
            if (!(vs >> idx >> value) || (vs >> extra) || idx < 0)
                throw ParseError("expected '" + kw + " <index> <rational>'", where);
            auto q = parse_rational(value);
            if (!q)
                throw ParseError("bad rational '" + value + "'", where);
            auto& slot = kw == "lambda" ? cert.lambda : cert.mu;
            if (!slot.emplace(static_cast<int>(idx), *q).second)
                throw ParseError("repeated " + kw + " index", where);
        } else {
            throw ParseError("unknown keyword '" + kw + "'", where);
        }
    }
    if (!target || !universe)
        throw ParseError("certificate needs a target line and a universe line", SourceSpan{});
    try {
        cert.target = parse_inequality(target->body, *universe);
    } catch (const ParseError& e) {
        throw ParseError("target: " + e.detail(), SourceSpan{target->line, 1, target->line, 1});
    }
    for (const auto& p : equalities) {
        try {
            Relation r = parse_relation(p.body, *universe);
            if (!r.equality)
                throw ParseError("expected '<expr> = 0'", SourceSpan{});
            cert.equalities.push_back(r.inequality.expr);
        } catch (const ParseError& e) {
            throw ParseError("equality: " + e.detail(), SourceSpan{p.line, 1, p.line, 1});
        }
    }
    return cert;
}

} // namespace linrank
