#include "linrank/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "linrank/catalog.hpp"
#include "linrank/generators.hpp"
#include "linrank/linalg.hpp"
#include "linrank/polymatroid.hpp"
#include "linrank/repr_search.hpp"
#include "linrank/shannon.hpp"
#include "linrank/text_io.hpp"

namespace linrank {

namespace {

namespace fs = std::filesystem;

// Bad arguments or unreadable inputs.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        throw UsageError("cannot write '" + path + "'");
}

// Drops '#' comment lines and joins the rest with spaces.
std::string strip_comments(const std::string& text)
{
    std::istringstream in(text);
    std::string line, out;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        out += line + ' ';
    }
    return out;
}

std::vector<std::string> content_lines(const std::string& text)
{
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first != std::string::npos && line[first] != '#')
            lines.push_back(line);
    }
    return lines;
}

std::string status_word(ProofResult::Status s)
{
    switch (s) {
    case ProofResult::Status::proved: return "proved";
    case ProofResult::Status::not_provable: return "not provable";
    case ProofResult::Status::undecided: return "undecided";
    }
    return "?";
}

int status_code(ProofResult::Status s)
{
    switch (s) {
    case ProofResult::Status::proved: return kExitOk;
    case ProofResult::Status::not_provable: return kExitRefuted;
    case ProofResult::Status::undecided: return kExitUnknown;
    }
    return kExitUnknown;
}

std::string seconds(std::chrono::steady_clock::time_point since)
{
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - since;
    std::ostringstream s;
    s << std::fixed << std::setprecision(2) << dt.count() << "s";
    return s.str();
}

// ---- prove ---------------------------------------------------------------

struct ProveArgs {
    std::string target;
    std::string hypotheses;
    std::string k;
    std::string output;
    bool no_recipe = false;
};

int cmd_prove(const ProveArgs& a, std::ostream& out)
{
    LinearInequality q;
    std::vector<HypothesisDecl> decls;
    std::string base;

    constexpr std::string_view prefix = "catalog:";
    if (a.target.rfind(prefix, 0) == 0) {
        const std::string tag = a.target.substr(prefix.size());
        const CatalogEntry* e = find_entry(tag);
        if (!e)
            throw UsageError("no catalog entry " + tag);
        q = e->inequality;
        if (!a.no_recipe)
            decls = e->recipe;
        base = e->tag.substr(1, e->tag.size() - 2);
    } else {
        std::string text = a.target;
        base = "inequality";
        if (fs::is_regular_file(a.target)) {
            text = strip_comments(read_file(a.target));
            base = a.target;
        }
        q = parse_inequality(text, infer_universe(text));
    }
    if (!a.hypotheses.empty())
        decls = parse_hypotheses(read_file(a.hypotheses));
    if (!a.output.empty())
        base = a.output;

    ProofResult r;
    if (!a.k.empty()) {
        auto k = parse_rational(a.k);
        if (!k)
            throw UsageError("--k expects a rational, got '" + a.k + "'");
        r = prove_k_slack(q, decls, *k);
    } else {
        r = prove_with_common_informations(q, decls);
    }

    out << status_word(r.status) << ": " << format_inequality(r.target) << '\n';
    for (const auto& d : decls)
        out << "  using " << format_hypothesis(d) << '\n';
    out << "  pivots " << r.pivots << '\n';
    if (r.certificate) {
        write_file(base + ".cert", format_certificate(*r.certificate));
        out << "  certificate " << base << ".cert\n";
    } else if (r.witness) {
        write_file(base + ".witness", format_witness(r));
        out << "  witness " << base << ".witness\n";
    }
    return status_code(r.status);
}

int cmd_verify_cert(const std::string& path, std::ostream& out)
{
    ProofCertificate c = parse_certificate(read_file(path));
    const bool ok = verify_certificate(c);
    out << (ok ? "valid" : "invalid") << ": " << format_inequality(c.target) << '\n';
    return ok ? kExitOk : kExitRefuted;
}

// ---- catalog-verify ------------------------------------------------------

struct VerifyArgs {
    std::vector<std::string> groups;
    std::vector<std::string> tags;
    int recipe_limit = -1;
};

int cmd_catalog_verify(const VerifyArgs& a, std::ostream& out)
{
    for (const auto& g : a.groups) {
        bool known = false;
        for (const auto& e : catalog())
            known = known || group_name(e.group) == g;
        if (!known)
            throw UsageError("unknown catalog group '" + g + "'");
    }
    for (const auto& t : a.tags)
        if (!find_entry(t))
            throw UsageError("no catalog entry " + t);

    std::vector<const CatalogEntry*> chosen;
    for (const auto& e : catalog()) {
        bool take = a.groups.empty() && a.tags.empty();
        for (const auto& g : a.groups)
            take = take || group_name(e.group) == g;
        for (const auto& t : a.tags)
            take = take || find_entry(t) == &e;
        if (take)
            chosen.push_back(&e);
    }

    std::string first_failure;
    int code = kExitOk;
    for (const CatalogEntry* e : chosen) {
        auto recipe = e->recipe;
        if (a.recipe_limit >= 0 && recipe.size() > static_cast<std::size_t>(a.recipe_limit))
            recipe.resize(a.recipe_limit);
        const auto t0 = std::chrono::steady_clock::now();
        ProofResult r = prove_with_common_informations(e->inequality, recipe);
        std::string word = status_word(r.status);
        if (r.certificate && !verify_certificate(*r.certificate))
            word = "bad certificate";
        const bool ok = word == "proved";
        out << std::left << std::setw(12) << e->tag << std::setw(16) << word << seconds(t0) << '\n';
        if (!ok && first_failure.empty()) {
            first_failure = e->tag;
            code = r.status == ProofResult::Status::undecided ? kExitUnknown : kExitRefuted;
        }
    }
    if (!first_failure.empty()) {
        out << "failed at " << first_failure << '\n';
        return code;
    }
    out << chosen.size() << " entries proved\n";
    return kExitOk;
}

int cmd_catalog_list(std::ostream& out)
{
    for (const auto& e : catalog()) {
        out << e.tag << '\t' << group_name(e.group) << '\t' << e.text << '\t';
        for (std::size_t i = 0; i < e.recipe.size(); ++i)
            out << (i ? "; " : "") << format_hypothesis(e.recipe[i]);
        if (e.recipe_inferred)
            out << " (found by search)";
        out << '\n';
    }
    return kExitOk;
}

// ---- vectors and matrices ------------------------------------------------

std::vector<RankVector> read_vectors(const std::string& path)
{
    auto lines = content_lines(read_file(path));
    if (lines.empty())
        throw UsageError("'" + path + "' holds no rank vector");
    std::vector<RankVector> vs;
    for (const auto& l : lines)
        vs.push_back(parse_rank_vector(l));
    return vs;
}

int cmd_check_ray(const std::string& path, const std::string& set, std::ostream& out)
{
    auto vs = read_vectors(path);
    const int n = vs.front().universe().size();
    const auto ineqs = inequality_set(set, n);
    out << set << ": " << ineqs.size() << " inequalities on " << n << " variables\n";
    int code = kExitOk;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        out << "vector " << i + 1 << ": ";
        if (vs[i].universe().size() != n)
            throw UsageError("vectors in one file must share their variable count");
        try {
            ExtremalityReport rep = extremality_check(vs[i], ineqs);
            out << (rep.extreme ? "extreme" : "not extreme") << ", " << rep.tight.size()
                << " tight, tight rank " << rep.tight_rank << " of " << rep.dimension << '\n';
            if (!rep.extreme)
                code = kExitRefuted;
        } catch (const ViolatedInequality& v) {
            out << v.what() << '\n';
            code = kExitRefuted;
        }
    }
    return code;
}

int cmd_represent(const std::string& path, std::size_t cap, std::optional<std::uint64_t> seed,
                  std::ostream& out)
{
    auto vs = read_vectors(path);
    if (vs.size() != 1)
        throw UsageError("represent takes exactly one vector");
    SearchOptions opt;
    opt.permutation_cap = cap;
    SearchResult r = search_representation(vs.front(), opt);
    const std::string trace = format_trace(r.trace);
    write_file(path + ".trace", trace);
    out << trace;
    switch (r.status) {
    case SearchResult::Status::success: out << "success"; break;
    case SearchResult::Status::failure: out << "failure"; break;
    case SearchResult::Status::unknown: out << "unknown"; break;
    }
    out << " after " << r.orders_tried << " order(s)";
    if (!r.message.empty())
        out << ": " << r.message;
    out << "\ntrace " << path << ".trace\n";
    if (r.status == SearchResult::Status::success && seed) {
        auto rep = realize_trace(vs.front(), r.trace, *seed);
        if (!rep) {
            out << "realization over GF(" << kGeneralPositionPrime << ") missed with seed "
                << *seed << '\n';
            return kExitUnknown;
        }
        out << format_matrices(*rep);
    }
    switch (r.status) {
    case SearchResult::Status::success: return kExitOk;
    case SearchResult::Status::failure: return kExitRefuted;
    case SearchResult::Status::unknown: return kExitUnknown;
    }
    return kExitUnknown;
}

int cmd_ranks(const std::string& path, std::optional<std::uint64_t> prime, std::ostream& out)
{
    SubspaceRepresentation rep = parse_matrices(read_file(path));
    if (prime) {
        if (!is_prime(*prime) || *prime >= (std::uint64_t{1} << 32))
            throw UsageError("--prime must be a prime below 2^32");
        out << format_rank_vector(ranks_mod_p(rep, *prime)) << '\n';
    } else {
        out << format_rank_vector(ranks_from_matrices(rep)) << '\n';
    }
    return kExitOk;
}

// ---- generators ----------------------------------------------------------

int cmd_family(const std::string& kind, int n, std::ostream& out)
{
    auto k = parse_family_kind(kind);
    if (!k)
        throw UsageError("unknown family '" + kind + "'");
    out << format_inequality(family(*k, n)) << '\n';
    return kExitOk;
}

int cmd_forest(const std::string& path, std::ostream& out)
{
    ForestSpec f = parse_forest_spec(read_file(path));
    auto problems = validate_forest(f);
    if (!problems.empty()) {
        for (const auto& p : problems)
            out << describe(p, f) << '\n';
        return kExitRefuted;
    }
    out << format_inequality(forest_inequality(f)) << '\n';
    return kExitOk;
}

int cmd_w_representation(int n, const std::string& which, std::uint64_t seed, std::ostream& out)
{
    WVector w;
    if (which == "A" || which == "a") {
        w.kind = WVector::Kind::a;
    } else if (which == "B" || which == "b") {
        w.kind = WVector::Kind::b;
    } else {
        w.kind = WVector::Kind::i;
        try {
            std::size_t used = 0;
            w.i = std::stoi(which, &used);
            if (used != which.size())
                throw std::invalid_argument(which);
        } catch (const std::logic_error&) {
            throw UsageError("expected A, B or an index, got '" + which + "'");
        }
    }
    WRepresentation r = random_w_representation(n, w, seed);
    out << "# GF(" << r.prime << "), " << r.attempts << " draw(s)\n" << format_matrices(r.rep);
    return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Linear rank inequality toolkit", "linrank"};
    app.require_subcommand(1);
    std::function<int()> action;

    ProveArgs pa;
    auto* prove = app.add_subcommand("prove", "prove an inequality, optionally via common informations");
    prove->add_option("target", pa.target, "inequality text, file, or catalog:(tag)")->required();
    prove->add_option("--hypotheses", pa.hypotheses, "file of Z = CI(X ; Y) declarations");
    prove->add_option("--k", pa.k, "prove the slack form with this k (target already uses Z)");
    prove->add_option("-o,--output", pa.output, "artifact path without suffix");
    prove->add_flag("--no-recipe", pa.no_recipe, "ignore a catalog entry's recipe");
    prove->callback([&] { action = [&] { return cmd_prove(pa, out); }; });

    std::string cert_path;
    auto* vc = app.add_subcommand("verify-cert", "re-check a certificate file");
    vc->add_option("file", cert_path)->required();
    vc->callback([&] { action = [&] { return cmd_verify_cert(cert_path, out); }; });

    VerifyArgs va;
    auto* cv = app.add_subcommand("catalog-verify", "prove catalog entries with their recipes");
    cv->add_option("--group", va.groups, "restrict to a group (repeatable)");
    cv->add_option("--tag", va.tags, "restrict to an entry (repeatable)");
    cv->add_option("--recipe-limit", va.recipe_limit, "use only the first N declarations");
    cv->callback([&] { action = [&] { return cmd_catalog_verify(va, out); }; });

    auto* cl = app.add_subcommand("catalog", "list catalog entries with their recipes");
    cl->callback([&] { action = [&] { return cmd_catalog_list(out); }; });

    std::string ray_path, ineq_set = "full-catalog";
    auto* cr = app.add_subcommand("check-ray", "test rank vectors for extremality");
    cr->add_option("file", ray_path)->required();
    cr->add_option("--ineq-set", ineq_set)
        ->check(CLI::IsMember({"shannon", "shannon+ingleton", "full-catalog"}));
    cr->callback([&] { action = [&] { return cmd_check_ray(ray_path, ineq_set, out); }; });

    std::string rep_path;
    std::size_t cap = 0;
    std::optional<std::uint64_t> rep_seed;
    auto* rp = app.add_subcommand("represent", "search for a subspace representation");
    rp->add_option("file", rep_path)->required();
    rp->add_option("--permutations", cap, "variable orders to try (0: all up to 720)");
    rp->add_option("--seed", rep_seed, "also realize the trace over GF(2^31-1)");
    rp->callback([&] { action = [&] { return cmd_represent(rep_path, cap, rep_seed, out); }; });

    std::string mat_path;
    std::optional<std::uint64_t> prime;
    auto* rk = app.add_subcommand("ranks", "rank vector of a matrix file");
    rk->add_option("file", mat_path)->required();
    rk->add_option("--prime", prime, "ranks over GF(p)");
    rk->callback([&] { action = [&] { return cmd_ranks(mat_path, prime, out); }; });

    std::string kind;
    int fam_n = 0;
    auto* fm = app.add_subcommand("family", "instance of an inequality family");
    fm->add_option("kind", kind, "starone|startwo|npvar|indep|kinser")->required();
    fm->add_option("n", fam_n)->required();
    fm->callback([&] { action = [&] { return cmd_family(kind, fam_n, out); }; });

    std::string forest_path;
    auto* fo = app.add_subcommand("forest", "inequality of a labeled forest");
    fo->add_option("file", forest_path)->required();
    fo->callback([&] { action = [&] { return cmd_forest(forest_path, out); }; });

    int w_n = 0;
    std::string which;
    std::uint64_t w_seed = 0;
    auto* wr = app.add_subcommand("w-representation",
                                  "general-position matrices for an independence w vector");
    wr->add_option("n", w_n)->required();
    wr->add_option("which", which, "A, B, or i in 1..n")->required();
    wr->add_option("--seed", w_seed)->required();
    wr->callback([&] { action = [&] { return cmd_w_representation(w_n, which, w_seed, out); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        return action();
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "failed: " << e.what() << '\n';
        return kExitUnknown;
    }
}

} // namespace linrank
