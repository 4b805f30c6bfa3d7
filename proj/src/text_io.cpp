#include "linrank/text_io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace linrank {

ParseError::ParseError(const std::string& message, SourceSpan span)
    : std::runtime_error(std::to_string(span.line) + ":" + std::to_string(span.column) + ": " +
                         message),
      span_(span), detail_(message)
{
}

namespace {

enum class Tok {
    ident,
    number,
    lparen,
    rparen,
    semi,
    bar,
    comma,
    plus,
    minus,
    star,
    le,
    ge,
    eq,
    end
};

struct Token {
    Tok kind;
    std::string text;
    SourceSpan span;
};

const char* tok_name(Tok t)
{
    switch (t) {
    case Tok::ident: return "identifier";
    case Tok::number: return "number";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::semi: return "';'";
    case Tok::bar: return "'|'";
    case Tok::comma: return "','";
    case Tok::plus: return "'+'";
    case Tok::minus: return "'-'";
    case Tok::star: return "'*'";
    case Tok::le: return "'<='";
    case Tok::ge: return "'>='";
    case Tok::eq: return "'='";
    case Tok::end: return "end of input";
    }
    return "?";
}

bool ident_start(char c)
{
    return std::isalpha(static_cast<unsigned char>(c)) != 0;
}

bool ident_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool digit(char c)
{
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
}

// Splits `text` into tokens; '#' comments run to end of line.  `first_line`
// lets callers that lex one line of a file report file positions.
std::vector<Token> tokenize(std::string_view text, int first_line = 1, int first_col = 1)
{
    std::vector<Token> out;
    int line = first_line;
    int col = first_col;
    std::size_t i = 0;
    auto point = [&](int len) {
        return SourceSpan{line, col, line, col + std::max(len, 1) - 1};
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++col;
            ++i;
            continue;
        }
        if (c == '#') {
            while (i < text.size() && text[i] != '\n')
                ++i;
            continue;
        }
        if (ident_start(c)) {
            std::size_t j = i;
            while (j < text.size() && ident_char(text[j]))
                ++j;
            int len = static_cast<int>(j - i);
            out.push_back({Tok::ident, std::string(text.substr(i, j - i)), point(len)});
            col += len;
            i = j;
            continue;
        }
        if (digit(c)) {
            std::size_t j = i;
            while (j < text.size() && digit(text[j]))
                ++j;
            if (j + 1 < text.size() && text[j] == '/' && digit(text[j + 1])) {
                ++j;
                while (j < text.size() && digit(text[j]))
                    ++j;
            }
            int len = static_cast<int>(j - i);
            out.push_back({Tok::number, std::string(text.substr(i, j - i)), point(len)});
            col += len;
            i = j;
            continue;
        }
        auto two = text.substr(i, 2);
        if (two == "<=" || two == ">=") {
            out.push_back({two == "<=" ? Tok::le : Tok::ge, std::string(two), point(2)});
            col += 2;
            i += 2;
            continue;
        }
        Tok kind;
        switch (c) {
        case '(': kind = Tok::lparen; break;
        case ')': kind = Tok::rparen; break;
        case ';': kind = Tok::semi; break;
        case '|': kind = Tok::bar; break;
        case ',': kind = Tok::comma; break;
        case '+': kind = Tok::plus; break;
        case '-': kind = Tok::minus; break;
        case '*': kind = Tok::star; break;
        case '=': kind = Tok::eq; break;
        default:
            throw ParseError(std::string("unexpected character '") + c + "'", point(1));
        }
        out.push_back({kind, std::string(1, c), point(1)});
        ++col;
        ++i;
    }
    out.push_back({Tok::end, "", SourceSpan{line, col, line, col}});
    return out;
}

struct Name {
    std::string text;
    SourceSpan span;
};

struct RawAtom {
    InfoTerm::Kind kind = InfoTerm::Kind::mutual_information;
    std::vector<Name> x, y, z;
};

struct RawTerm {
    Rational coef = 1;
    bool has_atom = true;
    RawAtom atom;
};

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    const Token& peek(std::size_t k = 0) const
    {
        return toks_[std::min(pos_ + k, toks_.size() - 1)];
    }
    bool at(Tok t) const { return peek().kind == t; }
    Token take() { return toks_[std::min(pos_++, toks_.size() - 1)]; }

    [[noreturn]] void fail(const std::string& what) const
    {
        const Token& t = peek();
        std::string found = t.kind == Tok::end ? "end of input" : "'" + t.text + "'";
        throw ParseError(what + ", found " + found, t.span);
    }

    Token expect(Tok t)
    {
        if (!at(t))
            fail(std::string("expected ") + tok_name(t));
        return take();
    }

    std::vector<Name> vlist(bool allow_empty)
    {
        std::vector<Name> names;
        if (!at(Tok::ident)) {
            if (allow_empty)
                return names;
            fail("expected a variable");
        }
        while (true) {
            Token t = expect(Tok::ident);
            names.push_back({t.text, t.span});
            if (!at(Tok::comma))
                break;
            take();
        }
        return names;
    }

    bool at_atom() const
    {
        return at(Tok::ident) && (peek().text == "H" || peek().text == "I") &&
               peek(1).kind == Tok::lparen;
    }

    RawAtom atom()
    {
        if (!at_atom())
            fail("expected H(...) or I(...)");
        RawAtom a;
        bool mutual = take().text == "I";
        take(); // '('
        a.kind = mutual ? InfoTerm::Kind::mutual_information
                        : InfoTerm::Kind::conditional_entropy;
        a.x = vlist(false);
        if (mutual) {
            expect(Tok::semi);
            a.y = vlist(false);
        }
        if (at(Tok::bar)) {
            take();
            a.z = vlist(true);
        }
        expect(Tok::rparen);
        return a;
    }

    RawTerm term(bool negate)
    {
        RawTerm t;
        if (at(Tok::number)) {
            Token num = take();
            auto q = parse_rational(num.text);
            if (!q)
                throw ParseError("bad number '" + num.text + "'", num.span);
            t.coef = *q;
            bool star = at(Tok::star);
            if (star)
                take();
            if (!star && !at_atom()) {
                if (sgn(t.coef) != 0)
                    throw ParseError("constant terms other than 0 are not linear in entropies",
                                     num.span);
                t.has_atom = false;
                return t;
            }
        }
        t.atom = atom();
        if (negate)
            t.coef = -t.coef;
        return t;
    }

    // Leading sign on the first term is accepted as a convenience.
    std::vector<RawTerm> expr()
    {
        std::vector<RawTerm> terms;
        bool negate = false;
        if (at(Tok::minus) || at(Tok::plus))
            negate = take().kind == Tok::minus;
        terms.push_back(term(negate));
        while (at(Tok::plus) || at(Tok::minus)) {
            negate = take().kind == Tok::minus;
            terms.push_back(term(negate));
        }
        return terms;
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

VarSet resolve(const std::vector<Name>& names, const VarUniverse& u)
{
    VarSet s;
    for (const Name& n : names) {
        auto i = u.index_of(n.text);
        if (!i)
            throw ParseError("unknown variable '" + n.text + "'", n.span);
        s = s | VarSet::single(*i);
    }
    return s;
}

InfoTerm resolve(const RawAtom& a, const VarUniverse& u)
{
    InfoTerm t;
    t.kind = a.kind;
    t.x = resolve(a.x, u);
    t.y = resolve(a.y, u);
    t.z = resolve(a.z, u);
    return t;
}

EntropyExpr resolve(const std::vector<RawTerm>& terms, const VarUniverse& u)
{
    EntropyExpr e;
    for (const RawTerm& t : terms) {
        if (!t.has_atom)
            continue;
        e += t.coef * expand_info_term(resolve(t.atom, u));
    }
    return e;
}

void collect_names(const std::vector<Token>& toks, std::set<std::string>& out)
{
    for (std::size_t i = 0; i < toks.size(); ++i) {
        const Token& t = toks[i];
        if (t.kind != Tok::ident)
            continue;
        bool atom_head = (t.text == "H" || t.text == "I") && i + 1 < toks.size() &&
                         toks[i + 1].kind == Tok::lparen;
        if (!atom_head)
            out.insert(t.text);
    }
}

std::string strip_comment(std::string_view line)
{
    auto hash = line.find('#');
    return std::string(line.substr(0, hash));
}

std::vector<std::string> split_lines(std::string_view text)
{
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            lines.emplace_back(text.substr(start));
            break;
        }
        lines.emplace_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    return lines;
}

// Whitespace-separated words of one line with their columns.
struct Word {
    std::string text;
    SourceSpan span;
};

std::vector<Word> words(const std::string& line, int line_no)
{
    std::vector<Word> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
            ++j;
        int c0 = static_cast<int>(i) + 1;
        int c1 = static_cast<int>(j);
        out.push_back({line.substr(i, j - i), SourceSpan{line_no, c0, line_no, c1}});
        i = j;
    }
    return out;
}

SourceSpan line_span(int line_no, const std::string& line)
{
    int len = std::max<int>(1, static_cast<int>(line.size()));
    return SourceSpan{line_no, 1, line_no, len};
}

std::string format_coefficient(const Rational& c, bool first)
{
    std::string out;
    if (sgn(c) < 0)
        out += "-";
    else if (!first)
        out += "+";
    Rational a = abs(c);
    if (a != 1)
        out += to_string(a) + "*";
    return out;
}

} // namespace

// Expressions

EntropyExpr parse_expression(std::string_view text, const VarUniverse& universe)
{
    Parser p(tokenize(text));
    auto terms = p.expr();
    if (!p.at(Tok::end))
        p.fail("expected '+', '-' or end of expression");
    return resolve(terms, universe);
}

VarUniverse infer_universe(std::string_view text)
{
    std::set<std::string> names;
    collect_names(tokenize(text), names);
    if (names.empty())
        throw ParseError("no variables mentioned", SourceSpan{});
    return VarUniverse(std::vector<std::string>(names.begin(), names.end()));
}

std::string format_expression(const EntropyExpr& e, const VarUniverse& universe)
{
    if (e.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [s, c] : e.terms()) {
        out += format_coefficient(c, first);
        out += "H(" + format_varset(VarSet(s), universe) + ")";
        first = false;
    }
    return out;
}

Relation parse_relation(std::string_view text, const VarUniverse& universe)
{
    Parser p(tokenize(text));
    auto lhs = p.expr();
    if (!(p.at(Tok::le) || p.at(Tok::ge) || p.at(Tok::eq)))
        p.fail("expected '<=', '>=' or '='");
    Tok rel = p.take().kind;
    auto rhs = p.expr();
    if (p.at(Tok::le) || p.at(Tok::ge) || p.at(Tok::eq))
        p.fail("only one relation is allowed");
    if (!p.at(Tok::end))
        p.fail("expected '+', '-' or end of input");

    EntropyExpr l = resolve(lhs, universe);
    EntropyExpr r = resolve(rhs, universe);
    Relation out;
    out.inequality.universe = universe;
    out.inequality.expr = rel == Tok::le ? r - l : l - r;
    out.equality = rel == Tok::eq;
    return out;
}

LinearInequality parse_inequality(std::string_view text, const VarUniverse& universe)
{
    Relation r = parse_relation(text, universe);
    if (r.equality) {
        auto toks = tokenize(text);
        auto it = std::find_if(toks.begin(), toks.end(),
                               [](const Token& t) { return t.kind == Tok::eq; });
        throw ParseError("expected an inequality, not an equation", it->span);
    }
    return r.inequality;
}

std::string format_inequality(const LinearInequality& q)
{
    return format_expression(q.expr, q.universe) + " >= 0";
}

InfoTerm parse_info_term(std::string_view text, const VarUniverse& universe)
{
    Parser p(tokenize(text));
    RawAtom a = p.atom();
    if (!p.at(Tok::end))
        p.fail("expected end of term");
    return resolve(a, universe);
}

// Hypotheses

std::vector<HypothesisDecl> parse_hypotheses(std::string_view text)
{
    std::vector<HypothesisDecl> decls;
    std::map<std::string, int> declared_at; // name -> declaration index
    std::vector<std::vector<Name>> uses;
    auto lines = split_lines(text);
    for (std::size_t li = 0; li < lines.size(); ++li) {
        int line_no = static_cast<int>(li) + 1;
        Parser p(tokenize(lines[li], line_no));
        if (p.at(Tok::end))
            continue;
        HypothesisDecl d;
        Token var = p.expect(Tok::ident);
        d.new_var = var.text;
        p.expect(Tok::eq);
        if (!(p.at(Tok::ident) && p.peek().text == "CI"))
            p.fail("expected CI(");
        p.take();
        p.expect(Tok::lparen);
        auto left = p.vlist(false);
        p.expect(Tok::semi);
        auto right = p.vlist(false);
        Token close = p.expect(Tok::rparen);
        if (!p.at(Tok::end))
            p.fail("expected end of line");
        d.span = SourceSpan{line_no, var.span.column, line_no, close.span.end_column};

        if (declared_at.count(d.new_var))
            throw ParseError("'" + d.new_var + "' is declared twice", var.span);
        // A name used by an earlier line may not be declared afterwards.
        for (const auto& earlier : uses)
            for (const Name& n : earlier)
                if (n.text == d.new_var)
                    throw ParseError("'" + d.new_var + "' is used before it is declared",
                                     n.span);
        for (const auto* side : {&left, &right})
            for (const Name& n : *side) {
                if (n.text == d.new_var)
                    throw ParseError("'" + d.new_var + "' refers to itself", n.span);
            }
        for (const Name& n : left)
            d.left.push_back(n.text);
        for (const Name& n : right)
            d.right.push_back(n.text);
        std::vector<Name> used = left;
        used.insert(used.end(), right.begin(), right.end());
        uses.push_back(std::move(used));
        declared_at[d.new_var] = static_cast<int>(decls.size());
        decls.push_back(std::move(d));
    }
    return decls;
}

std::string format_hypothesis(const HypothesisDecl& d)
{
    auto join = [](const std::vector<std::string>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i)
            s += (i ? "," : "") + v[i];
        return s;
    };
    return d.new_var + " = CI(" + join(d.left) + " ; " + join(d.right) + ")";
}

std::vector<std::string> referenced_ground_names(const std::vector<HypothesisDecl>& decls)
{
    std::set<std::string> aux;
    for (const auto& d : decls)
        aux.insert(d.new_var);
    std::vector<std::string> out;
    for (const auto& d : decls)
        for (const auto* side : {&d.left, &d.right})
            for (const auto& n : *side)
                if (!aux.count(n) && std::find(out.begin(), out.end(), n) == out.end())
                    out.push_back(n);
    return out;
}

ExpandedHypotheses expand_hypotheses(const std::vector<HypothesisDecl>& decls,
                                     const VarUniverse& ground)
{
    std::vector<std::string> aux;
    for (const auto& d : decls) {
        if (ground.index_of(d.new_var))
            throw ParseError("'" + d.new_var + "' is already a ground variable", d.span);
        aux.push_back(d.new_var);
    }
    ExpandedHypotheses out{ground.extended(aux), {}};
    const VarUniverse& u = out.universe;

    for (std::size_t i = 0; i < decls.size(); ++i) {
        const auto& d = decls[i];
        auto side = [&](const std::vector<std::string>& names) {
            VarSet s;
            for (const auto& n : names) {
                auto idx = u.index_of(n);
                // Ground variables, or auxiliaries declared earlier.
                if (!idx || *idx >= ground.size() + static_cast<int>(i))
                    throw ParseError("'" + n + "' does not name a variable in scope", d.span);
                s = s | VarSet::single(*idx);
            }
            return s;
        };
        VarSet z = VarSet::single(ground.size() + static_cast<int>(i));
        VarSet x = side(d.left);
        VarSet y = side(d.right);
        out.equalities.push_back(expand_info_term(InfoTerm::entropy(z, x)));
        out.equalities.push_back(expand_info_term(InfoTerm::entropy(z, y)));
        out.equalities.push_back(expand_info_term(InfoTerm::entropy(z)) -
                                 expand_info_term(InfoTerm::mutual(x, y)));
    }
    return out;
}

// Rank vectors

namespace {

std::vector<Rational> parse_rationals(std::string_view text, int first_line,
                                      std::vector<SourceSpan>* spans = nullptr)
{
    std::vector<Rational> out;
    auto lines = split_lines(text);
    for (std::size_t li = 0; li < lines.size(); ++li) {
        for (const Word& w : words(strip_comment(lines[li]), first_line + static_cast<int>(li))) {
            auto q = parse_rational(w.text);
            if (!q)
                throw ParseError("expected a rational number, found '" + w.text + "'", w.span);
            if (sgn(*q) < 0)
                throw ParseError("rank vector entries must be nonnegative", w.span);
            out.push_back(*q);
            if (spans)
                spans->push_back(w.span);
        }
    }
    return out;
}

RankVector parse_rank_vector_at(std::string_view text, const VarUniverse& universe,
                                int first_line)
{
    auto values = parse_rationals(text, first_line);
    if (values.size() != universe.coordinate_count())
        throw ParseError("expected " + std::to_string(universe.coordinate_count()) +
                             " entries for " + std::to_string(universe.size()) +
                             " variables, found " + std::to_string(values.size()),
                         SourceSpan{first_line, 1, first_line, 1});
    return RankVector(universe, std::move(values));
}

} // namespace

RankVector parse_rank_vector(std::string_view text, const VarUniverse& universe)
{
    return parse_rank_vector_at(text, universe, 1);
}

RankVector parse_rank_vector(std::string_view text)
{
    auto values = parse_rationals(text, 1);
    std::size_t count = values.size();
    for (int n = 1; n <= kMaxVariables; ++n) {
        if ((std::size_t{1} << n) - 1 == count)
            return RankVector(VarUniverse::letters(n), std::move(values));
    }
    throw ParseError("entry count " + std::to_string(count) + " is not 2^n - 1", SourceSpan{});
}

std::string format_rank_vector(const RankVector& v)
{
    std::string out;
    for (std::size_t i = 0; i < v.coords().size(); ++i) {
        if (i)
            out += ' ';
        out += to_string(v.coords()[i]);
    }
    return out;
}

std::vector<RankVector> parse_rank_vectors(std::string_view text, const VarUniverse& universe)
{
    std::vector<RankVector> out;
    auto lines = split_lines(text);
    for (std::size_t li = 0; li < lines.size(); ++li) {
        std::string body = strip_comment(lines[li]);
        if (words(body, 0).empty())
            continue;
        out.push_back(parse_rank_vector_at(body, universe, static_cast<int>(li) + 1));
    }
    return out;
}

// Matrices

namespace {

struct MatrixBlock {
    std::string var;
    SourceSpan span;
    IntMatrix m;
};

std::vector<MatrixBlock> parse_matrix_blocks(std::string_view text)
{
    std::vector<MatrixBlock> blocks;
    auto lines = split_lines(text);
    std::size_t li = 0;
    int shared_cols = -1;
    auto next_content = [&]() -> std::optional<std::pair<int, std::vector<Word>>> {
        while (li < lines.size()) {
            int line_no = static_cast<int>(li) + 1;
            auto ws = words(strip_comment(lines[li]), line_no);
            ++li;
            if (!ws.empty())
                return std::make_pair(line_no, std::move(ws));
        }
        return std::nullopt;
    };
    auto count_of = [](const Word& w, const char* what) {
        auto z = parse_integer(w.text);
        if (!z || *z < 0 || *z > 100000)
            throw ParseError(std::string("bad ") + what + " '" + w.text + "'", w.span);
        return static_cast<int>(z->get_si());
    };

    while (auto header = next_content()) {
        auto& [line_no, ws] = *header;
        if (ws[0].text != "matrix" || ws.size() != 4)
            throw ParseError("expected 'matrix <Var> <rows> <cols>'",
                             line_span(line_no, lines[line_no - 1]));
        MatrixBlock b;
        b.var = ws[1].text;
        b.span = ws[1].span;
        int rows = count_of(ws[2], "row count");
        int cols = count_of(ws[3], "column count");
        if (shared_cols >= 0 && cols != shared_cols)
            throw ParseError("matrix for '" + b.var + "' has " + std::to_string(cols) +
                                 " columns, earlier blocks have " + std::to_string(shared_cols),
                             ws[3].span);
        shared_cols = cols;
        b.m = IntMatrix(0, cols);
        for (int r = 0; r < rows; ++r) {
            auto row_line = next_content();
            if (!row_line)
                throw ParseError("matrix for '" + b.var + "' is missing rows", b.span);
            auto& [rl, rw] = *row_line;
            if (rw[0].text == "matrix")
                throw ParseError("matrix for '" + b.var + "' is missing rows", rw[0].span);
            if (static_cast<int>(rw.size()) != cols)
                throw ParseError("row has " + std::to_string(rw.size()) + " entries, expected " +
                                     std::to_string(cols),
                                 line_span(rl, lines[rl - 1]));
            std::vector<Integer> row;
            for (const Word& w : rw) {
                auto z = parse_integer(w.text);
                if (!z)
                    throw ParseError("matrix entries must be integers, found '" + w.text + "'",
                                     w.span);
                row.push_back(*z);
            }
            b.m.append_row(row);
        }
        blocks.push_back(std::move(b));
    }
    if (blocks.empty())
        throw ParseError("no matrix blocks", SourceSpan{});
    return blocks;
}

SubspaceRepresentation assemble(std::vector<MatrixBlock> blocks, const VarUniverse& universe)
{
    SubspaceRepresentation rep;
    rep.universe = universe;
    rep.cols = blocks.front().m.cols;
    rep.matrices.assign(universe.size(), IntMatrix(0, rep.cols));
    std::vector<bool> seen(universe.size(), false);
    for (auto& b : blocks) {
        auto i = universe.index_of(b.var);
        if (!i)
            throw ParseError("unknown variable '" + b.var + "'", b.span);
        if (seen[*i])
            throw ParseError("second matrix for '" + b.var + "'", b.span);
        seen[*i] = true;
        rep.matrices[*i] = std::move(b.m);
    }
    for (int i = 0; i < universe.size(); ++i)
        if (!seen[i])
            throw ParseError("no matrix for variable '" + universe.name(i) + "'", SourceSpan{});
    return rep;
}

} // namespace

void IntMatrix::append_row(const std::vector<Integer>& row)
{
    if (static_cast<int>(row.size()) != cols)
        throw std::invalid_argument("row length does not match the column count");
    data.insert(data.end(), row.begin(), row.end());
    ++rows;
}

IntMatrix SubspaceRepresentation::stacked(Mask subset) const
{
    IntMatrix out(0, cols);
    for (int i = 0; i < universe.size(); ++i) {
        if (!((subset >> i) & 1u))
            continue;
        const IntMatrix& m = matrices[i];
        out.data.insert(out.data.end(), m.data.begin(), m.data.end());
        out.rows += m.rows;
    }
    return out;
}

SubspaceRepresentation parse_matrices(std::string_view text, const VarUniverse& universe)
{
    return assemble(parse_matrix_blocks(text), universe);
}

SubspaceRepresentation parse_matrices(std::string_view text)
{
    auto blocks = parse_matrix_blocks(text);
    std::vector<std::string> names;
    for (const auto& b : blocks) {
        if (std::find(names.begin(), names.end(), b.var) != names.end())
            throw ParseError("second matrix for '" + b.var + "'", b.span);
        names.push_back(b.var);
    }
    return assemble(std::move(blocks), VarUniverse(names));
}

std::string format_matrices(const SubspaceRepresentation& rep)
{
    std::ostringstream out;
    for (int i = 0; i < rep.universe.size(); ++i) {
        const IntMatrix& m = rep.matrices[i];
        out << "matrix " << rep.universe.name(i) << ' ' << m.rows << ' ' << rep.cols << '\n';
        for (int r = 0; r < m.rows; ++r) {
            for (int c = 0; c < m.cols; ++c)
                out << (c ? " " : "") << m.at(r, c).get_str();
            out << '\n';
        }
    }
    return out.str();
}

// Forests

ForestSpec parse_forest_spec(std::string_view text)
{
    struct NodeLine {
        std::string id;
        std::string term;
        int line;
        int term_column;
        SourceSpan id_span;
    };
    struct LinkLine {
        std::string kind;
        Word from, to;
    };
    std::vector<NodeLine> node_lines;
    std::vector<LinkLine> links;
    std::optional<std::vector<std::string>> vars;
    std::optional<std::pair<Word, Word>> special;

    auto lines = split_lines(text);
    for (std::size_t li = 0; li < lines.size(); ++li) {
        int line_no = static_cast<int>(li) + 1;
        std::string body = strip_comment(lines[li]);
        auto ws = words(body, line_no);
        if (ws.empty())
            continue;
        const std::string& kw = ws[0].text;
        if (kw == "vars") {
            if (vars)
                throw ParseError("second 'vars' line", ws[0].span);
            vars.emplace();
            for (std::size_t k = 1; k < ws.size(); ++k)
                vars->push_back(ws[k].text);
        } else if (kw == "special") {
            if (ws.size() != 3)
                throw ParseError("expected 'special <vlist> <vlist>'", line_span(line_no, body));
            if (special)
                throw ParseError("second 'special' line", ws[0].span);
            special = std::make_pair(ws[1], ws[2]);
        } else if (kw == "node") {
            if (ws.size() < 3)
                throw ParseError("expected 'node <id> <term>'", line_span(line_no, body));
            auto term_start = static_cast<std::size_t>(ws[2].span.column - 1);
            node_lines.push_back({ws[1].text, body.substr(term_start), line_no, ws[2].span.column,
                                  ws[1].span});
        } else if (kw == "left" || kw == "right") {
            if (ws.size() != 4 || ws[2].text != "of")
                throw ParseError("expected '" + kw + " <child> of <parent>'",
                                 line_span(line_no, body));
            links.push_back({kw, ws[3], ws[1]});
        } else if (kw == "lptr" || kw == "rptr") {
            if (ws.size() != 4 || ws[2].text != "->")
                throw ParseError("expected '" + kw + " <from> -> <to>'", line_span(line_no, body));
            links.push_back({kw, ws[1], ws[3]});
        } else {
            throw ParseError("unknown keyword '" + kw + "'", ws[0].span);
        }
    }
    if (node_lines.empty())
        throw ParseError("no nodes", SourceSpan{});

    ForestSpec spec;
    if (vars) {
        spec.universe = VarUniverse(*vars);
    } else {
        std::set<std::string> names;
        for (const auto& n : node_lines)
            collect_names(tokenize(n.term, n.line, n.term_column), names);
        if (special)
            for (const Word* w : {&special->first, &special->second})
                collect_names(tokenize(w->text), names);
        spec.universe = VarUniverse(std::vector<std::string>(names.begin(), names.end()));
    }

    auto pair_side = [&](const Word& w) {
        Parser p(tokenize(w.text, w.span.line, w.span.column));
        auto names = p.vlist(false);
        if (!p.at(Tok::end))
            p.fail("expected a comma-separated variable list");
        return resolve(names, spec.universe);
    };
    if (special) {
        spec.a = pair_side(special->first);
        spec.b = pair_side(special->second);
    } else {
        auto a = spec.universe.index_of("A");
        auto b = spec.universe.index_of("B");
        if (!a || !b)
            throw ParseError("no 'special' line and no variables named A and B", SourceSpan{});
        spec.a = VarSet::single(*a);
        spec.b = VarSet::single(*b);
    }

    std::map<std::string, int> index;
    std::vector<SourceSpan> decl_span;
    for (const auto& n : node_lines) {
        if (index.count(n.id))
            throw ParseError("node '" + n.id + "' declared twice", n.id_span);
        index[n.id] = static_cast<int>(spec.nodes.size());
        ForestNode node;
        Parser p(tokenize(n.term, n.line, n.term_column));
        RawAtom a = p.atom();
        if (!p.at(Tok::end))
            p.fail("expected end of line");
        if (a.kind != InfoTerm::Kind::mutual_information)
            throw ParseError("node labels must be I(...) terms", n.id_span);
        node.label = resolve(a, spec.universe);
        spec.nodes.push_back(node);
        spec.ids.push_back(n.id);
        decl_span.push_back(n.id_span);
    }

    std::vector<int> parent(spec.nodes.size(), -1);
    std::vector<int> incoming(spec.nodes.size(), -1);
    for (const auto& l : links) {
        auto find = [&](const Word& w) {
            auto it = index.find(w.text);
            if (it == index.end())
                throw ParseError("unknown node '" + w.text + "'", w.span);
            return it->second;
        };
        int from = find(l.from);
        int to = find(l.to);
        ForestNode& n = spec.nodes[from];
        if (l.kind == "left" || l.kind == "right") {
            int& slot = l.kind == "left" ? n.left : n.right;
            if (slot >= 0)
                throw ParseError("node '" + l.from.text + "' already has a " + l.kind + " child",
                                 l.to.span);
            if (parent[to] >= 0)
                throw ParseError("node '" + l.to.text + "' already has a parent", l.to.span);
            if (to == from)
                throw ParseError("node '" + l.to.text + "' cannot be its own child", l.to.span);
            slot = to;
            parent[to] = from;
        } else {
            int& slot = l.kind == "lptr" ? n.lptr : n.rptr;
            if (slot >= 0)
                throw ParseError("node '" + l.from.text + "' already has a " + l.kind,
                                 l.from.span);
            if (incoming[to] >= 0)
                throw ParseError("node '" + l.to.text +
                                     "' is the destination of more than one pointer",
                                 l.to.span);
            slot = to;
            incoming[to] = from;
        }
    }

    auto problems = check_structure(spec);
    if (!problems.empty()) {
        const auto& p = problems.front();
        SourceSpan where = p.node >= 0 ? decl_span[p.node] : SourceSpan{};
        throw ParseError(p.message, where);
    }
    return spec;
}

std::string format_forest_spec(const ForestSpec& spec)
{
    std::vector<std::string> ids = spec.ids;
    std::set<std::string> distinct(ids.begin(), ids.end());
    bool usable = ids.size() == spec.nodes.size() && distinct.size() == ids.size();
    if (usable)
        for (const auto& id : ids)
            usable = usable && !id.empty() && words(id, 1).size() == 1 && id.find('#') == std::string::npos;
    if (!usable) {
        ids.clear();
        for (std::size_t i = 0; i < spec.nodes.size(); ++i)
            ids.push_back("n" + std::to_string(i + 1));
    }

    std::ostringstream out;
    out << "vars";
    for (const auto& n : spec.universe.names())
        out << ' ' << n;
    out << "\nspecial " << format_varset(spec.a, spec.universe) << ' '
        << format_varset(spec.b, spec.universe) << '\n';
    for (std::size_t i = 0; i < spec.nodes.size(); ++i)
        out << "node " << ids[i] << ' ' << format_info_term(spec.nodes[i].label, spec.universe)
            << '\n';
    for (std::size_t i = 0; i < spec.nodes.size(); ++i) {
        const auto& n = spec.nodes[i];
        if (n.left >= 0)
            out << "left " << ids[n.left] << " of " << ids[i] << '\n';
        if (n.right >= 0)
            out << "right " << ids[n.right] << " of " << ids[i] << '\n';
    }
    for (std::size_t i = 0; i < spec.nodes.size(); ++i) {
        const auto& n = spec.nodes[i];
        if (n.lptr >= 0)
            out << "lptr " << ids[i] << " -> " << ids[n.lptr] << '\n';
        if (n.rptr >= 0)
            out << "rptr " << ids[i] << " -> " << ids[n.rptr] << '\n';
    }
    return out.str();
}

} // namespace linrank
