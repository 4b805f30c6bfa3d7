#include "linrank/farkas.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <stdexcept>

namespace linrank {

namespace {

using Row = std::vector<Rational>;

// target -= f * pivot over the listed nonzero columns of pivot.
void eliminate(Row& target, const Row& pivot, const Rational& f, const std::vector<int>& nz)
{
    Rational tmp;
    for (int c : nz) {
        tmp = f * pivot[c];
        target[c] -= tmp;
    }
}

std::vector<int> nonzeros(const Row& row)
{
    std::vector<int> nz;
    for (int c = 0; c < static_cast<int>(row.size()); ++c)
        if (sgn(row[c]) != 0)
            nz.push_back(c);
    return nz;
}

void make_primitive(std::vector<Rational>& y)
{
    Integer den = common_denominator(y);
    Integer g = 0;
    for (auto& q : y) {
        q *= den;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num_mpz_t());
    }
    if (g > 1)
        for (auto& q : y)
            q /= g;
}

// Best rational approximation with denominator <= max_den, if it is
// within tol of x.
std::optional<Rational> reconstruct(double x, long max_den = 1'000'000, double tol = 1e-7)
{
    if (!std::isfinite(x))
        return std::nullopt;
    double r = std::fabs(x);
    long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int it = 0; it < 64; ++it) {
        double a = std::floor(r);
        if (a > 1e12)
            break;
        long ai = static_cast<long>(a);
        long p2 = ai * p1 + p0, q2 = ai * q1 + q0;
        if (q2 > max_den)
            break;
        p0 = p1, q0 = q1, p1 = p2, q1 = q2;
        if (std::fabs(std::fabs(x) - static_cast<double>(p1) / q1) < 1e-12)
            break;
        double frac = r - a;
        if (frac < 1e-15)
            break;
        r = 1 / frac;
    }
    if (q1 == 0 || std::fabs(std::fabs(x) - static_cast<double>(p1) / q1) > tol)
        return std::nullopt;
    Rational q(p1, q1);
    q.canonicalize();
    return x < 0 ? Rational(-q) : q;
}

// The reduced system after eliminating the free columns, in a form shared
// by the floating-point and exact phases.
struct Reduced {
    int n_rows = 0, n_pos = 0, n_free = 0, width = 0;
    std::vector<Row> m;          // [nonneg | free | rhs] after Gauss-Jordan
    std::vector<Row> p;          // row transform
    std::vector<int> free_pivot; // pivot row per free column, -1 if none
    std::vector<int> kept;       // rows that stay in the phase-one system
    std::vector<int> sign;       // per kept row: +1, or -1 when negated
};

Reduced reduce(const FarkasProblem& problem)
{
    Reduced r;
    r.n_rows = problem.rows;
    r.n_pos = static_cast<int>(problem.nonneg.size());
    r.n_free = static_cast<int>(problem.free.size());
    r.width = r.n_pos + r.n_free + 1;
    r.m.assign(r.n_rows, Row(r.width));
    for (int j = 0; j < r.n_pos; ++j)
        for (const auto& [row, v] : problem.nonneg[j])
            r.m.at(row)[j] = v;
    for (int j = 0; j < r.n_free; ++j)
        for (const auto& [row, v] : problem.free[j])
            r.m.at(row)[r.n_pos + j] = v;
    for (int i = 0; i < r.n_rows; ++i)
        r.m[i][r.width - 1] = problem.target[i];
    r.p.assign(r.n_rows, Row(r.n_rows));
    for (int i = 0; i < r.n_rows; ++i)
        r.p[i][i] = 1;

    r.free_pivot.assign(r.n_free, -1);
    std::vector<bool> used(r.n_rows, false);
    for (int j = 0; j < r.n_free; ++j) {
        int col = r.n_pos + j;
        int pr = -1;
        for (int i = 0; i < r.n_rows && pr < 0; ++i)
            if (!used[i] && sgn(r.m[i][col]) != 0)
                pr = i;
        if (pr < 0)
            continue; // dependent on earlier free columns: mu_j = 0
        used[pr] = true;
        r.free_pivot[j] = pr;
        Rational inv = 1 / r.m[pr][col];
        for (auto& v : r.m[pr])
            v *= inv;
        for (auto& v : r.p[pr])
            v *= inv;
        auto nz = nonzeros(r.m[pr]);
        auto pnz = nonzeros(r.p[pr]);
        for (int i = 0; i < r.n_rows; ++i) {
            if (i == pr || sgn(r.m[i][col]) == 0)
                continue;
            Rational f = r.m[i][col];
            eliminate(r.m[i], r.m[pr], f, nz);
            eliminate(r.p[i], r.p[pr], f, pnz);
        }
    }
    for (int i = 0; i < r.n_rows; ++i)
        if (!used[i]) {
            r.kept.push_back(i);
            r.sign.push_back(sgn(r.m[i][r.width - 1]) < 0 ? -1 : 1);
        }
    return r;
}

// Entry (i, j) of the sign-adjusted phase-one matrix; j == n_pos is rhs.
Rational entry(const Reduced& r, int i, int j)
{
    const Rational& v = j == r.n_pos ? r.m[r.kept[i]][r.width - 1] : r.m[r.kept[i]][j];
    return r.sign[i] < 0 ? Rational(-v) : v;
}

bool check_primal(const FarkasProblem& problem, const std::vector<Rational>& lambda,
                  const std::vector<Rational>& mu)
{
    std::vector<Rational> sum(problem.rows);
    for (std::size_t j = 0; j < lambda.size(); ++j) {
        if (sgn(lambda[j]) < 0)
            return false;
        if (sgn(lambda[j]) == 0)
            continue;
        for (const auto& [row, v] : problem.nonneg[j])
            sum[row] += lambda[j] * v;
    }
    for (std::size_t j = 0; j < mu.size(); ++j) {
        if (sgn(mu[j]) == 0)
            continue;
        for (const auto& [row, v] : problem.free[j])
            sum[row] += mu[j] * v;
    }
    return sum == problem.target;
}

bool check_dual(const FarkasProblem& problem, const std::vector<Rational>& y)
{
    auto dot = [&](const SparseColumn& c) {
        Rational s = 0;
        for (const auto& [row, v] : c)
            s += y[row] * v;
        return s;
    };
    for (const auto& c : problem.nonneg)
        if (sgn(dot(c)) < 0)
            return false;
    for (const auto& c : problem.free)
        if (sgn(dot(c)) != 0)
            return false;
    Rational t = 0;
    for (int i = 0; i < problem.rows; ++i)
        t += y[i] * problem.target[i];
    return sgn(t) < 0;
}

// mu from lambda via the free pivot rows:  mu_f = b_f - sum M[f][i] lambda_i.
std::vector<Rational> free_values(const Reduced& r, const std::vector<Rational>& lambda)
{
    std::vector<Rational> mu(r.n_free);
    for (int j = 0; j < r.n_free; ++j) {
        int pr = r.free_pivot[j];
        if (pr < 0)
            continue;
        Rational v = r.m[pr][r.width - 1];
        for (int i = 0; i < r.n_pos; ++i)
            if (sgn(lambda[i]) != 0 && sgn(r.m[pr][i]) != 0)
                v -= r.m[pr][i] * lambda[i];
        mu[j] = v;
    }
    return mu;
}

// y = P^T (D w), with w given per kept row and zero on free pivot rows.
std::vector<Rational> lift_dual(const Reduced& r, const std::vector<Rational>& w)
{
    std::vector<Rational> y(r.n_rows);
    for (std::size_t i = 0; i < r.kept.size(); ++i) {
        if (sgn(w[i]) == 0)
            continue;
        Rational wi = r.sign[i] < 0 ? Rational(-w[i]) : w[i];
        const Row& prow = r.p[r.kept[i]];
        for (int c = 0; c < r.n_rows; ++c)
            if (sgn(prow[c]) != 0)
                y[c] += wi * prow[c];
    }
    make_primitive(y);
    return y;
}

// Sparse exact solve of A x = b (A given by rows); free unknowns are 0.
std::optional<std::vector<Rational>> solve_exact(std::vector<std::vector<std::pair<int, Rational>>> rows,
                                                 std::vector<Rational> rhs, int n_cols)
{
    const int n = static_cast<int>(rows.size());
    std::vector<int> pivot_row_of(n_cols, -1);
    std::vector<bool> used(n, false);
    std::vector<int> order;
    auto coef = [](const std::vector<std::pair<int, Rational>>& row, int c) -> const Rational* {
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const auto& e, int k) { return e.first < k; });
        return it != row.end() && it->first == c ? &it->second : nullptr;
    };
    for (int c = 0; c < n_cols; ++c) {
        int best = -1;
        for (int i = 0; i < n; ++i)
            if (!used[i] && coef(rows[i], c) &&
                (best < 0 || rows[i].size() < rows[best].size()))
                best = i;
        if (best < 0)
            continue;
        used[best] = true;
        pivot_row_of[c] = best;
        order.push_back(c);
        Rational piv = *coef(rows[best], c);
        for (int i = 0; i < n; ++i) {
            if (used[i])
                continue;
            const Rational* a = coef(rows[i], c);
            if (!a)
                continue;
            Rational f = *a / piv;
            std::vector<std::pair<int, Rational>> merged;
            merged.reserve(rows[i].size() + rows[best].size());
            auto x = rows[i].begin(), y = rows[best].begin();
            while (x != rows[i].end() || y != rows[best].end()) {
                if (y == rows[best].end() || (x != rows[i].end() && x->first < y->first)) {
                    merged.push_back(*x++);
                } else if (x == rows[i].end() || y->first < x->first) {
                    merged.emplace_back(y->first, -f * y->second);
                    ++y;
                } else {
                    Rational v = x->second - f * y->second;
                    if (sgn(v) != 0)
                        merged.emplace_back(x->first, std::move(v));
                    ++x, ++y;
                }
            }
            rows[i] = std::move(merged);
            rhs[i] -= f * rhs[best];
        }
    }
    for (int i = 0; i < n; ++i)
        if (!used[i] && sgn(rhs[i]) != 0)
            return std::nullopt;
    std::vector<Rational> x(n_cols);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int c = *it;
        const auto& row = rows[pivot_row_of[c]];
        Rational v = rhs[pivot_row_of[c]];
        Rational piv;
        for (const auto& [k, a] : row) {
            if (k == c)
                piv = a;
            else if (sgn(x[k]) != 0)
                v -= a * x[k];
        }
        x[c] = v / piv;
    }
    return x;
}

struct FloatOutcome {
    bool ok = false;       // ran to optimality
    bool feasible = false; // objective ~ 0
    std::vector<int> basis;
    std::vector<double> values; // basic values per row
    std::vector<double> art_reduced;
    long pivots = 0;
};

FloatOutcome float_phase_one(const Reduced& r, const FarkasOptions& options, long budget)
{
    using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    const int k = static_cast<int>(r.kept.size());
    const int n_pos = r.n_pos;
    const int art0 = n_pos;
    const int rhs = n_pos + k;
    const int w = rhs + 1;
    const double eps = 1e-9;
    const double pivot_tol = 1e-7;
    const double zero_tol = 1e-11;
    const long refactor_every = 200;

    // [A' | I | b'] with b' >= 0; the tableau is B^-1 times this.
    Matrix a0 = Matrix::Zero(k, w);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < n_pos; ++j) {
            const Rational& v = r.m[r.kept[i]][j];
            if (sgn(v) != 0)
                a0(i, j) = r.sign[i] * v.get_d();
        }
        a0(i, art0 + i) = 1;
        a0(i, rhs) = r.sign[i] * r.m[r.kept[i]][r.width - 1].get_d();
    }
    // Degenerate vertices stall the float phase; pivot on a slightly
    // raised right-hand side and put the true one back at the end.
    const Eigen::VectorXd true_rhs = a0.col(rhs);
    if (options.perturbation > 0) {
        std::mt19937_64 rng(0x5eed);
        std::uniform_real_distribution<double> unit(1.0, 2.0);
        for (int i = 0; i < k; ++i)
            a0(i, rhs) += options.perturbation * unit(rng);
    }

    FloatOutcome out;
    out.basis.resize(k);
    for (int i = 0; i < k; ++i)
        out.basis[i] = art0 + i;

    Matrix t(k + 1, w);
    auto refactor = [&]() {
        Eigen::MatrixXd b(k, k);
        for (int i = 0; i < k; ++i)
            b.col(i) = a0.col(out.basis[i]).transpose();
        Eigen::PartialPivLU<Eigen::MatrixXd> lu(b);
        t.topRows(k) = lu.solve(Eigen::MatrixXd(a0));
        Eigen::RowVectorXd cb(k);
        for (int i = 0; i < k; ++i)
            cb(i) = out.basis[i] >= art0 ? 1.0 : 0.0;
        t.row(k) = -(cb * t.topRows(k));
        for (int j = art0; j < rhs; ++j)
            t(k, j) += 1.0;
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j < w; ++j)
                if (std::fabs(t(i, j)) < zero_tol)
                    t(i, j) = 0;
        for (int i = 0; i < k; ++i)
            t(i, out.basis[i]) = 1;
        return t.allFinite();
    };
    if (!refactor())
        return out;

    int degenerate_run = 0;
    bool bland = false;
    long since_refactor = 0;
    int final_checks = 0;
    std::vector<char> banned(n_pos, 0);
    std::vector<int> nz;
    while (true) {
        int enter = -1;
        if (t(k, rhs) <= -eps) {
            for (int j = 0; j < n_pos; ++j) {
                if (banned[j] || t(k, j) >= -eps)
                    continue;
                if (bland) {
                    enter = j;
                    break;
                }
                if (enter < 0 || t(k, j) < t(k, enter))
                    enter = j;
            }
        }
        if (enter < 0) {
            // Confirm optimality on a fresh factorization before stopping.
            if (since_refactor == 0 || ++final_checks > 3)
                break;
            if (!refactor())
                return out;
            since_refactor = 0;
            std::fill(banned.begin(), banned.end(), 0);
            continue;
        }
        if (out.pivots >= budget)
            return out;

        int leave = -1;
        double best = 0;
        for (int i = 0; i < k; ++i) {
            double a = t(i, enter);
            if (a <= pivot_tol)
                continue;
            double ratio = std::max(t(i, rhs), 0.0) / a;
            bool better = leave < 0 || ratio < best - eps;
            if (!better && ratio <= best + eps)
                better = bland ? out.basis[i] < out.basis[leave] : a > t(leave, enter);
            if (better) {
                leave = i;
                best = ratio;
            }
        }
        if (leave < 0) {
            banned[enter] = 1; // no usable pivot in this column
            continue;
        }
        if (best <= eps) {
            if (++degenerate_run >= options.degenerate_switch)
                bland = true;
        } else {
            degenerate_run = 0;
            bland = false;
        }

        double inv = 1 / t(leave, enter);
        nz.clear();
        for (int j = 0; j < w; ++j) {
            double& v = t(leave, j);
            if (v == 0)
                continue;
            v *= inv;
            if (std::fabs(v) < zero_tol)
                v = 0;
            else
                nz.push_back(j);
        }
        t(leave, enter) = 1;
        for (int i = 0; i <= k; ++i) {
            if (i == leave)
                continue;
            double f = t(i, enter);
            if (f == 0)
                continue;
            double* row = &t(i, 0);
            const double* prow = &t(leave, 0);
            for (int j : nz) {
                row[j] -= f * prow[j];
                if (std::fabs(row[j]) < zero_tol)
                    row[j] = 0;
            }
            row[enter] = 0;
        }
        out.basis[leave] = enter;
        ++out.pivots;
        std::fill(banned.begin(), banned.end(), 0);
        final_checks = 0;
        if (++since_refactor >= refactor_every) {
            if (!refactor())
                return out;
            since_refactor = 0;
        }
    }
    if (options.perturbation > 0) {
        a0.col(rhs) = true_rhs;
        if (!refactor())
            return out;
    }
    out.ok = true;
    out.feasible = t(k, rhs) > -1e-7;
    out.values.resize(k);
    for (int i = 0; i < k; ++i)
        out.values[i] = t(i, rhs);
    out.art_reduced.resize(k);
    for (int i = 0; i < k; ++i)
        out.art_reduced[i] = t(k, art0 + i);
    return out;
}

// Exact answer from the float basis, or nothing.
bool recover(const FarkasProblem& problem, const Reduced& r, const FloatOutcome& f,
             FarkasResult& result)
{
    const int k = static_cast<int>(r.kept.size());
    if (f.feasible) {
        // Rounded basic values first, then an exact solve on the basic columns.
        std::vector<Rational> lambda(r.n_pos);
        bool rounded = true;
        for (int i = 0; i < k && rounded; ++i) {
            if (f.basis[i] >= r.n_pos)
                continue;
            auto q = reconstruct(f.values[i]);
            if (!q)
                rounded = false;
            else
                lambda[f.basis[i]] = *q;
        }
        if (rounded) {
            auto mu = free_values(r, lambda);
            if (check_primal(problem, lambda, mu)) {
                result.lambda = std::move(lambda);
                result.mu = std::move(mu);
                result.status = FarkasResult::Status::feasible;
                return true;
            }
        }
        std::vector<int> cols;
        for (int i = 0; i < k; ++i)
            if (f.basis[i] < r.n_pos)
                cols.push_back(f.basis[i]);
        std::vector<std::vector<std::pair<int, Rational>>> rows(k);
        std::vector<Rational> rhs(k);
        for (int i = 0; i < k; ++i) {
            for (int c = 0; c < static_cast<int>(cols.size()); ++c) {
                Rational v = entry(r, i, cols[c]);
                if (sgn(v) != 0)
                    rows[i].emplace_back(c, std::move(v));
            }
            rhs[i] = entry(r, i, r.n_pos);
        }
        auto x = solve_exact(std::move(rows), std::move(rhs), static_cast<int>(cols.size()));
        if (!x)
            return false;
        std::fill(lambda.begin(), lambda.end(), Rational(0));
        for (std::size_t c = 0; c < cols.size(); ++c)
            lambda[cols[c]] = (*x)[c];
        auto mu = free_values(r, lambda);
        if (!check_primal(problem, lambda, mu))
            return false;
        result.lambda = std::move(lambda);
        result.mu = std::move(mu);
        result.status = FarkasResult::Status::feasible;
        return true;
    }

    // Infeasible: w = -y' where y' are the simplex multipliers.
    std::vector<Rational> w(k);
    bool rounded = true;
    for (int i = 0; i < k && rounded; ++i) {
        auto q = reconstruct(f.art_reduced[i] - 1);
        if (!q)
            rounded = false;
        else
            w[i] = *q;
    }
    if (rounded) {
        auto y = lift_dual(r, w);
        if (check_dual(problem, y)) {
            result.dual = std::move(y);
            result.status = FarkasResult::Status::infeasible;
            return true;
        }
    }
    // Solve B^T y' = c_B exactly: y'_i = 1 where artificial i is basic.
    std::vector<int> unknown_of(k, -1);
    std::vector<bool> fixed(k, false);
    for (int i = 0; i < k; ++i)
        if (f.basis[i] >= r.n_pos)
            fixed[f.basis[i] - r.n_pos] = true;
    int n_unknown = 0;
    for (int i = 0; i < k; ++i)
        if (!fixed[i])
            unknown_of[i] = n_unknown++;
    std::vector<std::vector<std::pair<int, Rational>>> rows;
    std::vector<Rational> rhs;
    for (int b = 0; b < k; ++b) {
        int j = f.basis[b];
        if (j >= r.n_pos)
            continue;
        std::vector<std::pair<int, Rational>> row;
        Rational known = 0;
        for (int i = 0; i < k; ++i) {
            Rational a = entry(r, i, j);
            if (sgn(a) == 0)
                continue;
            if (fixed[i])
                known += a;
            else
                row.emplace_back(unknown_of[i], std::move(a));
        }
        std::sort(row.begin(), row.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        rows.push_back(std::move(row));
        rhs.push_back(-known);
    }
    auto ysol = solve_exact(std::move(rows), std::move(rhs), n_unknown);
    if (!ysol)
        return false;
    for (int i = 0; i < k; ++i)
        w[i] = fixed[i] ? Rational(-1) : Rational(-(*ysol)[unknown_of[i]]);
    auto y = lift_dual(r, w);
    if (!check_dual(problem, y))
        return false;
    result.dual = std::move(y);
    result.status = FarkasResult::Status::infeasible;
    return true;
}

void exact_phase_one(const FarkasProblem& problem, const Reduced& r, const FarkasOptions& options,
                     FarkasResult& result)
{
    const int k = static_cast<int>(r.kept.size());
    const int n_pos = r.n_pos;
    const int art0 = n_pos;
    const int rhs = n_pos + k;
    std::vector<Row> t(k + 1, Row(rhs + 1));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < n_pos; ++j)
            if (sgn(r.m[r.kept[i]][j]) != 0)
                t[i][j] = entry(r, i, j);
        t[i][art0 + i] = 1;
        t[i][rhs] = entry(r, i, n_pos);
    }
    Row& obj = t[k];
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n_pos; ++j)
            if (sgn(t[i][j]) != 0)
                obj[j] -= t[i][j];
    for (int i = 0; i < k; ++i)
        obj[rhs] -= t[i][rhs]; // -(sum of artificials)

    std::vector<int> basis(k);
    for (int i = 0; i < k; ++i)
        basis[i] = art0 + i;

    int degenerate_run = 0;
    bool bland = false;
    std::vector<int> col_nz;
    while (sgn(obj[rhs]) != 0) {
        int enter = -1;
        for (int j = 0; j < n_pos; ++j) {
            if (sgn(obj[j]) >= 0)
                continue;
            if (bland) {
                enter = j;
                break;
            }
            if (enter < 0 || obj[j] < obj[enter])
                enter = j;
        }
        if (enter < 0)
            break;
        if (result.pivots >= options.pivot_limit) {
            result.status = FarkasResult::Status::pivot_limit;
            return;
        }

        int leave = -1;
        Rational best;
        col_nz.clear();
        for (int i = 0; i < k; ++i) {
            if (sgn(t[i][enter]) == 0)
                continue;
            col_nz.push_back(i);
            if (sgn(t[i][enter]) < 0)
                continue;
            Rational ratio = t[i][rhs] / t[i][enter];
            if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave < 0)
            throw std::logic_error("phase-one objective is unbounded");

        if (sgn(best) == 0) {
            if (++degenerate_run >= options.degenerate_switch)
                bland = true;
        } else {
            degenerate_run = 0;
            bland = false;
        }

        Row& pr = t[leave];
        Rational inv = 1 / pr[enter];
        auto nz = nonzeros(pr);
        for (int c : nz)
            pr[c] *= inv;
        for (int i : col_nz) {
            if (i == leave)
                continue;
            Rational f = t[i][enter];
            eliminate(t[i], pr, f, nz);
        }
        if (sgn(obj[enter]) != 0) {
            Rational f = obj[enter];
            eliminate(obj, pr, f, nz);
        }
        basis[leave] = enter;
        ++result.pivots;
    }

    if (sgn(obj[rhs]) == 0) {
        result.lambda.assign(n_pos, Rational(0));
        for (int i = 0; i < k; ++i)
            if (basis[i] < n_pos)
                result.lambda[basis[i]] = t[i][rhs];
        result.mu = free_values(r, result.lambda);
        if (!check_primal(problem, result.lambda, result.mu))
            throw std::logic_error("exact simplex returned an inconsistent solution");
        result.status = FarkasResult::Status::feasible;
        return;
    }

    // Simplex multipliers y'_i = 1 - d(artificial i); the certificate is -y'.
    std::vector<Rational> w(k);
    for (int i = 0; i < k; ++i)
        w[i] = obj[art0 + i] - 1;
    result.dual = lift_dual(r, w);
    if (!check_dual(problem, result.dual))
        throw std::logic_error("exact simplex returned an invalid dual certificate");
    result.status = FarkasResult::Status::infeasible;
}

} // namespace

FarkasResult solve_farkas(const FarkasProblem& problem, const FarkasOptions& options)
{
    if (static_cast<int>(problem.target.size()) != problem.rows)
        throw std::invalid_argument("target length does not match the row count");
    Reduced r = reduce(problem);
    FarkasResult result;

    if (options.float_start) {
        FloatOutcome f = float_phase_one(r, options, options.pivot_limit);
        result.pivots = f.pivots;
        if (f.ok && recover(problem, r, f, result)) {
            result.used_float_start = true;
            return result;
        }
        result.status = FarkasResult::Status::pivot_limit;
        result.lambda.clear();
        result.mu.clear();
        result.dual.clear();
    }
    exact_phase_one(problem, r, options, result);
    return result;
}

} // namespace linrank
