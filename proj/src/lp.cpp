#include "flexsky/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "flexsky/types.hpp"

namespace flexsky {

namespace {

constexpr double kPivotTol = 1e-11;
constexpr double kFeasTol = 1e-9;

// Dense tableau for the standard form  min c.x  s.t.  A.x = b, x >= 0, b >= 0.
// Columns: structural vars, slack/surplus vars, artificial vars, rhs.
struct Tableau {
    std::size_t rows = 0;
    std::size_t cols = 0;  // total variable columns (rhs excluded)
    std::vector<double> a;  // (rows) x (cols + 1), row-major; last column is rhs
    std::vector<int> basis; // basic variable per row

    double& at(std::size_t r, std::size_t c) { return a[r * (cols + 1) + c]; }
    double at(std::size_t r, std::size_t c) const { return a[r * (cols + 1) + c]; }
    double& rhs(std::size_t r) { return a[r * (cols + 1) + cols]; }
    double rhs(std::size_t r) const { return a[r * (cols + 1) + cols]; }

    void pivot(std::size_t pr, std::size_t pc) {
        const double p = at(pr, pc);
        const double inv = 1.0 / p;
        for (std::size_t c = 0; c <= cols; ++c) at(pr, c) *= inv;
        at(pr, pc) = 1.0;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pr) continue;
            const double f = at(r, pc);
            if (f == 0.0) continue;
            for (std::size_t c = 0; c <= cols; ++c) at(r, c) -= f * at(pr, c);
            at(r, pc) = 0.0;
        }
        basis[pr] = static_cast<int>(pc);
    }
};

// Simplex iterations on the given objective (reduced costs computed from
// scratch each step; problems here are tiny, clarity wins). Bland's rule:
// entering = lowest-index column with negative reduced cost, leaving =
// lowest-index basic variable among minimum-ratio ties.
//
// `allowed` restricts candidate entering columns (used to lock artificials
// out of phase 2). Returns false when the objective is unbounded below.
bool run_simplex(Tableau& t, const std::vector<double>& cost,
                 const std::vector<bool>& allowed) {
    const std::size_t m = t.rows;
    const std::size_t n = t.cols;
    std::vector<double> y(m);
    const std::size_t max_iterations = 1000 + 50 * m * n;
    for (std::size_t iter = 0; iter <= max_iterations; ++iter) {
        // Multipliers of basic columns, then reduced costs d_j = c_j - y.A_j.
        for (std::size_t r = 0; r < m; ++r) y[r] = cost[t.basis[r]];
        int entering = -1;
        for (std::size_t c = 0; c < n; ++c) {
            if (!allowed[c]) continue;
            double d = cost[c];
            for (std::size_t r = 0; r < m; ++r) {
                const double arc = t.at(r, c);
                if (arc != 0.0) d -= y[r] * arc;
            }
            if (d < -kPivotTol) {
                entering = static_cast<int>(c);
                break;
            }
        }
        if (entering < 0) return true;  // optimal

        int leaving = -1;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (std::size_t r = 0; r < m; ++r) {
            const double arc = t.at(r, static_cast<std::size_t>(entering));
            if (arc > kPivotTol) {
                const double ratio = t.rhs(r) / arc;
                if (ratio < best_ratio - kPivotTol ||
                    (ratio < best_ratio + kPivotTol && leaving >= 0 &&
                     t.basis[r] < t.basis[static_cast<std::size_t>(leaving)])) {
                    best_ratio = ratio;
                    leaving = static_cast<int>(r);
                }
            }
        }
        if (leaving < 0) return false;  // unbounded
        t.pivot(static_cast<std::size_t>(leaving), static_cast<std::size_t>(entering));
    }
    throw InternalError("solve_lp: iteration cap exceeded");
}

}  // namespace

LpOutcome solve_lp(const LpProblem& problem, Counters* counters) {
    count_lp(counters);

    const std::size_t n_user = problem.variable_count();
    for (const LpRow& row : problem.rows) {
        if (row.coefficients.size() != n_user)
            throw InternalError("solve_lp: constraint row arity mismatch");
    }
    if (!problem.free_variables.empty() && problem.free_variables.size() != n_user)
        throw InternalError("solve_lp: free_variables size mismatch");

    // Column layout: one column per non-negative variable, two (x+ - x-)
    // per free variable.
    std::vector<std::size_t> pos_col(n_user), neg_col(n_user, SIZE_MAX);
    std::size_t n_struct = 0;
    for (std::size_t j = 0; j < n_user; ++j) {
        pos_col[j] = n_struct++;
        if (!problem.free_variables.empty() && problem.free_variables[j])
            neg_col[j] = n_struct++;
    }

    const std::size_t m = problem.rows.size();
    std::size_t n_slack = 0;
    for (const LpRow& row : problem.rows)
        if (row.relation != LpRelation::EQUAL) ++n_slack;

    const std::size_t slack_base = n_struct;
    const std::size_t art_base = n_struct + n_slack;
    const std::size_t n_total = art_base + m;  // one artificial per row (unused ones stay zero)

    Tableau t;
    t.rows = m;
    t.cols = n_total;
    t.a.assign(m * (n_total + 1), 0.0);
    t.basis.assign(m, -1);

    const double sign = problem.direction == LpDirection::MINIMIZE ? 1.0 : -1.0;

    std::size_t slack_idx = 0;
    std::vector<bool> is_artificial(n_total, false);
    for (std::size_t r = 0; r < m; ++r) {
        const LpRow& row = problem.rows[r];
        double flip = 1.0;
        LpRelation rel = row.relation;
        if (row.rhs < 0.0) {  // phase 1 needs rhs >= 0
            flip = -1.0;
            if (rel == LpRelation::LESS_EQUAL)
                rel = LpRelation::GREATER_EQUAL;
            else if (rel == LpRelation::GREATER_EQUAL)
                rel = LpRelation::LESS_EQUAL;
        }
        for (std::size_t j = 0; j < n_user; ++j) {
            const double c = flip * row.coefficients[j];
            t.at(r, pos_col[j]) = c;
            if (neg_col[j] != SIZE_MAX) t.at(r, neg_col[j]) = -c;
        }
        t.rhs(r) = flip * row.rhs;

        if (rel == LpRelation::LESS_EQUAL) {
            t.at(r, slack_base + slack_idx) = 1.0;
            t.basis[r] = static_cast<int>(slack_base + slack_idx);
            ++slack_idx;
        } else if (rel == LpRelation::GREATER_EQUAL) {
            t.at(r, slack_base + slack_idx) = -1.0;
            ++slack_idx;
        }
        if (t.basis[r] < 0) {  // EQUAL or GREATER_EQUAL rows start on an artificial
            t.at(r, art_base + r) = 1.0;
            t.basis[r] = static_cast<int>(art_base + r);
            is_artificial[art_base + r] = true;
        }
    }

    // Phase 1: drive the artificials to zero.
    bool need_phase1 = false;
    for (std::size_t r = 0; r < m; ++r)
        if (is_artificial[static_cast<std::size_t>(t.basis[r])]) need_phase1 = true;

    std::vector<bool> allowed(n_total, true);
    if (need_phase1) {
        std::vector<double> cost1(n_total, 0.0);
        for (std::size_t c = 0; c < n_total; ++c)
            if (is_artificial[c]) cost1[c] = 1.0;
        if (!run_simplex(t, cost1, allowed))
            throw InternalError("solve_lp: phase 1 unbounded");
        double infeas = 0.0;
        for (std::size_t r = 0; r < m; ++r)
            if (is_artificial[static_cast<std::size_t>(t.basis[r])]) infeas += t.rhs(r);
        if (infeas > kFeasTol) return {LpStatus::INFEASIBLE, 0.0, {}};

        // Pivot lingering degenerate artificials out of the basis when possible.
        for (std::size_t r = 0; r < m; ++r) {
            if (!is_artificial[static_cast<std::size_t>(t.basis[r])]) continue;
            for (std::size_t c = 0; c < art_base; ++c) {
                if (std::abs(t.at(r, c)) > kPivotTol) {
                    t.pivot(r, c);
                    break;
                }
            }
        }
    }
    for (std::size_t c = 0; c < n_total; ++c)
        if (is_artificial[c]) allowed[c] = false;

    // Phase 2 on the real objective.
    std::vector<double> cost2(n_total, 0.0);
    for (std::size_t j = 0; j < n_user; ++j) {
        cost2[pos_col[j]] = sign * problem.objective[j];
        if (neg_col[j] != SIZE_MAX) cost2[neg_col[j]] = -sign * problem.objective[j];
    }
    if (!run_simplex(t, cost2, allowed)) return {LpStatus::UNBOUNDED, 0.0, {}};

    std::vector<double> x(n_total, 0.0);
    for (std::size_t r = 0; r < m; ++r) {
        // A basic artificial at zero level can survive degenerate problems.
        x[static_cast<std::size_t>(t.basis[r])] = t.rhs(r);
    }
    LpOutcome out;
    out.status = LpStatus::OPTIMAL;
    out.point.resize(n_user);
    double value = 0.0;
    for (std::size_t j = 0; j < n_user; ++j) {
        double v = x[pos_col[j]];
        if (neg_col[j] != SIZE_MAX) v -= x[neg_col[j]];
        out.point[j] = v;
        value += problem.objective[j] * v;
    }
    out.value = value;
    return out;
}

}  // namespace flexsky
