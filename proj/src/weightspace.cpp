#include "flexsky/weightspace.hpp"

#include <algorithm>
#include <cmath>

#include "flexsky/rng.hpp"
#include "flexsky/types.hpp"

namespace flexsky {

namespace {

constexpr double kFeasTol = 1e-9;
constexpr double kDedupTol = 1e-9;

bool satisfies_all(const ConstraintSet& cs, const WeightVector& w) {
    double sum = 0.0;
    for (double v : w) {
        if (v < -kFeasTol || v > 1.0 + kFeasTol) return false;
        sum += v;
    }
    if (std::abs(sum - 1.0) > kFeasTol) return false;
    for (const LinearConstraint& c : cs.constraints) {
        double lhs = 0.0;
        for (std::size_t i = 0; i < w.size(); ++i) lhs += c.coefficients[i] * w[i];
        if (lhs > c.bound + kFeasTol) return false;
    }
    return true;
}

// Solves the square system rows * w = rhs by Gaussian elimination with
// partial pivoting. Returns false when the system is (near-)singular.
bool solve_square(std::vector<std::vector<double>> rows, std::vector<double> rhs,
                  WeightVector& out) {
    const std::size_t d = rhs.size();
    for (std::size_t col = 0; col < d; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < d; ++r)
            if (std::abs(rows[r][col]) > std::abs(rows[pivot][col])) pivot = r;
        if (std::abs(rows[pivot][col]) < 1e-12) return false;
        std::swap(rows[pivot], rows[col]);
        std::swap(rhs[pivot], rhs[col]);
        for (std::size_t r = col + 1; r < d; ++r) {
            const double f = rows[r][col] / rows[col][col];
            if (f == 0.0) continue;
            for (std::size_t c = col; c < d; ++c) rows[r][c] -= f * rows[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    out.assign(d, 0.0);
    for (std::size_t r = d; r-- > 0;) {
        double v = rhs[r];
        for (std::size_t c = r + 1; c < d; ++c) v -= rows[r][c] * out[c];
        out[r] = v / rows[r][r];
    }
    return true;
}

}  // namespace

void append_weight_region_rows(const ConstraintSet& cs, LpProblem& problem) {
    const std::size_t d = cs.dimensions;
    LpRow simplex;
    simplex.coefficients.assign(problem.variable_count(), 0.0);
    for (std::size_t i = 0; i < d; ++i) simplex.coefficients[i] = 1.0;
    simplex.relation = LpRelation::EQUAL;
    simplex.rhs = 1.0;
    problem.rows.push_back(simplex);
    for (std::size_t i = 0; i < d; ++i) {
        LpRow ub;
        ub.coefficients.assign(problem.variable_count(), 0.0);
        ub.coefficients[i] = 1.0;
        ub.relation = LpRelation::LESS_EQUAL;
        ub.rhs = 1.0;
        problem.rows.push_back(ub);
    }
    for (const LinearConstraint& c : cs.constraints) {
        LpRow row;
        row.coefficients.assign(problem.variable_count(), 0.0);
        for (std::size_t i = 0; i < d; ++i) row.coefficients[i] = c.coefficients[i];
        row.relation = LpRelation::LESS_EQUAL;
        row.rhs = c.bound;
        problem.rows.push_back(row);
    }
}

ConstraintSet make_constraint_set(std::size_t dimensions,
                                  std::vector<LinearConstraint> constraints) {
    if (dimensions == 0) throw ConfigError("constraint set needs at least one dimension");
    for (const LinearConstraint& c : constraints) {
        if (c.coefficients.size() != dimensions)
            throw ConfigError("constraint arity does not match the attribute count");
    }
    ConstraintSet cs{dimensions, std::move(constraints)};

    LpProblem feas;
    feas.direction = LpDirection::MINIMIZE;
    feas.objective.assign(dimensions, 0.0);
    append_weight_region_rows(cs, feas);
    if (solve_lp(feas).status != LpStatus::OPTIMAL)
        throw ConfigError("constraint set has an empty feasible weight region");
    return cs;
}

WeightPolytope enumerate_vertices(const ConstraintSet& cs) {
    const std::size_t d = cs.dimensions;

    // Candidate active inequalities: w_i = 0, w_i = 1, and each user
    // constraint tight. A vertex of the (d-1)-dimensional region activates
    // at least d-1 of them alongside the hyperplane sum w = 1.
    struct Candidate {
        std::vector<double> row;
        double rhs;
    };
    std::vector<Candidate> pool;
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<double> lo(d, 0.0), hi(d, 0.0);
        lo[i] = 1.0;
        hi[i] = 1.0;
        pool.push_back({lo, 0.0});
        pool.push_back({hi, 1.0});
    }
    for (const LinearConstraint& c : cs.constraints) pool.push_back({c.coefficients, c.bound});

    std::vector<double> ones(d, 1.0);
    std::vector<WeightVector> found;

    const std::size_t choose = d - 1;
    std::vector<std::size_t> idx(choose);
    for (std::size_t i = 0; i < choose; ++i) idx[i] = i;

    auto try_basis = [&](const std::vector<std::size_t>& active) {
        std::vector<std::vector<double>> rows;
        std::vector<double> rhs;
        rows.reserve(d);
        rhs.reserve(d);
        for (std::size_t k : active) {
            rows.push_back(pool[k].row);
            rhs.push_back(pool[k].rhs);
        }
        rows.push_back(ones);
        rhs.push_back(1.0);
        WeightVector w;
        if (!solve_square(std::move(rows), std::move(rhs), w)) return;
        if (!satisfies_all(cs, w)) return;
        for (const WeightVector& v : found) {
            double dist = 0.0;
            for (std::size_t i = 0; i < d; ++i) dist = std::max(dist, std::abs(v[i] - w[i]));
            if (dist <= kDedupTol) return;
        }
        found.push_back(std::move(w));
    };

    if (choose == 0) {
        try_basis({});
    } else if (choose <= pool.size()) {
        for (;;) {
            try_basis(idx);
            // next combination
            std::size_t i = choose;
            while (i > 0 && idx[i - 1] == pool.size() - choose + (i - 1)) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < choose; ++j) idx[j] = idx[j - 1] + 1;
        }
    }

    if (found.empty())
        throw InternalError("enumerate_vertices: feasible region has no vertices");
    std::sort(found.begin(), found.end());
    return WeightPolytope{cs, std::move(found)};
}

WeightVector barycenter(const WeightPolytope& poly) {
    if (poly.vertices.empty()) throw InternalError("barycenter of an empty polytope");
    const std::size_t d = poly.constraint_set.dimensions;
    WeightVector mean(d, 0.0);
    for (const WeightVector& v : poly.vertices)
        for (std::size_t i = 0; i < d; ++i) mean[i] += v[i];
    for (double& m : mean) m /= static_cast<double>(poly.vertices.size());
    return mean;
}

std::vector<LinearConstraint> random_feasible_constraints(std::size_t dimensions,
                                                          std::size_t count,
                                                          std::uint64_t seed) {
    Rng rng(seed);
    std::vector<LinearConstraint> out;
    out.reserve(count);
    for (std::size_t j = 0; j < count; ++j) {
        LinearConstraint c;
        c.coefficients.resize(dimensions);
        double at_center = 0.0;
        for (std::size_t i = 0; i < dimensions; ++i) {
            c.coefficients[i] = rng.uniform(-1.0, 1.0);
            at_center += c.coefficients[i] / static_cast<double>(dimensions);
        }
        c.bound = at_center + rng.uniform(0.05, 0.3);
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace flexsky
