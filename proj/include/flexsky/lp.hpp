#ifndef FLEXSKY_LP_HPP
#define FLEXSKY_LP_HPP

#include <cstddef>
#include <vector>

#include "flexsky/counters.hpp"

namespace flexsky {

enum class LpDirection { MINIMIZE, MAXIMIZE };
enum class LpRelation { LESS_EQUAL, EQUAL, GREATER_EQUAL };
enum class LpStatus { OPTIMAL, INFEASIBLE, UNBOUNDED };

struct LpRow {
    std::vector<double> coefficients;
    LpRelation relation = LpRelation::LESS_EQUAL;
    double rhs = 0.0;
};

/// A small dense linear program. Variables are non-negative by default;
/// a variable may be declared free, in which case it is split internally.
/// Finite upper bounds are expressed as ordinary LESS_EQUAL rows by the
/// caller.
struct LpProblem {
    LpDirection direction = LpDirection::MINIMIZE;
    std::vector<double> objective;
    std::vector<LpRow> rows;
    std::vector<bool> free_variables;  // empty means all non-negative

    std::size_t variable_count() const { return objective.size(); }
};

struct LpOutcome {
    LpStatus status = LpStatus::INFEASIBLE;
    double value = 0.0;
    std::vector<double> point;
};

/// Solves the program with a dense two-phase simplex using Bland's rule,
/// so identical inputs always take identical pivot sequences.
LpOutcome solve_lp(const LpProblem& problem, Counters* counters = nullptr);

}  // namespace flexsky

#endif  // FLEXSKY_LP_HPP
