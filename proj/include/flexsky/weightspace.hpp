#ifndef FLEXSKY_WEIGHTSPACE_HPP
#define FLEXSKY_WEIGHTSPACE_HPP

#include <cstddef>
#include <vector>

#include "flexsky/counters.hpp"
#include "flexsky/lp.hpp"

namespace flexsky {

/// One linear inequality  sum_i coefficients[i] * w_i <= bound.
/// Greater-or-equal constraints are expressed by negating both sides.
struct LinearConstraint {
    std::vector<double> coefficients;
    double bound = 0.0;
};

using WeightVector = std::vector<double>;

/// Linear constraints on the scoring weights, on top of the implicit
/// simplex conditions  w_i in [0,1],  sum_i w_i = 1.  Construction via
/// make_constraint_set verifies the feasible region is nonempty.
struct ConstraintSet {
    std::size_t dimensions = 0;
    std::vector<LinearConstraint> constraints;
};

/// The feasible weight region represented by its enumerated vertices,
/// in lexicographic order.
struct WeightPolytope {
    ConstraintSet constraint_set;
    std::vector<WeightVector> vertices;

    std::size_t vertex_count() const { return vertices.size(); }
};

/// Validates arity and solves one feasibility LP; throws ConfigError when
/// the region is empty.
ConstraintSet make_constraint_set(std::size_t dimensions,
                                  std::vector<LinearConstraint> constraints);

/// Enumerates the vertices of the weight polytope by brute-force basis
/// enumeration: every choice of d-1 active inequalities among the box
/// bounds and user constraints is intersected with the hyperplane
/// sum w = 1. Suitable for the small d and c this engine targets.
WeightPolytope enumerate_vertices(const ConstraintSet& cs);

/// Arithmetic mean of the vertices; inside the region by convexity.
WeightVector barycenter(const WeightPolytope& poly);

/// Appends the simplex conditions and user constraints of `cs` as rows of
/// an LP over d weight variables. Shared by every weight-space LP here.
void append_weight_region_rows(const ConstraintSet& cs, LpProblem& problem);

/// Benchmark-harness helper: `count` random constraints that provably keep
/// the region nonempty (each halfspace is anchored past the simplex
/// barycenter). Deterministic in `seed`.
std::vector<LinearConstraint> random_feasible_constraints(std::size_t dimensions,
                                                          std::size_t count,
                                                          std::uint64_t seed);

}  // namespace flexsky

#endif  // FLEXSKY_WEIGHTSPACE_HPP
