#ifndef FLEXSKY_DOMINANCE_HPP
#define FLEXSKY_DOMINANCE_HPP

#include <vector>

#include "flexsky/counters.hpp"
#include "flexsky/types.hpp"

namespace flexsky {

/// Additive-slack dominance settings. With unit weights, epsilon 0 and
/// strict_exists on, the relation collapses to plain Pareto dominance.
struct EpsilonSpec {
    std::vector<double> weights;   // 0 < w_i <= 1
    double epsilon = 0.0;          // in [-1, 1]
    bool strict_exists = false;    // strict (<) existential clause

    void validate(std::size_t d) const;
};

/// Coordinatewise <= with at least one strict <, lower-is-better.
bool pareto_dominates(const Tuple& t, const Tuple& s, Counters* counters = nullptr);

/// Block-nested-loops skyline; result indices are in input order.
std::vector<std::size_t> skyline_indices(const Relation& rel, Counters* counters = nullptr);
std::vector<Tuple> skyline(const Relation& rel, Counters* counters = nullptr);

/// True when t1[i]*w_i <= t2[i]*w_i + epsilon for every attribute and the
/// existential clause holds. Self-comparison is rejected.
bool eps_dominates(const Tuple& t1, const Tuple& t2, const EpsilonSpec& spec);

std::vector<std::size_t> eps_skyline_indices(const Relation& rel, const EpsilonSpec& spec);
std::vector<Tuple> eps_skyline(const Relation& rel, const EpsilonSpec& spec);

}  // namespace flexsky

#endif  // FLEXSKY_DOMINANCE_HPP
