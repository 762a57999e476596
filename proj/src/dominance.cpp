#include "flexsky/dominance.hpp"

#include <algorithm>
#include <cmath>

namespace flexsky {

void EpsilonSpec::validate(std::size_t d) const {
    if (weights.size() != d)
        throw ConfigError("epsilon spec has " + std::to_string(weights.size()) +
                          " weights, expected " + std::to_string(d));
    for (double w : weights)
        if (!(w > 0.0) || w > 1.0)
            throw ConfigError("epsilon weights must lie in (0, 1]");
    if (std::abs(epsilon) > 1.0) throw ConfigError("epsilon must lie in [-1, 1]");
}

bool pareto_dominates(const Tuple& t, const Tuple& s, Counters* counters) {
    if (t.values.size() != s.values.size())
        throw DataError("dominance test on tuples of different arity");
    count_pareto(counters);
    bool strict = false;
    for (std::size_t i = 0; i < t.values.size(); ++i) {
        if (t.values[i] > s.values[i]) return false;
        if (t.values[i] < s.values[i]) strict = true;
    }
    return strict;
}

std::vector<std::size_t> skyline_indices(const Relation& rel, Counters* counters) {
    // Window of non-dominated tuples seen so far; after the scan the window
    // is exactly the skyline of the whole relation.
    std::vector<std::size_t> window;
    for (std::size_t cand = 0; cand < rel.size(); ++cand) {
        const Tuple& t = rel.tuples[cand];
        bool dominated = false;
        std::size_t keep = 0;
        for (std::size_t k = 0; k < window.size(); ++k) {
            const Tuple& w = rel.tuples[window[k]];
            if (pareto_dominates(w, t, counters)) {
                dominated = true;
                // anything still in the window is not dominated by t
                while (k < window.size()) window[keep++] = window[k++];
                break;
            }
            if (!pareto_dominates(t, w, counters)) window[keep++] = window[k];
        }
        window.resize(keep);
        if (!dominated) window.push_back(cand);
    }
    std::sort(window.begin(), window.end());
    return window;
}

std::vector<Tuple> skyline(const Relation& rel, Counters* counters) {
    std::vector<Tuple> out;
    for (std::size_t i : skyline_indices(rel, counters)) out.push_back(rel.tuples[i]);
    return out;
}

bool eps_dominates(const Tuple& t1, const Tuple& t2, const EpsilonSpec& spec) {
    if (t1.id == t2.id) throw DataError("eps_dominates: self-comparison of '" + t1.id + "'");
    if (t1.values.size() != t2.values.size())
        throw DataError("eps_dominates on tuples of different arity");
    spec.validate(t1.values.size());

    bool exists = false;
    for (std::size_t i = 0; i < t1.values.size(); ++i) {
        if (t1.values[i] * spec.weights[i] > t2.values[i] * spec.weights[i] + spec.epsilon)
            return false;
        if (spec.strict_exists ? t1.values[i] < t2.values[i] : t1.values[i] <= t2.values[i])
            exists = true;
    }
    return exists;
}

std::vector<std::size_t> eps_skyline_indices(const Relation& rel, const EpsilonSpec& spec) {
    spec.validate(rel.arity());
    // The relation is not transitive, so no window pruning: plain pairwise scan.
    std::vector<std::size_t> result;
    for (std::size_t i = 0; i < rel.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < rel.size() && !dominated; ++j) {
            if (i == j) continue;
            if (eps_dominates(rel.tuples[j], rel.tuples[i], spec)) dominated = true;
        }
        if (!dominated) result.push_back(i);
    }
    return result;
}

std::vector<Tuple> eps_skyline(const Relation& rel, const EpsilonSpec& spec) {
    std::vector<Tuple> out;
    for (std::size_t i : eps_skyline_indices(rel, spec)) out.push_back(rel.tuples[i]);
    return out;
}

}  // namespace flexsky
