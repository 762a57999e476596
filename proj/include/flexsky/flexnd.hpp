#ifndef FLEXSKY_FLEXND_HPP
#define FLEXSKY_FLEXND_HPP

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "flexsky/counters.hpp"
#include "flexsky/ranking.hpp"
#include "flexsky/types.hpp"
#include "flexsky/weightspace.hpp"

namespace flexsky {

/// A family of weighted-sum scoring functions: per-attribute monotone
/// transforms plus linear constraints restricting the weight vector.
/// Cheap to copy; the vertex enumeration of the feasible weight region is
/// computed at most once and shared.
class FlexFamily {
public:
    FlexFamily(std::vector<Transform> transforms, ConstraintSet constraint_set);

    std::size_t dimensions() const;
    const std::vector<Transform>& transforms() const;
    const ConstraintSet& constraint_set() const;

    /// Vertices of the feasible weight region (enumerated lazily, thread-safe).
    const WeightPolytope& polytope() const;
    /// Mean of the vertices; the sort key weight of the sorted algorithms.
    const WeightVector& barycenter_weight() const;

    /// Per-attribute transformed values g_i(t[i]).
    std::vector<double> transformed(const Tuple& t) const;

private:
    struct State;
    std::shared_ptr<State> state_;
};

/// The family of algorithms computing the non-dominated set. Name decoding:
/// S/U sorted or unsorted input, VE/LP vertex-based or LP-based dominance
/// primitive, 1/2 one-phase or two-phase (skyline first), trailing F for
/// the variant interleaving plain dominance with the F-dominance primitive.
enum class NdAlgorithm { SVE1, SVE1F, SVE2, SLP1, SLP2, UVE2, ULP2 };

NdAlgorithm parse_nd_algorithm(const std::string& name);
std::string to_string(NdAlgorithm algo);
const std::array<NdAlgorithm, 7>& all_nd_algorithms();

/// F-dominance decided by one linear program: t dominates s when the
/// minimum over the weight region of score(s) - score(t) is non-negative.
/// Tuples with identical value vectors never dominate each other.
bool f_dominates_lp(const Tuple& t, const Tuple& s, const FlexFamily& fam,
                    Counters* counters = nullptr);

/// F-dominance decided at the region vertices: t dominates s when s scores
/// at least as high as t at every vertex. Agrees with f_dominates_lp.
bool f_dominates_region(const Tuple& t, const Tuple& s, const FlexFamily& fam,
                        Counters* counters = nullptr);

/// Tuples not F-dominated by any other tuple, in input order. All seven
/// algorithm variants return the same set.
std::vector<std::size_t> nd_indices(const Relation& rel, const FlexFamily& fam,
                                    NdAlgorithm algo, Counters* counters = nullptr);
std::vector<Tuple> nd(const Relation& rel, const FlexFamily& fam, NdAlgorithm algo,
                      Counters* counters = nullptr);

}  // namespace flexsky

#endif  // FLEXSKY_FLEXND_HPP
