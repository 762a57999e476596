#ifndef FLEXSKY_COUNTERS_HPP
#define FLEXSKY_COUNTERS_HPP

#include <cstdint>

namespace flexsky {

/// Work counters threaded through the operators. All operations accept an
/// optional Counters*; passing nullptr disables accounting.
struct Counters {
    std::uint64_t pareto_tests = 0;    // Pareto dominance primitive calls
    std::uint64_t fdom_tests = 0;      // F-dominance primitive calls (LP or vertex route)
    std::uint64_t lp_solves = 0;       // simplex invocations
    std::uint64_t po_tests = 0;        // potential-optimality membership tests
    std::uint64_t sorted_accesses = 0; // FA/TA sequential list reads
    std::uint64_t random_accesses = 0; // FA/TA direct grade lookups
    std::uint64_t halt_depth = 0;      // sorted-access depth at halt (FA/TA)

    void add(const Counters& other) {
        pareto_tests += other.pareto_tests;
        fdom_tests += other.fdom_tests;
        lp_solves += other.lp_solves;
        po_tests += other.po_tests;
        sorted_accesses += other.sorted_accesses;
        random_accesses += other.random_accesses;
        halt_depth += other.halt_depth;
    }
};

inline void count_pareto(Counters* c) {
    if (c) ++c->pareto_tests;
}
inline void count_fdom(Counters* c) {
    if (c) ++c->fdom_tests;
}
inline void count_lp(Counters* c) {
    if (c) ++c->lp_solves;
}
inline void count_po(Counters* c) {
    if (c) ++c->po_tests;
}

}  // namespace flexsky

#endif  // FLEXSKY_COUNTERS_HPP
