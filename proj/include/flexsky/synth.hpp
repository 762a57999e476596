#ifndef FLEXSKY_SYNTH_HPP
#define FLEXSKY_SYNTH_HPP

#include <cstdint>
#include <string>

#include "flexsky/types.hpp"

namespace flexsky {

enum class SynthDistribution { UNIFORM, CORRELATED, ANTICORRELATED };

SynthDistribution parse_distribution(const std::string& name);
std::string to_string(SynthDistribution dist);

/// Generates n tuples with d attributes in [0,1], reproducible from the
/// seed. CORRELATED draws attributes near a shared base value;
/// ANTICORRELATED spreads a fixed budget across attributes so that
/// pairwise correlations come out negative.
Relation generate_relation(std::size_t n, std::size_t d, SynthDistribution dist,
                           std::uint64_t seed);

/// Writes a relation as CSV (header of attribute names, no id column),
/// with deterministic formatting so identical inputs produce identical files.
void write_csv(const Relation& rel, const std::string& path);

}  // namespace flexsky

#endif  // FLEXSKY_SYNTH_HPP
