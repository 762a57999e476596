#ifndef FLEXSKY_DATASET_HPP
#define FLEXSKY_DATASET_HPP

#include <string>

#include "flexsky/types.hpp"

namespace flexsky {

/// Reads a comma-separated file whose header row must match the schema
/// attribute names, optionally preceded by an "id" column supplying tuple
/// identifiers. Without an id column, tuples are labeled t1, t2, ...
/// Values are kept raw; row order is preserved.
Relation load_csv(const std::string& path, const Schema& schema);

/// Min-max scales every attribute into [0,1] and flips MAX attributes
/// (x -> 1 - scaled) so that lower is uniformly better afterwards. The
/// returned schema is all-MIN, which makes the operation idempotent.
/// Constant attributes map to 0.0.
Relation normalize(const Relation& rel);

}  // namespace flexsky

#endif  // FLEXSKY_DATASET_HPP
