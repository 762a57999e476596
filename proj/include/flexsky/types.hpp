#ifndef FLEXSKY_TYPES_HPP
#define FLEXSKY_TYPES_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace flexsky {

/// Per-attribute optimization direction of the raw data. Internally the
/// engine always minimizes; MAX attributes are flipped during normalization.
enum class Direction { MIN, MAX };

/// Raised when a query configuration is malformed (CLI exit code 2).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when input data is malformed (CLI exit code 3).
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when an internal invariant is violated (CLI exit code 4).
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

struct Schema {
    std::vector<std::string> attribute_names;
    std::vector<Direction> directions;

    std::size_t arity() const { return attribute_names.size(); }
    void validate() const;
};

struct Tuple {
    std::string id;
    std::vector<double> values;
};

struct Relation {
    Schema schema;
    std::vector<Tuple> tuples;

    std::size_t size() const { return tuples.size(); }
    std::size_t arity() const { return schema.arity(); }
    void validate() const;
};

}  // namespace flexsky

#endif  // FLEXSKY_TYPES_HPP
