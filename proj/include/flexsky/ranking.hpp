#ifndef FLEXSKY_RANKING_HPP
#define FLEXSKY_RANKING_HPP

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "flexsky/counters.hpp"
#include "flexsky/types.hpp"

namespace flexsky {

/// Closed catalog of per-attribute monotone transforms.
struct Transform {
    enum class Kind { IDENTITY, POWER, LOG } kind = Kind::IDENTITY;
    double exponent = 1.0;  // POWER only, > 0

    double apply(double x) const;
    static Transform identity() { return {}; }
    static Transform power(double p);
    static Transform log();
    static Transform parse(const std::string& text);
    std::string to_string() const;
};

/// Weighted sum of transformed attribute values; monotone by construction.
struct ScoringFunction {
    std::vector<double> weights;
    std::vector<Transform> transforms;

    void validate() const;
};

double score(const ScoringFunction& f, const Tuple& t);

/// The k lowest-scoring tuples in ascending score order, ties broken by id.
/// k larger than the relation returns the full ranking.
std::vector<Tuple> topk_scan(const Relation& rel, const ScoringFunction& f, std::size_t k);

/// One grade list of the sorted/random access model: (id, grade) entries in
/// descending grade order, every object exactly once, plus direct lookup.
class SortedList {
public:
    struct Entry {
        std::string id;
        double grade;
    };

    SortedList() = default;
    /// Sorts entries by descending grade (ties by ascending id) and
    /// validates grades are in [0,1] with unique ids.
    explicit SortedList(std::vector<Entry> entries);

    const std::vector<Entry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    /// Random access. Throws DataError for unknown ids.
    double grade_of(const std::string& id, Counters* counters = nullptr) const;

private:
    std::vector<Entry> entries_;
    std::unordered_map<std::string, double> by_id_;
};

/// Builds one list per attribute from a minimize-better relation, grading
/// each object as 1 - value so that higher grades are better.
std::vector<SortedList> lists_from_relation(const Relation& rel);

struct AggregationFunction {
    enum class Kind { MIN, AVG, WEIGHTED_SUM } kind = Kind::MIN;
    std::vector<double> weights;  // WEIGHTED_SUM only, non-negative, one per list

    double apply(const std::vector<double>& grades) const;
    static AggregationFunction parse(const std::string& name,
                                     const std::vector<double>& weights);
};

struct RankedEntry {
    std::string id;
    double grade;
};

struct TopkRun {
    std::vector<RankedEntry> ranking;  // descending grade, ties by id
    std::size_t depth = 0;             // sorted-access depth at halt
};

/// Fagin's algorithm: round-robin sorted access until at least k objects
/// have been seen in every list, random-access fill for all seen objects,
/// then aggregate and keep the k best grades.
TopkRun fa(const std::vector<SortedList>& lists, const AggregationFunction& agg,
           std::size_t k, Counters* counters = nullptr);

/// Threshold algorithm: random-access each newly seen object, maintain the
/// best k, halt as soon as k grades reach the current threshold.
TopkRun ta(const std::vector<SortedList>& lists, const AggregationFunction& agg,
           std::size_t k, Counters* counters = nullptr);

/// Exhaustive oracle: aggregate every object and rank.
TopkRun topk_by_grade(const std::vector<SortedList>& lists, const AggregationFunction& agg,
                      std::size_t k);

}  // namespace flexsky

#endif  // FLEXSKY_RANKING_HPP
