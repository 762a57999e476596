#include "flexsky/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace flexsky {

double Transform::apply(double x) const {
    switch (kind) {
        case Kind::IDENTITY: return x;
        case Kind::POWER: return std::pow(x, exponent);
        case Kind::LOG: return std::log1p(x);
    }
    return x;
}

Transform Transform::power(double p) {
    if (!(p > 0.0)) throw ConfigError("power transform needs a positive exponent");
    Transform t;
    t.kind = Kind::POWER;
    t.exponent = p;
    return t;
}

Transform Transform::log() {
    Transform t;
    t.kind = Kind::LOG;
    return t;
}

Transform Transform::parse(const std::string& text) {
    if (text == "identity") return identity();
    if (text == "log") return log();
    if (text.rfind("power:", 0) == 0) {
        try {
            return power(std::stod(text.substr(6)));
        } catch (const ConfigError&) {
            throw;
        } catch (const std::exception&) {
            throw ConfigError("bad power transform '" + text + "'");
        }
    }
    throw ConfigError("unknown transform '" + text +
                      "' (expected identity, power:<p> or log)");
}

std::string Transform::to_string() const {
    switch (kind) {
        case Kind::IDENTITY: return "identity";
        case Kind::POWER: return "power:" + std::to_string(exponent);
        case Kind::LOG: return "log";
    }
    return "?";
}

void ScoringFunction::validate() const {
    if (weights.empty()) throw ConfigError("scoring function needs at least one weight");
    if (weights.size() != transforms.size())
        throw ConfigError("scoring function has " + std::to_string(weights.size()) +
                          " weights but " + std::to_string(transforms.size()) + " transforms");
    double sum = 0.0;
    for (double w : weights) {
        if (w < 0.0 || w > 1.0) throw ConfigError("scoring weights must lie in [0, 1]");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-9) throw ConfigError("scoring weights must sum to 1");
}

double score(const ScoringFunction& f, const Tuple& t) {
    if (f.weights.size() != t.values.size())
        throw DataError("score: tuple arity does not match the scoring function");
    double s = 0.0;
    for (std::size_t i = 0; i < t.values.size(); ++i)
        s += f.weights[i] * f.transforms[i].apply(t.values[i]);
    return s;
}

std::vector<Tuple> topk_scan(const Relation& rel, const ScoringFunction& f, std::size_t k) {
    if (k == 0) throw ConfigError("topk needs k >= 1");
    f.validate();
    std::vector<std::size_t> order(rel.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::vector<double> scores(rel.size());
    for (std::size_t i = 0; i < rel.size(); ++i) scores[i] = score(f, rel.tuples[i]);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (scores[a] != scores[b]) return scores[a] < scores[b];
        return rel.tuples[a].id < rel.tuples[b].id;
    });
    if (order.size() > k) order.resize(k);
    std::vector<Tuple> out;
    out.reserve(order.size());
    for (std::size_t i : order) out.push_back(rel.tuples[i]);
    return out;
}

SortedList::SortedList(std::vector<Entry> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
        if (a.grade != b.grade) return a.grade > b.grade;
        return a.id < b.id;
    });
    for (const Entry& e : entries_) {
        if (e.grade < 0.0 || e.grade > 1.0)
            throw DataError("grade of '" + e.id + "' is outside [0, 1]");
        if (!by_id_.emplace(e.id, e.grade).second)
            throw DataError("object '" + e.id + "' appears twice in a grade list");
    }
}

double SortedList::grade_of(const std::string& id, Counters* counters) const {
    if (counters) ++counters->random_accesses;
    auto it = by_id_.find(id);
    if (it == by_id_.end()) throw DataError("object '" + id + "' missing from a grade list");
    return it->second;
}

std::vector<SortedList> lists_from_relation(const Relation& rel) {
    std::vector<SortedList> lists;
    lists.reserve(rel.arity());
    for (std::size_t i = 0; i < rel.arity(); ++i) {
        std::vector<SortedList::Entry> entries;
        entries.reserve(rel.size());
        for (const Tuple& t : rel.tuples) {
            const double v = t.values[i];
            if (v < 0.0 || v > 1.0)
                throw DataError("attribute values must be normalized before building grade lists");
            entries.push_back({t.id, 1.0 - v});
        }
        lists.emplace_back(std::move(entries));
    }
    return lists;
}

double AggregationFunction::apply(const std::vector<double>& grades) const {
    if (grades.empty()) throw InternalError("aggregation over zero grades");
    switch (kind) {
        case Kind::MIN: {
            double m = grades[0];
            for (double g : grades) m = std::min(m, g);
            return m;
        }
        case Kind::AVG: {
            double s = 0.0;
            for (double g : grades) s += g;
            return s / static_cast<double>(grades.size());
        }
        case Kind::WEIGHTED_SUM: {
            if (weights.size() != grades.size())
                throw ConfigError("aggregation weights do not match the list count");
            double s = 0.0;
            for (std::size_t i = 0; i < grades.size(); ++i) s += weights[i] * grades[i];
            return s;
        }
    }
    throw InternalError("unreachable aggregation kind");
}

AggregationFunction AggregationFunction::parse(const std::string& name,
                                               const std::vector<double>& weights) {
    AggregationFunction agg;
    if (name == "min") {
        agg.kind = Kind::MIN;
    } else if (name == "avg") {
        agg.kind = Kind::AVG;
    } else if (name == "weighted-sum") {
        agg.kind = Kind::WEIGHTED_SUM;
        for (double w : weights)
            if (w < 0.0) throw ConfigError("aggregation weights must be non-negative");
        agg.weights = weights;
    } else {
        throw ConfigError("unknown aggregation '" + name +
                          "' (expected min, avg or weighted-sum)");
    }
    return agg;
}

namespace {

void check_universes(const std::vector<SortedList>& lists) {
    if (lists.empty()) throw ConfigError("need at least one grade list");
    std::set<std::string> universe;
    for (const auto& e : lists[0].entries()) universe.insert(e.id);
    for (const SortedList& list : lists) {
        if (list.size() != universe.size())
            throw DataError("grade lists cover different object universes");
        for (const auto& e : list.entries())
            if (!universe.count(e.id))
                throw DataError("grade lists cover different object universes");
    }
}

std::vector<RankedEntry> best_k(std::vector<RankedEntry> all, std::size_t k) {
    std::sort(all.begin(), all.end(), [](const RankedEntry& a, const RankedEntry& b) {
        if (a.grade != b.grade) return a.grade > b.grade;
        return a.id < b.id;
    });
    if (all.size() > k) all.resize(k);
    return all;
}

}  // namespace

TopkRun fa(const std::vector<SortedList>& lists, const AggregationFunction& agg,
           std::size_t k, Counters* counters) {
    if (k == 0) throw ConfigError("fa needs k >= 1");
    check_universes(lists);
    const std::size_t m = lists.size();
    const std::size_t length = lists[0].size();

    std::unordered_map<std::string, std::size_t> seen_in;  // id -> number of lists
    std::set<std::string> seen_anywhere;
    std::size_t matches = 0;  // objects seen in all m lists
    std::size_t depth = 0;

    while (depth < length && matches < k) {
        for (const SortedList& list : lists) {
            const auto& entry = list.entries()[depth];
            if (counters) ++counters->sorted_accesses;
            seen_anywhere.insert(entry.id);
            if (++seen_in[entry.id] == m) ++matches;
        }
        ++depth;
    }

    std::vector<RankedEntry> pool;
    std::vector<double> grades(m);
    for (const std::string& id : seen_anywhere) {
        for (std::size_t i = 0; i < m; ++i) grades[i] = lists[i].grade_of(id, counters);
        pool.push_back({id, agg.apply(grades)});
    }
    if (counters) counters->halt_depth = depth;

    TopkRun run;
    run.depth = depth;
    run.ranking = best_k(std::move(pool), k);
    return run;
}

TopkRun ta(const std::vector<SortedList>& lists, const AggregationFunction& agg,
           std::size_t k, Counters* counters) {
    if (k == 0) throw ConfigError("ta needs k >= 1");
    check_universes(lists);
    const std::size_t m = lists.size();
    const std::size_t length = lists[0].size();

    std::set<std::string> seen;
    std::vector<RankedEntry> buffer;  // all graded objects so far
    std::vector<double> grades(m), level(m);
    std::size_t depth = 0;

    while (depth < length) {
        for (std::size_t i = 0; i < m; ++i) {
            const auto& entry = lists[i].entries()[depth];
            if (counters) ++counters->sorted_accesses;
            level[i] = entry.grade;
            if (seen.insert(entry.id).second) {
                for (std::size_t j = 0; j < m; ++j)
                    grades[j] = lists[j].grade_of(entry.id, counters);
                buffer.push_back({entry.id, agg.apply(grades)});
            }
        }
        ++depth;

        // Threshold from the grades at the current depth: no unseen object
        // can aggregate above it, so k hits at or above it allow a halt.
        const double tau = agg.apply(level);
        std::size_t at_least = 0;
        for (const RankedEntry& e : buffer)
            if (e.grade >= tau) ++at_least;
        if (at_least >= k) break;
    }

    if (counters) counters->halt_depth = depth;
    TopkRun run;
    run.depth = depth;
    run.ranking = best_k(std::move(buffer), k);
    return run;
}

TopkRun topk_by_grade(const std::vector<SortedList>& lists, const AggregationFunction& agg,
                      std::size_t k) {
    if (k == 0) throw ConfigError("topk needs k >= 1");
    check_universes(lists);
    std::vector<RankedEntry> pool;
    std::vector<double> grades(lists.size());
    for (const auto& entry : lists[0].entries()) {
        for (std::size_t i = 0; i < lists.size(); ++i)
            grades[i] = lists[i].grade_of(entry.id);
        pool.push_back({entry.id, agg.apply(grades)});
    }
    TopkRun run;
    run.depth = lists.empty() ? 0 : lists[0].size();
    run.ranking = best_k(std::move(pool), k);
    return run;
}

}  // namespace flexsky
