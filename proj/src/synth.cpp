#include "flexsky/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "flexsky/rng.hpp"

namespace flexsky {

SynthDistribution parse_distribution(const std::string& name) {
    if (name == "uniform") return SynthDistribution::UNIFORM;
    if (name == "correlated") return SynthDistribution::CORRELATED;
    if (name == "anticorrelated") return SynthDistribution::ANTICORRELATED;
    throw ConfigError("unknown distribution '" + name +
                      "' (expected uniform, correlated or anticorrelated)");
}

std::string to_string(SynthDistribution dist) {
    switch (dist) {
        case SynthDistribution::UNIFORM: return "uniform";
        case SynthDistribution::CORRELATED: return "correlated";
        case SynthDistribution::ANTICORRELATED: return "anticorrelated";
    }
    return "?";
}

namespace {

double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

}  // namespace

Relation generate_relation(std::size_t n, std::size_t d, SynthDistribution dist,
                           std::uint64_t seed) {
    if (n == 0 || d == 0) throw ConfigError("generator needs n >= 1 and d >= 1");
    Rng rng(seed);

    Relation rel;
    rel.schema.directions.assign(d, Direction::MIN);
    for (std::size_t i = 0; i < d; ++i)
        rel.schema.attribute_names.push_back("a" + std::to_string(i + 1));

    rel.tuples.reserve(n);
    std::vector<double> v(d);
    for (std::size_t row = 0; row < n; ++row) {
        switch (dist) {
            case SynthDistribution::UNIFORM:
                for (std::size_t i = 0; i < d; ++i) v[i] = rng.next_double();
                break;
            case SynthDistribution::CORRELATED: {
                const double base = rng.next_double();
                for (std::size_t i = 0; i < d; ++i)
                    v[i] = clamp01(base + rng.uniform(-0.1, 0.1));
                break;
            }
            case SynthDistribution::ANTICORRELATED: {
                // Normalized exponentials give a point on the simplex;
                // scaling by d/2 centers attributes in [0,1] while keeping
                // pairwise correlations negative.
                double total = 0.0;
                for (std::size_t i = 0; i < d; ++i) {
                    v[i] = -std::log(1.0 - rng.next_double());
                    total += v[i];
                }
                for (std::size_t i = 0; i < d; ++i)
                    v[i] = clamp01(v[i] / total * static_cast<double>(d) / 2.0 +
                                   rng.uniform(-0.05, 0.05));
                break;
            }
        }
        Tuple t;
        t.id = "t" + std::to_string(row + 1);
        t.values = v;
        rel.tuples.push_back(std::move(t));
    }
    return rel;
}

void write_csv(const Relation& rel, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write dataset file '" + path + "'");
    for (std::size_t i = 0; i < rel.arity(); ++i) {
        if (i) out << ',';
        out << rel.schema.attribute_names[i];
    }
    out << '\n';
    char buf[64];
    for (const Tuple& t : rel.tuples) {
        for (std::size_t i = 0; i < t.values.size(); ++i) {
            if (i) out << ',';
            std::snprintf(buf, sizeof(buf), "%.17g", t.values[i]);
            out << buf;
        }
        out << '\n';
    }
}

}  // namespace flexsky
