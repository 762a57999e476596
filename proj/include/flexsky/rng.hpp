#ifndef FLEXSKY_RNG_HPP
#define FLEXSKY_RNG_HPP

#include <cstdint>
#include <random>

namespace flexsky {

/// Deterministic random source. The mt19937_64 stream is fixed by the
/// standard, and doubles are derived from raw draws rather than through
/// std::uniform_real_distribution, whose output is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1).
    double next_double() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    /// Uniform integer in [lo, hi].
    std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) {
        return lo + next_u64() % (hi - lo + 1);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace flexsky

#endif  // FLEXSKY_RNG_HPP
