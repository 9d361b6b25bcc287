#pragma once

#include <cstdint>

namespace tansurf {

/// splitmix64: counter-based generator (Steele, Lea, Flood 2014). Trivially
/// splittable by deriving child seeds, which keeps per-trial streams
/// deterministic under any execution order.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Child stream for an indexed subtask.
    SplitMix64 split(std::uint64_t index) const {
        SplitMix64 mixer(state_ ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
        return SplitMix64(mixer.next());
    }

private:
    std::uint64_t state_;
};

} // namespace tansurf
