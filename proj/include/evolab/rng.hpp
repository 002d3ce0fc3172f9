#pragma once

#include <cstdint>

namespace evolab {

// SplitMix64: portable 64-bit generator (Steele, Lea, Flood 2014).
// Stream splitting: stream(seed, k) re-seeds with one scramble round of
// seed ^ (k+1)*GOLDEN, so each trial index gets an independent stream and
// results are reproducible across platforms from (seed, trial) alone.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    static SplitMix64 stream(uint64_t seed, uint64_t index) {
        SplitMix64 g(seed ^ ((index + 1) * kGolden));
        g.next();
        return g;
    }

    uint64_t next() {
        uint64_t z = (state_ += kGolden);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1), 53-bit resolution
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    uint64_t below(uint64_t n) { return next() % n; }

private:
    static constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ull;
    uint64_t state_;
};

}  // namespace evolab
