#pragma once

#include <cstdint>
#include <random>

namespace cdcp {

// Deterministic RNG wrapper. mt19937_64 output is bit-exact per the standard,
// but std::uniform_real_distribution is not, so doubles and bounded ints are
// derived from raw engine words here instead.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1): top 53 bits of the engine word.
    double next_double() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double next_double(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    // Uniform in [0, n). Modulo bias is below 2^-32 for any n that fits an
    // image or cluster count, which is harmless here; determinism is what matters.
    uint64_t next_index(uint64_t n) { return engine_() % n; }

    int next_int(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(next_index(static_cast<uint64_t>(hi - lo + 1)));
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace cdcp
