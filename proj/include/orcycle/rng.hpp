#pragma once

#include <cstdint>

namespace orcycle {

/// Counter-based splittable generator. Streams keyed by (seed, stream) are
/// independent and reproducible, so parallel shards can each take their own
/// stream index and still produce deterministic merged output.
class SplitRng {
public:
    SplitRng(std::uint64_t seed, std::uint64_t stream) {
        state_ = mix(mix(seed ^ 0x9e3779b97f4a7c15ULL) + stream);
    }

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    /// Uniform in [0, bound) by rejection; bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
        std::uint64_t v = next();
        while (v > limit) v = next();
        return v % bound;
    }

    /// Uniform double in [0, 1).
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool coin() { return (next() & 1) != 0; }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

} // namespace orcycle
