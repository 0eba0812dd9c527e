#pragma once

#include <cstdint>
#include <initializer_list>

namespace wli {

// Deterministic PRNG with platform-independent draws (the standard
// distributions are implementation-defined, so reproducible artifacts roll
// their own). Substreams are derived by hashing a seed with stream tags.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {
        // splitmix64 warm-up so nearby seeds diverge
        next();
        next();
    }

    static Rng substream(std::uint64_t seed,
                         std::initializer_list<std::uint64_t> tags) {
        std::uint64_t h = seed;
        for (std::uint64_t t : tags) {
            h ^= t + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            h = mix(h);
        }
        return Rng(h);
    }

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    // Uniform integer in [0, n).
    std::uint64_t index(std::uint64_t n) {
        // Rejection-free multiply-shift; bias is negligible for small n.
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    // Uniform integer in [0, n) different from `avoid`.
    std::uint64_t index_excluding(std::uint64_t n, std::uint64_t avoid) {
        std::uint64_t v = index(n - 1);
        return v >= avoid ? v + 1 : v;
    }

    // Uniform real in [0, 1).
    double real() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    double range(double lo, double hi) { return lo + (hi - lo) * real(); }

    bool chance(double p) { return real() < p; }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace wli
