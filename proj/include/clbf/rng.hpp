#pragma once

#include <cstdint>
#include <random>

namespace clbf {

/// Seeded RNG with explicitly specified draw mappings.
///
/// std::mt19937_64 output is fully specified by the standard, but the
/// standard distributions are not; the bounded/real draws below are pinned
/// here so that identical seeds give identical streams on every build.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next_u64() { return engine_(); }

    /// Uniform integer in [0, n). n must be >= 1.
    uint64_t below(uint64_t n) {
        // Rejection sampling over the largest multiple of n, unbiased.
        const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double real01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [-s, s].
    double symmetric(double s) { return (2.0 * real01() - 1.0) * s; }

    bool bernoulli(double p) { return real01() < p; }

    /// Fisher-Yates shuffle with draws from this stream.
    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (size_t i = items.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

/// Derives an independent child seed from a parent seed and a stream tag.
/// splitmix64 finalizer; used to give each sampling phase its own stream.
inline uint64_t derive_seed(uint64_t seed, uint64_t stream) {
    uint64_t z = seed + stream * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace clbf
