#pragma once

#include <cstdint>
#include <vector>

namespace drsnet {

/// Deterministic random source. All distributions are implemented inline on
/// top of a 64-bit SplitMix-seeded xoshiro256** stream, so identical seeds
/// give bit-identical draw sequences on every platform and stdlib.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) { reseed(seed); }

    void reseed(std::uint64_t seed);

    std::uint64_t next_u64();

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Unbiased uniform integer in [lo, hi] inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

    /// Uniform choice from a small set.
    template <typename T>
    T choice(const std::vector<T>& items) {
        return items[static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(items.size()) - 1))];
    }

    /// Standard normal via Box-Muller (deterministic, no cached spare).
    double normal(double mean = 0.0, double stddev = 1.0);

    bool bernoulli(double p) { return uniform01() < p; }

    /// In-place Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(i) - 1));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t s_[4];
};

/// Stable seed derivation for per-sample / per-epoch streams:
/// mixes the parts with SplitMix64 so nearby inputs give unrelated seeds.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0);

}  // namespace drsnet
