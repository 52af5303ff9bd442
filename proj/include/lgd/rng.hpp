#pragma once

#include "lgd/normal.hpp"

#include <cstdint>

namespace lgd {

/// splitmix64 finalizer; used both as a standalone mixer and to expand seeds.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// xoshiro256++ generator. Satisfies UniformRandomBitGenerator, so it plugs
/// into <random> distributions. Each instance is an independent stream keyed
/// by (seed, stream, counter); deriving one per Monte Carlo draw makes batch
/// simulations deterministic for any thread count.
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed) { reseed(seed, 0, 0); }
    Rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
        reseed(seed, stream, counter);
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~std::uint64_t{0}; }

    result_type operator()() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform on (0,1): 53-bit mantissa, offset so 0 and 1 are unreachable.
    double uniform() {
        return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Uniform on (lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via the inverse CDF; exact to quantile precision and
    /// independent of libm's trig, which keeps streams stable.
    double normal() { return std_normal_quantile(uniform()); }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    void reseed(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
        std::uint64_t z = mix64(seed) ^ mix64(0x5851f42d4c957f2dULL * (stream + 1)) ^
                          mix64(0xda3e39cb94b95bdbULL * (counter + 1));
        for (auto& w : s_) {
            z = mix64(z);
            w = z;
        }
        // all-zero state is invalid for xoshiro; mix64 chains cannot produce
        // four zero words from distinct inputs, but guard anyway
        if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
    }

    std::uint64_t s_[4];
};

} // namespace lgd
