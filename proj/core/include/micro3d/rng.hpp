#pragma once

#include <cstdint>

#include "micro3d/vec3.hpp"

namespace micro3d {

// Seedable, portable random source: xoshiro256++ seeded through splitmix64.
// The bit streams depend only on (seed, stream id), never on the platform or
// the standard library, so runs reproduce bit-for-bit everywhere.
//
// Stream-splitting scheme: independent streams are derived as
//   Rng::stream(seed, id) == Rng(seed ^ (id + 1) * 0x9E3779B97F4A7C15)
// Stream ids used across the project:
//   0            EA operators (selection, crossover, mutation)
//   1            scenario generation for a run
//   2            initial population genomes
//   1000 + k     k-th Monte Carlo genome / random test scenario
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& s : state_) s = splitmix64(x);
    }

    static Rng stream(std::uint64_t seed, std::uint64_t stream_id) {
        return Rng(seed ^ (stream_id + 1) * 0x9E3779B97F4A7C15ULL);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform double in [0, 1), 53 significant bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Unbiased uniform integer in [0, n), n > 0 (rejection sampling).
    std::uint64_t uniform_below(std::uint64_t n) {
        const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
        std::uint64_t v;
        do { v = next_u64(); } while (v >= limit);
        return v % n;
    }

    bool bernoulli(double p) { return uniform() < p; }

    // Uniform direction on the unit sphere (rejection from the cube).
    Vec3 unit_vector() {
        for (;;) {
            Vec3 v{uniform(-1.0, 1.0), uniform(-1.0, 1.0), uniform(-1.0, 1.0)};
            double n2 = v.norm_sq();
            if (n2 > 1e-12 && n2 <= 1.0) return v / std::sqrt(n2);
        }
    }

    // Uniform point in the unit ball (rejection from the cube).
    Vec3 in_unit_ball() {
        for (;;) {
            Vec3 v{uniform(-1.0, 1.0), uniform(-1.0, 1.0), uniform(-1.0, 1.0)};
            if (v.norm_sq() <= 1.0) return v;
        }
    }

private:
    static std::uint64_t splitmix64(std::uint64_t& x) {
        std::uint64_t z = (x += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    static std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

    std::uint64_t state_[4];
};

} // namespace micro3d
