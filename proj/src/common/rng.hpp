#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>

namespace vitscope {

/// Deterministic splittable random stream. Every consumer derives its own
/// stream from (seed, key...) so parallel workers replay bit-identically
/// regardless of scheduling. The uniform/normal mappings are fixed here
/// rather than taken from std:: distributions, which are not pinned by the
/// standard.
class Rng {
  public:
    explicit Rng(uint64_t seed) : root_(mix(seed, 0x9e3779b97f4a7c15ULL)), engine_(root_) {}

    /// Child stream keyed by up to two indices (e.g. step, ensemble slot).
    Rng fork(uint64_t a, uint64_t b = 0) const {
        Rng r;
        r.root_ = mix(mix(root_, a + 1), b + 1);
        r.engine_.seed(r.root_);
        return r;
    }

    uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1).
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform integer in [lo, hi] inclusive.
    int64_t uniform_int(int64_t lo, int64_t hi) {
        return lo + static_cast<int64_t>(next_u64() % static_cast<uint64_t>(hi - lo + 1));
    }

    /// Standard normal via Box-Muller (cosine branch only, stateless).
    double normal() {
        double u1 = uniform01();
        double u2 = uniform01();
        if (u1 < 1e-300) u1 = 1e-300;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    double normal(double mean, double std) { return mean + std * normal(); }

    static uint64_t mix(uint64_t a, uint64_t b) {
        // splitmix64 finalizer over the combined key
        uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Stable 64-bit hash of a string, for deriving per-item seeds.
    static uint64_t hash_str(const std::string& s) {
        uint64_t h = 0xcbf29ce484222325ULL;
        for (unsigned char c : s) {
            h ^= c;
            h *= 0x100000001b3ULL;
        }
        return h;
    }

  private:
    Rng() : root_(0), engine_(0) {}

    uint64_t root_;
    std::mt19937_64 engine_;
};

} // namespace vitscope
