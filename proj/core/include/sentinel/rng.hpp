#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace sentinel {

// all distribution transforms are written out so a stream depends only on
// the engine, never on the standard library's distribution internals
class Rng {
public:
    explicit Rng(uint64_t seed) : seed_(seed), eng_(seed) {}

    uint64_t seed() const { return seed_; }

    uint64_t next_u64() { return eng_(); }

    // [0, 1)
    double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

    // [lo, hi)
    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    // [0, n), unbiased
    uint64_t below(uint64_t n) {
        uint64_t lim = UINT64_MAX - UINT64_MAX % n;
        uint64_t x;
        do { x = next_u64(); } while (x >= lim);
        return x % n;
    }

    // [lo, hi] inclusive
    int64_t range(int64_t lo, int64_t hi) { return lo + int64_t(below(uint64_t(hi - lo + 1))); }

    bool chance(double p) { return next_double() < p; }

    // Box-Muller, one draw per call
    double gaussian(double mean, double sigma) {
        double u1 = 1.0 - next_double();
        double u2 = next_double();
        return mean + sigma * std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

    void fill(uint8_t* out, size_t n) {
        for (size_t i = 0; i < n; ++i) out[i] = uint8_t(next_u64() >> 56);
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

    // independent child stream, stable under unrelated draws on the parent
    Rng fork(uint64_t tag) const { return Rng(mix(seed_ + 0x9e3779b97f4a7c15ull * (tag + 1))); }

private:
    static uint64_t mix(uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ull;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebull;
        z ^= z >> 31;
        return z;
    }

    uint64_t seed_;
    std::mt19937_64 eng_;
};

}  // namespace sentinel
