#pragma once

#include "jumploci/scalar.hpp"

#include <cstdint>
#include <vector>

namespace jumploci {

/// xoshiro256** seeded through SplitMix64 (Blackman & Vigna). Chosen over
/// std::mt19937 so that every draw, including the bounded-integer reduction,
/// is pinned by this file alone and reproduces bit-exactly on any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& word : state_) word = splitmix64(x);
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform integer in [0, n) via Lemire's multiply-shift reduction.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) return 0;
        __uint128_t m = static_cast<__uint128_t>(next()) * n;
        auto low = static_cast<std::uint64_t>(m);
        if (low < n) {
            const std::uint64_t threshold = (0 - n) % n;
            while (low < threshold) {
                m = static_cast<__uint128_t>(next()) * n;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    long range(long lo, long hi) { // inclusive ends
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

    /// Small exact rational, numerator in [-3,3], denominator in {1,2}.
    Scalar small_rational() {
        long num = range(-3, 3);
        long den = chance(1, 4) ? 2 : 1;
        return Scalar(num, den);
    }

    /// Point coordinate biased toward zero so sampled points hit coordinate strata.
    Scalar sparse_coordinate() {
        switch (below(6)) {
            case 0:
            case 1: return Scalar(0);
            case 2: return Scalar(1);
            case 3: return Scalar(-1);
            case 4: return Scalar(2);
            default: return Scalar(1, 2);
        }
    }

    std::vector<Scalar> point(std::size_t n) {
        std::vector<Scalar> p;
        p.reserve(n);
        for (std::size_t i = 0; i < n; ++i) p.push_back(sparse_coordinate());
        return p;
    }

    /// Deterministic per-case seed derived from a suite seed and case index.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
        std::uint64_t x = seed ^ (0x9e3779b97f4a7c15ULL * (index + 1));
        return splitmix64(x);
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    static std::uint64_t splitmix64(std::uint64_t& x) {
        std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_[4];
};

} // namespace jumploci
