#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "binmeas/rational.hpp"

namespace binmeas {

/// Deterministic random source. All draws go through mt19937_64, whose output
/// sequence the standard pins down exactly; we avoid std distributions on
/// purpose because their mapping is implementation-defined and the machine
/// report must be byte-identical across platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Independent substream named by a tag; stable across reordering of checks.
    static Rng fork(std::uint64_t seed, std::string_view tag) {
        std::uint64_t h = 1469598103934665603ull;  // FNV-1a
        for (char c : tag) {
            h ^= static_cast<unsigned char>(c);
            h *= 1099511628211ull;
        }
        return Rng(splitmix(seed ^ h));
    }

    std::uint64_t next() { return eng_(); }

    /// Uniform in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n) {
        // Rejection sampling keeps the draw unbiased and deterministic.
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v = eng_();
        while (v >= limit) v = eng_();
        return v % n;
    }

    long long range(long long lo, long long hi) {  // inclusive
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (next() & 1u) != 0; }

    /// Random rational with |numerator| <= num_max and denominator in [1, den_max].
    Rational rational(long long num_max, long long den_max) {
        long long n = range(-num_max, num_max);
        long long d = range(1, den_max);
        return Rational(n, d);
    }

    /// k distinct values drawn by rejection from [lo, hi].
    std::vector<long long> distinct_ints(std::size_t k, long long lo, long long hi) {
        std::vector<long long> out;
        while (out.size() < k) {
            long long v = range(lo, hi);
            bool seen = false;
            for (long long u : out) seen |= (u == v);
            if (!seen) out.push_back(v);
        }
        return out;
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

  private:
    static std::uint64_t splitmix(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ull;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    }
    std::mt19937_64 eng_;
};

}  // namespace binmeas
