#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace attnet {

// SplitMix64 (Steele, Lea & Flood 2014). Used instead of std::mt19937_64 +
// <random> distributions because the standard distributions are
// implementation-defined; every stream drawn through this class is
// byte-identical across platforms and standard libraries.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Unbiased draw from [0, n), n >= 1, by rejection.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }

    // Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t state_;
};

// Seed for stream k of an ensemble rooted at master_seed. Sample k depends
// only on (master_seed, k), so ensembles reproduce under any schedule.
inline std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t k) {
    SplitMix64 g(master_seed ^ (0x9E3779B97F4A7C15ULL * (k + 1)));
    return g.next();
}

inline constexpr const char* kRngName = "splitmix64";

}  // namespace attnet
