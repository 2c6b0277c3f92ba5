#ifndef MPGSD_RNG_HPP
#define MPGSD_RNG_HPP

#include <cstdint>
#include <random>

namespace mpgsd {

// Deterministic random stream used by every randomized component.
//
// std::mt19937_64 produces the same raw 64-bit sequence on every platform,
// but the standard distributions do not, so the derived draws (doubles,
// bounded ints) are implemented by hand. Same seed, same stream, everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1), 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform in [0, n), unbiased via rejection. n must be positive.
    std::uint64_t next_below(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
        for (;;) {
            const std::uint64_t x = next_u64();
            if (x >= threshold) return x % n;
        }
    }

    int next_index(int n) { return static_cast<int>(next_below(static_cast<std::uint64_t>(n))); }

    // Uniform integer in [lo, hi], inclusive.
    std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(next_below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    // In-place Fisher-Yates; std::shuffle is not portable across libraries.
    template <typename Vec>
    void shuffle(Vec& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(next_below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace mpgsd

#endif
