#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace srgm {

// SplitMix64: 64-bit state, full period, pure integer pipeline, so the raw
// stream is bit-identical everywhere. Every stochastic draw in this library
// flows through one instance of this generator, which is what makes seeded
// runs replay exactly.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53-bit resolution.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

namespace detail {

// Anything with next_double() -> [0,1) works as an Rng below; tests exploit
// this to stub the source with fixed values.

template <class Rng>
double uniform(Rng& rng, double lo, double hi) {
    return lo + (hi - lo) * rng.next_double();
}

template <class Rng>
std::size_t uniform_index(Rng& rng, std::size_t n) {
    auto i = static_cast<std::size_t>(rng.next_double() * static_cast<double>(n));
    return i < n ? i : n - 1;
}

// Box-Muller, the non-caching variant: two uniforms per normal keeps the
// stream position independent of call history.
template <class Rng>
double standard_normal(Rng& rng) {
    double u1 = 1.0 - rng.next_double();  // (0,1], keeps the log finite
    double u2 = rng.next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
}

// Poisson count by accumulating unit-exponential arrivals until they pass
// mean. Exact for any finite mean, O(mean) uniforms per draw.
template <class Rng>
std::uint64_t poisson(Rng& rng, double mean) {
    if (!(mean >= 0.0) || !std::isfinite(mean))
        throw std::domain_error("poisson mean must be finite and non-negative");
    double arrivals = 0.0;
    std::uint64_t count = 0;
    for (;;) {
        arrivals += -std::log(1.0 - rng.next_double());
        if (arrivals > mean) return count;
        ++count;
    }
}

}  // namespace detail
}  // namespace srgm
