#pragma once

#include <cmath>
#include <cstdint>

namespace lvswitch {

/// Counter-based generator (splitmix64 stream): the n-th output is a pure
/// function of (seed, n), so runs are reproducible and replica streams with
/// different seeds are decorrelated by the mixing function.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next_u64() noexcept {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double next_double() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Exponential holding time with the given rate.
    double next_exponential(double rate) noexcept {
        return -std::log1p(-next_double()) / rate;
    }

private:
    std::uint64_t state_;
};

}  // namespace lvswitch
