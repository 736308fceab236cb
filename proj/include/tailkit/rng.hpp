#pragma once

#include <concepts>
#include <cstdint>
#include <limits>

namespace tailkit {

/// Stafford "Mix13" finalizer, as used by SplitMix64. Bijective on 64 bits.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// SplitMix64 stream (Steele, Lea & Flood 2014).
///
/// The state is a Weyl counter; output i is mix64(seed + (i+1)*gamma), so a
/// stream is fully determined by its seed and position. Satisfies
/// UniformRandomBitGenerator so it can also drive <random> distributions.
class RngStream {
public:
    using result_type = std::uint64_t;

    static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

    explicit constexpr RngStream(std::uint64_t seed) noexcept : seed_(seed), state_(seed) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    constexpr result_type operator()() noexcept {
        state_ += kGamma;
        return mix64(state_);
    }

    /// Uniform draw on the open interval (0, 1) with 53 bits of resolution.
    constexpr double uniform01() noexcept {
        return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
    }

    constexpr std::uint64_t seed() const noexcept { return seed_; }

private:
    std::uint64_t seed_;
    std::uint64_t state_;
};

/// Anything that hands out uniforms on (0, 1).
template <typename S>
concept UniformSource = requires(S& s) {
    { s.uniform01() } -> std::convertible_to<double>;
};

}  // namespace tailkit
