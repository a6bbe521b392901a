#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace dwlab {

/// Name recorded in run metadata so a seed can be replayed elsewhere.
inline constexpr std::string_view kRngAlgorithm = "xoshiro256** (splitmix64 seeding, Box-Muller normals)";

/// One step of the splitmix64 sequence. Advances `state`.
std::uint64_t splitmix64(std::uint64_t& state) noexcept;

/// Seed for replicate `index` of a run started from `base_seed`.
/// Injective in `index` for a fixed base.
std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t index) noexcept;

/// xoshiro256** 1.0 (Blackman & Vigna). Satisfies UniformRandomBitGenerator,
/// but the library only draws through the portable helpers below.
class Xoshiro256 {
public:
    using result_type = std::uint64_t;

    explicit Xoshiro256(std::uint64_t seed) noexcept;

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return ~result_type{0}; }

    result_type operator()() noexcept;

    /// Uniform on [0, 1) with 53 random bits.
    double uniform01() noexcept;
    /// Standard normal; Box-Muller with the second variate cached.
    double standard_normal() noexcept;

private:
    std::array<std::uint64_t, 4> s_{};
    double cached_normal_ = 0.0;
    bool has_cached_ = false;
};

}  // namespace dwlab
