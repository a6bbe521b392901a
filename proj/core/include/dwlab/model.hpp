#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace dwlab {

/// Ground-truth parameters of the AR(1) process driven by AR(1) noise:
///   X_k = theta X_{k-1} + eps_k,   eps_k = rho eps_{k-1} + V_k.
struct ModelParams {
    double theta = 0.0;
    double rho = 0.0;
    double sigma2 = 1.0;  ///< variance of V
    double x0 = 0.0;
    double eps0 = 0.0;
};

enum class NoiseKind { Gaussian, Uniform, Rademacher };

std::string_view to_string(NoiseKind kind) noexcept;
NoiseKind parse_noise_kind(std::string_view name);

/// Zero-mean noise with variance sigma2 and a finite fourth moment.
struct NoiseSpec {
    NoiseKind kind = NoiseKind::Gaussian;
    double sigma2 = 1.0;
};

/// Largest path length accepted by `simulate`.
inline constexpr std::size_t kMaxPathLength = 2147483647;

/// Throws Error(OutOfRegion, field) unless |theta| < 1, |rho| < 1, sigma2 > 0.
void validate_params(const ModelParams& p);

/// A realization X_0..X_n, immutable once built. Simulated paths also carry
/// eps_0..eps_n and V_1..V_n; ingested paths carry only x.
class Path {
public:
    /// Observed series only. Requires at least two values.
    explicit Path(std::vector<double> x);
    /// Series with its latent noise. Sizes must be x.size() == eps.size() == v.size() + 1.
    Path(std::vector<double> x, std::vector<double> eps, std::vector<double> v, ModelParams params);

    std::span<const double> x() const noexcept { return x_; }
    /// Index of the last observation.
    std::size_t n() const noexcept { return x_.size() - 1; }

    bool has_latent() const noexcept { return eps_.has_value(); }
    /// eps_0..eps_n; empty for ingested paths.
    std::span<const double> eps() const noexcept;
    /// V_1..V_n stored at offsets 0..n-1; empty for ingested paths.
    std::span<const double> v() const noexcept;
    const std::optional<ModelParams>& params() const noexcept { return params_; }

private:
    std::vector<double> x_;
    std::optional<std::vector<double>> eps_;
    std::optional<std::vector<double>> v_;
    std::optional<ModelParams> params_;
};

/// Draws V_1..V_n from `noise` with a generator seeded by `seed`.
std::vector<double> draw_noise(const NoiseSpec& noise, std::size_t n, std::uint64_t seed);

/// Builds a path from explicit innovations V_1..V_n (params.sigma2 is not used).
Path simulate_from_innovations(const ModelParams& p, std::vector<double> v);

/// Deterministic in (p, noise, n, seed). Requires n >= 2 and
/// p.sigma2 == noise.sigma2 (DomainError otherwise).
Path simulate(const ModelParams& p, const NoiseSpec& noise, std::size_t n, std::uint64_t seed);

}  // namespace dwlab
