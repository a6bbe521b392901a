#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "dwlab/dist.hpp"
#include "dwlab/hypothesis.hpp"
#include "dwlab/limits.hpp"
#include "dwlab/model.hpp"

namespace dwlab {

/// Tolerances used to judge the empirical checks. Reported alongside results.
namespace tolerance {
inline constexpr double kKs = 0.05;
inline constexpr double kCovRelative = 0.10;
inline constexpr double kCovAbsolute = 0.05;
inline constexpr double kQslRelative = 0.30;
inline constexpr double kLilSdMultiple = 3.0;
inline constexpr double kLilMaxFraction = 0.05;
}  // namespace tolerance

/// Burn-in for the quadratic-strong-law sums.
inline constexpr std::size_t kQslBurnIn = 100;

struct McConfig {
    ModelParams params;
    NoiseSpec noise;
    std::size_t n = 1000;
    std::size_t replicates = 100;
    std::uint64_t base_seed = 0;
    double alpha = 0.05;
    /// Worker cap (0 = DW_LAB_THREADS or hardware). Never affects results.
    unsigned threads = 0;
};

/// Throws unless the parameters are valid, n >= 100 and replicates >= 1.
void validate_config(const McConfig& cfg);

enum class Statistic { Theta, Rho, Dw };
std::string_view to_string(Statistic s) noexcept;

struct ReplicateSummary {
    std::uint64_t seed = 0;
    double theta_hat = 0.0;
    double rho_hat = 0.0;
    double sigma2_hat = 0.0;
    double dw = 0.0;
    double theta_sq_hat = 0.0;
};

struct McReport {
    AsymptoticSet limits;
    std::vector<ReplicateSummary> estimates;
    /// sqrt(n)(estimate - limit) / asymptotic sd; empty when that sd is zero.
    std::vector<double> z_theta;
    std::vector<double> z_rho;
    std::vector<double> z_dw;
    std::optional<KsResult> ks_theta;
    std::optional<KsResult> ks_rho;
    std::optional<KsResult> ks_dw;
    /// Sample covariance of sqrt(n)(theta_hat - theta*, rho_hat - rho*);
    /// NaN entries with a single replicate.
    Matrix2 sample_cov{};
};

/// Replicate i is simulated from derive_seed(base_seed, i).
McReport run_replications(const McConfig& cfg);

/// True when every entry is within max(10% relative, 0.05 absolute) of the target.
bool covariance_within_tolerance(const Matrix2& sample, const Matrix2& target);

struct SizePowerResult {
    TestKind kind = TestKind::RhoEqualsZero;
    std::optional<double> rho0;
    double alpha = 0.05;
    std::size_t rejections = 0;
    std::size_t replicates = 0;
    double rejection_rate = 0.0;
    std::vector<double> statistics;
};

/// Fraction of replicates rejecting at cfg.alpha. `rho0` is required for
/// TestKind::RhoEqualsRho0 and ignored otherwise.
SizePowerResult empirical_size_power(TestKind kind, const McConfig& cfg, std::optional<double> rho0 = std::nullopt);

struct QslResult {
    Statistic which = Statistic::Theta;
    std::size_t k0 = kQslBurnIn;
    double target = 0.0;  ///< asymptotic variance of the statistic
    /// Per path: sum_{k=k0}^n (est_k - limit)^2 / log(n / k0).
    std::vector<double> values;
    /// Per path: the same sum divided by log n.
    std::vector<double> raw_values;
    double mean = 0.0;
    double raw_mean = 0.0;
};

/// Quadratic strong law sums over cfg.replicates paths. Requires n >= 10^4.
QslResult qsl_check(const McConfig& cfg, Statistic which, std::size_t k0 = kQslBurnIn);
/// All three statistics from the same paths.
std::array<QslResult, 3> qsl_check_all(const McConfig& cfg, std::size_t k0 = kQslBurnIn);

/// (m / (2 log log m))^{1/2} |estimate - limit|. Requires m >= 3.
double lil_normalized_deviation(double estimate, double limit, std::size_t m);

struct LilResult {
    Statistic which = Statistic::Theta;
    std::vector<std::size_t> checkpoints;
    /// normalized[path][c] at checkpoints[c].
    std::vector<std::vector<double>> normalized;
    double envelope = 0.0;  ///< 3 x asymptotic sd
    std::size_t exceedances = 0;
    std::size_t pairs = 0;
    double exceedance_fraction = 0.0;
};

/// Envelope check at fixed checkpoints; not an estimate of the limsup.
/// Requires every checkpoint in [4, n].
LilResult lil_envelope_check(const McConfig& cfg, Statistic which, std::span<const std::size_t> checkpoints);
std::array<LilResult, 3> lil_envelope_check_all(const McConfig& cfg, std::span<const std::size_t> checkpoints);

}  // namespace dwlab
