#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "dwlab/model.hpp"

namespace dwlab {

/// Running sums over a path X_0..X_n and its first-stage residuals
/// eps_hat_k = X_k - theta_hat X_{k-1} (eps_hat_0 = X_0).
struct CumulativeStats {
    double s = 0.0;   ///< sum_{k=0}^n X_k^2
    double p = 0.0;   ///< sum_{k=1}^n X_k X_{k-1}
    double q = 0.0;   ///< sum_{k=2}^n X_k X_{k-2}
    std::optional<double> m;   ///< sum_{k=1}^n X_{k-1} V_k, latent paths only
    std::optional<double> nn;  ///< sum_{k=2}^n X_{k-2} V_k, latent paths only
    double i = 0.0;   ///< sum_{k=1}^n eps_hat_k eps_hat_{k-1}
    double j = 0.0;   ///< sum_{k=0}^n eps_hat_k^2
    double kq = 0.0;  ///< sum_{k=1}^n (eps_hat_k - eps_hat_{k-1})^2
    double f = 0.0;   ///< eps_hat_n^2 / J_n
    double xi = 0.0;  ///< (eps_hat_n^2 - eps_hat_0^2) / J_n
};

/// Finite-sample statistics for one series.
struct EstimateSet {
    double theta_hat = 0.0;
    double rho_hat = 0.0;
    double sigma2_hat = 0.0;
    double dw = 0.0;
    double theta_sq_hat = 0.0;
    std::vector<double> residuals;  ///< eps_hat_0..eps_hat_n
    std::size_t n = 0;
};

/// Estimates along the path for k = k0..n; element i corresponds to k0 + i.
struct Trajectories {
    std::size_t k0 = 0;
    std::vector<double> theta;
    std::vector<double> rho;
    std::vector<double> dw;

    std::size_t last_k() const noexcept { return k0 + theta.size() - 1; }
};

inline constexpr std::size_t kDefaultTrajectoryBurnIn = 10;

/// Single pass over the path. Requires at least three observations; m and nn
/// are filled only when the path carries its innovations.
CumulativeStats cumulative_stats(const Path& path, double theta_hat);
CumulativeStats cumulative_stats(std::span<const double> x, double theta_hat);

/// Least-squares slope of X_k on X_{k-1}.
double estimate_theta(std::span<const double> x);

/// eps_hat_0 = X_0, eps_hat_k = X_k - theta_hat X_{k-1}.
std::vector<double> residuals(std::span<const double> x, double theta_hat);

/// Least-squares slope of eps_hat_k on eps_hat_{k-1}.
double estimate_rho(std::span<const double> residuals);

/// Mean of V_hat_k^2 = (eps_hat_k - rho_hat eps_hat_{k-1})^2 over k = 1..n.
double estimate_sigma2(std::span<const double> residuals, double rho_hat);

/// Durbin-Watson statistic of a residual sequence.
double dw_statistic(std::span<const double> residuals);

/// Least-squares slope of X_k on X_{k-2}; estimates theta^2 when theta = -rho.
double estimate_theta_sq(std::span<const double> x);

/// All of the above. Requires n >= 3, i.e. at least four observations.
EstimateSet estimate(std::span<const double> x);
EstimateSet estimate(const Path& path);

/// O(n) trajectories of theta_hat_k, rho_hat_k and D_hat_k, where the residuals
/// at step k are built from theta_hat_k. Requires k0 >= 3 and n >= k0.
Trajectories running_estimates(std::span<const double> x, std::size_t k0 = kDefaultTrajectoryBurnIn);

}  // namespace dwlab
