#pragma once

#include <array>

namespace dwlab {

using Matrix2 = std::array<std::array<double, 2>, 2>;

/// Inputs with |theta| or |rho| at or beyond this bound are rejected.
inline constexpr double kRegionBound = 1.0 - 1e-9;

/// Closed-form almost-sure limits and asymptotic variances for a stationary
/// parameter pair. Everything here is independent of the noise law except
/// `ell*` and `sigma_hat_limit`, which scale with sigma2.
struct AsymptoticSet {
    double theta_star = 0.0;
    double rho_star = 0.0;
    double d_star = 0.0;
    double var_theta = 0.0;
    double var_rho = 0.0;
    double var_d = 0.0;
    Matrix2 gamma{};
    double ell = 0.0;
    double ell1 = 0.0;
    double ell2 = 0.0;
    double sigma_hat_limit = 0.0;
};

/// Throws Error(OutOfRegion) unless |theta|, |rho| < kRegionBound.
void check_region(double theta, double rho);

double theta_star(double theta, double rho);
double rho_star(double theta, double rho);
/// Limit of the Durbin-Watson statistic, 2 (1 - rho*).
double d_star(double theta, double rho);

/// Asymptotic variance of sqrt(n)(theta_hat - theta*).
double var_theta(double theta, double rho);
/// Asymptotic variance of sqrt(n)(rho_hat - rho*).
double var_rho(double theta, double rho);
double var_d(double theta, double rho);

/// Joint covariance of sqrt(n)(theta_hat - theta*, rho_hat - rho*).
/// Positive semidefinite, singular exactly when theta = -rho.
Matrix2 gamma_matrix(double theta, double rho);
double determinant(const Matrix2& m) noexcept;

/// lim S_n / n, lim P_n / n and lim Q_n / n.
double ell(double theta, double rho, double sigma2);
double ell1(double theta, double rho, double sigma2);
double ell2(double theta, double rho, double sigma2);

/// Almost-sure limit of the second-stage residual variance sigma_hat_n^2.
double sigma_hat_limit(double theta, double rho, double sigma2);

AsymptoticSet asymptotics(double theta, double rho, double sigma2 = 1.0);

namespace unchecked {
// Same closed forms without the region check; callers plugging in estimates
// that may stray outside (-1, 1) at finite n use these.
double var_theta(double theta, double rho) noexcept;
double var_rho(double theta, double rho) noexcept;
Matrix2 gamma_matrix(double theta, double rho) noexcept;
}  // namespace unchecked

}  // namespace dwlab
