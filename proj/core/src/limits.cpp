#include "dwlab/limits.hpp"

#include <cmath>

#include "dwlab/error.hpp"

namespace dwlab {

namespace {

void check_sigma2(double sigma2) {
    if (!(sigma2 > 0.0) || !std::isfinite(sigma2)) {
        throw Error(ErrorKind::OutOfRegion, "sigma2", "sigma2 must be positive");
    }
}

}  // namespace

void check_region(double theta, double rho) {
    if (!(std::abs(theta) < kRegionBound)) {
        throw Error(ErrorKind::OutOfRegion, "theta", "|theta| must be < 1 - 1e-9");
    }
    if (!(std::abs(rho) < kRegionBound)) {
        throw Error(ErrorKind::OutOfRegion, "rho", "|rho| must be < 1 - 1e-9");
    }
}

double theta_star(double theta, double rho) {
    check_region(theta, rho);
    return (theta + rho) / (1.0 + theta * rho);
}

double rho_star(double theta, double rho) {
    return theta * rho * theta_star(theta, rho);
}

double d_star(double theta, double rho) {
    return 2.0 * (1.0 - rho_star(theta, rho));
}

namespace unchecked {

double var_theta(double theta, double rho) noexcept {
    const double tr = theta * rho;
    const double denom = (1.0 + tr) * (1.0 + tr) * (1.0 + tr);
    return (1.0 - theta * theta) * (1.0 - tr) * (1.0 - rho * rho) / denom;
}

double var_rho(double theta, double rho) noexcept {
    const double tr = theta * rho;
    const double sum = theta + rho;
    const double one_plus = 1.0 + tr;
    const double bracket = sum * sum * one_plus * one_plus + tr * tr * (1.0 - theta * theta) * (1.0 - rho * rho);
    return (1.0 - tr) / (one_plus * one_plus * one_plus) * bracket;
}

Matrix2 gamma_matrix(double theta, double rho) noexcept {
    const double vt = var_theta(theta, rho);
    const double off = theta * rho * vt;
    return {{{vt, off}, {off, var_rho(theta, rho)}}};
}

}  // namespace unchecked

double var_theta(double theta, double rho) {
    check_region(theta, rho);
    return unchecked::var_theta(theta, rho);
}

double var_rho(double theta, double rho) {
    check_region(theta, rho);
    return unchecked::var_rho(theta, rho);
}

double var_d(double theta, double rho) {
    return 4.0 * var_rho(theta, rho);
}

Matrix2 gamma_matrix(double theta, double rho) {
    check_region(theta, rho);
    return unchecked::gamma_matrix(theta, rho);
}

double determinant(const Matrix2& m) noexcept {
    return m[0][0] * m[1][1] - m[0][1] * m[1][0];
}

double ell(double theta, double rho, double sigma2) {
    check_region(theta, rho);
    check_sigma2(sigma2);
    const double tr = theta * rho;
    return sigma2 * (1.0 + tr) / ((1.0 - theta * theta) * (1.0 - tr) * (1.0 - rho * rho));
}

double ell1(double theta, double rho, double sigma2) {
    return theta_star(theta, rho) * ell(theta, rho, sigma2);
}

double ell2(double theta, double rho, double sigma2) {
    check_region(theta, rho);
    check_sigma2(sigma2);
    const double tr = theta * rho;
    const double sum = theta + rho;
    return sigma2 * (sum * sum - tr * (1.0 + tr)) / ((1.0 - theta * theta) * (1.0 - tr) * (1.0 - rho * rho));
}

double sigma_hat_limit(double theta, double rho, double sigma2) {
    check_region(theta, rho);
    check_sigma2(sigma2);
    const double tr = theta * rho;
    const double sum = theta + rho;
    const double one_plus = 1.0 + tr;
    return sigma2 * (one_plus * one_plus - tr * tr * sum * sum) / ((1.0 - tr) * one_plus * one_plus * one_plus);
}

AsymptoticSet asymptotics(double theta, double rho, double sigma2) {
    AsymptoticSet a;
    a.theta_star = theta_star(theta, rho);
    a.rho_star = rho_star(theta, rho);
    a.d_star = d_star(theta, rho);
    a.var_theta = var_theta(theta, rho);
    a.var_rho = var_rho(theta, rho);
    a.var_d = var_d(theta, rho);
    a.gamma = gamma_matrix(theta, rho);
    a.ell = ell(theta, rho, sigma2);
    a.ell1 = ell1(theta, rho, sigma2);
    a.ell2 = ell2(theta, rho, sigma2);
    a.sigma_hat_limit = sigma_hat_limit(theta, rho, sigma2);
    return a;
}

}  // namespace dwlab
