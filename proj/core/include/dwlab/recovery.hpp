#pragma once

#include <string_view>

namespace dwlab {

/// Which root of the quadratic is reported as theta.
enum class RootConvention { ThetaLess, ThetaGreater };

std::string_view to_string(RootConvention c) noexcept;
RootConvention parse_root_convention(std::string_view name);

/// (theta, rho) recovered from the limits of theta_hat and rho_hat through
/// theta + rho = s_hat and theta * rho = p_hat.
struct RecoveredParams {
    double theta_rec = 0.0;
    double rho_rec = 0.0;
    RootConvention convention = RootConvention::ThetaLess;
    double s_hat = 0.0;  ///< theta_hat + rho_hat
    double p_hat = 0.0;  ///< rho_hat / theta_hat
    bool out_of_region = false;  ///< a root lies outside (-1, 1)
};

/// Discriminants in (-1e-10, 0) are treated as a double root.
inline constexpr double kDiscriminantClamp = 1e-10;

/// Roots of z^2 - s z + p = 0 assigned per `convention`.
/// NegativeDiscriminant when they are complex.
RecoveredParams solve_sum_product(double s_hat, double p_hat, RootConvention convention = RootConvention::ThetaLess);

/// ThetaNearZero when |theta_hat| <= 1e-8; NegativeDiscriminant when the
/// quadratic has complex roots.
RecoveredParams recover_params(double theta_hat, double rho_hat, RootConvention convention = RootConvention::ThetaLess);

/// Undoes the bias of sigma_hat^2:
/// ((1 - p)(1 + p)^3 / ((1 + p)^2 - (s p)^2)) * sigma2_hat.
double recover_sigma2(double theta_hat, double rho_hat, double sigma2_hat);

}  // namespace dwlab
