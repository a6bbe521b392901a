#include "dwlab/recovery.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dwlab/error.hpp"

namespace dwlab {

std::string_view to_string(RootConvention c) noexcept {
    return c == RootConvention::ThetaLess ? "theta_less" : "theta_greater";
}

RootConvention parse_root_convention(std::string_view name) {
    if (name == "theta-less" || name == "theta_less") return RootConvention::ThetaLess;
    if (name == "theta-greater" || name == "theta_greater") return RootConvention::ThetaGreater;
    throw Error(ErrorKind::DomainError, "convention", "expected theta-less or theta-greater");
}

RecoveredParams solve_sum_product(double s_hat, double p_hat, RootConvention convention) {
    RecoveredParams r;
    r.convention = convention;
    r.s_hat = s_hat;
    r.p_hat = p_hat;
    double disc = r.s_hat * r.s_hat - 4.0 * r.p_hat;
    if (disc < 0.0) {
        if (disc <= -kDiscriminantClamp) {
            throw Error(ErrorKind::NegativeDiscriminant, "s_hat^2 - 4 p_hat",
                        "no real (theta, rho) pair matches the estimates");
        }
        disc = 0.0;
    }
    const double root = std::sqrt(disc);
    // Cancellation-free pair: the larger-magnitude root first, the other via Vieta.
    double lower = 0.0;
    double upper = 0.0;
    if (root == 0.0 && r.s_hat == 0.0) {
        lower = upper = 0.0;
    } else {
        const double big = r.s_hat >= 0.0 ? 0.5 * (r.s_hat + root) : 0.5 * (r.s_hat - root);
        const double small = r.p_hat / big;
        lower = std::min(big, small);
        upper = std::max(big, small);
    }
    if (convention == RootConvention::ThetaLess) {
        r.theta_rec = lower;
        r.rho_rec = upper;
    } else {
        r.theta_rec = upper;
        r.rho_rec = lower;
    }
    r.out_of_region = !(std::abs(lower) < 1.0 && std::abs(upper) < 1.0);
    return r;
}

RecoveredParams recover_params(double theta_hat, double rho_hat, RootConvention convention) {
    if (!(std::abs(theta_hat) > 1e-8)) {
        throw Error(ErrorKind::ThetaNearZero, "theta_hat", "rho_hat / theta_hat is undefined");
    }
    return solve_sum_product(theta_hat + rho_hat, rho_hat / theta_hat, convention);
}

double recover_sigma2(double theta_hat, double rho_hat, double sigma2_hat) {
    if (!(std::abs(theta_hat) > 1e-8)) {
        throw Error(ErrorKind::ThetaNearZero, "theta_hat", "rho_hat / theta_hat is undefined");
    }
    const double s = theta_hat + rho_hat;
    const double p = rho_hat / theta_hat;
    const double one_plus = 1.0 + p;
    const double den = one_plus * one_plus - (s * p) * (s * p);
    if (one_plus == 0.0 || !(den > 0.0)) {
        throw Error(ErrorKind::DegenerateDenominator, "(1 + p)^2 - (s p)^2", "correction factor undefined");
    }
    return (1.0 - p) * one_plus * one_plus * one_plus / den * sigma2_hat;
}

}  // namespace dwlab
