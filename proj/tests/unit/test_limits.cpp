#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "dwlab/limits.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace dwlab;

namespace {

const std::vector<double> kGrid = {-0.9, -0.6, -0.25, 0.0, 0.1, 0.45, 0.8, 0.9};

}  // namespace

TEST(Limits, ExactRationalValues) {
    // (0.5, 0.3): theta* = 16/23, rho* = 12/115, D* = 206/115,
    // var_theta = 4641/12167, var_rho = 2343977/4866800.
    EXPECT_NEAR(theta_star(0.5, 0.3), 16.0 / 23.0, 1e-15);
    EXPECT_NEAR(rho_star(0.5, 0.3), 12.0 / 115.0, 1e-15);
    EXPECT_NEAR(d_star(0.5, 0.3), 206.0 / 115.0, 1e-15);
    EXPECT_NEAR(var_theta(0.5, 0.3), 4641.0 / 12167.0, 1e-15);
    EXPECT_NEAR(var_rho(0.5, 0.3), 2343977.0 / 4866800.0, 1e-15);
    EXPECT_NEAR(var_d(0.5, 0.3), 4.0 * 2343977.0 / 4866800.0, 1e-14);
    EXPECT_NEAR(ell(0.5, 0.3, 1.0), 9200.0 / 4641.0, 1e-14);
    EXPECT_NEAR(ell1(0.5, 0.3, 1.0), 6400.0 / 4641.0, 1e-14);
    EXPECT_NEAR(ell2(0.5, 0.3, 1.0), 220.0 / 273.0, 1e-14);
    EXPECT_NEAR(sigma_hat_limit(0.5, 0.3, 1.0), 209296.0 / 206839.0, 1e-14);
    EXPECT_NEAR(determinant(gamma_matrix(0.5, 0.3)), 1262352.0 / 6996025.0, 1e-15);
}

TEST(Limits, QuotedSixDigitValues) {
    const auto a = asymptotics(0.5, 0.3);
    EXPECT_NEAR(a.theta_star, 0.695652, 5e-7);
    EXPECT_NEAR(a.rho_star, 0.104348, 5e-7);
    EXPECT_NEAR(a.d_star, 1.791304, 5e-7);
    EXPECT_NEAR(a.sigma_hat_limit, 1.011879, 5e-7);
}

TEST(Limits, CriticalLineSpecialization) {
    // theta = -rho: theta* = rho* = 0, D* = 2, var_theta = (1 + theta^2)/(1 - theta^2),
    // var_rho = theta^4 (1 + theta^2)/(1 - theta^2).
    for (double t : {0.1, 0.4, 0.85}) {
        const auto a = asymptotics(t, -t);
        EXPECT_EQ(a.theta_star, 0.0);
        EXPECT_EQ(a.rho_star, 0.0);
        EXPECT_EQ(a.d_star, 2.0);
        EXPECT_NEAR(a.var_theta, (1 + t * t) / (1 - t * t), 1e-14);
        EXPECT_NEAR(a.var_rho, std::pow(t, 4) * (1 + t * t) / (1 - t * t), 1e-14);
        // Exact zero up to cancellation in the 2x2 determinant.
        EXPECT_NEAR(determinant(a.gamma), 0.0, 1e-14 * a.var_theta * a.var_theta);
    }
    EXPECT_NEAR(var_theta(0.4, -0.4), 29.0 / 21.0, 1e-15);
    EXPECT_NEAR(var_rho(0.4, -0.4), 464.0 / 13125.0, 1e-15);
}

TEST(Limits, RhoZeroReducesToPlainAr1) {
    for (double t : {-0.8, 0.2, 0.7}) {
        EXPECT_NEAR(theta_star(t, 0.0), t, 1e-16);
        EXPECT_NEAR(var_theta(t, 0.0), 1 - t * t, 1e-15);
        EXPECT_NEAR(var_rho(t, 0.0), t * t, 1e-15);
        EXPECT_NEAR(sigma_hat_limit(t, 0.0, 2.5), 2.5, 1e-14);
    }
}

TEST(Limits, MatchesSeriesOracleOnGrid) {
    for (double t : kGrid) {
        for (double r : kGrid) {
            const auto a = asymptotics(t, r, 1.7);
            const auto o = oracle::limits(t, r, 1.7L);
            SCOPED_TRACE(::testing::Message() << "theta=" << t << " rho=" << r);
            EXPECT_NEAR(a.ell, static_cast<double>(o.ell), 1e-12 * static_cast<double>(o.ell));
            EXPECT_NEAR(a.ell1, static_cast<double>(o.ell1), 1e-12 * static_cast<double>(o.ell));
            EXPECT_NEAR(a.ell2, static_cast<double>(o.ell2), 1e-12 * static_cast<double>(o.ell));
            EXPECT_NEAR(a.theta_star, static_cast<double>(o.theta_star), 1e-12);
            EXPECT_NEAR(a.rho_star, static_cast<double>(o.rho_star), 1e-12);
            EXPECT_NEAR(a.d_star, static_cast<double>(o.d_star), 1e-12);
            EXPECT_NEAR(a.sigma_hat_limit, static_cast<double>(o.sigma_hat), 1e-11);
            // Bartlett sums converge slowly near the unit circle.
            const double tol = (std::abs(t) >= 0.9 || std::abs(r) >= 0.9) ? 1e-7 : 1e-10;
            for (std::size_t i = 0; i < 2; ++i) {
                for (std::size_t j = 0; j < 2; ++j) {
                    EXPECT_NEAR(a.gamma[i][j], static_cast<double>(o.gamma[i][j]), tol) << i << j;
                }
            }
        }
    }
}

TEST(Limits, SymmetricInThetaAndRho) {
    for (double t : kGrid) {
        for (double r : kGrid) {
            EXPECT_NEAR(theta_star(t, r), theta_star(r, t), 1e-15);
            EXPECT_NEAR(rho_star(t, r), rho_star(r, t), 1e-15);
            EXPECT_NEAR(var_theta(t, r), var_theta(r, t), 1e-14);
            EXPECT_NEAR(var_rho(t, r), var_rho(r, t), 1e-14);
            EXPECT_NEAR(ell(t, r, 1.0), ell(r, t, 1.0), 1e-12 * ell(t, r, 1.0));
        }
    }
}

TEST(Limits, GammaPositiveSemidefiniteWithClosedDeterminant) {
    for (double t : kGrid) {
        for (double r : kGrid) {
            const Matrix2 g = gamma_matrix(t, r);
            EXPECT_EQ(g[0][1], g[1][0]);
            EXPECT_GT(g[0][0], 0.0);
            EXPECT_GE(g[1][1], 0.0);
            const double det = determinant(g);
            const double tr = t * r;
            const double closed = g[0][0] * (t + r) * (t + r) * (1 - tr) / (1 + tr);
            EXPECT_NEAR(det, closed, 1e-13);
            EXPECT_GE(det, -1e-14 * g[0][0] * g[0][0]);
        }
    }
}

TEST(Limits, ScaleWithSigma2) {
    EXPECT_NEAR(ell(0.3, 0.6, 3.0), 3.0 * ell(0.3, 0.6, 1.0), 1e-13);
    EXPECT_NEAR(ell2(0.3, 0.6, 3.0), 3.0 * ell2(0.3, 0.6, 1.0), 1e-13);
    EXPECT_NEAR(sigma_hat_limit(0.3, 0.6, 3.0), 3.0 * sigma_hat_limit(0.3, 0.6, 1.0), 1e-13);
    EXPECT_EQ(asymptotics(0.3, 0.6, 3.0).var_theta, asymptotics(0.3, 0.6, 1.0).var_theta);
}

TEST(Limits, RegionChecks) {
    EXPECT_DW_ERROR(OutOfRegion, theta_star(1.0, 0.0));
    EXPECT_DW_ERROR(OutOfRegion, var_rho(0.0, -1.0));
    EXPECT_DW_ERROR(OutOfRegion, asymptotics(1.0 - 1e-10, 0.0));
    EXPECT_DW_ERROR(OutOfRegion, ell(0.2, 0.2, 0.0));
    EXPECT_DW_ERROR(OutOfRegion, theta_star(NAN, 0.0));
    EXPECT_NO_THROW(asymptotics(0.999, -0.999));
}

TEST(Limits, UncheckedFormsAgreeInsideRegion) {
    EXPECT_EQ(unchecked::var_theta(0.5, 0.3), var_theta(0.5, 0.3));
    EXPECT_EQ(unchecked::var_rho(0.5, 0.3), var_rho(0.5, 0.3));
    EXPECT_EQ(unchecked::gamma_matrix(0.5, 0.3), gamma_matrix(0.5, 0.3));
}
