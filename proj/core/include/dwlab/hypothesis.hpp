#pragma once

#include <optional>
#include <string_view>

#include "dwlab/estimators.hpp"
#include "dwlab/limits.hpp"
#include "dwlab/model.hpp"

namespace dwlab {

enum class TestKind { CriticalCase, RhoEqualsRho0, RhoEqualsZero };

std::string_view to_string(TestKind kind) noexcept;

/// Bilateral chi-square(1) decision: accept on [0, z_alpha], reject above it.
struct TestOutcome {
    TestKind kind = TestKind::RhoEqualsZero;
    double statistic = 0.0;
    double threshold = 0.0;  ///< z_alpha, the (1 - alpha)-quantile of chi2(1)
    double alpha = 0.05;
    bool reject = false;
    double p_value = 1.0;
};

/// Plug-in quantities of the H0: rho = rho0 test. `a_w`/`b_w` are the
/// components of the weight vector w_hat.
struct TestWeights {
    double a_w = 0.0;
    double b_w = 0.0;
    double theta_tilde = 0.0;
    double rho_tilde = 0.0;
    double d_tilde = 0.0;
    double alpha_hat = 0.0;
    double beta_hat = 0.0;
    Matrix2 gamma_hat{};
    double tau2 = 0.0;
};

struct RhoTestResult {
    TestOutcome outcome;
    TestWeights weights;
};

/// Both stages of the automatic procedure: a preliminary theta = -rho test,
/// then either the critical-case statistic with rho0^2 substituted for the
/// estimate of theta^2 (preliminary accepted) or the rho = rho0 test.
struct AutoTestResult {
    std::optional<TestOutcome> preliminary;  ///< empty when the preliminary statistic is degenerate
    TestOutcome outcome;
    std::optional<TestWeights> weights;      ///< set when the rho = rho0 test ran
    bool critical_branch = false;
};

inline constexpr double kTauEpsilon = 1e-12;
inline constexpr double kThetaEpsilon = 1e-8;

/// Assembles an outcome from a statistic; DomainError unless 0 < alpha < 1.
TestOutcome make_outcome(TestKind kind, double statistic, double alpha);

/// n (1 - t) / (4 t^2 (1 + t)) (D_hat - 2)^2 where t estimates theta^2.
/// DegenerateStatistic unless 0 < t < 1.
double critical_case_statistic(std::size_t n, double theta_sq, double dw);

/// H0: theta = -rho, using the least-squares estimate of theta^2.
TestOutcome critical_case_test(const EstimateSet& est, double alpha);
TestOutcome critical_case_test(const Path& path, double alpha);

/// Weights for H0: rho = rho0. With rho0 == 0 the variance uses theta_hat in
/// place of theta_tilde, which reduces tau2 to 4 theta_hat^2.
TestWeights rho_test_weights(double theta_hat, double rho_hat, double rho0);

/// H0: rho = rho0. DomainError when |rho0| >= 1, DegenerateTau when tau2 <= 1e-12.
RhoTestResult rho_test(const EstimateSet& est, double rho0, double alpha);
RhoTestResult rho_test(const Path& path, double rho0, double alpha);

/// H0: rho = 0, statistic n / (4 theta_hat^2) (D_hat - 2)^2.
/// DegenerateTheta when |theta_hat| <= 1e-8.
TestOutcome rho_zero_test(const EstimateSet& est, double alpha);
TestOutcome rho_zero_test(const Path& path, double alpha);

AutoTestResult auto_test(const EstimateSet& est, double rho0, double alpha);
AutoTestResult auto_test(const Path& path, double rho0, double alpha);

}  // namespace dwlab
