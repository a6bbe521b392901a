#include "dwlab/hypothesis.hpp"

#include <cmath>

#include "dwlab/dist.hpp"
#include "dwlab/error.hpp"

namespace dwlab {

std::string_view to_string(TestKind kind) noexcept {
    switch (kind) {
        case TestKind::CriticalCase: return "critical_case";
        case TestKind::RhoEqualsRho0: return "rho_equals_rho0";
        case TestKind::RhoEqualsZero: return "rho_equals_zero";
    }
    return "unknown";
}

TestOutcome make_outcome(TestKind kind, double statistic, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw Error(ErrorKind::DomainError, "alpha", "alpha must lie in (0, 1)");
    TestOutcome out;
    out.kind = kind;
    out.statistic = statistic;
    out.alpha = alpha;
    out.threshold = chi2_quantile1(1.0 - alpha);
    out.reject = statistic > out.threshold;
    out.p_value = chi2_sf1(statistic);
    return out;
}

double critical_case_statistic(std::size_t n, double theta_sq, double dw) {
    if (!(theta_sq > 0.0 && theta_sq < 1.0)) {
        throw Error(ErrorKind::DegenerateStatistic, "theta_sq",
                    "estimate of theta^2 outside (0, 1); the critical-case test does not apply");
    }
    const double dev = dw - 2.0;
    return static_cast<double>(n) * (1.0 - theta_sq) / (4.0 * theta_sq * theta_sq * (1.0 + theta_sq)) * dev * dev;
}

TestOutcome critical_case_test(const EstimateSet& est, double alpha) {
    const double stat = critical_case_statistic(est.n, est.theta_sq_hat, est.dw);
    return make_outcome(TestKind::CriticalCase, stat, alpha);
}

TestOutcome critical_case_test(const Path& path, double alpha) {
    return critical_case_test(estimate(path), alpha);
}

TestWeights rho_test_weights(double theta_hat, double rho_hat, double rho0) {
    if (!(std::abs(rho0) < 1.0)) throw Error(ErrorKind::DomainError, "rho0", "|rho0| must be < 1");
    TestWeights w;
    w.theta_tilde = theta_hat + rho_hat - rho0;
    const double rt = rho0 * w.theta_tilde;
    w.rho_tilde = rt * (w.theta_tilde + rho0) / (1.0 + rt);
    w.d_tilde = 2.0 * (1.0 - w.rho_tilde);
    w.a_w = -rho0 * (2.0 * theta_hat + rho_hat - rho0);
    w.b_w = 1.0 - rho0 * theta_hat;

    // Under rho0 = 0 the variance is evaluated at theta_hat rather than theta_tilde.
    const double theta_var = rho0 == 0.0 ? theta_hat : w.theta_tilde;
    w.gamma_hat = unchecked::gamma_matrix(theta_var, rho0);
    w.alpha_hat = w.gamma_hat[0][0];
    w.beta_hat = w.gamma_hat[1][1];
    const auto& g = w.gamma_hat;
    const double quad = w.a_w * (g[0][0] * w.a_w + g[0][1] * w.b_w) + w.b_w * (g[1][0] * w.a_w + g[1][1] * w.b_w);
    const double scale = 1.0 + rho0 * theta_var;
    w.tau2 = 4.0 / (scale * scale) * quad;
    return w;
}

RhoTestResult rho_test(const EstimateSet& est, double rho0, double alpha) {
    RhoTestResult r;
    r.weights = rho_test_weights(est.theta_hat, est.rho_hat, rho0);
    if (!(r.weights.tau2 > kTauEpsilon)) {
        throw Error(ErrorKind::DegenerateTau, "tau2",
                    "variance of the statistic vanishes (near theta = -rho); use the critical-case test");
    }
    const double dev = est.dw - r.weights.d_tilde;
    const double stat = static_cast<double>(est.n) / r.weights.tau2 * dev * dev;
    r.outcome = make_outcome(TestKind::RhoEqualsRho0, stat, alpha);
    return r;
}

RhoTestResult rho_test(const Path& path, double rho0, double alpha) {
    return rho_test(estimate(path), rho0, alpha);
}

TestOutcome rho_zero_test(const EstimateSet& est, double alpha) {
    if (!(std::abs(est.theta_hat) > kThetaEpsilon)) {
        throw Error(ErrorKind::DegenerateTheta, "theta_hat", "the rho = 0 test is undefined at theta = 0");
    }
    const double dev = est.dw - 2.0;
    const double stat = static_cast<double>(est.n) / (4.0 * est.theta_hat * est.theta_hat) * dev * dev;
    return make_outcome(TestKind::RhoEqualsZero, stat, alpha);
}

TestOutcome rho_zero_test(const Path& path, double alpha) {
    return rho_zero_test(estimate(path), alpha);
}

AutoTestResult auto_test(const EstimateSet& est, double rho0, double alpha) {
    if (!(std::abs(rho0) < 1.0)) throw Error(ErrorKind::DomainError, "rho0", "|rho0| must be < 1");
    AutoTestResult r;
    try {
        r.preliminary = critical_case_test(est, alpha);
    } catch (const Error& e) {
        // A theta^2 estimate outside (0, 1) is itself evidence against theta = -rho.
        if (e.kind() != ErrorKind::DegenerateStatistic) throw;
    }
    // With rho0 = 0 the substituted statistic is undefined; the rho = 0 test covers it.
    r.critical_branch = r.preliminary.has_value() && !r.preliminary->reject && rho0 != 0.0;
    if (r.critical_branch) {
        const double stat = critical_case_statistic(est.n, rho0 * rho0, est.dw);
        r.outcome = make_outcome(TestKind::CriticalCase, stat, alpha);
    } else {
        auto rt = rho_test(est, rho0, alpha);
        r.outcome = rt.outcome;
        r.weights = rt.weights;
    }
    return r;
}

AutoTestResult auto_test(const Path& path, double rho0, double alpha) {
    return auto_test(estimate(path), rho0, alpha);
}

}  // namespace dwlab
