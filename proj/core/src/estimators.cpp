#include "dwlab/estimators.hpp"

#include <string>

#include "dwlab/error.hpp"

namespace dwlab {

namespace {

void require_length(std::span<const double> x, std::size_t min_size, const char* what) {
    if (x.size() < min_size) {
        throw Error(ErrorKind::TooShort, what, "need at least " + std::to_string(min_size) + " values");
    }
}

double checked_ratio(double numerator, double denominator, const char* what) {
    if (!(denominator > 0.0)) {
        throw Error(ErrorKind::DegenerateDenominator, what, "sum of squares is zero");
    }
    return numerator / denominator;
}

}  // namespace

CumulativeStats cumulative_stats(std::span<const double> x, double theta_hat) {
    require_length(x, 3, "x");
    const std::size_t n = x.size() - 1;
    CumulativeStats c;
    double prev_res = x[0];
    const double res0 = x[0];
    c.s = x[0] * x[0];
    c.j = res0 * res0;
    for (std::size_t k = 1; k <= n; ++k) {
        const double res = x[k] - theta_hat * x[k - 1];
        c.s += x[k] * x[k];
        c.p += x[k] * x[k - 1];
        if (k >= 2) c.q += x[k] * x[k - 2];
        c.i += res * prev_res;
        c.j += res * res;
        const double diff = res - prev_res;
        c.kq += diff * diff;
        prev_res = res;
    }
    if (!(c.j > 0.0)) throw Error(ErrorKind::DegenerateDenominator, "J", "residuals are identically zero");
    c.f = prev_res * prev_res / c.j;
    c.xi = (prev_res * prev_res - res0 * res0) / c.j;
    return c;
}

CumulativeStats cumulative_stats(const Path& path, double theta_hat) {
    CumulativeStats c = cumulative_stats(path.x(), theta_hat);
    if (path.has_latent()) {
        const auto x = path.x();
        const auto v = path.v();  // v[k - 1] holds V_k
        double m = 0.0;
        double nn = 0.0;
        for (std::size_t k = 1; k < x.size(); ++k) {
            m += x[k - 1] * v[k - 1];
            if (k >= 2) nn += x[k - 2] * v[k - 1];
        }
        c.m = m;
        c.nn = nn;
    }
    return c;
}

double estimate_theta(std::span<const double> x) {
    require_length(x, 2, "x");
    double num = 0.0;
    double den = 0.0;
    for (std::size_t k = 1; k < x.size(); ++k) {
        num += x[k] * x[k - 1];
        den += x[k - 1] * x[k - 1];
    }
    return checked_ratio(num, den, "sum X_{k-1}^2");
}

std::vector<double> residuals(std::span<const double> x, double theta_hat) {
    std::vector<double> res(x.size());
    if (x.empty()) return res;
    res[0] = x[0];
    for (std::size_t k = 1; k < x.size(); ++k) {
        res[k] = x[k] - theta_hat * x[k - 1];
    }
    return res;
}

double estimate_rho(std::span<const double> residuals) {
    require_length(residuals, 2, "residuals");
    double num = 0.0;
    double den = 0.0;
    for (std::size_t k = 1; k < residuals.size(); ++k) {
        num += residuals[k] * residuals[k - 1];
        den += residuals[k - 1] * residuals[k - 1];
    }
    return checked_ratio(num, den, "sum eps_hat_{k-1}^2");
}

double estimate_sigma2(std::span<const double> residuals, double rho_hat) {
    require_length(residuals, 2, "residuals");
    double sum = 0.0;
    for (std::size_t k = 1; k < residuals.size(); ++k) {
        const double v = residuals[k] - rho_hat * residuals[k - 1];
        sum += v * v;
    }
    return sum / static_cast<double>(residuals.size() - 1);
}

double dw_statistic(std::span<const double> residuals) {
    require_length(residuals, 2, "residuals");
    double num = 0.0;
    double den = residuals[0] * residuals[0];
    for (std::size_t k = 1; k < residuals.size(); ++k) {
        const double diff = residuals[k] - residuals[k - 1];
        num += diff * diff;
        den += residuals[k] * residuals[k];
    }
    return checked_ratio(num, den, "sum eps_hat_k^2");
}

double estimate_theta_sq(std::span<const double> x) {
    require_length(x, 3, "x");
    double num = 0.0;
    double den = 0.0;
    for (std::size_t k = 2; k < x.size(); ++k) {
        num += x[k - 2] * x[k];
        den += x[k - 2] * x[k - 2];
    }
    return checked_ratio(num, den, "sum X_{k-2}^2");
}

EstimateSet estimate(std::span<const double> x) {
    require_length(x, 4, "x");
    EstimateSet e;
    e.n = x.size() - 1;
    e.theta_hat = estimate_theta(x);
    e.residuals = residuals(x, e.theta_hat);
    e.rho_hat = estimate_rho(e.residuals);
    e.sigma2_hat = estimate_sigma2(e.residuals, e.rho_hat);
    e.dw = dw_statistic(e.residuals);
    e.theta_sq_hat = estimate_theta_sq(x);
    return e;
}

EstimateSet estimate(const Path& path) {
    return estimate(path.x());
}

Trajectories running_estimates(std::span<const double> x, std::size_t k0) {
    if (k0 < 3) throw Error(ErrorKind::DomainError, "k0", "burn-in must be at least 3");
    require_length(x, k0 + 1, "x");
    const std::size_t n = x.size() - 1;

    Trajectories t;
    t.k0 = k0;
    t.theta.reserve(n - k0 + 1);
    t.rho.reserve(n - k0 + 1);
    t.dw.reserve(n - k0 + 1);

    const double x0_sq = x[0] * x[0];
    // Running sums at the current step k and the two before it.
    double s_prev2 = x0_sq;                        // S_{k-2}
    double s_prev = s_prev2 + x[1] * x[1];         // S_{k-1}
    double p_prev = x[1] * x[0];                   // P_{k-1}
    double q = 0.0;                                // Q_k
    for (std::size_t k = 2; k <= n; ++k) {
        const double s = s_prev + x[k] * x[k];
        const double p = p_prev + x[k] * x[k - 1];
        q += x[k] * x[k - 2];
        if (k >= k0) {
            const double th = checked_ratio(p, s_prev, "S_{k-1}");
            const double i = p - th * (s_prev + q) + th * th * p_prev;
            const double j_prev = s_prev - 2.0 * th * p_prev + th * th * s_prev2;
            const double j = s - 2.0 * th * p + th * th * s_prev;
            const double last = x[k] - th * x[k - 1];
            const double kq = 2.0 * (j_prev - i) + last * last - x0_sq;
            t.theta.push_back(th);
            t.rho.push_back(checked_ratio(i, j_prev, "J_{k-1}"));
            t.dw.push_back(checked_ratio(kq, j, "J_k"));
        }
        s_prev2 = s_prev;
        s_prev = s;
        p_prev = p;
    }
    return t;
}

}  // namespace dwlab
