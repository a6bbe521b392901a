#pragma once

// Reference values computed without the library's closed forms: autocovariances
// from the MA(infinity) weights, Bartlett's formula plus the delta method for the
// asymptotic covariance, Simpson quadrature for the normal law. Everything runs
// in long double.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace oracle {

using real = long double;

/// Neumaier-compensated sum.
class Sum {
public:
    void add(real v) {
        const real t = s_ + v;
        if (std::fabs(s_) >= std::fabs(v)) {
            c_ += (s_ - t) + v;
        } else {
            c_ += (v - t) + s_;
        }
        s_ = t;
    }
    real value() const { return s_ + c_; }

private:
    real s_ = 0.0L;
    real c_ = 0.0L;
};

/// psi_j with X_k = sum_j psi_j V_{k-j}: the convolution of theta^j and rho^j.
inline std::vector<real> psi_weights(real theta, real rho, std::size_t count) {
    std::vector<real> psi(count);
    real tp = 1.0L;
    for (std::size_t j = 0; j < count; ++j) {
        // psi_j = sum_{i=0}^j theta^i rho^{j-i}, built by psi_j = rho psi_{j-1} + theta^j.
        psi[j] = (j == 0 ? 0.0L : rho * psi[j - 1]) + tp;
        tp *= theta;
    }
    return psi;
}

/// Autocovariances gamma(0..max_lag): lags 0-2 from the psi weights, higher lags
/// from the Yule-Walker recursion of the second-order form.
inline std::vector<real> autocovariances(real theta, real rho, real sigma2, std::size_t max_lag,
                                         std::size_t terms = 6000) {
    const auto psi = psi_weights(theta, rho, terms + 2);
    std::vector<real> g(std::max<std::size_t>(max_lag, 2) + 1);
    for (std::size_t h = 0; h <= 2; ++h) {
        Sum s;
        for (std::size_t j = 0; j < terms; ++j) s.add(psi[j] * psi[j + h]);
        g[h] = sigma2 * s.value();
    }
    for (std::size_t h = 3; h < g.size(); ++h) g[h] = (theta + rho) * g[h - 1] - theta * rho * g[h - 2];
    g.resize(max_lag + 1);
    return g;
}

struct Limits {
    real ell, ell1, ell2;
    real theta_star, rho_star, d_star, sigma_hat;
    std::array<std::array<real, 2>, 2> gamma;
};

inline Limits limits(real theta, real rho, real sigma2 = 1.0L) {
    constexpr std::size_t kLags = 3000;
    const auto g = autocovariances(theta, rho, sigma2, kLags + 2);
    Limits out{};
    out.ell = g[0];
    out.ell1 = g[1];
    out.ell2 = g[2];

    const real t = g[1] / g[0];
    out.theta_star = t;
    // Residual e_k = X_k - t X_{k-1}: its lag-0 and lag-1 autocovariances.
    const real c0 = g[0] * (1 + t * t) - 2 * t * g[1];
    const real c1 = g[1] * (1 + t * t) - t * (g[0] + g[2]);
    const real r = c1 / c0;
    out.rho_star = r;
    out.d_star = 2 * (1 - r);
    // Second-stage residual e_k - r e_{k-1}.
    out.sigma_hat = c0 * (1 + r * r) - 2 * r * c1;

    // Bartlett's formula for the autocorrelations r1, r2, then the delta method
    // through theta_hat ~ r1 and rho_hat ~ r1 (r1^2 - r2) / (1 - r1^2).
    std::vector<real> ac(kLags + 3);
    for (std::size_t h = 0; h < ac.size(); ++h) ac[h] = g[h] / g[0];
    const auto at = [&](long h) { return ac[static_cast<std::size_t>(h < 0 ? -h : h)]; };
    real w[2][2] = {{0, 0}, {0, 0}};
    for (long k = 1; k <= static_cast<long>(kLags); ++k) {
        const real a1 = at(k + 1) + at(k - 1) - 2 * at(1) * at(k);
        const real a2 = at(k + 2) + at(k - 2) - 2 * at(2) * at(k);
        w[0][0] += a1 * a1;
        w[0][1] += a1 * a2;
        w[1][1] += a2 * a2;
    }
    w[1][0] = w[0][1];
    const real r1 = at(1), r2 = at(2);
    const real den = 1 - r1 * r1;
    const real dg1 = ((3 * r1 * r1 - r2) * den + 2 * r1 * (r1 * r1 * r1 - r1 * r2)) / (den * den);
    const real dg2 = -r1 / den;
    const real jac[2][2] = {{1, 0}, {dg1, dg2}};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            real v = 0;
            for (int a = 0; a < 2; ++a) {
                for (int b = 0; b < 2; ++b) v += jac[i][a] * w[a][b] * jac[j][b];
            }
            out.gamma[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
        }
    }
    return out;
}

/// Composite Simpson rule with `panels` (even) intervals.
template <class F>
real simpson(F f, real a, real b, std::size_t panels = 20000) {
    const real h = (b - a) / static_cast<real>(panels);
    Sum s;
    s.add(f(a));
    s.add(f(b));
    for (std::size_t i = 1; i < panels; ++i) s.add((i % 2 ? 4.0L : 2.0L) * f(a + h * static_cast<real>(i)));
    return s.value() * h / 3;
}

inline real normal_pdf(real x) { return std::exp(-x * x / 2) / std::sqrt(2 * 3.14159265358979323846264338327950288L); }

inline real normal_cdf(real x) {
    const real half = simpson(normal_pdf, 0.0L, std::fabs(x));
    return x >= 0 ? 0.5L + half : 0.5L - half;
}

/// chi2(1) CDF through P(|Z| <= sqrt(x)).
inline real chi2_cdf1(real x) { return 2 * simpson(normal_pdf, 0.0L, std::sqrt(x)); }

inline real relative_error(real got, real want) {
    const real scale = std::fmax(std::fabs(want), 1e-300L);
    return std::fabs(got - want) / scale;
}

}  // namespace oracle
