#include "dwlab/dist.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "dwlab/error.hpp"

namespace dwlab {

double normal_cdf(double x) noexcept {
    return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

double chi2_cdf1(double x) {
    if (!(x >= 0.0)) throw Error(ErrorKind::DomainError, "x", "chi-square argument must be >= 0");
    return std::erf(std::sqrt(x / 2.0));
}

double chi2_sf1(double x) {
    if (!(x >= 0.0)) throw Error(ErrorKind::DomainError, "x", "chi-square argument must be >= 0");
    return std::erfc(std::sqrt(x / 2.0));
}

double chi2_quantile1(double p) {
    if (!(p > 0.0 && p < 1.0)) throw Error(ErrorKind::DomainError, "p", "probability must lie in (0, 1)");
    double lo = 0.0;
    double hi = 1.0;
    while (chi2_cdf1(hi) < p) hi *= 2.0;
    // Bisect until the bracket cannot shrink; small quantiles need relative,
    // not absolute, precision.
    for (int iter = 0; iter < 2200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (chi2_cdf1(mid) < p) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

KsResult ks_statistic(std::span<const double> sorted_sample, const std::function<double(double)>& cdf) {
    if (sorted_sample.empty()) throw Error(ErrorKind::EmptySample, "sample", "KS needs at least one point");
    const double n = static_cast<double>(sorted_sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted_sample.size(); ++i) {
        const double f = cdf(sorted_sample[i]);
        const double above = static_cast<double>(i + 1) / n - f;
        const double below = f - static_cast<double>(i) / n;
        d = std::max({d, above, below});
    }
    return {std::clamp(d, 0.0, 1.0), sorted_sample.size()};
}

KsResult ks_against_normal(std::span<const double> sample) {
    std::vector<double> sorted(sample.begin(), sample.end());
    std::sort(sorted.begin(), sorted.end());
    return ks_statistic(sorted, normal_cdf);
}

}  // namespace dwlab
