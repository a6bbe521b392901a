#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace dwlab {

struct KsResult {
    double statistic = 0.0;
    std::size_t n = 0;
};

/// Standard normal CDF.
double normal_cdf(double x) noexcept;

/// CDF of the chi-square law with one degree of freedom; DomainError for x < 0.
double chi2_cdf1(double x);
/// Upper tail 1 - chi2_cdf1(x), accurate far into the tail.
double chi2_sf1(double x);
/// Inverse of chi2_cdf1 by bisection to adjacent doubles.
/// DomainError unless 0 < p < 1.
double chi2_quantile1(double p);

/// One-sample Kolmogorov-Smirnov distance between the empirical CDF of a
/// sorted sample and `cdf`. EmptySample on an empty input.
KsResult ks_statistic(std::span<const double> sorted_sample, const std::function<double(double)>& cdf);

/// Convenience: copies, sorts and compares against the standard normal.
KsResult ks_against_normal(std::span<const double> sample);

}  // namespace dwlab
