#include "dwlab/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dwlab/error.hpp"
#include "dwlab/estimators.hpp"
#include "dwlab/parallel.hpp"
#include "dwlab/rng.hpp"

namespace dwlab {

namespace {

Path simulate_replicate(const McConfig& cfg, std::size_t index) {
    return simulate(cfg.params, cfg.noise, cfg.n, derive_seed(cfg.base_seed, index));
}

double limit_of(const AsymptoticSet& a, Statistic which) {
    switch (which) {
        case Statistic::Theta: return a.theta_star;
        case Statistic::Rho: return a.rho_star;
        case Statistic::Dw: return a.d_star;
    }
    return 0.0;
}

double variance_of(const AsymptoticSet& a, Statistic which) {
    switch (which) {
        case Statistic::Theta: return a.var_theta;
        case Statistic::Rho: return a.var_rho;
        case Statistic::Dw: return a.var_d;
    }
    return 0.0;
}

std::vector<double> standardize(const std::vector<ReplicateSummary>& reps, double ReplicateSummary::*field,
                                double limit, double variance, std::size_t n) {
    std::vector<double> z;
    if (!(variance > 0.0)) return z;
    const double scale = std::sqrt(static_cast<double>(n) / variance);
    z.reserve(reps.size());
    for (const auto& r : reps) z.push_back(scale * (r.*field - limit));
    return z;
}

double statistic_value(const EstimateSet& e, Statistic which) {
    switch (which) {
        case Statistic::Theta: return e.theta_hat;
        case Statistic::Rho: return e.rho_hat;
        case Statistic::Dw: return e.dw;
    }
    return 0.0;
}

}  // namespace

std::string_view to_string(Statistic s) noexcept {
    switch (s) {
        case Statistic::Theta: return "theta";
        case Statistic::Rho: return "rho";
        case Statistic::Dw: return "dw";
    }
    return "unknown";
}

void validate_config(const McConfig& cfg) {
    validate_params(cfg.params);
    check_region(cfg.params.theta, cfg.params.rho);
    if (cfg.params.sigma2 != cfg.noise.sigma2) {
        throw Error(ErrorKind::DomainError, "sigma2", "model and noise variances disagree");
    }
    if (cfg.n < 100 || cfg.n > kMaxPathLength) {
        throw Error(ErrorKind::InvalidLength, "n", "Monte Carlo runs need n >= 100");
    }
    if (cfg.replicates < 1) throw Error(ErrorKind::DomainError, "replicates", "need at least one replicate");
    if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0)) {
        throw Error(ErrorKind::DomainError, "alpha", "alpha must lie in (0, 1)");
    }
}

McReport run_replications(const McConfig& cfg) {
    validate_config(cfg);
    McReport report;
    report.limits = asymptotics(cfg.params.theta, cfg.params.rho, cfg.params.sigma2);
    report.estimates.resize(cfg.replicates);

    parallel_for(cfg.replicates, resolve_threads(cfg.threads), [&](std::size_t i) {
        const Path path = simulate_replicate(cfg, i);
        const EstimateSet e = estimate(path);
        report.estimates[i] = {derive_seed(cfg.base_seed, i), e.theta_hat, e.rho_hat, e.sigma2_hat, e.dw,
                               e.theta_sq_hat};
    });

    const auto& lim = report.limits;
    report.z_theta = standardize(report.estimates, &ReplicateSummary::theta_hat, lim.theta_star, lim.var_theta, cfg.n);
    report.z_rho = standardize(report.estimates, &ReplicateSummary::rho_hat, lim.rho_star, lim.var_rho, cfg.n);
    report.z_dw = standardize(report.estimates, &ReplicateSummary::dw, lim.d_star, lim.var_d, cfg.n);
    if (!report.z_theta.empty()) report.ks_theta = ks_against_normal(report.z_theta);
    if (!report.z_rho.empty()) report.ks_rho = ks_against_normal(report.z_rho);
    if (!report.z_dw.empty()) report.ks_dw = ks_against_normal(report.z_dw);

    const std::size_t r = report.estimates.size();
    if (r < 2) {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        report.sample_cov = {{{nan, nan}, {nan, nan}}};
        return report;
    }
    const double root_n = std::sqrt(static_cast<double>(cfg.n));
    double mean_t = 0.0;
    double mean_r = 0.0;
    for (const auto& e : report.estimates) {
        mean_t += root_n * (e.theta_hat - lim.theta_star);
        mean_r += root_n * (e.rho_hat - lim.rho_star);
    }
    mean_t /= static_cast<double>(r);
    mean_r /= static_cast<double>(r);
    double ctt = 0.0;
    double ctr = 0.0;
    double crr = 0.0;
    for (const auto& e : report.estimates) {
        const double dt = root_n * (e.theta_hat - lim.theta_star) - mean_t;
        const double dr = root_n * (e.rho_hat - lim.rho_star) - mean_r;
        ctt += dt * dt;
        ctr += dt * dr;
        crr += dr * dr;
    }
    const double denom = static_cast<double>(r - 1);
    report.sample_cov = {{{ctt / denom, ctr / denom}, {ctr / denom, crr / denom}}};
    return report;
}

bool covariance_within_tolerance(const Matrix2& sample, const Matrix2& target) {
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            const double allowed = std::max(tolerance::kCovRelative * std::abs(target[a][b]), tolerance::kCovAbsolute);
            if (!(std::abs(sample[a][b] - target[a][b]) <= allowed)) return false;
        }
    }
    return true;
}

SizePowerResult empirical_size_power(TestKind kind, const McConfig& cfg, std::optional<double> rho0) {
    validate_config(cfg);
    if (kind == TestKind::RhoEqualsRho0 && !rho0) {
        throw Error(ErrorKind::DomainError, "rho0", "the rho = rho0 test needs rho0");
    }
    SizePowerResult result;
    result.kind = kind;
    result.rho0 = kind == TestKind::RhoEqualsRho0 ? rho0 : std::nullopt;
    result.alpha = cfg.alpha;
    result.replicates = cfg.replicates;
    result.statistics.resize(cfg.replicates);
    std::vector<char> rejected(cfg.replicates, 0);

    parallel_for(cfg.replicates, resolve_threads(cfg.threads), [&](std::size_t i) {
        const EstimateSet e = estimate(simulate_replicate(cfg, i));
        TestOutcome out;
        switch (kind) {
            case TestKind::CriticalCase: out = critical_case_test(e, cfg.alpha); break;
            case TestKind::RhoEqualsRho0: out = rho_test(e, *rho0, cfg.alpha).outcome; break;
            case TestKind::RhoEqualsZero: out = rho_zero_test(e, cfg.alpha); break;
        }
        result.statistics[i] = out.statistic;
        rejected[i] = out.reject ? 1 : 0;
    });

    result.rejections = static_cast<std::size_t>(std::count(rejected.begin(), rejected.end(), 1));
    result.rejection_rate = static_cast<double>(result.rejections) / static_cast<double>(cfg.replicates);
    return result;
}

std::array<QslResult, 3> qsl_check_all(const McConfig& cfg, std::size_t k0) {
    validate_config(cfg);
    if (cfg.n < 10000) throw Error(ErrorKind::InvalidLength, "n", "quadratic strong law checks need n >= 10^4");
    if (k0 < 3 || k0 >= cfg.n) throw Error(ErrorKind::DomainError, "k0", "burn-in must lie in [3, n)");
    const AsymptoticSet lim = asymptotics(cfg.params.theta, cfg.params.rho, cfg.params.sigma2);
    const double log_n = std::log(static_cast<double>(cfg.n));
    const double log_span = std::log(static_cast<double>(cfg.n) / static_cast<double>(k0));

    std::array<QslResult, 3> results;
    const std::array<Statistic, 3> order{Statistic::Theta, Statistic::Rho, Statistic::Dw};
    for (std::size_t s = 0; s < 3; ++s) {
        results[s].which = order[s];
        results[s].k0 = k0;
        results[s].target = variance_of(lim, order[s]);
        results[s].values.resize(cfg.replicates);
        results[s].raw_values.resize(cfg.replicates);
    }

    parallel_for(cfg.replicates, resolve_threads(cfg.threads), [&](std::size_t i) {
        const Path path = simulate_replicate(cfg, i);
        const Trajectories t = running_estimates(path.x(), k0);
        const std::array<const std::vector<double>*, 3> series{&t.theta, &t.rho, &t.dw};
        for (std::size_t s = 0; s < 3; ++s) {
            const double limit = limit_of(lim, order[s]);
            double sum = 0.0;
            for (double v : *series[s]) sum += (v - limit) * (v - limit);
            results[s].values[i] = sum / log_span;
            results[s].raw_values[i] = sum / log_n;
        }
    });

    for (auto& r : results) {
        double total = 0.0;
        double raw_total = 0.0;
        for (std::size_t i = 0; i < r.values.size(); ++i) {
            total += r.values[i];
            raw_total += r.raw_values[i];
        }
        r.mean = total / static_cast<double>(r.values.size());
        r.raw_mean = raw_total / static_cast<double>(r.values.size());
    }
    return results;
}

QslResult qsl_check(const McConfig& cfg, Statistic which, std::size_t k0) {
    auto all = qsl_check_all(cfg, k0);
    return all[static_cast<std::size_t>(which)];
}

double lil_normalized_deviation(double estimate, double limit, std::size_t m) {
    if (m < 3) throw Error(ErrorKind::DomainError, "m", "log log m needs m >= 3");
    const double dm = static_cast<double>(m);
    return std::sqrt(dm / (2.0 * std::log(std::log(dm)))) * std::abs(estimate - limit);
}

std::array<LilResult, 3> lil_envelope_check_all(const McConfig& cfg, std::span<const std::size_t> checkpoints) {
    validate_config(cfg);
    if (checkpoints.empty()) throw Error(ErrorKind::DomainError, "checkpoints", "need at least one checkpoint");
    for (std::size_t m : checkpoints) {
        if (m < 4 || m > cfg.n) {
            throw Error(ErrorKind::DomainError, "checkpoints", "checkpoint " + std::to_string(m) + " outside [4, n]");
        }
    }
    const AsymptoticSet lim = asymptotics(cfg.params.theta, cfg.params.rho, cfg.params.sigma2);
    const std::array<Statistic, 3> order{Statistic::Theta, Statistic::Rho, Statistic::Dw};
    std::array<LilResult, 3> results;
    for (std::size_t s = 0; s < 3; ++s) {
        results[s].which = order[s];
        results[s].checkpoints.assign(checkpoints.begin(), checkpoints.end());
        results[s].normalized.assign(cfg.replicates, std::vector<double>(checkpoints.size()));
        results[s].envelope = tolerance::kLilSdMultiple * std::sqrt(variance_of(lim, order[s]));
    }

    parallel_for(cfg.replicates, resolve_threads(cfg.threads), [&](std::size_t i) {
        const Path path = simulate_replicate(cfg, i);
        for (std::size_t c = 0; c < checkpoints.size(); ++c) {
            const std::size_t m = checkpoints[c];
            const EstimateSet e = estimate(path.x().first(m + 1));
            for (std::size_t s = 0; s < 3; ++s) {
                results[s].normalized[i][c] =
                    lil_normalized_deviation(statistic_value(e, order[s]), limit_of(lim, order[s]), m);
            }
        }
    });

    for (auto& r : results) {
        for (const auto& row : r.normalized) {
            for (double v : row) {
                ++r.pairs;
                if (v > r.envelope) ++r.exceedances;
            }
        }
        r.exceedance_fraction = static_cast<double>(r.exceedances) / static_cast<double>(r.pairs);
    }
    return results;
}

LilResult lil_envelope_check(const McConfig& cfg, Statistic which, std::span<const std::size_t> checkpoints) {
    auto all = lil_envelope_check_all(cfg, checkpoints);
    return all[static_cast<std::size_t>(which)];
}

}  // namespace dwlab
