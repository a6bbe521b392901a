#include "dwlab/model.hpp"

#include <cmath>
#include <string>

#include "dwlab/error.hpp"
#include "dwlab/rng.hpp"

namespace dwlab {

std::string_view to_string(NoiseKind kind) noexcept {
    switch (kind) {
        case NoiseKind::Gaussian: return "gaussian";
        case NoiseKind::Uniform: return "uniform";
        case NoiseKind::Rademacher: return "rademacher";
    }
    return "unknown";
}

NoiseKind parse_noise_kind(std::string_view name) {
    if (name == "gaussian") return NoiseKind::Gaussian;
    if (name == "uniform") return NoiseKind::Uniform;
    if (name == "rademacher" || name == "rademacher-scaled") return NoiseKind::Rademacher;
    throw Error(ErrorKind::DomainError, "noise", "unknown noise kind '" + std::string(name) + "'");
}

void validate_params(const ModelParams& p) {
    if (!(std::abs(p.theta) < 1.0)) throw Error(ErrorKind::OutOfRegion, "theta", "|theta| must be < 1");
    if (!(std::abs(p.rho) < 1.0)) throw Error(ErrorKind::OutOfRegion, "rho", "|rho| must be < 1");
    if (!(p.sigma2 > 0.0) || !std::isfinite(p.sigma2)) {
        throw Error(ErrorKind::OutOfRegion, "sigma2", "sigma2 must be positive");
    }
    if (!std::isfinite(p.x0)) throw Error(ErrorKind::OutOfRegion, "x0", "x0 must be finite");
    if (!std::isfinite(p.eps0)) throw Error(ErrorKind::OutOfRegion, "eps0", "eps0 must be finite");
}

Path::Path(std::vector<double> x) : x_(std::move(x)) {
    if (x_.size() < 2) {
        throw Error(ErrorKind::InvalidLength, "x", "a path needs at least two observations");
    }
}

Path::Path(std::vector<double> x, std::vector<double> eps, std::vector<double> v, ModelParams params)
    : x_(std::move(x)), eps_(std::move(eps)), v_(std::move(v)), params_(params) {
    if (x_.size() < 2) {
        throw Error(ErrorKind::InvalidLength, "x", "a path needs at least two observations");
    }
    if (eps_->size() != x_.size() || v_->size() + 1 != x_.size()) {
        throw Error(ErrorKind::InvalidLength, "eps/v", "latent sequences do not match the path length");
    }
}

std::span<const double> Path::eps() const noexcept {
    return eps_ ? std::span<const double>(*eps_) : std::span<const double>();
}

std::span<const double> Path::v() const noexcept {
    return v_ ? std::span<const double>(*v_) : std::span<const double>();
}

std::vector<double> draw_noise(const NoiseSpec& noise, std::size_t n, std::uint64_t seed) {
    if (!(noise.sigma2 > 0.0)) throw Error(ErrorKind::OutOfRegion, "sigma2", "noise variance must be positive");
    Xoshiro256 gen(seed);
    std::vector<double> v(n);
    const double sd = std::sqrt(noise.sigma2);
    switch (noise.kind) {
        case NoiseKind::Gaussian:
            for (auto& value : v) value = sd * gen.standard_normal();
            break;
        case NoiseKind::Uniform: {
            // U(-a, a) has variance a^2 / 3.
            const double half_width = std::sqrt(3.0 * noise.sigma2);
            for (auto& value : v) value = half_width * (2.0 * gen.uniform01() - 1.0);
            break;
        }
        case NoiseKind::Rademacher:
            for (auto& value : v) value = (gen() >> 63) != 0 ? sd : -sd;
            break;
    }
    return v;
}

Path simulate_from_innovations(const ModelParams& p, std::vector<double> v) {
    validate_params(p);
    const std::size_t n = v.size();
    if (n < 1) throw Error(ErrorKind::InvalidLength, "n", "need at least one innovation");
    std::vector<double> x(n + 1);
    std::vector<double> eps(n + 1);
    x[0] = p.x0;
    eps[0] = p.eps0;
    for (std::size_t k = 1; k <= n; ++k) {
        eps[k] = p.rho * eps[k - 1] + v[k - 1];
        x[k] = p.theta * x[k - 1] + eps[k];
    }
    return Path(std::move(x), std::move(eps), std::move(v), p);
}

Path simulate(const ModelParams& p, const NoiseSpec& noise, std::size_t n, std::uint64_t seed) {
    validate_params(p);
    if (n < 2 || n > kMaxPathLength) {
        throw Error(ErrorKind::InvalidLength, "n", "n must lie in [2, 2^31 - 1]");
    }
    if (p.sigma2 != noise.sigma2) {
        throw Error(ErrorKind::DomainError, "sigma2", "model and noise variances disagree");
    }
    return simulate_from_innovations(p, draw_noise(noise, n, seed));
}

}  // namespace dwlab
