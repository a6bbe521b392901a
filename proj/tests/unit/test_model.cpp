#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "dwlab/model.hpp"
#include "helpers.hpp"

using namespace dwlab;

namespace {

ModelParams params(double theta, double rho, double sigma2 = 1.0) {
    ModelParams p;
    p.theta = theta;
    p.rho = rho;
    p.sigma2 = sigma2;
    return p;
}

}  // namespace

TEST(Model, HandComputedPath) {
    ModelParams p = params(0.5, 0.3);
    p.x0 = 1.0;
    p.eps0 = 2.0;
    const Path path = simulate_from_innovations(p, {1.0, -1.0, 0.5});
    // eps: 2, 1.6, -0.52, 0.344 ; x: 1, 2.1, 0.53, 0.609
    const std::vector<double> eps = {2.0, 1.6, -0.52, 0.344};
    const std::vector<double> x = {1.0, 2.1, 0.53, 0.609};
    ASSERT_EQ(path.n(), 3u);
    for (std::size_t k = 0; k < 4; ++k) {
        EXPECT_NEAR(path.eps()[k], eps[k], 1e-15);
        EXPECT_NEAR(path.x()[k], x[k], 1e-15);
    }
}

TEST(Model, RecurrenceHoldsExactly) {
    for (auto kind : {NoiseKind::Gaussian, NoiseKind::Uniform, NoiseKind::Rademacher}) {
        const ModelParams p = params(-0.7, 0.6, 2.0);
        const Path path = simulate(p, {kind, 2.0}, 2000, 99);
        ASSERT_TRUE(path.has_latent());
        for (std::size_t k = 1; k <= path.n(); ++k) {
            EXPECT_EQ(path.eps()[k], p.rho * path.eps()[k - 1] + path.v()[k - 1]);
            EXPECT_EQ(path.x()[k], p.theta * path.x()[k - 1] + path.eps()[k]);
        }
    }
}

TEST(Model, SecondOrderForm) {
    const ModelParams p = params(0.8, -0.4);
    const Path path = simulate(p, {}, 5000, 3);
    const auto x = path.x();
    for (std::size_t k = 2; k <= path.n(); ++k) {
        const double ar2 = (p.theta + p.rho) * x[k - 1] - p.theta * p.rho * x[k - 2] + path.v()[k - 1];
        EXPECT_NEAR(x[k], ar2, 1e-12 * (1.0 + std::abs(x[k])));
    }
}

TEST(Model, Reproducible) {
    const ModelParams p = params(0.5, 0.3);
    const Path a = simulate(p, {}, 1000, 17);
    const Path b = simulate(p, {}, 1000, 17);
    const Path c = simulate(p, {}, 1000, 18);
    ASSERT_TRUE(std::equal(a.x().begin(), a.x().end(), b.x().begin()));
    EXPECT_FALSE(std::equal(a.x().begin(), a.x().end(), c.x().begin()));
}

TEST(Model, NoiseVarianceAndSupport) {
    constexpr std::size_t kN = 200000;
    for (auto kind : {NoiseKind::Gaussian, NoiseKind::Uniform, NoiseKind::Rademacher}) {
        const auto v = draw_noise({kind, 4.0}, kN, 5);
        double m = 0, s = 0;
        for (double x : v) {
            m += x;
            s += x * x;
            if (kind == NoiseKind::Rademacher) ASSERT_EQ(std::abs(x), 2.0);
            if (kind == NoiseKind::Uniform) ASSERT_LE(std::abs(x), std::sqrt(12.0));
        }
        EXPECT_NEAR(m / kN, 0.0, 0.03) << to_string(kind);
        EXPECT_NEAR(s / kN, 4.0, 0.06) << to_string(kind);
    }
}

TEST(Model, ScaleEquivariance) {
    // Scaling V by c scales the whole path by c when the initial values are scaled too.
    ModelParams p = params(0.5, 0.3);
    p.x0 = 0.25;
    p.eps0 = -0.5;
    auto v = draw_noise({}, 500, 8);
    const Path base = simulate_from_innovations(p, v);
    const double c = 4.0;
    for (auto& x : v) x *= c;
    ModelParams q = p;
    q.x0 *= c;
    q.eps0 *= c;
    const Path scaled = simulate_from_innovations(q, v);
    for (std::size_t k = 0; k <= base.n(); ++k) EXPECT_EQ(scaled.x()[k], c * base.x()[k]);
}

TEST(Model, RejectsOutOfRegion) {
    EXPECT_DW_ERROR(OutOfRegion, simulate(params(1.0, 0.3), {}, 10, 1));
    EXPECT_DW_ERROR(OutOfRegion, simulate(params(0.3, -1.0), {}, 10, 1));
    EXPECT_DW_ERROR(OutOfRegion, simulate(params(0.3, 0.3, 0.0), {NoiseKind::Gaussian, 0.0}, 10, 1));
    EXPECT_DW_ERROR(OutOfRegion, simulate(params(NAN, 0.3), {}, 10, 1));
    try {
        validate_params(params(0.2, 1.5));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.detail(), "rho");
    }
}

TEST(Model, RejectsBadLengths) {
    EXPECT_DW_ERROR(InvalidLength, simulate(params(0.5, 0.3), {}, 1, 1));
    EXPECT_DW_ERROR(InvalidLength, simulate(params(0.5, 0.3), {}, kMaxPathLength + 1, 1));
    EXPECT_DW_ERROR(InvalidLength, Path(std::vector<double>{1.0}));
    EXPECT_DW_ERROR(InvalidLength, Path({1.0, 2.0}, {0.0}, {1.0}, params(0.1, 0.1)));
}

TEST(Model, RejectsVarianceMismatch) {
    EXPECT_DW_ERROR(DomainError, simulate(params(0.5, 0.3, 2.0), {NoiseKind::Gaussian, 1.0}, 10, 1));
}

TEST(Model, NoiseNames) {
    EXPECT_EQ(parse_noise_kind("gaussian"), NoiseKind::Gaussian);
    EXPECT_EQ(parse_noise_kind("uniform"), NoiseKind::Uniform);
    EXPECT_EQ(parse_noise_kind("rademacher-scaled"), NoiseKind::Rademacher);
    EXPECT_EQ(parse_noise_kind(to_string(NoiseKind::Rademacher)), NoiseKind::Rademacher);
    EXPECT_DW_ERROR(DomainError, parse_noise_kind("cauchy"));
}

TEST(Model, IngestedPathHasNoLatent) {
    const Path p(std::vector<double>{1.0, 2.0, 3.0});
    EXPECT_FALSE(p.has_latent());
    EXPECT_TRUE(p.eps().empty());
    EXPECT_TRUE(p.v().empty());
    EXPECT_FALSE(p.params().has_value());
}
