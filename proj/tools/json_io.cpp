#include "json_io.hpp"

#include <chrono>
#include <ctime>

#include "dwlab/rng.hpp"

namespace dwlab::cli {

namespace {

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buffer[32];
    std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buffer;
}

}  // namespace

RunManifest make_manifest(const std::string& command_line, std::optional<std::uint64_t> seed) {
    return {command_line, seed, std::string(kRngAlgorithm), DWLAB_VERSION, utc_timestamp()};
}

json to_json(const RunManifest& m) {
    json j;
    j["command_line"] = m.command_line;
    j["seed"] = m.seed ? json(*m.seed) : json(nullptr);
    j["rng_algorithm"] = m.rng_algorithm;
    j["artifact_version"] = m.version;
    j["timestamp"] = m.timestamp;
    return j;
}

json to_json(const Matrix2& m) {
    return json::array({json::array({m[0][0], m[0][1]}), json::array({m[1][0], m[1][1]})});
}

json to_json(const AsymptoticSet& a) {
    return {
        {"theta_star", a.theta_star},
        {"rho_star", a.rho_star},
        {"d_star", a.d_star},
        {"var_theta", a.var_theta},
        {"var_rho", a.var_rho},
        {"var_d", a.var_d},
        {"gamma", to_json(a.gamma)},
        {"gamma_det", determinant(a.gamma)},
        {"ell", a.ell},
        {"ell1", a.ell1},
        {"ell2", a.ell2},
        {"sigma_hat_limit", a.sigma_hat_limit},
    };
}

json to_json(const EstimateSet& e, bool with_residuals) {
    json j = {
        {"theta_hat", e.theta_hat},
        {"rho_hat", e.rho_hat},
        {"sigma2_hat", e.sigma2_hat},
        {"dw", e.dw},
        {"theta_sq_hat", e.theta_sq_hat},
        {"n", e.n},
    };
    if (with_residuals) j["residuals"] = e.residuals;
    return j;
}

json to_json(const TestOutcome& t) {
    return {
        {"kind", std::string(to_string(t.kind))},
        {"statistic", t.statistic},
        {"threshold", t.threshold},
        {"alpha", t.alpha},
        {"reject", t.reject},
        {"p_value", t.p_value},
    };
}

json to_json(const TestWeights& w) {
    return {
        {"a_w", w.a_w},
        {"b_w", w.b_w},
        {"theta_tilde", w.theta_tilde},
        {"rho_tilde", w.rho_tilde},
        {"d_tilde", w.d_tilde},
        {"alpha_hat", w.alpha_hat},
        {"beta_hat", w.beta_hat},
        {"gamma_hat", to_json(w.gamma_hat)},
        {"tau2", w.tau2},
    };
}

json to_json(const RecoveredParams& r) {
    return {
        {"theta_rec", r.theta_rec},
        {"rho_rec", r.rho_rec},
        {"convention", std::string(to_string(r.convention))},
        {"s_hat", r.s_hat},
        {"p_hat", r.p_hat},
        {"warning_out_of_region", r.out_of_region},
    };
}

json to_json(const KsResult& k) {
    return {{"statistic", k.statistic}, {"n", k.n}};
}

json to_json(const ReplicateSummary& r) {
    return {
        {"seed", r.seed},
        {"theta_hat", r.theta_hat},
        {"rho_hat", r.rho_hat},
        {"sigma2_hat", r.sigma2_hat},
        {"dw", r.dw},
        {"theta_sq_hat", r.theta_sq_hat},
    };
}

}  // namespace dwlab::cli
