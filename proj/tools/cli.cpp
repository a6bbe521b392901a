#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "dwlab/csv.hpp"
#include "dwlab/error.hpp"
#include "dwlab/estimators.hpp"
#include "dwlab/hypothesis.hpp"
#include "dwlab/limits.hpp"
#include "dwlab/model.hpp"
#include "dwlab/montecarlo.hpp"
#include "dwlab/recovery.hpp"
#include "json_io.hpp"

namespace dwlab::cli {

namespace {

inline constexpr double kPowerFloor = 0.99;

struct InputOptions {
    std::string input = "-";
    std::string header = "auto";
    std::string column;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--input,-i", input, "CSV file with the series (- for stdin)")->capture_default_str();
        cmd->add_option("--header", header, "Header line: auto, yes or no")
            ->check(CLI::IsMember({"auto", "yes", "no"}))
            ->capture_default_str();
        cmd->add_option("--column", column, "Column name or 0-based index (default: 'x' or the only column)");
    }

    Path load(std::istream& in) const {
        CsvReadOptions options;
        options.header = parse_header_mode(header);
        if (!column.empty()) options.column = column;
        if (input == "-") return read_path(in, options);
        std::ifstream file(input);
        if (!file) throw Error(ErrorKind::ParseError, input, "cannot open input file");
        return read_path(file, options);
    }
};

struct ModelOptions {
    double theta = 0.0;
    double rho = 0.0;
    double sigma2 = 1.0;
    double x0 = 0.0;
    double eps0 = 0.0;
    std::string noise = "gaussian";

    void add_to(CLI::App* cmd, bool with_initial_values) {
        cmd->add_option("--theta", theta, "Autoregressive parameter, |theta| < 1")->required();
        cmd->add_option("--rho", rho, "Serial correlation parameter, |rho| < 1")->required();
        cmd->add_option("--sigma2", sigma2, "Variance of the driving noise")->capture_default_str();
        cmd->add_option("--noise", noise, "Noise law: gaussian, uniform or rademacher")
            ->check(CLI::IsMember({"gaussian", "uniform", "rademacher"}))
            ->capture_default_str();
        if (with_initial_values) {
            cmd->add_option("--x0", x0, "Initial value X_0")->capture_default_str();
            cmd->add_option("--eps0", eps0, "Initial noise value eps_0")->capture_default_str();
        }
    }

    ModelParams params() const { return {theta, rho, sigma2, x0, eps0}; }
    NoiseSpec noise_spec() const { return {parse_noise_kind(noise), sigma2}; }
};

void write_json(std::ostream& out, json j, const RunManifest& manifest) {
    j["manifest"] = to_json(manifest);
    out << j.dump(2) << '\n';
}

std::ofstream open_output(const std::string& path) {
    std::ofstream file(path);
    if (!file) throw Error(ErrorKind::ParseError, path, "cannot open output file");
    return file;
}

std::pair<double, double> binomial_band(double alpha, std::size_t reps) {
    const double sd = std::sqrt(alpha * (1.0 - alpha) / static_cast<double>(reps));
    return {alpha - 3.0 * sd, alpha + 3.0 * sd};
}

json tolerances_json() {
    return {
        {"ks", tolerance::kKs},
        {"covariance_relative", tolerance::kCovRelative},
        {"covariance_absolute", tolerance::kCovAbsolute},
        {"qsl_relative", tolerance::kQslRelative},
        {"lil_sd_multiple", tolerance::kLilSdMultiple},
        {"lil_max_fraction", tolerance::kLilMaxFraction},
        {"size_band", "alpha +/- 3 binomial sd"},
        {"power_floor", kPowerFloor},
    };
}

std::string join_args(const std::vector<std::string>& args) {
    std::string line;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i > 0) line += ' ';
        line += args[i];
    }
    return line;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Durbin-Watson analysis of AR(1) processes with AR(1) noise"};
    app.name(args.empty() ? "dwlab" : args.front());
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    // simulate
    auto* simulate_cmd = app.add_subcommand("simulate", "Simulate a path and write it as CSV (k,x,eps,v)");
    ModelOptions sim_model;
    std::size_t sim_n = 1000;
    std::uint64_t sim_seed = 0;
    std::string sim_output = "-";
    sim_model.add_to(simulate_cmd, true);
    simulate_cmd->add_option("--n", sim_n, "Index of the last observation")->required();
    simulate_cmd->add_option("--seed", sim_seed, "64-bit seed")->capture_default_str();
    simulate_cmd->add_option("--output,-o", sim_output, "Output CSV (- for stdout)")->capture_default_str();

    // estimate
    auto* estimate_cmd = app.add_subcommand("estimate", "Estimate theta, rho, sigma^2, D and theta^2 from a series");
    InputOptions est_input;
    std::string est_trajectories;
    std::size_t est_k0 = kDefaultTrajectoryBurnIn;
    bool est_residuals = false;
    est_input.add_to(estimate_cmd);
    estimate_cmd->add_option("--trajectories", est_trajectories, "Write running estimates (k,theta,rho,dw) to this CSV");
    estimate_cmd->add_option("--k0", est_k0, "First step of the trajectories")->capture_default_str();
    estimate_cmd->add_flag("--with-residuals", est_residuals, "Include the residual sequence in the JSON");

    // test
    auto* test_cmd = app.add_subcommand("test", "Chi-square tests built on the Durbin-Watson statistic");
    InputOptions test_input;
    std::string test_kind = "zero";
    std::optional<double> test_rho0;
    double test_alpha = 0.05;
    bool test_auto = false;
    test_input.add_to(test_cmd);
    test_cmd->add_option("--kind", test_kind, "critical, rho0, zero or auto")
        ->check(CLI::IsMember({"critical", "rho0", "zero", "auto"}))
        ->capture_default_str();
    test_cmd->add_flag("--auto", test_auto, "Same as --kind auto");
    test_cmd->add_option("--rho0", test_rho0, "Null value of rho for the rho0 and auto kinds");
    test_cmd->add_option("--alpha", test_alpha, "Significance level")->capture_default_str();

    // recover
    auto* recover_cmd = app.add_subcommand("recover", "Recover theta, rho and sigma^2 from the biased estimates");
    InputOptions rec_input;
    std::string rec_convention = "theta-less";
    rec_input.add_to(recover_cmd);
    recover_cmd->add_option("--convention", rec_convention, "theta-less or theta-greater")
        ->check(CLI::IsMember({"theta-less", "theta-greater"}))
        ->capture_default_str();

    // limits
    auto* limits_cmd = app.add_subcommand("limits", "Closed-form limits and asymptotic variances");
    double lim_theta = 0.0;
    double lim_rho = 0.0;
    double lim_sigma2 = 1.0;
    limits_cmd->add_option("--theta", lim_theta, "Autoregressive parameter")->required();
    limits_cmd->add_option("--rho", lim_rho, "Serial correlation parameter")->required();
    limits_cmd->add_option("--sigma2", lim_sigma2, "Noise variance")->capture_default_str();

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Monte Carlo verification of the limit theorems and tests");
    std::string ver_experiment;
    ModelOptions ver_model;
    std::size_t ver_n = 5000;
    std::size_t ver_reps = 1000;
    std::uint64_t ver_seed = 1;
    double ver_alpha = 0.05;
    std::optional<double> ver_rho0;
    std::string ver_test;
    std::string ver_csv;
    unsigned ver_threads = 0;
    std::size_t ver_k0 = kQslBurnIn;
    std::vector<std::size_t> ver_checkpoints;
    verify_cmd->add_option("--experiment", ver_experiment, "clt, joint, size, power, qsl, lil or critical")
        ->required()
        ->check(CLI::IsMember({"clt", "joint", "size", "power", "qsl", "lil", "critical"}));
    ver_model.add_to(verify_cmd, false);
    verify_cmd->add_option("--n", ver_n, "Path length")->capture_default_str();
    verify_cmd->add_option("--reps", ver_reps, "Replicates (paths)")->capture_default_str();
    verify_cmd->add_option("--seed", ver_seed, "Base seed")->capture_default_str();
    verify_cmd->add_option("--alpha", ver_alpha, "Significance level")->capture_default_str();
    verify_cmd->add_option("--rho0", ver_rho0, "Null value for the rho0 test");
    verify_cmd->add_option("--test", ver_test, "Test for size/power: zero, rho0 or critical")
        ->check(CLI::IsMember({"zero", "rho0", "critical"}));
    verify_cmd->add_option("--csv", ver_csv, "Dump per-replicate rows to this CSV");
    verify_cmd->add_option("--threads", ver_threads, "Worker cap (default DW_LAB_THREADS or all cores)");
    verify_cmd->add_option("--k0", ver_k0, "Burn-in for the qsl experiment")->capture_default_str();
    verify_cmd->add_option("--checkpoints", ver_checkpoints, "Checkpoints for the lil experiment");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const std::string command_line = join_args(args);
    try {
        if (simulate_cmd->parsed()) {
            const Path path = simulate(sim_model.params(), sim_model.noise_spec(), sim_n, sim_seed);
            if (sim_output == "-") {
                write_path_csv(out, path);
            } else {
                auto file = open_output(sim_output);
                write_path_csv(file, path);
            }
            return kExitOk;
        }

        if (estimate_cmd->parsed()) {
            const Path path = est_input.load(in);
            const EstimateSet e = estimate(path);
            json j = to_json(e, est_residuals);
            if (!est_trajectories.empty()) {
                const Trajectories t = running_estimates(path.x(), est_k0);
                auto file = open_output(est_trajectories);
                file << "k,theta,rho,dw\n";
                for (std::size_t i = 0; i < t.theta.size(); ++i) {
                    file << t.k0 + i << ',' << format_double(t.theta[i]) << ',' << format_double(t.rho[i]) << ','
                         << format_double(t.dw[i]) << '\n';
                }
                j["trajectories"] = {{"path", est_trajectories}, {"k0", t.k0}, {"rows", t.theta.size()}};
            }
            write_json(out, std::move(j), make_manifest(command_line, std::nullopt));
            return kExitOk;
        }

        if (test_cmd->parsed()) {
            if (test_auto) test_kind = "auto";
            if ((test_kind == "rho0" || test_kind == "auto") && !test_rho0) {
                err << "test: --rho0 is required for --kind " << test_kind << '\n' << test_cmd->help();
                return kExitUsage;
            }
            const Path path = test_input.load(in);
            const EstimateSet e = estimate(path);
            json j;
            j["estimates"] = to_json(e, false);
            if (test_kind == "critical") {
                j["outcome"] = to_json(critical_case_test(e, test_alpha));
            } else if (test_kind == "zero") {
                j["outcome"] = to_json(rho_zero_test(e, test_alpha));
            } else if (test_kind == "rho0") {
                const RhoTestResult r = rho_test(e, *test_rho0, test_alpha);
                j["outcome"] = to_json(r.outcome);
                j["weights"] = to_json(r.weights);
            } else {
                const AutoTestResult r = auto_test(e, *test_rho0, test_alpha);
                j["preliminary"] = r.preliminary ? to_json(*r.preliminary) : json(nullptr);
                j["branch"] = r.critical_branch ? "critical_case_with_rho0_squared" : "rho_equals_rho0";
                j["outcome"] = to_json(r.outcome);
                if (r.weights) j["weights"] = to_json(*r.weights);
            }
            write_json(out, std::move(j), make_manifest(command_line, std::nullopt));
            return kExitOk;
        }

        if (recover_cmd->parsed()) {
            const Path path = rec_input.load(in);
            const EstimateSet e = estimate(path);
            const RecoveredParams r = recover_params(e.theta_hat, e.rho_hat, parse_root_convention(rec_convention));
            json j = to_json(r);
            j["sigma2_rec"] = recover_sigma2(e.theta_hat, e.rho_hat, e.sigma2_hat);
            j["estimates"] = to_json(e, false);
            if (r.out_of_region) err << "warning: a recovered root lies outside (-1, 1)\n";
            write_json(out, std::move(j), make_manifest(command_line, std::nullopt));
            return kExitOk;
        }

        if (limits_cmd->parsed()) {
            json j = to_json(asymptotics(lim_theta, lim_rho, lim_sigma2));
            j["theta"] = lim_theta;
            j["rho"] = lim_rho;
            j["sigma2"] = lim_sigma2;
            write_json(out, std::move(j), make_manifest(command_line, std::nullopt));
            return kExitOk;
        }

        if (verify_cmd->parsed()) {
            McConfig cfg;
            cfg.params = ver_model.params();
            cfg.noise = ver_model.noise_spec();
            cfg.n = ver_n;
            cfg.replicates = ver_reps;
            cfg.base_seed = ver_seed;
            cfg.alpha = ver_alpha;
            cfg.threads = ver_threads;

            json j;
            j["experiment"] = ver_experiment;
            j["config"] = {
                {"theta", cfg.params.theta}, {"rho", cfg.params.rho},   {"sigma2", cfg.params.sigma2},
                {"noise", ver_model.noise},  {"n", cfg.n},              {"replicates", cfg.replicates},
                {"base_seed", cfg.base_seed}, {"alpha", cfg.alpha},
                {"rho0", ver_rho0 ? json(*ver_rho0) : json(nullptr)},
            };
            j["tolerances"] = tolerances_json();
            std::unique_ptr<std::ofstream> csv;
            if (!ver_csv.empty()) csv = std::make_unique<std::ofstream>(open_output(ver_csv));

            if (ver_experiment == "clt" || ver_experiment == "joint") {
                const McReport report = run_replications(cfg);
                j["limits"] = to_json(report.limits);
                json estimates = json::array();
                for (const auto& r : report.estimates) estimates.push_back(to_json(r));
                j["estimates"] = std::move(estimates);
                j["standardized"] = {{"theta", report.z_theta}, {"rho", report.z_rho}, {"dw", report.z_dw}};
                const auto ks_json = [](const std::optional<KsResult>& k) { return k ? to_json(*k) : json(nullptr); };
                j["ks"] = {{"theta", ks_json(report.ks_theta)}, {"rho", ks_json(report.ks_rho)}, {"dw", ks_json(report.ks_dw)}};
                j["sample_cov"] = to_json(report.sample_cov);
                const auto ks_ok = [](const std::optional<KsResult>& k) {
                    return k ? json(k->statistic <= tolerance::kKs) : json(nullptr);
                };
                j["checks"] = {
                    {"ks_theta", ks_ok(report.ks_theta)},
                    {"ks_rho", ks_ok(report.ks_rho)},
                    {"ks_dw", ks_ok(report.ks_dw)},
                    {"covariance", covariance_within_tolerance(report.sample_cov, report.limits.gamma)},
                };
                if (csv) {
                    *csv << "replicate,seed,theta_hat,rho_hat,sigma2_hat,dw,theta_sq_hat\n";
                    for (std::size_t i = 0; i < report.estimates.size(); ++i) {
                        const auto& r = report.estimates[i];
                        *csv << i << ',' << r.seed << ',' << format_double(r.theta_hat) << ','
                             << format_double(r.rho_hat) << ',' << format_double(r.sigma2_hat) << ','
                             << format_double(r.dw) << ',' << format_double(r.theta_sq_hat) << '\n';
                    }
                }
            } else if (ver_experiment == "size" || ver_experiment == "power" || ver_experiment == "critical") {
                TestKind kind = TestKind::RhoEqualsZero;
                if (ver_experiment == "critical" || ver_test == "critical") {
                    kind = TestKind::CriticalCase;
                } else if (ver_test == "rho0" || (ver_test.empty() && ver_rho0)) {
                    kind = TestKind::RhoEqualsRho0;
                }
                if (kind == TestKind::RhoEqualsRho0 && !ver_rho0) {
                    err << "verify: --rho0 is required for the rho0 test\n" << verify_cmd->help();
                    return kExitUsage;
                }
                const SizePowerResult r = empirical_size_power(kind, cfg, ver_rho0);
                const auto [lo, hi] = binomial_band(cfg.alpha, cfg.replicates);
                j["test"] = std::string(to_string(kind));
                j["rejections"] = r.rejections;
                j["replicates"] = r.replicates;
                j["rejection_rate"] = r.rejection_rate;
                j["binomial_band"] = {lo, hi};
                if (ver_experiment == "power") {
                    j["checks"] = {{"power_at_least_floor", r.rejection_rate >= kPowerFloor}};
                } else {
                    j["checks"] = {{"size_within_band", r.rejection_rate >= lo && r.rejection_rate <= hi}};
                }
                if (csv) {
                    *csv << "replicate,statistic,reject\n";
                    const double z = chi2_quantile1(1.0 - cfg.alpha);
                    for (std::size_t i = 0; i < r.statistics.size(); ++i) {
                        *csv << i << ',' << format_double(r.statistics[i]) << ',' << (r.statistics[i] > z ? 1 : 0)
                             << '\n';
                    }
                }
            } else if (ver_experiment == "qsl") {
                const auto results = qsl_check_all(cfg, ver_k0);
                json per = json::object();
                for (const auto& r : results) {
                    per[std::string(to_string(r.which))] = {
                        {"target", r.target},
                        {"k0", r.k0},
                        {"mean", r.mean},
                        {"raw_mean", r.raw_mean},
                        {"values", r.values},
                        {"raw_values", r.raw_values},
                        {"within_tolerance", std::abs(r.mean - r.target) <= tolerance::kQslRelative * r.target},
                    };
                }
                j["qsl"] = std::move(per);
                j["normalization"] = "sum_{k=k0}^n (est_k - limit)^2 / log(n/k0); raw uses log n";
                if (csv) {
                    *csv << "path,theta,rho,dw\n";
                    for (std::size_t i = 0; i < cfg.replicates; ++i) {
                        *csv << i << ',' << format_double(results[0].values[i]) << ','
                             << format_double(results[1].values[i]) << ',' << format_double(results[2].values[i])
                             << '\n';
                    }
                }
            } else if (ver_experiment == "lil") {
                if (ver_checkpoints.empty()) {
                    for (std::size_t m : {cfg.n / 100, cfg.n / 10, cfg.n}) {
                        if (m >= 4) ver_checkpoints.push_back(m);
                    }
                }
                const auto results = lil_envelope_check_all(cfg, ver_checkpoints);
                json per = json::object();
                for (const auto& r : results) {
                    per[std::string(to_string(r.which))] = {
                        {"envelope", r.envelope},
                        {"exceedances", r.exceedances},
                        {"pairs", r.pairs},
                        {"exceedance_fraction", r.exceedance_fraction},
                        {"within_tolerance", r.exceedance_fraction <= tolerance::kLilMaxFraction},
                    };
                }
                j["checkpoints"] = ver_checkpoints;
                j["lil"] = std::move(per);
                j["note"] =
                    "High-probability envelope at fixed checkpoints; the limsup equality itself is not "
                    "checkable at finite n.";
                if (csv) {
                    *csv << "path,checkpoint,theta,rho,dw\n";
                    for (std::size_t i = 0; i < cfg.replicates; ++i) {
                        for (std::size_t c = 0; c < ver_checkpoints.size(); ++c) {
                            *csv << i << ',' << ver_checkpoints[c] << ','
                                 << format_double(results[0].normalized[i][c]) << ','
                                 << format_double(results[1].normalized[i][c]) << ','
                                 << format_double(results[2].normalized[i][c]) << '\n';
                        }
                    }
                }
            }
            write_json(out, std::move(j), make_manifest(command_line, cfg.base_seed));
            return kExitOk;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitData;
    }
    return kExitUsage;
}

}  // namespace dwlab::cli
