// Command-line front end: single-point solving, comparative-statics sweeps,
// welfare-region maps, limit values, fixed-point and Monte Carlo runs.
// JSON documents and CSV streams go to stdout (or --out FILE); errors are
// emitted as JSON on stderr with exit codes
//   0 success, 2 validation, 3 solver failure, 4 regression degeneracy,
//   5 non-convergence.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "frontrun/equilibrium.hpp"
#include "frontrun/fixed_point.hpp"
#include "frontrun/model.hpp"
#include "frontrun/simulator.hpp"
#include "frontrun/sweep.hpp"
#include "json_writer.hpp"

namespace {

using namespace frontrun;

// -----------------------------------------------------------------------------
// parameter flags: either (theta1, thetaz) with sigma_v = sigma_2 = 1, or raw
// sigmas; mixing the two forms is a validation error.

struct ParamFlags {
    std::optional<double> theta1;
    std::optional<double> thetaz;
    std::optional<double> sigma_v;
    std::optional<double> sigma_1;
    std::optional<double> sigma_2;
    std::optional<double> sigma_z;

    void attach(CLI::App& cmd) {
        cmd.add_option("--theta1", theta1, "relative high-speed noise size sigma_1^2/sigma_2^2");
        cmd.add_option("--thetaz", thetaz, "relative signal noise sigma_z^2/sigma_2^2");
        cmd.add_option("--sigma-v", sigma_v, "std. dev. of the asset value");
        cmd.add_option("--sigma-1", sigma_1, "std. dev. of time-1 noise flow");
        cmd.add_option("--sigma-2", sigma_2, "std. dev. of time-2 noise flow");
        cmd.add_option("--sigma-z", sigma_z, "std. dev. of the signal noise");
    }

    [[nodiscard]] bool theta_form_used() const {
        return theta1.has_value() || thetaz.has_value();
    }

    [[nodiscard]] bool sigma_form_used() const {
        return sigma_v.has_value() || sigma_1.has_value() || sigma_2.has_value() ||
               sigma_z.has_value();
    }

    [[nodiscard]] ModelParams resolve() const {
        if (theta_form_used() && sigma_form_used()) {
            throw InvalidConfig("give either (--theta1, --thetaz) or raw sigmas, not both");
        }
        if (sigma_form_used()) {
            return validate_params(sigma_v.value_or(1.0), sigma_1.value_or(0.0),
                                   sigma_2.value_or(1.0), sigma_z.value_or(0.0));
        }
        return params_from_thetas(ThetaPair{theta1.value_or(1.0), thetaz.value_or(0.04)});
    }

    // the ratios as requested, without the sqrt/square round trip
    [[nodiscard]] ThetaPair resolved_thetas(const ModelParams& params) const {
        if (!sigma_form_used()) {
            return ThetaPair{theta1.value_or(1.0), thetaz.value_or(0.04)};
        }
        return thetas_from_params(params);
    }
};

// Flat key=value config support. The file's lines become synthesized
// --key=value tokens spliced in front of the real command line, so explicit
// flags override the file (options use a take-last policy). The path comes
// from --config or, failing that, the FRONTRUN_CONFIG environment variable.

std::string config_path_sink; // consumed by the pre-scan; registered so CLI11 accepts the flag

void attach_config(CLI::App& cmd) {
    cmd.add_option("--config", config_path_sink,
                   "flat key=value config file; command line overrides");
}

std::vector<std::string> load_config_args(const std::string& path) {
    std::ifstream file(path);
    if (!file) {
        throw InvalidConfig("cannot read config file: " + path);
    }
    auto trim = [](std::string text) {
        const auto first = text.find_first_not_of(" \t\r");
        if (first == std::string::npos) {
            return std::string();
        }
        const auto last = text.find_last_not_of(" \t\r");
        return text.substr(first, last - first + 1);
    };
    std::vector<std::string> args;
    std::string line;
    while (std::getline(file, line)) {
        const std::string entry = trim(line);
        if (entry.empty() || entry[0] == '#' || entry[0] == ';') {
            continue;
        }
        const auto eq = entry.find('=');
        if (eq == std::string::npos) {
            throw InvalidConfig("config line is not key=value: " + entry);
        }
        const std::string key = trim(entry.substr(0, eq));
        const std::string value = trim(entry.substr(eq + 1));
        if (key.empty()) {
            throw InvalidConfig("config line has an empty key: " + entry);
        }
        args.push_back("--" + key + "=" + value);
    }
    return args;
}

std::vector<std::string> effective_args(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.empty() || args[0].empty() || args[0][0] == '-') {
        return args; // help/version paths; no subcommand to configure
    }
    std::string config_path;
    for (std::size_t k = 1; k < args.size(); ++k) {
        if (args[k] == "--config" && k + 1 < args.size()) {
            config_path = args[k + 1];
        } else if (args[k].rfind("--config=", 0) == 0) {
            config_path = args[k].substr(9);
        }
    }
    if (config_path.empty()) {
        if (const char* env = std::getenv("FRONTRUN_CONFIG"); env != nullptr && *env != '\0') {
            config_path = env;
        }
    }
    if (config_path.empty()) {
        return args;
    }
    std::vector<std::string> merged;
    merged.push_back(args[0]);
    for (std::string& arg : load_config_args(config_path)) {
        merged.push_back(std::move(arg));
    }
    merged.insert(merged.end(), args.begin() + 1, args.end());
    return merged;
}

double z_score(double estimate, double analytic, double std_error) {
    if (std_error > 0.0) {
        return (estimate - analytic) / std_error;
    }
    return estimate == analytic ? 0.0 : std::numeric_limits<double>::infinity();
}

double rel_gap(double a, double b) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

const char* welfare_by_sign(double alpha_norm, double tol = 1e-9) {
    if (std::abs(alpha_norm - 1.0) <= tol) {
        return "boundary";
    }
    return alpha_norm > 1.0 ? "benefited" : "harmed";
}

SignalStructure parse_structure(const std::string& name) {
    return name == "aggregate" ? SignalStructure::AggregateOrder : SignalStructure::OwnOrder;
}

void require_positive_theta1_cli(const ThetaPair& thetas) {
    if (thetas.theta_1 <= 0.0) {
        throw ThetaOutOfDomain("theta1 must be > 0; see partial-equilibrium command");
    }
}

// -----------------------------------------------------------------------------
// subcommand handlers: each returns the primary output document

std::string handle_solve(const ParamFlags& flags) {
    const ModelParams params = flags.resolve();
    const ThetaPair thetas = flags.resolved_thetas(params);
    require_positive_theta1_cli(thetas);

    const Equilibrium eq = solve_equilibrium(params);
    const WelfareClass welfare = classify_welfare(thetas);
    const double residual = beta_residual(build_beta_polynomial(thetas), eq.strategies.beta);
    const double half = 0.5 * params.sigma_v() * params.sigma_2();

    clijson::Object solver;
    solver.add("residual", residual)
        .add("method", "derivative-partition-bisection")
        .add("lambda2", "derived, interpretation-dependent: p2 = p1 + lambda2 (y2 - E[y2|y1])");

    clijson::Object doc;
    doc.add("theta1", thetas.theta_1)
        .add("thetaz", thetas.theta_z)
        .add("sigma_v", params.sigma_v())
        .add("sigma_2", params.sigma_2())
        .add("beta", eq.strategies.beta)
        .add("alpha", eq.strategies.alpha)
        .add("lambda1", eq.pricing.lambda_1)
        .add("mu1", eq.pricing.mu_1)
        .add("mu2", eq.pricing.mu_2)
        .add("lambda2", eq.lambda_2)
        .add("profit_it", eq.profit_it)
        .add("profit_hft", eq.profit_hft)
        .add("profit_it_normalized", eq.profit_it / half)
        .add("profit_hft_normalized", eq.profit_hft / half)
        .add("welfare", to_string(welfare))
        .add_object("solver", solver);
    return doc.str() + "\n";
}

struct SweepFlags {
    std::string axis{"theta1"};
    double from{};
    double to{};
    int points{};
    std::string scale{"linear"};
    double held{};
    double sigma_v{1.0};
    double sigma_2{1.0};
    bool baseline{false};
    int threads{1};
};

std::string handle_sweep(const SweepFlags& flags) {
    SweepSpec spec;
    spec.axis = flags.axis == "thetaz" ? SweepSpec::Axis::ThetaZ : SweepSpec::Axis::Theta1;
    spec.scale = flags.scale == "log" ? SweepSpec::Scale::Log : SweepSpec::Scale::Linear;
    spec.from = flags.from;
    spec.to = flags.to;
    spec.points = flags.points;
    spec.held = flags.held;
    spec.sigma_v = flags.sigma_v;
    spec.sigma_2 = flags.sigma_2;
    return sweep_csv(run_sweep(spec, flags.threads), flags.baseline);
}

struct ClassifyFlags {
    double theta1_from{0.01};
    double theta1_to{0.5};
    int theta1_points{50};
    double thetaz_from{0.0};
    double thetaz_to{5.0};
    int thetaz_points{50};
    int threads{1};
};

std::string handle_classify(const ClassifyFlags& flags) {
    ClassifyGrid grid;
    grid.theta1_from = flags.theta1_from;
    grid.theta1_to = flags.theta1_to;
    grid.theta1_points = flags.theta1_points;
    grid.thetaz_from = flags.thetaz_from;
    grid.thetaz_to = flags.thetaz_to;
    grid.thetaz_points = flags.thetaz_points;
    return classify_csv(run_classify(grid, flags.threads));
}

struct SimulateFlags {
    ParamFlags params;
    std::uint64_t paths{1'000'000};
    std::uint64_t seed{0};
    bool no_antithetic{false};
    int threads{1};
    bool no_hft{false};
    std::optional<double> partial_beta;
};

clijson::Object estimate_block(const Estimate& est, double analytic) {
    clijson::Object block;
    block.add("estimate", est.value)
        .add("std_error", est.std_error)
        .add("analytic", analytic)
        .add("z", z_score(est.value, analytic, est.std_error));
    return block;
}

std::string handle_simulate(const SimulateFlags& flags) {
    const ModelParams params = flags.params.resolve();
    const ThetaPair thetas = flags.params.resolved_thetas(params);

    LinearStrategies strategies{};
    PricingCoefficients pricing{};
    double analytic_it = 0.0;
    double analytic_hft = 0.0;

    if (flags.no_hft) {
        strategies = LinearStrategies{params.sigma_2() / params.sigma_v(), 0.0};
        pricing = dealer_pricing(strategies, params, SignalStructure::OwnOrder);
        analytic_it = it_profit_analytic(strategies, pricing, params);
        analytic_hft = 0.0;
    } else if (flags.partial_beta) {
        if (params.sigma_1() != 0.0) {
            throw InvalidConfig("--partial-beta requires sigma_1 = 0 (theta1 = 0)");
        }
        const PartialEquilibrium pe = partial_equilibrium_no_fast_noise(*flags.partial_beta, params);
        strategies = LinearStrategies{pe.alpha, *flags.partial_beta};
        pricing = dealer_pricing(strategies, params, SignalStructure::OwnOrder);
        analytic_it = it_profit_analytic(strategies, pricing, params);
        analytic_hft = hft_profit_analytic(strategies, pricing, params, SignalStructure::OwnOrder);
    } else {
        require_positive_theta1_cli(thetas);
        const Equilibrium eq = solve_equilibrium(params);
        strategies = eq.strategies;
        pricing = eq.pricing;
        analytic_it = eq.profit_it;
        analytic_hft = eq.profit_hft;
    }

    SimulationConfig config;
    config.n_paths = flags.paths;
    config.seed = flags.seed;
    config.antithetic = !flags.no_antithetic;
    config.threads = flags.threads;

    const SimulationResult result =
        simulate_game(params, strategies, pricing, SignalStructure::OwnOrder, config);

    clijson::Object doc;
    doc.add("theta1", thetas.theta_1)
        .add("thetaz", thetas.theta_z)
        .add("sigma_v", params.sigma_v())
        .add("sigma_2", params.sigma_2())
        .add("alpha", strategies.alpha)
        .add("beta", strategies.beta)
        .add("n_paths", result.n_paths)
        .add("seed", result.seed)
        .add("antithetic", config.antithetic)
        .add_object("profit_it", estimate_block(result.profit_it, analytic_it))
        .add_object("profit_hft", estimate_block(result.profit_hft, analytic_hft))
        .add_object("lambda1", estimate_block(result.lambda_1, pricing.lambda_1))
        .add_object("mu1", estimate_block(result.mu_1, pricing.mu_1))
        .add_object("mu2", estimate_block(result.mu_2, pricing.mu_2));
    return doc.str() + "\n";
}

struct FixedPointFlags {
    ParamFlags params;
    std::string signal{"own"};
    double damping{0.5};
    double tol{1e-10};
    int max_iter{10000};
    std::optional<double> init_alpha;
    std::optional<double> init_beta;
};

std::string handle_fixed_point(const FixedPointFlags& flags) {
    const ModelParams params = flags.params.resolve();
    const ThetaPair thetas = flags.params.resolved_thetas(params);
    require_positive_theta1_cli(thetas);
    const SignalStructure structure = parse_structure(flags.signal);

    FixedPointConfig config;
    config.damping = flags.damping;
    config.tol = flags.tol;
    config.max_iter = flags.max_iter;
    if (flags.init_alpha || flags.init_beta) {
        config.init = LinearStrategies{
            flags.init_alpha.value_or(params.sigma_2() / params.sigma_v()),
            flags.init_beta.value_or(0.25)};
    }

    const FixedPointResult result = solve_fixed_point(params, structure, config);
    const Equilibrium& eq = result.equilibrium;
    const double half = 0.5 * params.sigma_v() * params.sigma_2();
    const double alpha_norm = eq.strategies.alpha * params.sigma_v() / params.sigma_2();

    clijson::Object doc;
    doc.add("theta1", thetas.theta_1)
        .add("thetaz", thetas.theta_z)
        .add("sigma_v", params.sigma_v())
        .add("sigma_2", params.sigma_2())
        .add("signal", to_string(structure))
        .add("alpha", eq.strategies.alpha)
        .add("beta", eq.strategies.beta)
        .add("lambda1", eq.pricing.lambda_1)
        .add("mu1", eq.pricing.mu_1)
        .add("mu2", eq.pricing.mu_2)
        .add("lambda2", eq.lambda_2)
        .add("profit_it", eq.profit_it)
        .add("profit_hft", eq.profit_hft)
        .add("alpha_normalized", alpha_norm)
        .add("profit_it_normalized", eq.profit_it / half)
        .add("profit_hft_normalized", eq.profit_hft / half)
        .add("welfare", welfare_by_sign(alpha_norm))
        .add("iterations", result.iterations)
        .add("residual", result.residual);

    if (structure == SignalStructure::OwnOrder) {
        const Equilibrium closed = solve_equilibrium(params);
        double gap = rel_gap(eq.strategies.alpha, closed.strategies.alpha);
        gap = std::max(gap, rel_gap(eq.strategies.beta, closed.strategies.beta));
        gap = std::max(gap, rel_gap(eq.pricing.lambda_1, closed.pricing.lambda_1));
        gap = std::max(gap, rel_gap(eq.pricing.mu_1, closed.pricing.mu_1));
        gap = std::max(gap, rel_gap(eq.pricing.mu_2, closed.pricing.mu_2));

        clijson::Object sextic;
        sextic.add("beta", closed.strategies.beta)
            .add("alpha", closed.strategies.alpha)
            .add("lambda1", closed.pricing.lambda_1)
            .add("mu1", closed.pricing.mu_1)
            .add("mu2", closed.pricing.mu_2)
            .add("max_rel_gap", gap);
        doc.add_object("sextic", sextic);
    }
    return doc.str() + "\n";
}

struct PartialFlags {
    double beta{};
    double thetaz{0.0};
    double sigma_v{1.0};
    double sigma_2{1.0};
};

std::string handle_partial(const PartialFlags& flags) {
    const ModelParams params =
        params_from_thetas(ThetaPair{0.0, flags.thetaz}, flags.sigma_v, flags.sigma_2);
    const PartialEquilibrium pe = partial_equilibrium_no_fast_noise(flags.beta, params);

    clijson::Object doc;
    doc.add("beta", flags.beta)
        .add("thetaz", flags.thetaz)
        .add("sigma_v", params.sigma_v())
        .add("sigma_2", params.sigma_2())
        .add("alpha", pe.alpha)
        .add("alpha_normalized", pe.alpha * params.sigma_v() / params.sigma_2())
        .add("profit_it", 0.5 * params.sigma_v() * params.sigma_v() * pe.alpha)
        .add("profit_hft", pe.profit_hft);
    return doc.str() + "\n";
}

struct LimitsFlags {
    std::optional<double> theta1;
    std::optional<double> thetaz;
    double sigma_v{1.0};
    double sigma_2{1.0};
};

std::string handle_limits(const LimitsFlags& flags) {
    if (!flags.theta1 && !flags.thetaz) {
        throw InvalidConfig("limits needs --theta1 and/or --thetaz");
    }
    const ModelParams params =
        params_from_thetas(ThetaPair{1.0, 0.0}, flags.sigma_v, flags.sigma_2);
    const double ratio = params.sigma_v() / params.sigma_2();

    clijson::Object doc;
    doc.add("sigma_v", params.sigma_v()).add("sigma_2", params.sigma_2());

    if (flags.thetaz) {
        const double beta_inf = limit_beta_theta1_infinity(*flags.thetaz);
        clijson::Object inf_block;
        inf_block.add("thetaz", *flags.thetaz)
            .add("beta", beta_inf)
            .add("alpha", limit_alpha_theta1_infinity(*flags.thetaz, params))
            .add("alpha_normalized", limit_alpha_theta1_infinity(*flags.thetaz, params) * ratio);
        doc.add_object("theta1_infinity", inf_block);

        if (*flags.thetaz > 0.0) {
            const double alpha_zero = limit_alpha_theta1_zero(*flags.thetaz, params);
            clijson::Object zero_block;
            zero_block.add("thetaz", *flags.thetaz)
                .add("alpha", alpha_zero)
                .add("alpha_normalized", alpha_zero * ratio);
            doc.add_object("theta1_zero", zero_block);
        }
    }

    if (flags.theta1) {
        if (*flags.theta1 <= 0.0) {
            throw ThetaOutOfDomain("theta1 must be > 0 for the theta_z -> infinity limits");
        }
        const ThetaZInfinityLimits lim = theta_z_infinity_limits(params);
        const double half = 0.5 * params.sigma_v() * params.sigma_2();
        clijson::Object tz_block;
        tz_block.add("theta1", *flags.theta1)
            .add("beta", lim.beta)
            .add("alpha", lim.alpha)
            .add("alpha_normalized", lim.alpha * ratio)
            .add("lambda1", lim.lambda_1)
            .add("mu1", lim.mu_1)
            .add("mu2", lim.mu_2)
            .add("lambda2", lim.lambda_2)
            .add("profit_it", lim.profit_it)
            .add("profit_it_normalized", lim.profit_it / half)
            .add("profit_hft", lim.profit_hft)
            .add("profit_hft_normalized", lim.profit_hft / half);
        doc.add_object("thetaz_infinity", tz_block);
    }
    return doc.str() + "\n";
}

// -----------------------------------------------------------------------------

int error_exit_code(const Error& error) {
    if (dynamic_cast<const NoConvergence*>(&error) != nullptr) {
        return 5;
    }
    if (dynamic_cast<const DegenerateRegressor*>(&error) != nullptr) {
        return 4;
    }
    if (dynamic_cast<const ValidationError*>(&error) != nullptr) {
        return 2;
    }
    return 3;
}

void emit_error(const std::string& code, const std::string& message) {
    clijson::Object doc;
    doc.add("code", code).add("message", message);
    std::cerr << doc.str() << "\n";
}

int write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        emit_error("InvalidConfig", "cannot open output file: " + out_path);
        return 2;
    }
    file << text;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-period front-running market model: equilibrium solver and "
                 "verification harness"};
    app.require_subcommand(1);
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

    std::string out_path;

    auto* solve = app.add_subcommand("solve", "solve one equilibrium, print JSON");
    ParamFlags solve_params;
    solve_params.attach(*solve);
    solve->add_option("--out", out_path, "write output to FILE instead of stdout");
    attach_config(*solve);

    auto* sweep = app.add_subcommand("sweep", "comparative statics along one theta axis, CSV");
    SweepFlags sweep_flags;
    sweep->add_option("--axis", sweep_flags.axis, "swept parameter")
        ->check(CLI::IsMember({"theta1", "thetaz"}));
    sweep->add_option("--from", sweep_flags.from, "axis start")->required();
    sweep->add_option("--to", sweep_flags.to, "axis end")->required();
    sweep->add_option("--points", sweep_flags.points, "grid size")->required();
    sweep->add_option("--scale", sweep_flags.scale, "grid spacing")
        ->check(CLI::IsMember({"linear", "log"}));
    sweep->add_option("--held", sweep_flags.held, "fixed value of the other theta")->required();
    sweep->add_option("--sigma-v", sweep_flags.sigma_v, "std. dev. of the asset value");
    sweep->add_option("--sigma-2", sweep_flags.sigma_2, "std. dev. of time-2 noise flow");
    sweep->add_flag("--baseline", sweep_flags.baseline, "append no-HFT reference columns");
    sweep->add_option("--threads", sweep_flags.threads, "worker threads");
    sweep->add_option("--out", out_path, "write output to FILE instead of stdout");
    attach_config(*sweep);

    auto* classify = app.add_subcommand("classify", "welfare region map over a theta grid, CSV");
    ClassifyFlags classify_flags;
    classify->add_option("--theta1-from", classify_flags.theta1_from, "theta1 start");
    classify->add_option("--theta1-to", classify_flags.theta1_to, "theta1 end");
    classify->add_option("--theta1-points", classify_flags.theta1_points, "theta1 grid size");
    classify->add_option("--thetaz-from", classify_flags.thetaz_from, "thetaz start");
    classify->add_option("--thetaz-to", classify_flags.thetaz_to, "thetaz end");
    classify->add_option("--thetaz-points", classify_flags.thetaz_points, "thetaz grid size");
    classify->add_option("--threads", classify_flags.threads, "worker threads");
    classify->add_option("--out", out_path, "write output to FILE instead of stdout");
    attach_config(*classify);

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo run against analytic targets, JSON");
    SimulateFlags simulate_flags;
    simulate_flags.params.attach(*simulate);
    simulate->add_option("--paths", simulate_flags.paths, "number of simulated paths");
    simulate->add_option("--seed", simulate_flags.seed, "RNG seed");
    simulate->add_flag("--no-antithetic", simulate_flags.no_antithetic, "pure i.i.d. paths");
    simulate->add_option("--threads", simulate_flags.threads,
                         "worker threads (result is thread-count invariant)");
    simulate->add_flag("--no-hft", simulate_flags.no_hft, "classic benchmark without the fast trader");
    simulate->add_option("--partial-beta", simulate_flags.partial_beta,
                         "exogenous beta for the sigma_1 = 0 partial equilibrium");
    simulate->add_option("--out", out_path, "write output to FILE instead of stdout");
    attach_config(*simulate);

    auto* fixed_point = app.add_subcommand("fixed-point", "best-response fixed point, JSON");
    FixedPointFlags fp_flags;
    fp_flags.params.attach(*fixed_point);
    fixed_point->add_option("--signal", fp_flags.signal, "signal structure")
        ->check(CLI::IsMember({"own", "aggregate"}));
    fixed_point->add_option("--damping", fp_flags.damping, "convex-combination step");
    fixed_point->add_option("--tol", fp_flags.tol, "termination tolerance");
    fixed_point->add_option("--max-iter", fp_flags.max_iter, "iteration budget");
    fixed_point->add_option("--init-alpha", fp_flags.init_alpha, "initial alpha");
    fixed_point->add_option("--init-beta", fp_flags.init_beta, "initial beta");
    fixed_point->add_option("--out", out_path, "write output to FILE instead of stdout");
    attach_config(*fixed_point);

    auto* partial = app.add_subcommand("partial-equilibrium",
                                       "sigma_1 = 0 partial equilibrium for exogenous beta, JSON");
    PartialFlags partial_flags;
    partial->add_option("--beta", partial_flags.beta, "exogenous fast-trader intensity")->required();
    partial->add_option("--thetaz", partial_flags.thetaz, "relative signal noise");
    partial->add_option("--sigma-v", partial_flags.sigma_v, "std. dev. of the asset value");
    partial->add_option("--sigma-2", partial_flags.sigma_2, "std. dev. of time-2 noise flow");
    partial->add_option("--out", out_path, "write output to FILE instead of stdout");
    attach_config(*partial);

    auto* limits = app.add_subcommand("limits", "printed limit values, JSON");
    LimitsFlags limits_flags;
    limits->add_option("--theta1", limits_flags.theta1, "print theta_z -> infinity limits");
    limits->add_option("--thetaz", limits_flags.thetaz,
                       "print theta_1 -> infinity and theta_1 -> 0 limits");
    limits->add_option("--sigma-v", limits_flags.sigma_v, "std. dev. of the asset value");
    limits->add_option("--sigma-2", limits_flags.sigma_2, "std. dev. of time-2 noise flow");
    limits->add_option("--out", out_path, "write output to FILE instead of stdout");
    attach_config(*limits);

    try {
        std::vector<std::string> args = effective_args(argc, argv);
        std::reverse(args.begin(), args.end()); // CLI11's vector parse wants reversed args
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit_error("ArgumentError", e.what());
        return 2;
    } catch (const Error& e) {
        emit_error(e.code(), e.what());
        return error_exit_code(e);
    }

    try {
        std::string output;
        if (solve->parsed()) {
            output = handle_solve(solve_params);
        } else if (sweep->parsed()) {
            output = handle_sweep(sweep_flags);
        } else if (classify->parsed()) {
            output = handle_classify(classify_flags);
        } else if (simulate->parsed()) {
            output = handle_simulate(simulate_flags);
        } else if (fixed_point->parsed()) {
            output = handle_fixed_point(fp_flags);
        } else if (partial->parsed()) {
            output = handle_partial(partial_flags);
        } else if (limits->parsed()) {
            output = handle_limits(limits_flags);
        }
        return write_output(output, out_path);
    } catch (const Error& e) {
        emit_error(e.code(), e.what());
        return error_exit_code(e);
    } catch (const std::exception& e) {
        emit_error("InternalError", e.what());
        return 3;
    }
}
