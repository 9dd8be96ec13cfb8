#include <doctest.h>

#include <cmath>
#include <vector>

#include "frontrun/equilibrium.hpp"
#include "frontrun/simulator.hpp"

using namespace frontrun;

namespace {

bool identical(const Estimate& a, const Estimate& b) {
    return a.value == b.value && a.std_error == b.std_error;
}

bool identical(const SimulationResult& a, const SimulationResult& b) {
    return identical(a.profit_it, b.profit_it) && identical(a.profit_hft, b.profit_hft) &&
           identical(a.lambda_1, b.lambda_1) && identical(a.mu_1, b.mu_1) &&
           identical(a.mu_2, b.mu_2);
}

double z_of(const Estimate& est, double analytic) {
    return (est.value - analytic) / est.std_error;
}

} // namespace

TEST_SUITE("simulator") {

TEST_CASE("bit-exact reproducibility for a fixed seed and any thread count") {
    const ModelParams params = params_from_thetas(ThetaPair{1.0, 0.04});
    const Equilibrium eq = solve_equilibrium(params);
    SimulationConfig config;
    config.n_paths = 40'000;
    config.seed = 99;

    const SimulationResult a =
        simulate_game(params, eq.strategies, eq.pricing, SignalStructure::OwnOrder, config);
    const SimulationResult b =
        simulate_game(params, eq.strategies, eq.pricing, SignalStructure::OwnOrder, config);
    CHECK(identical(a, b));

    config.threads = 3;
    const SimulationResult c =
        simulate_game(params, eq.strategies, eq.pricing, SignalStructure::OwnOrder, config);
    CHECK(identical(a, c));
}

TEST_CASE("zero fast intensity earns exactly zero on every path") {
    const ModelParams params = params_from_thetas(ThetaPair{1.0, 0.04});
    const LinearStrategies classic{1.0, 0.0};
    const PricingCoefficients pricing =
        dealer_pricing(classic, params, SignalStructure::OwnOrder);
    SimulationConfig config;
    config.n_paths = 20'000;
    config.seed = 5;
    const SimulationResult result =
        simulate_game(params, classic, pricing, SignalStructure::OwnOrder, config);
    CHECK(result.profit_hft.value == 0.0);
    CHECK(result.profit_hft.std_error == 0.0);
}

TEST_CASE("no-HFT benchmark recovers the classic expected profit") {
    const ModelParams params = params_from_thetas(ThetaPair{1.0, 0.04});
    const LinearStrategies classic{1.0, 0.0};
    const PricingCoefficients pricing =
        dealer_pricing(classic, params, SignalStructure::OwnOrder);
    SimulationConfig config;
    config.n_paths = 1'000'000;
    config.seed = 7;
    config.antithetic = false; // exercise the pure i.i.d. path too
    const SimulationResult result =
        simulate_game(params, classic, pricing, SignalStructure::OwnOrder, config);
    CHECK(std::abs(z_of(result.profit_it, 0.5)) <= 4.0);
    CHECK(result.profit_it.std_error > 0.0);
}

TEST_CASE("equilibrium estimates sit within four standard errors of the analytics") {
    const ModelParams params = params_from_thetas(ThetaPair{1.0, 0.04});
    const Equilibrium eq = solve_equilibrium(params);
    SimulationConfig config;
    config.n_paths = 200'000;
    config.seed = 42;
    const SimulationResult result =
        simulate_game(params, eq.strategies, eq.pricing, SignalStructure::OwnOrder, config);

    CHECK(std::abs(z_of(result.profit_it, eq.profit_it)) <= 4.0);
    CHECK(std::abs(z_of(result.profit_hft, eq.profit_hft)) <= 4.0);
    CHECK(std::abs(z_of(result.lambda_1, eq.pricing.lambda_1)) <= 4.0);
    CHECK(std::abs(z_of(result.mu_1, eq.pricing.mu_1)) <= 4.0);
    CHECK(std::abs(z_of(result.mu_2, eq.pricing.mu_2)) <= 4.0);

    // profit identity: sample mean of (v - p2) i against (sigma_v^2/2) alpha
    CHECK(std::abs(z_of(result.profit_it, 0.5 * eq.strategies.alpha)) <= 4.0);
}

TEST_CASE("aggregate-signal run validates the aggregate moment algebra") {
    const ModelParams params = params_from_thetas(ThetaPair{0.2, 1.0});
    const LinearStrategies strategies{1.1, 0.2};
    const PricingCoefficients pricing =
        dealer_pricing(strategies, params, SignalStructure::AggregateOrder);
    const double analytic_hft =
        hft_profit_analytic(strategies, pricing, params, SignalStructure::AggregateOrder);
    const double analytic_it = it_profit_analytic(strategies, pricing, params);

    SimulationConfig config;
    config.n_paths = 400'000;
    config.seed = 21;
    const SimulationResult result =
        simulate_game(params, strategies, pricing, SignalStructure::AggregateOrder, config);
    CHECK(std::abs(z_of(result.profit_hft, analytic_hft)) <= 4.0);
    CHECK(std::abs(z_of(result.profit_it, analytic_it)) <= 4.0);
    CHECK(std::abs(z_of(result.lambda_1, pricing.lambda_1)) <= 4.0);
    CHECK(std::abs(z_of(result.mu_1, pricing.mu_1)) <= 4.0);
    CHECK(std::abs(z_of(result.mu_2, pricing.mu_2)) <= 4.0);
}

TEST_CASE("regressed coefficients tighten as paths double") {
    const ModelParams params = params_from_thetas(ThetaPair{1.0, 0.04});
    const Equilibrium eq = solve_equilibrium(params);
    auto coefficient_error = [&](std::uint64_t n, std::uint64_t seed) {
        SimulationConfig config;
        config.n_paths = n;
        config.seed = seed;
        const SimulationResult r =
            simulate_game(params, eq.strategies, eq.pricing, SignalStructure::OwnOrder, config);
        return std::abs(r.lambda_1.value - eq.pricing.lambda_1) +
               std::abs(r.mu_1.value - eq.pricing.mu_1) +
               std::abs(r.mu_2.value - eq.pricing.mu_2);
    };
    double coarse = 0.0;
    double fine = 0.0;
    for (std::uint64_t seed : {11u, 12u, 13u}) {
        coarse += coefficient_error(50'000, seed);
        fine += coefficient_error(400'000, seed);
    }
    CHECK(fine < coarse);
}

TEST_CASE("in-sample residuals are orthogonal to the regressors") {
    const ModelParams params = params_from_thetas(ThetaPair{1.0, 0.04});
    const Equilibrium eq = solve_equilibrium(params);
    SimulationConfig config;
    config.n_paths = 50'000;
    config.seed = 31;
    const SimulationResult r =
        simulate_game(params, eq.strategies, eq.pricing, SignalStructure::OwnOrder, config);
    const SampleMoments& m = r.moments;

    const double scale = std::max(std::abs(m.v_y1), std::abs(m.y1y1));
    CHECK(std::abs(m.v_y1 - r.lambda_1.value * m.y1y1) <= 1e-10 * scale);

    const double res1 = m.v_y1 - r.mu_1.value * m.y1y1 - r.mu_2.value * m.y1y2;
    const double res2 = m.v_y2 - r.mu_1.value * m.y1y2 - r.mu_2.value * m.y2y2;
    CHECK(std::abs(res1) <= 1e-10 * scale);
    CHECK(std::abs(res2) <= 1e-10 * scale);
}

TEST_CASE("degenerate regressor is a hard error") {
    const ModelParams params = validate_params(1.0, 0.0, 1.0, 0.5);
    const LinearStrategies silent{1.0, 0.0}; // beta = 0 with sigma_1 = 0: y1 identically zero
    const PricingCoefficients pricing{0.0, 0.0, 0.5};
    SimulationConfig config;
    config.n_paths = 20'000;
    CHECK_THROWS_AS(
        (void)simulate_game(params, silent, pricing, SignalStructure::OwnOrder, config),
        DegenerateRegressor);
}

TEST_CASE("config validation") {
    const ModelParams params = params_from_thetas(ThetaPair{1.0, 0.04});
    const Equilibrium eq = solve_equilibrium(params);
    SimulationConfig config;
    config.n_paths = 5'000; // below the reliability floor
    CHECK_THROWS_AS((void)simulate_game(params, eq.strategies, eq.pricing,
                                        SignalStructure::OwnOrder, config),
                    InvalidConfig);
    config.n_paths = 20'001; // antithetic pairing needs an even count
    CHECK_THROWS_AS((void)simulate_game(params, eq.strategies, eq.pricing,
                                        SignalStructure::OwnOrder, config),
                    InvalidConfig);
    config.n_paths = 20'000;
    config.threads = 0;
    CHECK_THROWS_AS((void)simulate_game(params, eq.strategies, eq.pricing,
                                        SignalStructure::OwnOrder, config),
                    InvalidConfig);
}

TEST_CASE("profit scan peaks at the solved intensities") {
    const ModelParams params = params_from_thetas(ThetaPair{1.0, 0.04});
    const Equilibrium eq = solve_equilibrium(params);

    std::vector<double> beta_grid;
    for (int k = 1; k <= 201; ++k) {
        beta_grid.push_back(k / 202.0);
    }
    const auto scan = profit_scan(params, eq.pricing, SignalStructure::OwnOrder,
                                  ScanAxis::HftBeta, eq.strategies.alpha, beta_grid);
    std::size_t best = 0;
    for (std::size_t k = 1; k < scan.size(); ++k) {
        if (scan[k].expected_profit > scan[best].expected_profit) {
            best = k;
        }
    }
    CHECK(std::abs(beta_grid[best] - eq.strategies.beta) <= (beta_grid[1] - beta_grid[0]) * 1.0001);
}

TEST_CASE("single-point scan equals the closed-form fast profit") {
    const ModelParams params = params_from_thetas(ThetaPair{1.0, 0.04});
    const Equilibrium eq = solve_equilibrium(params);
    const std::vector<double> grid{eq.strategies.beta};
    const auto scan = profit_scan(params, eq.pricing, SignalStructure::OwnOrder,
                                  ScanAxis::HftBeta, eq.strategies.alpha, grid);
    CHECK(std::abs(scan[0].expected_profit - hft_expected_profit(eq, params)) <= 1e-12);
}

TEST_CASE("profit scan rejects bad grids") {
    const ModelParams params = params_from_thetas(ThetaPair{1.0, 0.04});
    const Equilibrium eq = solve_equilibrium(params);
    CHECK_THROWS_AS((void)profit_scan(params, eq.pricing, SignalStructure::OwnOrder,
                                      ScanAxis::HftBeta, eq.strategies.alpha, {}),
                    InvalidConfig);
}

} // TEST_SUITE
