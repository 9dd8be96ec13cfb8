#include <doctest.h>

#include <cmath>
#include <vector>

#include "frontrun/equilibrium.hpp"
#include "frontrun/fixed_point.hpp"

using namespace frontrun;

namespace {

// Frozen by the high-precision oracle at theta_1 = 1, theta_z = 0.04,
// sigma_v = sigma_2 = 1.
constexpr double kBetaRef = 0.36513476196162113;
constexpr double kAlphaRef = 1.3659043668180104;
constexpr double kLambda1Ref = 0.39769526248166814;
constexpr double kMu1Ref = 0.25034161157913924;
constexpr double kMu2Ref = 0.43261057182986597;
constexpr double kProfitHftRef = 0.1473536509025289;
constexpr double kProfitItRef = 0.68295218340900522;

ModelParams unit_params(double theta_1, double theta_z) {
    return params_from_thetas(ThetaPair{theta_1, theta_z});
}

} // namespace

TEST_SUITE("equilibrium") {

TEST_CASE("closed forms at the reference point") {
    const Equilibrium eq = solve_equilibrium(unit_params(1.0, 0.04));
    CHECK(eq.strategies.beta == doctest::Approx(kBetaRef).epsilon(1e-12));
    CHECK(eq.strategies.alpha == doctest::Approx(kAlphaRef).epsilon(1e-12));
    CHECK(eq.pricing.lambda_1 == doctest::Approx(kLambda1Ref).epsilon(1e-12));
    CHECK(eq.pricing.mu_1 == doctest::Approx(kMu1Ref).epsilon(1e-12));
    CHECK(eq.pricing.mu_2 == doctest::Approx(kMu2Ref).epsilon(1e-12));
    CHECK(eq.profit_hft == doctest::Approx(kProfitHftRef).epsilon(1e-12));
    CHECK(eq.profit_it == doctest::Approx(kProfitItRef).epsilon(1e-12));
    CHECK(eq.lambda_2 == doctest::Approx(eq.pricing.mu_2).epsilon(1e-10));
}

TEST_CASE("both first-order conditions hold across the theta grid") {
    for (double t1 : {0.01, 0.12, 0.2, 1.0, 5.0, 100.0}) {
        for (double tz : {0.0, 0.04, 1.0, 25.0}) {
            const ModelParams params = unit_params(t1, tz);
            const Equilibrium eq = solve_equilibrium(params);
            const double a = eq.strategies.alpha;
            const double b = eq.strategies.beta;
            CHECK(b > 0.0);
            CHECK(b < 1.0);

            CHECK(eq.pricing.lambda_1 >= 0.0); // weak-efficiency time-1 impact is nonnegative

            const double pass = eq.pricing.mu_1 * b + eq.pricing.mu_2 * (1.0 - b);
            CHECK(a == doctest::Approx(1.0 / (2.0 * pass)).epsilon(1e-9));

            const double rho = a * a / (a * a + tz); // sigma_v = sigma_2 = 1
            const double br = eq.pricing.mu_2 * rho /
                              (2.0 * (eq.pricing.mu_2 + eq.pricing.lambda_1 - eq.pricing.mu_1));
            CHECK(b == doctest::Approx(br).epsilon(1e-8));

            CHECK(eq.profit_it == doctest::Approx(0.5 * a).epsilon(1e-14));
            CHECK(a <= 2.0 + 1e-9);
        }
    }
}

TEST_CASE("bound point: huge theta_1 with a perfect signal") {
    const Equilibrium eq = solve_equilibrium(unit_params(1e9, 0.0));
    CHECK(std::abs(eq.strategies.alpha - 2.0) < 1e-4);
    CHECK(std::abs(eq.strategies.beta - 0.5) < 1e-4);
}

TEST_CASE("large signal noise recovers the no-HFT market") {
    const Equilibrium eq = solve_equilibrium(unit_params(1.0, 1e6));
    CHECK(eq.strategies.beta < 1e-3);
    CHECK(std::abs(eq.strategies.alpha - 1.0) < 1e-3);
    CHECK(eq.pricing.lambda_1 < 1e-3);
    CHECK(eq.pricing.mu_1 < 1e-3);
    CHECK(std::abs(eq.pricing.mu_2 - 0.5) < 1e-3);
    CHECK(std::abs(eq.lambda_2 - 0.5) < 1e-3);
    CHECK(std::abs(eq.profit_hft) / 0.5 < 1e-3);
}

TEST_CASE("small theta_z continuity against the exact theta_z = 0 solve") {
    const Equilibrium lo = solve_equilibrium(unit_params(1.0, 1e-8));
    const Equilibrium at0 = solve_equilibrium(unit_params(1.0, 0.0));
    CHECK(std::abs(lo.strategies.alpha - at0.strategies.alpha) <= 1e-6);
    CHECK(std::abs(lo.strategies.beta - at0.strategies.beta) <= 1e-6);
    CHECK(std::abs(lo.pricing.lambda_1 - at0.pricing.lambda_1) <= 1e-6);
    CHECK(std::abs(lo.pricing.mu_1 - at0.pricing.mu_1) <= 1e-6);
    CHECK(std::abs(lo.pricing.mu_2 - at0.pricing.mu_2) <= 1e-6);
    CHECK(std::abs(lo.lambda_2 - at0.lambda_2) <= 1e-6);
    CHECK(std::abs(lo.profit_it - at0.profit_it) <= 1e-6);
    CHECK(std::abs(lo.profit_hft - at0.profit_hft) <= 1e-6);
}

TEST_CASE("theta_1 = 0 is routed away from the full solver") {
    CHECK_THROWS_AS((void)solve_equilibrium(validate_params(1.0, 0.0, 1.0, 0.2)),
                    ThetaOutOfDomain);
}

TEST_CASE("welfare classification examples") {
    CHECK(classify_welfare(ThetaPair{0.2, 0.0}) == WelfareClass::Benefited);
    CHECK(classify_welfare(ThetaPair{0.1, 0.0}) == WelfareClass::Harmed);
    CHECK(classify_welfare(ThetaPair{welfare_theta1_critical(), 0.0}) == WelfareClass::Boundary);
    CHECK_THROWS_AS((void)classify_welfare(ThetaPair{0.0, 1.0}), ThetaOutOfDomain);
}

TEST_CASE("welfare classification never contradicts the solved intensity") {
    for (double t1 : {0.02, 0.1, 0.15, 0.1547, 0.2, 0.5, 3.0}) {
        for (double tz : {0.0, 0.1, 0.37, 1.0, 10.0}) {
            (void)classify_welfare(ThetaPair{t1, tz}); // CrossCheckFailure would throw
        }
    }
}

TEST_CASE("theta_z_bar at the critical theta_1 is an algebraic zero") {
    CHECK(std::abs(theta_z_bar(welfare_theta1_critical())) < 1e-12);
}

TEST_CASE("theta_z_bar is the welfare boundary in theta_z") {
    const double bar = theta_z_bar(0.1);
    CHECK(bar > 0.0);
    const Equilibrium below = solve_equilibrium(unit_params(0.1, bar - 1e-3));
    const Equilibrium above = solve_equilibrium(unit_params(0.1, bar + 1e-3));
    CHECK(below.strategies.alpha < 1.0);
    CHECK(above.strategies.alpha > 1.0);
}

TEST_CASE("theta_z_bar grows as theta_1 shrinks") {
    CHECK(theta_z_bar(0.15) < theta_z_bar(0.10));
    CHECK(theta_z_bar(0.10) < theta_z_bar(0.05));
}

TEST_CASE("theta_z_bar domain") {
    CHECK_THROWS_AS((void)theta_z_bar(0.2), ThetaOutOfDomain);
    CHECK_THROWS_AS((void)theta_z_bar(0.0), ThetaOutOfDomain);
    CHECK_THROWS_AS((void)theta_z_bar(-0.1), ThetaOutOfDomain);
}

TEST_CASE("theta_z_tilde values and domain") {
    CHECK(theta_z_tilde(0.5) == doctest::Approx(0.0).epsilon(1e-15)); // boundary probe
    CHECK(theta_z_tilde(0.2) == doctest::Approx(1.2).epsilon(1e-12));
    CHECK_THROWS_AS((void)theta_z_tilde(0.6), ThetaOutOfDomain);
    CHECK_THROWS_AS((void)theta_z_tilde(0.0), ThetaOutOfDomain);
}

TEST_CASE("alpha peaks near theta_z_tilde for small theta_1") {
    const double tilde = theta_z_tilde(0.2);
    double best_tz = 0.0;
    double best_alpha = 0.0;
    for (int k = 0; k <= 300; ++k) {
        const double tz = 0.01 * k;
        const double alpha = solve_equilibrium(unit_params(0.2, tz)).strategies.alpha;
        if (alpha > best_alpha) {
            best_alpha = alpha;
            best_tz = tz;
        }
    }
    CHECK(std::abs(best_tz - tilde) <= 0.1);
}

TEST_CASE("partial equilibrium without fast noise") {
    const ModelParams params = validate_params(1.0, 0.0, 1.0, 1.0); // theta_z = 1
    const PartialEquilibrium at_zero = partial_equilibrium_no_fast_noise(0.0, params);
    CHECK(at_zero.alpha == 1.0); // classic result
    CHECK(at_zero.profit_hft == 0.0);

    const PartialEquilibrium pe = partial_equilibrium_no_fast_noise(0.3, params);
    CHECK(pe.alpha == std::sqrt(0.5));
    CHECK(pe.profit_hft == 0.0);

    const ModelParams huge_noise = params_from_thetas(ThetaPair{0.0, 1e8});
    CHECK(std::abs(partial_equilibrium_no_fast_noise(0.3, huge_noise).alpha - 1.0) < 1e-4);

    CHECK_THROWS_AS(
        (void)partial_equilibrium_no_fast_noise(0.3, validate_params(1.0, 0.5, 1.0, 1.0)),
        ThetaOutOfDomain);
    CHECK_THROWS_AS((void)partial_equilibrium_no_fast_noise(-0.1, params), InvalidConfig);
}

TEST_CASE("partial equilibrium matches the pricing/intensity iteration") {
    // independent oracle: iterate weak-efficiency pricing and the large
    // trader's best response with beta held fixed
    for (double beta : {0.05, 0.3, 0.7}) {
        const ModelParams params = validate_params(1.0, 0.0, 1.0, 1.0);
        const FixedPointResult fp =
            solve_fixed_point_given_beta(params, beta, SignalStructure::OwnOrder);
        const PartialEquilibrium pe = partial_equilibrium_no_fast_noise(beta, params);
        CHECK(fp.equilibrium.strategies.alpha == doctest::Approx(pe.alpha).epsilon(1e-9));
        CHECK(std::abs(fp.equilibrium.profit_hft) < 1e-12);
    }
}

TEST_CASE("theta_1 -> 0 limit formula") {
    const ModelParams params = params_from_thetas(ThetaPair{1.0, 1.0});
    const double y2 = 1.3845 * 1.3845;
    CHECK(limit_alpha_theta1_zero(1.0, params) ==
          doctest::Approx(std::sqrt((y2 + 1.0) / (y2 + 2.0))).epsilon(1e-14));
    for (double tz : {0.1, 1.0, 10.0, 100.0}) {
        CHECK(limit_alpha_theta1_zero(tz, params) < 1.0);
    }
    CHECK_THROWS_AS((void)limit_alpha_theta1_zero(0.0, params), ThetaOutOfDomain);
}

TEST_CASE("theta_1 -> 0 limit is consistent with a tiny-theta_1 solve") {
    const ModelParams params = params_from_thetas(ThetaPair{1e-6, 1.0});
    const Equilibrium eq = solve_equilibrium(params);
    const double lim = limit_alpha_theta1_zero(1.0, params);
    CHECK(std::abs(eq.strategies.alpha - lim) / lim < 0.02);
    CHECK(eq.strategies.beta < 0.01); // beta -> 0 in the same limit
}

TEST_CASE("theta_1 -> infinity alpha limit is consistent with a huge-theta_1 solve") {
    for (double tz : {0.0, 1.0}) {
        const ModelParams params = params_from_thetas(ThetaPair{1e8, tz});
        const double lim = limit_alpha_theta1_infinity(tz, params);
        CHECK(lim > 1.0);
        CHECK(std::abs(solve_equilibrium(params).strategies.alpha - lim) < 1e-3);
    }
}

TEST_CASE("theta_z -> infinity limit table") {
    const ModelParams params = validate_params(2.0, 1.0, 0.5, 0.0);
    const ThetaZInfinityLimits lim = theta_z_infinity_limits(params);
    CHECK(lim.beta == 0.0);
    CHECK(lim.alpha == 0.25);
    CHECK(lim.mu_2 == 2.0);
    CHECK(lim.lambda_2 == 2.0);
    CHECK(lim.profit_it == 0.5);
    CHECK(lim.profit_hft == 0.0);
}

TEST_CASE("hft_expected_profit is zero for a degenerate zero-beta record") {
    const ModelParams params = validate_params(1.0, 1.0, 1.0, 0.2);
    Equilibrium eq;
    eq.strategies = LinearStrategies{1.0, 0.0};
    eq.pricing = PricingCoefficients{0.0, 0.0, 0.5};
    CHECK(hft_expected_profit(eq, params) == 0.0);
}

TEST_CASE("normalized outputs do not depend on the raw scale") {
    const Equilibrium unit = solve_equilibrium(unit_params(0.7, 0.3));
    const ModelParams scaled = params_from_thetas(ThetaPair{0.7, 0.3}, 2.0, 0.5);
    const Equilibrium eq = solve_equilibrium(scaled);
    CHECK(eq.strategies.alpha * 2.0 / 0.5 ==
          doctest::Approx(unit.strategies.alpha).epsilon(1e-12));
    CHECK(eq.profit_it / (0.5 * 2.0 * 0.5) ==
          doctest::Approx(unit.profit_it / 0.5).epsilon(1e-12));
    CHECK(eq.profit_hft / (0.5 * 2.0 * 0.5) ==
          doctest::Approx(unit.profit_hft / 0.5).epsilon(1e-11));
}

} // TEST_SUITE
