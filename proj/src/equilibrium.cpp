#include "frontrun/equilibrium.hpp"

#include <cmath>
#include <sstream>

namespace frontrun {

namespace {

// Fitted constants of the theta_1 -> 0 asymptotic, used exactly as printed.
constexpr double kTheta1ZeroFitExponent = 0.3245;
constexpr double kTheta1ZeroFitCoefficient = 1.3845;

void require_positive_theta1(double theta_1) {
    if (!std::isfinite(theta_1) || theta_1 <= 0.0) {
        throw ThetaOutOfDomain("theta_1 must be finite and > 0");
    }
}

} // namespace

const char* to_string(WelfareClass welfare) noexcept {
    switch (welfare) {
    case WelfareClass::Benefited: return "benefited";
    case WelfareClass::Harmed: return "harmed";
    case WelfareClass::Boundary: return "boundary";
    }
    return "unknown";
}

double welfare_theta1_critical() noexcept {
    return (2.0 * std::sqrt(3.0) - 3.0) / 3.0;
}

double theta_z_bar(double theta_1) {
    require_positive_theta1(theta_1);
    if (theta_1 > welfare_theta1_critical()) {
        std::ostringstream msg;
        msg << "theta_z_bar is defined for theta_1 in (0, " << welfare_theta1_critical()
            << "], got " << theta_1;
        throw ThetaOutOfDomain(msg.str());
    }
    const double numer = -(theta_1 + 5.0) +
                         2.0 * std::sqrt(4.0 * theta_1 * theta_1 + 10.0 * theta_1 + 5.0);
    return numer / (-5.0 * theta_1);
}

double theta_z_tilde(double theta_1) {
    require_positive_theta1(theta_1);
    if (theta_1 > 0.5) {
        std::ostringstream msg;
        msg << "theta_z_tilde is defined for theta_1 in (0, 1/2], got " << theta_1;
        throw ThetaOutOfDomain(msg.str());
    }
    return (1.0 - theta_1 - 2.0 * theta_1 * theta_1) / (3.0 * theta_1);
}

Equilibrium solve_equilibrium(const ModelParams& params) {
    const ThetaPair thetas = thetas_from_params(params);
    require_positive_theta1(thetas.theta_1);

    const double t = thetas.theta_1;
    const double z = thetas.theta_z;
    const double b = solve_beta(thetas);

    // shared radicands of the closed forms
    const double s1 = t + b * b * z * (t + 1.0);
    const double s2 = t * (1.0 - b) * (1.0 - b) + b * b * (z + 1.0);
    const double root12 = std::sqrt(s1 * s2);

    const double sv = params.sigma_v();
    const double sg2 = params.sigma_2();
    const double half_impact = sv / (2.0 * sg2);

    Equilibrium eq;
    eq.strategies.beta = b;
    eq.strategies.alpha = (sg2 / sv) * std::sqrt(s1 / s2);
    eq.pricing.lambda_1 =
        half_impact * 2.0 * b * root12 / (b * b * s1 + (b * b * z + t) * s2);
    eq.pricing.mu_1 = half_impact * (b * b * z + b) / root12;
    eq.pricing.mu_2 = half_impact * (b * b * z + (1.0 - b) * t) / root12;
    eq.lambda_2 = innovation_lambda_2(eq.strategies, params, SignalStructure::OwnOrder);
    eq.profit_it = 0.5 * sv * sv * eq.strategies.alpha;
    eq.profit_hft =
        hft_profit_analytic(eq.strategies, eq.pricing, params, SignalStructure::OwnOrder);
    return eq;
}

double hft_expected_profit(const Equilibrium& eq, const ModelParams& params) noexcept {
    return hft_profit_analytic(eq.strategies, eq.pricing, params, SignalStructure::OwnOrder);
}

WelfareClass classify_welfare(const ThetaPair& thetas, double tol) {
    require_positive_theta1(thetas.theta_1);
    if (!std::isfinite(thetas.theta_z) || thetas.theta_z < 0.0) {
        throw ThetaOutOfDomain("theta_z must be finite and >= 0");
    }
    if (!(tol > 0.0)) {
        throw InvalidConfig("classification tolerance must be positive");
    }

    const ModelParams canonical = params_from_thetas(thetas);
    const Equilibrium eq = solve_equilibrium(canonical);
    const double excess = eq.strategies.alpha * canonical.sigma_v() / canonical.sigma_2() - 1.0;
    if (std::abs(excess) <= tol) {
        return WelfareClass::Boundary;
    }

    bool benefited_by_region;
    if (thetas.theta_1 > welfare_theta1_critical()) {
        benefited_by_region = true;
    } else {
        benefited_by_region = thetas.theta_z > theta_z_bar(thetas.theta_1);
    }
    const bool benefited_by_sign = excess > 0.0;
    if (benefited_by_region != benefited_by_sign) {
        std::ostringstream msg;
        msg << "welfare region formula disagrees with sign(alpha_norm - 1) at theta_1="
            << thetas.theta_1 << " theta_z=" << thetas.theta_z << " (excess=" << excess << ")";
        throw CrossCheckFailure(msg.str());
    }
    return benefited_by_sign ? WelfareClass::Benefited : WelfareClass::Harmed;
}

PartialEquilibrium partial_equilibrium_no_fast_noise(double beta, const ModelParams& params) {
    if (params.sigma_1() != 0.0) {
        throw ThetaOutOfDomain("partial equilibrium requires sigma_1 = 0");
    }
    if (!std::isfinite(beta) || beta < 0.0) {
        throw InvalidConfig("exogenous beta must be finite and >= 0");
    }
    const double ratio = params.sigma_2() / params.sigma_v();
    if (beta == 0.0) {
        return PartialEquilibrium{ratio, 0.0};
    }
    const double tz = thetas_from_params(params).theta_z;
    // Any front-running here trades against a flow the dealers fully see, so
    // the fast trader's expected profit is zero by the martingale property.
    return PartialEquilibrium{ratio * std::sqrt(tz / (tz + 1.0)), 0.0};
}

double limit_alpha_theta1_zero(double theta_z, const ModelParams& params) {
    if (!std::isfinite(theta_z) || theta_z <= 0.0) {
        throw ThetaOutOfDomain("the theta_1 -> 0 limit form requires theta_z > 0");
    }
    const double y2 = kTheta1ZeroFitCoefficient * kTheta1ZeroFitCoefficient;
    const double pw = std::pow(theta_z, 2.0 * kTheta1ZeroFitExponent);
    return (params.sigma_2() / params.sigma_v()) *
           std::sqrt((y2 * pw + theta_z) / (y2 * pw + theta_z + 1.0));
}

double limit_alpha_theta1_infinity(double theta_z, const ModelParams& params, double tol) {
    const double b = limit_beta_theta1_infinity(theta_z, tol);
    return (params.sigma_2() / params.sigma_v()) *
           std::sqrt((b * b * theta_z + 1.0) / ((1.0 - b) * (1.0 - b)));
}

ThetaZInfinityLimits theta_z_infinity_limits(const ModelParams& params) noexcept {
    const double sv = params.sigma_v();
    const double sg2 = params.sigma_2();
    ThetaZInfinityLimits lim;
    lim.beta = 0.0;
    lim.alpha = sg2 / sv;
    lim.lambda_1 = 0.0;
    lim.mu_1 = 0.0;
    lim.mu_2 = sv / (2.0 * sg2);
    lim.lambda_2 = sv / (2.0 * sg2);
    lim.profit_it = sv * sg2 / 2.0;
    lim.profit_hft = 0.0;
    return lim;
}

Equilibrium assemble_equilibrium(const LinearStrategies& strategies, const ModelParams& params,
                                 SignalStructure structure) {
    Equilibrium eq;
    eq.strategies = strategies;
    eq.pricing = dealer_pricing(strategies, params, structure);
    eq.lambda_2 = innovation_lambda_2(strategies, params, structure);
    eq.profit_it = it_profit_analytic(strategies, eq.pricing, params);
    eq.profit_hft = hft_profit_analytic(strategies, eq.pricing, params, structure);
    return eq;
}

} // namespace frontrun
