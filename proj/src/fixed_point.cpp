#include "frontrun/fixed_point.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>

#include "frontrun/equilibrium.hpp"

namespace frontrun {

namespace {

double rel_change(double next, double prev) {
    const double scale = std::max({std::abs(next), std::abs(prev), 1e-300});
    return std::abs(next - prev) / scale;
}

void validate_config(const FixedPointConfig& config) {
    if (!(config.damping > 0.0) || config.damping > 1.0) {
        throw InvalidConfig("damping must lie in (0, 1]");
    }
    if (!(config.tol > 0.0)) {
        throw InvalidConfig("fixed-point tolerance must be positive");
    }
    if (config.max_iter <= 0) {
        throw InvalidConfig("max_iter must be positive");
    }
    if (config.init &&
        (!std::isfinite(config.init->alpha) || !std::isfinite(config.init->beta))) {
        throw NonFinite("initial strategies must be finite");
    }
}

LinearStrategies default_init(const ModelParams& params) {
    return LinearStrategies{params.sigma_2() / params.sigma_v(), 0.25};
}

std::string format_tail(const std::deque<LinearStrategies>& tail) {
    std::ostringstream out;
    out << "trajectory tail:";
    for (const auto& s : tail) {
        out << " (alpha=" << s.alpha << ", beta=" << s.beta << ")";
    }
    return out.str();
}

} // namespace

double best_response_it(double beta, const PricingCoefficients& pricing) {
    const double pass = pricing.mu_1 * beta + pricing.mu_2 * (1.0 - beta);
    if (!(pass > 0.0)) {
        std::ostringstream msg;
        msg << "large trader's objective is not concave: mu_1 beta + mu_2 (1-beta) = " << pass;
        throw NonConcaveObjective(msg.str());
    }
    return 1.0 / (2.0 * pass);
}

double best_response_hft(double alpha, const PricingCoefficients& pricing,
                         SignalStructure structure, const ModelParams& params) {
    const double slope = pricing.mu_2 + pricing.lambda_1 - pricing.mu_1;
    if (!(slope > 0.0)) {
        std::ostringstream msg;
        msg << "fast trader's objective is not concave: mu_2 + lambda_1 - mu_1 = " << slope;
        throw NonConcaveObjective(msg.str());
    }
    const FlowMoments m =
        flow_moments(LinearStrategies{alpha, 0.0}, params, structure);
    // projection weight of the predicted flow on the signal
    const double rho = m.var_target / m.var_signal;
    return pricing.mu_2 * rho / (2.0 * slope);
}

namespace {

FixedPointResult iterate(const ModelParams& params, SignalStructure structure,
                         const FixedPointConfig& config, std::optional<double> fixed_beta) {
    validate_config(config);

    LinearStrategies state = config.init ? *config.init : default_init(params);
    if (fixed_beta) {
        state.beta = *fixed_beta;
    }
    PricingCoefficients prev_pricing = dealer_pricing(state, params, structure);
    std::deque<LinearStrategies> tail;

    for (int iter = 1; iter <= config.max_iter; ++iter) {
        const PricingCoefficients pricing = dealer_pricing(state, params, structure);
        const double alpha_br = best_response_it(state.beta, pricing);
        const double beta_br =
            fixed_beta ? *fixed_beta : best_response_hft(alpha_br, pricing, structure, params);

        double residual = std::max(rel_change(alpha_br, state.alpha),
                                   rel_change(beta_br, state.beta));
        residual = std::max(residual, rel_change(pricing.lambda_1, prev_pricing.lambda_1));
        residual = std::max(residual, rel_change(pricing.mu_1, prev_pricing.mu_1));
        residual = std::max(residual, rel_change(pricing.mu_2, prev_pricing.mu_2));

        if (residual <= config.tol) {
            FixedPointResult result;
            result.equilibrium = assemble_equilibrium(state, params, structure);
            result.iterations = iter;
            result.residual = residual;
            return result;
        }

        state.alpha += config.damping * (alpha_br - state.alpha);
        state.beta += config.damping * (beta_br - state.beta);
        prev_pricing = pricing;

        tail.push_back(state);
        if (tail.size() > 5) {
            tail.pop_front();
        }
    }

    std::ostringstream msg;
    msg << "no fixed point within " << config.max_iter << " iterations at damping "
        << config.damping << "; " << format_tail(tail);
    throw NoConvergence(msg.str());
}

} // namespace

FixedPointResult solve_fixed_point(const ModelParams& params, SignalStructure structure,
                                   const FixedPointConfig& config) {
    if (params.sigma_1() == 0.0) {
        throw ThetaOutOfDomain(
            "theta_1 must be > 0 for an endogenous fast-trader intensity; no equilibrium "
            "exists at sigma_1 = 0 (use solve_fixed_point_given_beta)");
    }
    return iterate(params, structure, config, std::nullopt);
}

FixedPointResult solve_fixed_point_given_beta(const ModelParams& params, double beta,
                                              SignalStructure structure,
                                              const FixedPointConfig& config) {
    if (!std::isfinite(beta) || beta < 0.0) {
        throw InvalidConfig("exogenous beta must be finite and >= 0");
    }
    return iterate(params, structure, config, beta);
}

} // namespace frontrun
