#include "frontrun/model.hpp"

#include <cmath>
#include <sstream>

namespace frontrun {

const char* to_string(SignalStructure structure) noexcept {
    return structure == SignalStructure::OwnOrder ? "own" : "aggregate";
}

ModelParams ModelParams::validate(double sigma_v, double sigma_1, double sigma_2,
                                  double sigma_z, double p_0) {
    const double values[] = {sigma_v, sigma_1, sigma_2, sigma_z, p_0};
    const char* names[] = {"sigma_v", "sigma_1", "sigma_2", "sigma_z", "p_0"};
    for (int k = 0; k < 5; ++k) {
        if (!std::isfinite(values[k])) {
            std::ostringstream msg;
            msg << names[k] << " must be finite, got " << values[k];
            throw NonFinite(msg.str());
        }
    }
    if (sigma_v <= 0.0 || sigma_2 <= 0.0) {
        std::ostringstream msg;
        msg << "sigma_v and sigma_2 must be strictly positive, got sigma_v="
            << sigma_v << " sigma_2=" << sigma_2;
        throw NonPositiveSigma(msg.str());
    }
    if (sigma_1 < 0.0 || sigma_z < 0.0) {
        std::ostringstream msg;
        msg << "sigma_1 and sigma_z must be nonnegative, got sigma_1="
            << sigma_1 << " sigma_z=" << sigma_z;
        throw NegativeSigma(msg.str());
    }
    return ModelParams(sigma_v, sigma_1, sigma_2, sigma_z, p_0);
}

ThetaPair thetas_from_params(const ModelParams& params) noexcept {
    const double s2_sq = params.sigma_2() * params.sigma_2();
    return ThetaPair{params.sigma_1() * params.sigma_1() / s2_sq,
                     params.sigma_z() * params.sigma_z() / s2_sq};
}

ModelParams params_from_thetas(const ThetaPair& thetas, double sigma_v, double sigma_2) {
    if (!std::isfinite(thetas.theta_1) || !std::isfinite(thetas.theta_z)) {
        throw NonFinite("theta_1 and theta_z must be finite");
    }
    if (thetas.theta_1 < 0.0 || thetas.theta_z < 0.0) {
        throw ThetaOutOfDomain("theta_1 and theta_z must be nonnegative");
    }
    return ModelParams::validate(sigma_v, std::sqrt(thetas.theta_1) * sigma_2, sigma_2,
                                 std::sqrt(thetas.theta_z) * sigma_2);
}

FlowMoments flow_moments(const LinearStrategies& strategies, const ModelParams& params,
                         SignalStructure structure) noexcept {
    const double a = strategies.alpha;
    const double b = strategies.beta;
    const double vv = params.sigma_v() * params.sigma_v();
    const double v1 = params.sigma_1() * params.sigma_1();
    const double v2 = params.sigma_2() * params.sigma_2();
    const double vz = params.sigma_z() * params.sigma_z();

    FlowMoments m;
    m.var_v = vv;
    if (structure == SignalStructure::OwnOrder) {
        // y1 = b a v + b z + u1,  y2 = (1-b) a v - b z + u2
        m.var_y1 = b * b * (a * a * vv + vz) + v1;
        m.var_y2 = (1 - b) * (1 - b) * a * a * vv + b * b * vz + v2;
        m.cov_y1_y2 = b * (1 - b) * a * a * vv - b * b * vz;
        m.cov_v_y1 = b * a * vv;
        m.cov_v_y2 = (1 - b) * a * vv;
        m.var_signal = a * a * vv + vz;
        m.var_target = a * a * vv;
        m.cov_target_signal = a * a * vv;
    } else {
        // y1 = b a v + b u2 + b z + u1,  y2 = (1-b) a v + (1-b) u2 - b z;
        // u2 enters both the signal and y2, which couples them.
        m.var_y1 = b * b * (a * a * vv + v2 + vz) + v1;
        m.var_y2 = (1 - b) * (1 - b) * (a * a * vv + v2) + b * b * vz;
        m.cov_y1_y2 = b * (1 - b) * (a * a * vv + v2) - b * b * vz;
        m.cov_v_y1 = b * a * vv;
        m.cov_v_y2 = (1 - b) * a * vv;
        m.var_signal = a * a * vv + v2 + vz;
        m.var_target = a * a * vv + v2;
        m.cov_target_signal = a * a * vv + v2;
    }
    return m;
}

namespace {

// Relative floor below which the 2x2 Gram determinant counts as singular.
constexpr double kGramSingularRel = 1e-12;

} // namespace

PricingCoefficients dealer_pricing(const LinearStrategies& strategies,
                                   const ModelParams& params,
                                   SignalStructure structure) {
    const FlowMoments m = flow_moments(strategies, params, structure);
    if (m.var_y1 <= 0.0) {
        throw SingularInformation("Var(y1) = 0: time-1 flow carries no variation "
                                  "(beta = 0 with sigma_1 = 0)");
    }
    const double det = m.var_y1 * m.var_y2 - m.cov_y1_y2 * m.cov_y1_y2;
    if (det <= kGramSingularRel * m.var_y1 * m.var_y2) {
        std::ostringstream msg;
        msg << "Gram matrix of (y1, y2) is singular: det=" << det
            << " var_y1=" << m.var_y1 << " var_y2=" << m.var_y2;
        throw SingularInformation(msg.str());
    }
    PricingCoefficients p;
    p.lambda_1 = m.cov_v_y1 / m.var_y1;
    p.mu_1 = (m.cov_v_y1 * m.var_y2 - m.cov_v_y2 * m.cov_y1_y2) / det;
    p.mu_2 = (m.cov_v_y2 * m.var_y1 - m.cov_v_y1 * m.cov_y1_y2) / det;
    return p;
}

double innovation_lambda_2(const LinearStrategies& strategies, const ModelParams& params,
                           SignalStructure structure) {
    const FlowMoments m = flow_moments(strategies, params, structure);
    if (m.var_y1 <= 0.0) {
        throw SingularInformation("Var(y1) = 0: innovation representation undefined");
    }
    // y2~ = y2 - E[y2|y1];  lambda_2 = Cov(v, y2~) / Var(y2~)
    const double k = m.cov_y1_y2 / m.var_y1;
    const double var_innov = m.var_y2 - 2.0 * k * m.cov_y1_y2 + k * k * m.var_y1;
    if (var_innov <= kGramSingularRel * m.var_y2) {
        throw SingularInformation("Var(y2 - E[y2|y1]) = 0: innovation degenerate");
    }
    return (m.cov_v_y2 - k * m.cov_v_y1) / var_innov;
}

double hft_profit_analytic(const LinearStrategies& strategies,
                           const PricingCoefficients& pricing,
                           const ModelParams& params,
                           SignalStructure structure) noexcept {
    // E[(p2 - p1) x] with x = beta * signal:
    //   (mu_1 - lambda_1) E[x^2] + mu_2 (E[(i + u2) x] - E[x^2])
    const FlowMoments m = flow_moments(strategies, params, structure);
    const double b = strategies.beta;
    const double ex2 = b * b * m.var_signal;
    const double e_target_x = b * m.cov_target_signal;
    return (pricing.mu_1 - pricing.lambda_1 - pricing.mu_2) * ex2 + pricing.mu_2 * e_target_x;
}

double it_profit_analytic(const LinearStrategies& strategies,
                          const PricingCoefficients& pricing,
                          const ModelParams& params) noexcept {
    // E[(v - p2) i] = alpha sigma_v^2 - (mu_1 beta + mu_2 (1 - beta)) alpha^2 sigma_v^2;
    // the pass-through of i into (y1, y2) is beta, 1 - beta for both structures.
    const double a = strategies.alpha;
    const double b = strategies.beta;
    const double vv = params.sigma_v() * params.sigma_v();
    const double pass = pricing.mu_1 * b + pricing.mu_2 * (1.0 - b);
    return a * vv - pass * a * a * vv;
}

} // namespace frontrun
