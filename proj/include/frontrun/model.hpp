#pragma once

#include "frontrun/errors.hpp"

namespace frontrun {

// Which quantity the fast trader observes before trading.
enum class SignalStructure {
    OwnOrder,       // signal = i + z      (the informed order alone)
    AggregateOrder, // signal = i + u2 + z (informed order plus slow noise)
};

[[nodiscard]] const char* to_string(SignalStructure structure) noexcept;

// Primitive volatilities of one market instance.
//
// sigma_v and sigma_2 are strictly positive, sigma_1 and sigma_z
// nonnegative; construction with violating values throws, nothing is
// clamped. p_0 is the prior mean of the asset value and is carried for
// reporting only: all pricing math works in deviations from p_0.
class ModelParams {
public:
    static ModelParams validate(double sigma_v, double sigma_1, double sigma_2,
                                double sigma_z, double p_0 = 0.0);

    [[nodiscard]] double sigma_v() const noexcept { return sigma_v_; }
    [[nodiscard]] double sigma_1() const noexcept { return sigma_1_; }
    [[nodiscard]] double sigma_2() const noexcept { return sigma_2_; }
    [[nodiscard]] double sigma_z() const noexcept { return sigma_z_; }
    [[nodiscard]] double p_0() const noexcept { return p_0_; }

private:
    ModelParams(double sv, double s1, double s2, double sz, double p0) noexcept
        : sigma_v_(sv), sigma_1_(s1), sigma_2_(s2), sigma_z_(sz), p_0_(p0) {}

    double sigma_v_;
    double sigma_1_;
    double sigma_2_;
    double sigma_z_;
    double p_0_;
};

[[nodiscard]] inline ModelParams validate_params(double sigma_v, double sigma_1,
                                                 double sigma_2, double sigma_z,
                                                 double p_0 = 0.0) {
    return ModelParams::validate(sigma_v, sigma_1, sigma_2, sigma_z, p_0);
}

// Dimensionless noise ratios driving every equilibrium quantity:
// theta_1 = sigma_1^2/sigma_2^2, theta_z = sigma_z^2/sigma_2^2.
struct ThetaPair {
    double theta_1{};
    double theta_z{};
};

[[nodiscard]] ThetaPair thetas_from_params(const ModelParams& params) noexcept;

// Canonical instance realizing the given ratios: sigma_1 = sqrt(theta_1) sigma_2,
// sigma_z = sqrt(theta_z) sigma_2.
[[nodiscard]] ModelParams params_from_thetas(const ThetaPair& thetas,
                                             double sigma_v = 1.0,
                                             double sigma_2 = 1.0);

// Trading intensities: the informed order is i = alpha v, the fast order is
// x = beta * signal.
struct LinearStrategies {
    double alpha{};
    double beta{};
};

// Dealer linear-pricing weights: p1 = lambda_1 y1, p2 = mu_1 y1 + mu_2 y2
// (in deviations from p_0).
struct PricingCoefficients {
    double lambda_1{};
    double mu_1{};
    double mu_2{};
};

// Analytic second moments of (v, y1, y2) and of the fast trader's signal
// under i = alpha v, x = beta * signal, for the given signal structure.
// Assembled in closed form from the primitive variances; no sampling.
struct FlowMoments {
    double var_v{};
    double var_y1{};
    double var_y2{};
    double cov_y1_y2{};
    double cov_v_y1{};
    double cov_v_y2{};
    double var_signal{};      // Var(signal)
    double var_target{};      // Var(prediction target): i, or i + u2
    double cov_target_signal{};
};

[[nodiscard]] FlowMoments flow_moments(const LinearStrategies& strategies,
                                       const ModelParams& params,
                                       SignalStructure structure) noexcept;

// Weak-efficiency projection of v on y1 (lambda_1) and on (y1, y2)
// (mu_1, mu_2) for arbitrary, not necessarily equilibrium, strategies.
// Throws SingularInformation when Var(y1) = 0 or the Gram matrix of
// (y1, y2) is singular, e.g. beta = 0 together with sigma_1 = 0.
[[nodiscard]] PricingCoefficients dealer_pricing(const LinearStrategies& strategies,
                                                 const ModelParams& params,
                                                 SignalStructure structure);

// Time-2 impact on the order-flow innovation, defined through
// p2 = p1 + lambda_2 (y2 - E[y2|y1]). The definition is an interpretation
// (see README); iterated-projection algebra makes it coincide with mu_2.
// Computed from the covariance matrix directly, not copied from mu_2, so the
// identity stays testable.
[[nodiscard]] double innovation_lambda_2(const LinearStrategies& strategies,
                                         const ModelParams& params,
                                         SignalStructure structure);

// Expected profits under a FIXED pricing rule, for arbitrary strategies.
// hft: E[(p2 - p1) x]; it: E[(v - p2) i]. Exact Gaussian-moment algebra.
[[nodiscard]] double hft_profit_analytic(const LinearStrategies& strategies,
                                         const PricingCoefficients& pricing,
                                         const ModelParams& params,
                                         SignalStructure structure) noexcept;

[[nodiscard]] double it_profit_analytic(const LinearStrategies& strategies,
                                        const PricingCoefficients& pricing,
                                        const ModelParams& params) noexcept;

// Full solved state of one market instance.
struct Equilibrium {
    LinearStrategies strategies{};
    PricingCoefficients pricing{};
    double lambda_2{};   // innovation-representation impact (interpretation-dependent)
    double profit_it{};  // E[(v - p2) i], currency units
    double profit_hft{}; // E[(p2 - p1) x], currency units
};

} // namespace frontrun
