#pragma once

#include "frontrun/beta_equation.hpp"
#include "frontrun/model.hpp"

namespace frontrun {

// Large-trader welfare relative to the no-HFT benchmark profit
// sigma_v sigma_2 / 2, equivalently the sign of alpha sigma_v / sigma_2 - 1.
enum class WelfareClass {
    Benefited,
    Harmed,
    Boundary, // |alpha sigma_v / sigma_2 - 1| within the classification tolerance
};

[[nodiscard]] const char* to_string(WelfareClass welfare) noexcept;

// theta_1 above which the large trader is benefited for every theta_z:
// (2 sqrt(3) - 3) / 3.
[[nodiscard]] double welfare_theta1_critical() noexcept;

// Signal-noise threshold above which the large trader is benefited when
// theta_1 is at or below the critical value. Domain (0, critical]; equals 0
// at the right endpoint.
[[nodiscard]] double theta_z_bar(double theta_1);

// Turning point of alpha* in theta_z for theta_1 in (0, 1/2):
// (1 - theta_1 - 2 theta_1^2) / (3 theta_1). The closed right endpoint is
// accepted as a boundary probe and evaluates to 0.
[[nodiscard]] double theta_z_tilde(double theta_1);

// Unique linear equilibrium for theta_1 > 0: beta* from the intensity
// equation, (alpha*, lambda_1*, mu_1*, mu_2*) from their closed forms,
// profits and the innovation lambda_2 from exact moment algebra.
[[nodiscard]] Equilibrium solve_equilibrium(const ModelParams& params);

// E[(p2 - p1) x] at the solved point (own-order signal).
[[nodiscard]] double hft_expected_profit(const Equilibrium& eq, const ModelParams& params) noexcept;

// Region-formula classification, cross-checked internally against the sign
// of alpha* sigma_v / sigma_2 - 1 from the solved equilibrium; disagreement
// outside the Boundary band throws CrossCheckFailure. tol applies to the
// normalized intensity.
[[nodiscard]] WelfareClass classify_welfare(const ThetaPair& thetas, double tol = 1e-9);

// sigma_1 = 0 regime: no full equilibrium exists; with the fast intensity
// beta given exogenously the dealer/large-trader partial equilibrium has
// alpha = (sigma_2/sigma_v) sqrt(theta_z/(theta_z+1)) for beta > 0 (and the
// classic alpha = sigma_2/sigma_v for beta = 0), with zero fast-trader
// profit either way.
struct PartialEquilibrium {
    double alpha{};
    double profit_hft{};
};

[[nodiscard]] PartialEquilibrium partial_equilibrium_no_fast_noise(double beta,
                                                                   const ModelParams& params);

// theta_1 -> 0 limit of alpha*, from the printed fitted form
// (sigma_2/sigma_v) sqrt((y^2 tz^(2x) + tz) / (y^2 tz^(2x) + tz + 1)) with
// x = 0.3245, y = 1.3845. Requires theta_z > 0.
[[nodiscard]] double limit_alpha_theta1_zero(double theta_z, const ModelParams& params);

// theta_1 -> infinity limit of alpha*:
// (sigma_2/sigma_v) sqrt((beta^2 theta_z + 1) / (1 - beta)^2) at the limit beta.
[[nodiscard]] double limit_alpha_theta1_infinity(double theta_z, const ModelParams& params,
                                                 double tol = kDefaultBetaTol);

// Printed theta_z -> infinity limit values (the same for every theta_1 > 0).
struct ThetaZInfinityLimits {
    double beta{};
    double alpha{};
    double lambda_1{};
    double mu_1{};
    double mu_2{};
    double lambda_2{};
    double profit_it{};
    double profit_hft{};
};

[[nodiscard]] ThetaZInfinityLimits theta_z_infinity_limits(const ModelParams& params) noexcept;

// Full record for given strategies under projection pricing: used by the
// fixed-point solver and by deviation studies.
[[nodiscard]] Equilibrium assemble_equilibrium(const LinearStrategies& strategies,
                                               const ModelParams& params,
                                               SignalStructure structure);

} // namespace frontrun
