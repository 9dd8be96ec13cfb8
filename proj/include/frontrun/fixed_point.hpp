#pragma once

#include <optional>

#include "frontrun/model.hpp"

namespace frontrun {

struct FixedPointConfig {
    double damping{0.5};   // convex-combination step in (0, 1]
    double tol{1e-10};     // max relative best-response change at termination
    int max_iter{10000};
    // Starting strategies; default is the classic alpha = sigma_2/sigma_v
    // with beta = 0.25, interior in every tested regime.
    std::optional<LinearStrategies> init{};
};

struct FixedPointResult {
    Equilibrium equilibrium{};
    int iterations{};
    double residual{}; // terminal max relative change across (alpha, beta, lambda_1, mu_1, mu_2)
};

// alpha maximizing the conditional profit E[(v - p2) i | v] given the fast
// intensity and the pricing rule: 1 / (2 (mu_1 beta + mu_2 (1 - beta))).
// Throws NonConcaveObjective when the second-order condition fails.
[[nodiscard]] double best_response_it(double beta, const PricingCoefficients& pricing);

// beta maximizing E[(p2 - p1) x | signal]: mu_2 rho / (2 (mu_2 + lambda_1 - mu_1)),
// rho the projection weight of the predicted flow on the signal.
[[nodiscard]] double best_response_hft(double alpha, const PricingCoefficients& pricing,
                                       SignalStructure structure, const ModelParams& params);

// Damped alternation of weak-efficiency pricing and the two best responses,
// from config.init to a fixed point. The equilibrium oracle that never
// touches the intensity polynomial, and the only solver for the
// aggregate-order signal. Requires theta_1 > 0 (no full equilibrium exists
// at sigma_1 = 0; see solve_fixed_point_given_beta).
[[nodiscard]] FixedPointResult solve_fixed_point(const ModelParams& params,
                                                 SignalStructure structure,
                                                 const FixedPointConfig& config = {});

// Pricing/large-trader iteration with the fast intensity held fixed; the
// only mode permitted at sigma_1 = 0, where beta cannot be endogenous.
[[nodiscard]] FixedPointResult solve_fixed_point_given_beta(const ModelParams& params,
                                                            double beta,
                                                            SignalStructure structure,
                                                            const FixedPointConfig& config = {});

} // namespace frontrun
