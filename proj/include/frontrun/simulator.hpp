#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "frontrun/model.hpp"

namespace frontrun {

struct SimulationConfig {
    std::uint64_t n_paths{1'000'000};
    std::uint64_t seed{0};
    bool antithetic{true}; // mirror every second path; must divide n_paths evenly
    int threads{1};        // any value yields bit-identical results
};

struct Estimate {
    double value{};
    double std_error{};
};

// Through-origin regression sums over the independent draws (one per
// antithetic pair), exposed for orthogonality and convergence diagnostics.
struct SampleMoments {
    double y1y1{};
    double y1y2{};
    double y2y2{};
    double v_y1{};
    double v_y2{};
    double v_v{};
    std::uint64_t n{};
};

struct SimulationResult {
    Estimate profit_it{};
    Estimate profit_hft{};
    Estimate lambda_1{}; // v regressed on y1
    Estimate mu_1{};     // v regressed on (y1, y2)
    Estimate mu_2{};
    SampleMoments moments{};
    std::uint64_t n_paths{};
    std::uint64_t seed{};
};

// Plays the literal two-period game path by path: draw (v, z, u1, u2), form
// orders and flows, price with the GIVEN coefficients (dealers are
// mechanical; weak efficiency is what the regression tests, not assumes),
// accumulate both traders' profits, and recover (lambda_1, mu_1, mu_2) by
// least squares. Bit-reproducible for fixed (n_paths, seed) under any
// thread count: paths map to disjoint counter-based substreams and chunk
// partials are reduced pairwise in a fixed order.
[[nodiscard]] SimulationResult simulate_game(const ModelParams& params,
                                             const LinearStrategies& strategies,
                                             const PricingCoefficients& pricing,
                                             SignalStructure structure,
                                             const SimulationConfig& config);

enum class ScanAxis {
    ItAlpha, // vary the large trader's alpha, fast intensity fixed
    HftBeta, // vary the fast trader's beta, alpha fixed
};

struct ScanPoint {
    double value{};
    double expected_profit{};
};

// Expected profit of the deviating agent at each grid value, evaluated
// analytically (no sampling noise), with the opponent's strategy and the
// pricing rule held fixed.
[[nodiscard]] std::vector<ScanPoint> profit_scan(const ModelParams& params,
                                                 const PricingCoefficients& pricing,
                                                 SignalStructure structure, ScanAxis axis,
                                                 double fixed_other,
                                                 std::span<const double> grid);

} // namespace frontrun
