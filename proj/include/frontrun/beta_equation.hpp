#pragma once

#include <array>
#include <string>

#include "frontrun/model.hpp"
#include "frontrun/polynomial.hpp"

namespace frontrun {

inline constexpr double kDefaultBetaTol = 1e-12;

// Equilibrium condition for the fast trader's intensity: a degree-6
// polynomial in beta whose coefficients are assembled term by term from the
// theta ratios. For theta_z = 0 the three leading coefficients are exact
// zeros and the equation collapses to a cubic.
struct BetaPolynomial {
    std::array<double, 7> coefficients{}; // degree-6 term first
    ThetaPair thetas{};

    [[nodiscard]] Polynomial as_polynomial() const;
};

// Requires theta_1 > 0 (the equation is the equilibrium condition for that
// regime only; theta_1 = 0 is served by the partial-equilibrium operation).
[[nodiscard]] BetaPolynomial build_beta_polynomial(const ThetaPair& thetas);

// The unique root of the intensity equation in the open interval (0, 1),
// located to absolute accuracy tol (valid range (0, 1e-6]). Every real root
// in (0, 1) is enumerated; a count other than one throws
// NoRootInUnitInterval / MultipleRootsInUnitInterval carrying the full root
// list. Roots within tol of an endpoint are rejected as not interior and
// show up in those diagnostics.
[[nodiscard]] double solve_beta(const ThetaPair& thetas, double tol = kDefaultBetaTol);

// theta_1 -> infinity limit of the intensity: unique (0, 1) root of
// 4 tz b^5 - 13 tz b^4 + (2 + 16 tz) b^3 - (5 + 9 tz) b^2 + (4 + 2 tz) b - 1.
// The limit polynomial carries an exact double root at b = 1 for every
// theta_z; the endpoint filter discards it.
[[nodiscard]] double limit_beta_theta1_infinity(double theta_z, double tol = kDefaultBetaTol);

// |P(beta)| / sum|coefficients|, for solver reporting.
[[nodiscard]] double beta_residual(const BetaPolynomial& poly, double beta) noexcept;

// Shared uniqueness-asserting extraction used by both solvers above.
[[nodiscard]] double unique_root_in_unit_interval(const Polynomial& p, double tol,
                                                  const std::string& context);

} // namespace frontrun
